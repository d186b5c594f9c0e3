#include "bihom/poly.hpp"

#include <algorithm>
#include <numeric>

#include "bihom/errors.hpp"

namespace bihom {

namespace {

unsigned degree_of(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

bool grlex_greater(const PolyTerm& a, const PolyTerm& b) { return grlex_less(b.exp, a.exp); }

// Sort descending and merge equal monomials, dropping zeros.
std::vector<PolyTerm> canonical(std::vector<PolyTerm> terms) {
  std::sort(terms.begin(), terms.end(), grlex_greater);
  std::vector<PolyTerm> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exp == t.exp)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const PolyTerm& t) { return t.coeff.is_zero(); }),
            out.end());
  return out;
}

}  // namespace

bool grlex_less(const Monomial& a, const Monomial& b) {
  unsigned da = degree_of(a), db = degree_of(b);
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

Poly Poly::constant(std::size_t nvars, const Rational& c) {
  Poly p(nvars);
  if (!c.is_zero()) p.terms_.push_back({Monomial(nvars, 0), c});
  return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw IndexOutOfRange("variable index out of range");
  Poly p(nvars);
  Monomial m(nvars, 0);
  m[index] = 1;
  p.terms_.push_back({std::move(m), Rational(1)});
  return p;
}

Poly Poly::from_terms(std::size_t nvars, std::vector<PolyTerm> terms) {
  for (const auto& t : terms)
    if (t.exp.size() != nvars) throw RingMismatch("monomial length does not match variable count");
  Poly p(nvars);
  p.terms_ = canonical(std::move(terms));
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_[0].exp) == 0);
}

Rational Poly::constant_value() const { return terms_.empty() ? Rational(0) : terms_[0].coeff; }

unsigned Poly::total_degree() const { return terms_.empty() ? 0 : degree_of(terms_[0].exp); }

unsigned Poly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.exp[var]);
  return d;
}

void Poly::check_ring(const Poly& o) const {
  if (nvars_ != o.nvars_) throw RingMismatch("polynomials over different parameter lists");
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  a.check_ring(b);
  Poly r(a.nvars_);
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && grlex_greater(a.terms_[i], b.terms_[j]))) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || grlex_greater(b.terms_[j], a.terms_[i])) {
      r.terms_.push_back(b.terms_[j++]);
    } else {
      Rational c = a.terms_[i].coeff + b.terms_[j].coeff;
      if (!c.is_zero()) r.terms_.push_back({a.terms_[i].exp, c});
      ++i;
      ++j;
    }
  }
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  a.check_ring(b);
  std::vector<PolyTerm> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      Monomial m(a.nvars_);
      for (std::size_t k = 0; k < m.size(); ++k) m[k] = s.exp[k] + t.exp[k];
      prod.push_back({std::move(m), s.coeff * t.coeff});
    }
  Poly r(a.nvars_);
  r.terms_ = canonical(std::move(prod));
  return r;
}

Poly Poly::scaled(const Rational& c) const {
  if (c.is_zero()) return Poly(nvars_);
  Poly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(nvars_, Rational(1));
  Poly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
  check_ring(d);
  if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
  Poly q(nvars_), r = *this;
  const PolyTerm& ld = d.leading();
  while (!r.is_zero()) {
    const PolyTerm& lr = r.leading();
    Monomial m(nvars_);
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (lr.exp[k] < ld.exp[k]) return std::nullopt;
      m[k] = lr.exp[k] - ld.exp[k];
    }
    Poly t(nvars_);
    t.terms_.push_back({std::move(m), lr.coeff / ld.coeff});
    r = r - t * d;
    q = q + t;
  }
  return q;
}

Rational Poly::eval(const std::vector<Rational>& point) const {
  if (point.size() != nvars_) throw RingMismatch("evaluation point has wrong length");
  Rational sum(0);
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t k = 0; k < nvars_; ++k)
      if (t.exp[k]) v *= point[k].pow(t.exp[k]);
    sum += v;
  }
  return sum;
}

std::vector<Poly> Poly::split_by(std::size_t var) const {
  std::vector<std::vector<PolyTerm>> parts(degree_in(var) + 1);
  for (const auto& t : terms_) {
    PolyTerm s = t;
    s.exp[var] = 0;
    parts[t.exp[var]].push_back(std::move(s));
  }
  std::vector<Poly> out;
  for (auto& p : parts) out.push_back(from_terms(nvars_, std::move(p)));
  return out;
}

Poly Poly::remap(std::size_t new_nvars, const std::vector<std::size_t>& mapping) const {
  std::vector<PolyTerm> out;
  for (const auto& t : terms_) {
    Monomial m(new_nvars, 0);
    for (std::size_t k = 0; k < nvars_; ++k) m[mapping.at(k)] += t.exp[k];
    out.push_back({std::move(m), t.coeff});
  }
  return from_terms(new_nvars, std::move(out));
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (c.sign() < 0) c = -c;
    std::string mono;
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (!t.exp[k]) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(k);
      if (t.exp[k] > 1) mono += "^" + std::to_string(t.exp[k]);
    }
    if (mono.empty())
      out += c.str();
    else if (c.is_one())
      out += mono;
    else
      out += c.str() + "*" + mono;
    first = false;
  }
  return out;
}

}  // namespace bihom
