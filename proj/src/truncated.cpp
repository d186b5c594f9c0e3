#include <algorithm>
#include <numeric>

#include "bihom/construct.hpp"
#include "bihom/errors.hpp"

namespace bihom {

namespace {

unsigned degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

std::string monomial_label(const Monomial& m, const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    s += vars[i];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace

std::size_t Truncated::index_of(const Monomial& m) const {
  auto it = std::find(basis.begin(), basis.end(), m);
  return static_cast<std::size_t>(it - basis.begin());
}

Truncated truncated_polynomials(const std::vector<std::string>& vars, std::size_t bound) {
  if (vars.empty() || bound == 0) throw SpaceMismatch("truncated algebra needs variables and a positive bound");
  Truncated t;
  t.vars = vars;
  t.bound = bound;
  for (unsigned d = 0; d < bound; ++d) {
    // all exponent vectors of total degree d, first variable largest first
    std::vector<Monomial> level;
    Monomial m(vars.size(), 0);
    std::function<void(std::size_t, unsigned)> fill = [&](std::size_t i, unsigned left) {
      if (i + 1 == vars.size()) {
        m[i] = left;
        level.push_back(m);
        return;
      }
      for (unsigned e = left + 1; e-- > 0;) {
        m[i] = e;
        fill(i + 1, left - e);
      }
    };
    fill(0, d);
    t.basis.insert(t.basis.end(), level.begin(), level.end());
  }

  const std::size_t n = t.basis.size();
  std::vector<std::string> labels;
  for (const auto& m : t.basis) labels.push_back(monomial_label(m, vars));
  MultiOp mul(n, 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Monomial prod(vars.size());
      for (std::size_t v = 0; v < vars.size(); ++v) prod[v] = t.basis[i][v] + t.basis[j][v];
      if (degree(prod) < bound) mul.set({i, j}, basis_vector(n, t.index_of(prod)));
    }

  std::string name = "Q[";
  for (std::size_t v = 0; v < vars.size(); ++v) name += (v ? "," : "") + vars[v];
  name += "]/(deg>=" + std::to_string(bound) + ")";
  t.bundle.id = name;
  t.bundle.space = BasisSpace(labels);
  t.bundle.ops.emplace("mul", std::move(mul));
  t.bundle.maps.emplace("a", LinMap::identity(n));
  t.bundle.maps.emplace("b", LinMap::identity(n));
  return t;
}

LinMap Truncated::vector_field(const std::vector<std::string>& coefficients) const {
  if (coefficients.size() != vars.size()) throw ArityMismatch("one coefficient per variable required");
  const std::size_t n = basis.size();
  LinMap D(n);
  for (std::size_t v = 0; v < vars.size(); ++v) {
    Scalar c = parse_scalar(coefficients[v], vars);
    Poly cp = c.numerator(vars.size());
    if (!c.is_polynomial()) throw SyntaxError("vector field coefficient must be a polynomial", 0);
    Rational den = c.denominator(vars.size()).constant_value();
    for (std::size_t j = 0; j < n; ++j) {
      const Monomial& m = basis[j];
      if (m[v] == 0) continue;
      Monomial dm = m;
      --dm[v];
      for (const auto& term : cp.terms()) {
        Monomial out(vars.size());
        for (std::size_t w = 0; w < vars.size(); ++w) out[w] = dm[w] + term.exp[w];
        if (degree(out) >= bound) continue;
        Rational coeff = term.coeff * Rational(static_cast<long>(m[v])) / den;
        std::size_t row = index_of(out);
        D.at(row, j) = D.at(row, j) + Scalar(coeff);
      }
    }
  }
  return D;
}

LinMap Truncated::scaling(const std::vector<Rational>& lambdas) const {
  if (lambdas.size() != vars.size()) throw ArityMismatch("one factor per variable required");
  Vector diag;
  for (const auto& m : basis) {
    Rational f(1);
    for (std::size_t v = 0; v < vars.size(); ++v) f = f * lambdas[v].pow(m[v]);
    diag.emplace_back(f);
  }
  return LinMap::diagonal(diag);
}

}  // namespace bihom
