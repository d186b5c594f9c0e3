#include "bihom/scalar.hpp"

#include <algorithm>
#include <cctype>

#include "bihom/errors.hpp"

namespace bihom {

namespace {

std::size_t common_nvars(const Scalar& a, const Scalar& b) {
  if (a.is_rational()) return b.nvars();
  if (b.is_rational()) return a.nvars();
  if (a.nvars() != b.nvars()) throw RingMismatch("scalars over different parameter lists");
  return a.nvars();
}

}  // namespace

Scalar::Scalar(const Poly& p) { *this = normalize(p, Poly::constant(p.nvars(), Rational(1))); }

Scalar Scalar::fraction(const Poly& num, const Poly& den) {
  if (num.nvars() != den.nvars()) throw RingMismatch("numerator and denominator rings differ");
  if (den.is_zero()) throw DivisionByZero("zero denominator");
  return normalize(num, den);
}

Scalar Scalar::normalize(Poly num, Poly den) {
  Scalar s;
  if (num.is_zero()) return s;
  if (den.is_constant()) {
    num = num.scaled(Rational(1) / den.constant_value());
    if (num.is_constant()) {
      s.v_ = num.constant_value();
      return s;
    }
    s.v_ = Frac{num, Poly::constant(num.nvars(), Rational(1))};
    return s;
  }
  Rational lc = den.leading().coeff;
  if (!lc.is_one()) {
    Rational inv = Rational(1) / lc;
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  if (auto q = num.divide_exact(den)) return normalize(*q, Poly::constant(num.nvars(), Rational(1)));
  if (!num.is_constant())
    if (auto q = den.divide_exact(num)) return normalize(Poly::constant(num.nvars(), Rational(1)), *q);
  s.v_ = Frac{std::move(num), std::move(den)};
  return s;
}

Poly Scalar::numerator(std::size_t nvars) const {
  if (is_rational()) return Poly::constant(nvars, rational());
  if (frac().num.nvars() != nvars) throw RingMismatch("scalar lifted to a different parameter list");
  return frac().num;
}

Poly Scalar::denominator(std::size_t nvars) const {
  if (is_rational()) return Poly::constant(nvars, Rational(1));
  if (frac().den.nvars() != nvars) throw RingMismatch("scalar lifted to a different parameter list");
  return frac().den;
}

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(-rational());
  Scalar s = *this;
  std::get<Frac>(s.v_).num = -frac().num;
  return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational()) return Scalar(a.rational() + b.rational());
  std::size_t n = common_nvars(a, b);
  Poly da = a.denominator(n), db = b.denominator(n);
  if (da == db) return Scalar::normalize(a.numerator(n) + b.numerator(n), da);
  return Scalar::normalize(a.numerator(n) * db + b.numerator(n) * da, da * db);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational()) return Scalar(a.rational() * b.rational());
  if (a.is_zero() || b.is_zero()) return Scalar();
  std::size_t n = common_nvars(a, b);
  if (a.is_rational() || b.is_rational()) {
    const Scalar& f = a.is_rational() ? b : a;
    const Rational& c = a.is_rational() ? a.rational() : b.rational();
    return Scalar::normalize(f.frac().num.scaled(c), f.frac().den);
  }
  return Scalar::normalize(a.numerator(n) * b.numerator(n), a.denominator(n) * b.denominator(n));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (b.is_zero()) throw DivisionByZero("scalar division by zero");
  if (a.is_rational() && b.is_rational()) return Scalar(a.rational() / b.rational());
  std::size_t n = common_nvars(a, b);
  return Scalar::normalize(a.numerator(n) * b.denominator(n), a.denominator(n) * b.numerator(n));
}

Scalar Scalar::pow(unsigned e) const {
  if (is_rational()) return Scalar(rational().pow(e));
  return normalize(frac().num.pow(e), frac().den.pow(e));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational()) return a.rational() == b.rational();
  if (a.is_rational() != b.is_rational()) {
    // a normalized non-rational value is never a constant
    return false;
  }
  std::size_t n = common_nvars(a, b);
  return a.numerator(n) * b.denominator(n) == b.numerator(n) * a.denominator(n);
}

Rational Scalar::eval(const std::vector<Rational>& point) const {
  if (is_rational()) return rational();
  Rational d = frac().den.eval(point);
  if (d.is_zero()) throw DenominatorVanishes("denominator vanishes at evaluation point");
  return frac().num.eval(point) / d;
}

Scalar Scalar::substitute(std::size_t var, const Scalar& value) const {
  if (is_rational()) return *this;
  auto rebuild = [&](const Poly& p) {
    std::vector<Poly> parts = p.split_by(var);
    Scalar acc, power(1);
    for (std::size_t e = 0; e < parts.size(); ++e) {
      if (e) power = power * value;
      if (!parts[e].is_zero()) acc = acc + Scalar(parts[e]) * power;
    }
    return acc;
  };
  return rebuild(frac().num) / rebuild(frac().den);
}

Scalar Scalar::remap(std::size_t new_nvars, const std::vector<std::size_t>& mapping) const {
  if (is_rational()) return *this;
  return normalize(frac().num.remap(new_nvars, mapping), frac().den.remap(new_nvars, mapping));
}

std::string Scalar::str(const std::vector<std::string>& names) const {
  if (is_rational()) return rational().str();
  if (frac().den.is_constant()) return frac().num.str(names);
  return "(" + frac().num.str(names) + ")/(" + frac().den.str(names) + ")";
}

namespace {

// sum := prod (("+"|"-") prod)*; prod := unary (("*"|"/") unary)*;
// unary := "-" unary | pow; pow := atom ["^" nat]; atom := int | param | "(" sum ")"
class CoeffParser {
 public:
  CoeffParser(const std::string& text, const std::vector<std::string>& params)
      : s_(text), params_(params) {}

  Scalar parse() {
    Scalar v = sum();
    skip();
    if (i_ != s_.size()) throw SyntaxError("unexpected '" + std::string(1, s_[i_]) + "'", i_);
    return v;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  Scalar sum() {
    Scalar v = prod();
    for (;;) {
      if (eat('+'))
        v = v + prod();
      else if (eat('-'))
        v = v - prod();
      else
        return v;
    }
  }
  Scalar prod() {
    Scalar v = unary();
    for (;;) {
      if (eat('*')) {
        v = v * unary();
      } else if (eat('/')) {
        std::size_t at = i_;
        Scalar d = unary();
        if (d.is_zero()) throw DivisionByZero("division by zero at position " + std::to_string(at));
        v = v / d;
      } else {
        return v;
      }
    }
  }
  Scalar unary() {
    if (eat('-')) return -unary();
    return power();
  }
  Scalar power() {
    Scalar base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (i_ == start) throw SyntaxError("expected exponent", i_);
      unsigned long e = std::stoul(s_.substr(start, i_ - start));
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }
  Scalar atom() {
    skip();
    if (i_ >= s_.size()) throw SyntaxError("unexpected end of coefficient", i_);
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      Scalar v = sum();
      if (!eat(')')) throw SyntaxError("expected ')'", i_);
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      return Scalar(Rational(mpz_class(s_.substr(start, i_ - start), 10), 1));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i_;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      std::string name = s_.substr(start, i_ - start);
      auto it = std::find(params_.begin(), params_.end(), name);
      if (it == params_.end()) throw UnknownParameter("unknown parameter '" + name + "'");
      return Scalar::param(params_.size(), static_cast<std::size_t>(it - params_.begin()));
    }
    throw SyntaxError("unexpected '" + std::string(1, c) + "'", i_);
  }

  const std::string& s_;
  const std::vector<std::string>& params_;
  std::size_t i_ = 0;
};

}  // namespace

Scalar parse_scalar(const std::string& text, const std::vector<std::string>& params) {
  return CoeffParser(text, params).parse();
}

}  // namespace bihom
