#pragma once

#include <string>
#include <variant>
#include <vector>

#include "bihom/poly.hpp"
#include "bihom/rational.hpp"

namespace bihom {

// Polynomial quotient; den is never zero. A Frac with den == 1 is a polynomial.
struct Frac {
  Poly num;
  Poly den;
};

// Element of Q or of the fraction field Q(k1..kn). Parameter-free values are
// always held as Rational, so Rational inputs give Rational outputs.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(long n) : v_(Rational(n)) {}            // NOLINT(implicit)
  Scalar(const Rational& q) : v_(q) {}           // NOLINT(implicit)
  explicit Scalar(const Poly& p);
  static Scalar fraction(const Poly& num, const Poly& den);
  static Scalar param(std::size_t nvars, std::size_t index) { return Scalar(Poly::variable(nvars, index)); }

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  const Rational& rational() const { return std::get<Rational>(v_); }
  const Frac& frac() const { return std::get<Frac>(v_); }
  bool is_polynomial() const { return is_rational() || frac().den.is_constant(); }
  // 0 when the value is a plain rational.
  std::size_t nvars() const { return is_rational() ? 0 : frac().num.nvars(); }
  bool is_zero() const { return is_rational() && rational().is_zero(); }
  bool is_one() const { return is_rational() && rational().is_one(); }

  Poly numerator(std::size_t nvars) const;
  Poly denominator(std::size_t nvars) const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar pow(unsigned e) const;

  // Equality as rational functions, by cross-multiplication.
  friend bool operator==(const Scalar& a, const Scalar& b);

  Rational eval(const std::vector<Rational>& point) const;
  Scalar substitute(std::size_t var, const Scalar& value) const;
  Scalar remap(std::size_t new_nvars, const std::vector<std::size_t>& mapping) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  static Scalar normalize(Poly num, Poly den);
  std::variant<Rational, Frac> v_;
};

Scalar parse_scalar(const std::string& text, const std::vector<std::string>& params);

}  // namespace bihom
