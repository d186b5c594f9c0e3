#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bihom/rational.hpp"

namespace bihom {

using Monomial = std::vector<std::uint32_t>;

// Graded lexicographic order: total degree first, then the first differing
// exponent decides (k1 > k2 > ...).
bool grlex_less(const Monomial& a, const Monomial& b);

struct PolyTerm {
  Monomial exp;
  Rational coeff;
  friend bool operator==(const PolyTerm&, const PolyTerm&) = default;
};

// Sparse polynomial over Q in a fixed number of variables. Terms are kept
// sorted by descending grlex order with no zero coefficients, so structural
// equality is polynomial equality.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}
  static Poly constant(std::size_t nvars, const Rational& c);
  static Poly variable(std::size_t nvars, std::size_t index);
  static Poly from_terms(std::size_t nvars, std::vector<PolyTerm> terms);

  std::size_t nvars() const { return nvars_; }
  const std::vector<PolyTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // requires is_constant()
  const PolyTerm& leading() const { return terms_.front(); }
  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Rational& c) const;
  Poly pow(unsigned e) const;

  // Quotient when d divides *this exactly, nullopt otherwise.
  std::optional<Poly> divide_exact(const Poly& d) const;

  Rational eval(const std::vector<Rational>& point) const;
  // Coefficients of powers of `var`: result[e] is the cofactor of var^e.
  std::vector<Poly> split_by(std::size_t var) const;
  // Re-embed into a ring with more variables; mapping[i] is the new index of variable i.
  Poly remap(std::size_t new_nvars, const std::vector<std::size_t>& mapping) const;

  std::string str(const std::vector<std::string>& names) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void check_ring(const Poly& o) const;

  std::size_t nvars_ = 0;
  std::vector<PolyTerm> terms_;
};

}  // namespace bihom
