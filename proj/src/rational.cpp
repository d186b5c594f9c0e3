#include "bihom/rational.hpp"

#include <cctype>

#include "bihom/errors.hpp"

namespace bihom {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(unsigned e) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), e);
  return Rational(n, d);
}

Rational Rational::parse(const std::string& text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
  std::size_t digits = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
  if (i == digits) throw SyntaxError("expected integer", i);
  mpz_class num(text.substr(digits, i - digits), 10);
  if (negative) num = -num;
  mpz_class den = 1;
  if (i < text.size() && text[i] == '/') {
    std::size_t start = ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw SyntaxError("expected denominator", i);
    den = mpz_class(text.substr(start, i - start), 10);
  }
  if (i != text.size()) throw SyntaxError("trailing characters in rational", i);
  return Rational(num, den);
}

}  // namespace bihom
