#include "doctest.h"

#include "bihom/errors.hpp"
#include "bihom/rng.hpp"
#include "bihom/scalar.hpp"

using namespace bihom;

namespace {

const std::vector<std::string> kParams{"k1", "k2"};

Poly random_poly(Rng& rng, unsigned max_deg) {
  std::vector<PolyTerm> terms;
  int n = static_cast<int>(rng.uniform(0, 3));
  for (int i = 0; i < n; ++i) {
    Monomial m{static_cast<std::uint32_t>(rng.uniform(0, max_deg)), static_cast<std::uint32_t>(rng.uniform(0, max_deg))};
    terms.push_back({m, Rational(rng.uniform(-5, 5), rng.uniform(1, 4))});
  }
  return Poly::from_terms(2, terms);
}

Scalar random_scalar(Rng& rng) {
  switch (rng.uniform(0, 3)) {
    case 0:
      return Scalar(Rational(rng.uniform(-9, 9), rng.uniform(1, 5)));
    case 1:
      return Scalar(random_poly(rng, 2));
    default: {
      Poly den = random_poly(rng, 1);
      if (den.is_zero()) den = Poly::constant(2, 1);
      return Scalar::fraction(random_poly(rng, 2), den);
    }
  }
}

}  // namespace

TEST_CASE("rational basics") {
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse("-2/4").str() == "-1/2");
  CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
}

TEST_CASE("scalar ring laws on 1200 random triples") {
  Rng rng(2024, 1);
  for (int i = 0; i < 1200; ++i) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    CAPTURE(a.str(kParams));
    CAPTURE(b.str(kParams));
    CAPTURE(c.str(kParams));
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a - a == Scalar(0));
    REQUIRE(a + Scalar(0) == a);
    REQUIRE(a * Scalar(1) == a);
    if (!b.is_zero()) REQUIRE((a / b) * b == a);
  }
}

TEST_CASE("scalar print and parse are inverse") {
  Rng rng(7, 2);
  for (int i = 0; i < 300; ++i) {
    Scalar a = random_scalar(rng);
    std::string s = a.str(kParams);
    CAPTURE(s);
    REQUIRE(parse_scalar(s, kParams) == a);
    REQUIRE(parse_scalar(s, kParams).str(kParams) == s);
  }
}

TEST_CASE("scalar grammar") {
  CHECK(parse_scalar("k2/3", kParams) == parse_scalar("(1/3)*k2", kParams));
  CHECK(parse_scalar("-k1^2", kParams) == -(parse_scalar("k1", kParams).pow(2)));
  CHECK(parse_scalar("(k1 - 1)*k2", kParams) == parse_scalar("k1*k2 - k2", kParams));
  CHECK(parse_scalar("3/6", {}).is_rational());
  CHECK_THROWS_AS(parse_scalar("k3", kParams), UnknownParameter);
  CHECK_THROWS_AS(parse_scalar("k1 +", kParams), SyntaxError);
  CHECK_THROWS_AS(parse_scalar("1/(k1 - k1)", kParams), DivisionByZero);
}

TEST_CASE("fractions compare by cross-multiplication") {
  Scalar x = parse_scalar("(k1^2 - 1)/(k1 - 1)", kParams);
  CHECK(x == parse_scalar("k1 + 1", kParams));
  Scalar y = parse_scalar("1/k1", kParams);
  CHECK(y * parse_scalar("k1", kParams) == Scalar(1));
  CHECK_FALSE(y.is_polynomial());
}

TEST_CASE("evaluation at a point") {
  Scalar x = parse_scalar("(k1 + k2)/(k1 - 2)", kParams);
  CHECK(x.eval({Rational(3), Rational(5)}) == Rational(8));
  CHECK_THROWS_AS(x.eval({Rational(2), Rational(1)}), DenominatorVanishes);
  CHECK(x.substitute(1, Scalar(0)) == parse_scalar("k1/(k1 - 2)", kParams));
}

TEST_CASE("polynomials stay in grlex order") {
  Poly p = parse_scalar("k2 + k1^2 + k1*k2 + 1", kParams).numerator(2);
  REQUIRE(p.terms().size() == 4);
  CHECK(p.leading().exp == Monomial{2, 0});
  CHECK(p.str(kParams) == "k1^2 + k1*k2 + k2 + 1");
  auto q = (p * p).divide_exact(p);
  REQUIRE(q.has_value());
  CHECK(*q == p);
}

TEST_CASE("rng streams are reproducible and split") {
  Rng a(5, 1), b(5, 1), c(5, 2);
  for (int i = 0; i < 10; ++i) {
    auto x = a.next();
    CHECK(x == b.next());
    CHECK(x != c.next());
  }
  Rng s1 = Rng(9).split(3), s2 = Rng(9).split(3);
  CHECK(s1.next() == s2.next());
}
