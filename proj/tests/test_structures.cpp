#include "doctest.h"

#include "bihom/errors.hpp"
#include "bihom/structures.hpp"
#include "fixtures.hpp"

using namespace bihom;

TEST_CASE("entry 26 is a transposed BiHom-Poisson algebra but not BP") {
  const AlgebraBundle& e = fixtures::catalog_entry(26);
  Report r = check_structure("tbp", e);
  CHECK(r.overall == Status::pass);
  CHECK(r.verdicts.size() == 5);
  CHECK(std::is_sorted(r.verdicts.begin(), r.verdicts.end(),
                       [](const Verdict& a, const Verdict& b) { return a.id < b.id; }));

  Report bp = check_structure("bp", e, CheckMode::sampled(1, 7));
  CHECK(bp.overall == Status::fail);
  const Verdict* leib = bp.find("bihom-leibniz");
  REQUIRE(leib);
  CHECK(leib->status == Status::fail);
  CHECK(bp.find("bihom-skew")->status == Status::pass);
  CHECK(bp.points.size() == 1);
}

TEST_CASE("regular-only identities are inapplicable on singular maps") {
  const AlgebraBundle& e = fixtures::catalog_entry(24);  // b is singular
  Report r = check_structure("bihom-lie-regular", e);
  CHECK(r.find("bihom-jacobi-regular")->status == Status::inapplicable);
  CHECK(r.overall == Status::inapplicable);
  Report s = check_shift_family(e);
  CHECK(s.find("shift-fixed")->status == Status::inapplicable);
  CHECK(s.overall != Status::fail);
}

TEST_CASE("constraint branches are checked one by one") {
  const AlgebraBundle& e = fixtures::catalog_entry(16);
  Report r = check_structure("bihom-assoc", e);
  const Verdict* v = r.find("bihom-associativity");
  REQUIRE(v);
  REQUIRE(v->status == Status::fail);
  CHECK(v->counterexample->branch == "k1 = 1");
  CHECK_FALSE(r.notes.empty());
}

TEST_CASE("multiplicativity is its own predicate") {
  const AlgebraBundle& e = fixtures::catalog_entry(2);
  Report r = check_structure("bihom-assoc", e);
  CHECK(r.find("multiplicative(b,mul)")->status == Status::fail);
  CHECK(r.find("multiplicative(a,mul)")->status == Status::pass);
  Report c = check_structure("bihom-comm", e);
  CHECK(c.find("multiplicative(b,mul)") == nullptr);
}

TEST_CASE("tbp implies its consequences on generated instances") {
  std::size_t premises = 0;
  auto instances = fixtures::catalog_points(2, 5);
  for (const auto& d : fixtures::differential_algebras()) instances.push_back(derivation_tbp(d));
  for (const auto& b : instances) {
    if (check_structure("tbp", b).overall != Status::pass) continue;
    ++premises;
    CAPTURE(b.id);
    CHECK(check_tbp_consequences(b).overall == Status::pass);
  }
  CHECK(premises >= 20);
}

TEST_CASE("derivations and involutions") {
  auto d = fixtures::truncated_t(4, "t");
  CHECK(check_derivation(d, "D", {"mul"}, true).overall == Status::pass);
  auto bad = fixtures::truncated_t(4, "1");  // d/dt does not survive the truncation
  Report r = check_derivation(bad, "D", {"mul"});
  const Verdict* v = r.find("derivation(D,mul)");
  REQUIRE(v);
  CHECK(v->status == Status::fail);

  AlgebraBundle e = fixtures::catalog_entry(26);
  e.maps["f"] = LinMap::identity(2).scaled(Scalar(-1));
  CHECK(check_involution(e, "f").overall == Status::pass);
  e.maps["f"] = LinMap::identity(2);
  Report inv = check_involution(e, "f");
  CHECK(inv.find("anti-bracket(f,br)")->status == Status::fail);
  CHECK(inv.find("square-is-identity(f)")->status == Status::pass);
}

TEST_CASE("both right compatibility forms agree on regular instances") {
  for (const auto& d : fixtures::differential_algebras()) {
    AlgebraBundle np = pre_lie_from_derivation(d);
    Report r = check_novikov_compat_equivalence(np);
    CHECK(r.find("agreement")->status == Status::pass);
  }
  AlgebraBundle singular = pre_lie_from_derivation(fixtures::truncated_t(3, "t"));
  singular.maps["a"] = LinMap(3);
  CHECK_THROWS_AS(check_novikov_compat_equivalence(singular), NotInvertible);
}

TEST_CASE("n-ary structures are generated") {
  StructureDef d = Registry::builtin().get("tbp-nlie:3");
  CHECK(d.ops == std::vector<std::string>{"mul", "nbr"});
  CHECK_FALSE(d.notes.empty());
}
