#include "doctest.h"

#include "bihom/errors.hpp"
#include "bihom/structures.hpp"
#include "fixtures.hpp"

using namespace bihom;

namespace {

Vector mono(const Truncated& t, const Monomial& m) { return basis_vector(t.basis.size(), t.index_of(m)); }

}  // namespace

TEST_CASE("truncated polynomial algebras") {
  Truncated t = truncated_polynomials({"u", "v"}, 3);
  CHECK(t.bundle.space.labels == std::vector<std::string>{"1", "u", "v", "u^2", "uv", "v^2"});
  CHECK(check_structure("bihom-assoc", t.bundle).overall == Status::pass);
  CHECK(check_structure("bihom-comm", t.bundle).overall == Status::pass);
  // u * uv = u^2 v is truncated away
  CHECK(is_zero(t.bundle.op("mul").get({1, 4})));
  LinMap vdu = t.vector_field({"v", "0"});
  CHECK(vdu.apply(mono(t, {1, 0})) == mono(t, {0, 1}));
  CHECK_THROWS_AS(t.vector_field({"u"}), ArityMismatch);
}

TEST_CASE("derivation construction from a genuine derivation") {
  AlgebraBundle in = fixtures::truncated_t(4, "t");
  AlgebraBundle out = derivation_tbp(in);
  CHECK(check_structure("tbp", out).overall == Status::pass);
  REQUIRE(out.provenance);
  CHECK(out.provenance->construction == "derivation-tbp");
  CHECK(out.provenance->warnings.empty());
  // br(t, t^2) = t * 2t^2 - t^2 * t = t^3 for D = t d/dt
  Vector v = out.op("br").apply(std::vector<Vector>{basis_vector(4, 1), basis_vector(4, 2)});
  CHECK(v == basis_vector(4, 3));
}

TEST_CASE("strict construction refuses a map that is not a derivation") {
  AlgebraBundle in = fixtures::truncated_t(4, "1");
  CHECK_THROWS_AS(derivation_tbp(in), PredicateFailed);
  AlgebraBundle out = derivation_tbp(in, fixtures::relaxed());
  REQUIRE(out.provenance);
  CHECK_FALSE(out.provenance->warnings.empty());
  Vector v = out.op("br").apply(std::vector<Vector>{basis_vector(4, 1), basis_vector(4, 2)});
  CHECK(v == basis_vector(4, 2));  // t * 2t - t^2 = t^2
}

TEST_CASE("twisted inputs stay transposed Poisson") {
  for (const auto& in : fixtures::differential_algebras()) {
    CAPTURE(in.id);
    AlgebraBundle out = derivation_tbp(in);
    CHECK(check_structure("tbp", out).overall == Status::pass);
  }
}

TEST_CASE("commutator of the pre-Lie product reproduces the derivation bracket") {
  for (const auto& in : fixtures::differential_algebras()) {
    CAPTURE(in.id);
    AlgebraBundle pl = pre_lie_from_derivation(in);
    CHECK(check_structure("bihom-np", pl).overall == Status::pass);
    CHECK(check_structure("pre-lie-poisson", pl).overall == Status::pass);
    AlgebraBundle np = np_commutator(pl);
    CHECK(check_structure("tbp", np).overall == Status::pass);
    CHECK(np.op("br") == derivation_tbp(in).op("br"));
  }
}

TEST_CASE("yau twist") {
  Truncated t = truncated_polynomials({"t"}, 4);
  AlgebraBundle b = t.bundle;
  b.maps["a"] = t.scaling({Rational(2)});
  b.maps["b"] = t.scaling({Rational(-1)});
  AlgebraBundle tw = yau_twist(b, {{"mul", {{"a", 1}, {"b", 1}}}});
  CHECK(check_structure("bihom-assoc", tw).overall == Status::pass);
  CHECK(check_structure("bihom-comm", tw).overall == Status::pass);
  CHECK_THROWS_AS(yau_twist(b, {{"mul", {{"a", 1}}}}), ArityMismatch);
  b.maps["c"] = fixtures::truncated_t(4, "1").map("D");
  CHECK_THROWS_AS(yau_twist(b, {{"mul", {{"c", 1}, {"id", 1}}}}), PredicateFailed);
}

TEST_CASE("tensor products") {
  const AlgebraBundle& e = fixtures::catalog_entry(26);
  CHECK_THROWS_AS(tensor_bundle(e, rename_params(e, {{"k1", "k3"}, {"k2", "k4"}}), TensorKind::bp_tbp),
                  RingMismatch);
  AlgebraBundle sq = tensor_bundle(e, e, TensorKind::bp_tbp);
  CHECK(sq.dim() == 4);
  CHECK(check_structure("tbp", sq).overall == Status::pass);

  AlgebraBundle pl = pre_lie_from_derivation(fixtures::truncated_t(2, "t"));
  AlgebraBundle pt = tensor_bundle(pl, pl, TensorKind::pre_lie_poisson);
  CHECK(pt.has_op("star"));
  CHECK(check_structure("pre-lie-poisson", pt).overall == Status::pass);
}

TEST_CASE("ternary constructions") {
  AlgebraBundle e = fixtures::catalog_entry(26);
  e.maps["f"] = LinMap::identity(2).scaled(Scalar(-1));
  AlgebraBundle tf = ternary_from_involution(e, "f");
  CHECK(check_structure("3-bihom-lie", tf).overall == Status::pass);
  CHECK(check_structure("tbp-3lie", tf).overall == Status::pass);

  e.maps["f"] = LinMap::diagonal({Scalar(2), Scalar(1)});
  CHECK_THROWS_AS(ternary_from_involution(e, "f", fixtures::relaxed()), PredicateFailed);

  AlgebraBundle sing = fixtures::catalog_entry(24);
  CHECK_THROWS_AS(ternary_from_product(sing), NotInvertible);

  AlgebraBundle base = derivation_tbp(fixtures::truncated_uv(2, "u", "v"));
  base.maps["E"] = base.map("D");
  AlgebraBundle td = ternary_from_derivation(base, "E");
  CHECK(td.has_op("tbr"));
  CHECK(check_structure("3-bihom-lie", td).overall == Status::pass);
}
