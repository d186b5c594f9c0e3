#include "doctest.h"

#include "bihom/catalog.hpp"
#include "bihom/errors.hpp"
#include "bihom/evaluator.hpp"
#include "bihom/registry.hpp"
#include "bihom/rng.hpp"

using namespace bihom;

namespace {

// dim-3 bundle with small random integer constants, sparse on purpose so
// that some identities pass and some fail.
AlgebraBundle random_bundle(Rng& rng) {
  const std::size_t n = 3;
  AlgebraBundle b;
  b.id = "random";
  b.space = BasisSpace::standard(n);
  for (const char* name : {"mul", "br"}) {
    MultiOp op(n, 2);
    for_each_tuple(n, 2, [&](const MultiOp::Index& idx) {
      if (rng.uniform(0, 2) == 0) op.add(idx, static_cast<std::size_t>(rng.uniform(0, 2)), Scalar(rng.uniform(-2, 2)));
    });
    b.ops.emplace(name, std::move(op));
  }
  for (const char* name : {"a", "b"}) {
    LinMap m = LinMap::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) m.at(i, j) = Scalar(rng.uniform(-1, 1));
    b.maps.emplace(name, std::move(m));
  }
  return b;
}

}  // namespace

TEST_CASE("parallel, serial and reference evaluation agree") {
  Rng rng(31, 0);
  const Registry& reg = Registry::builtin();
  std::vector<const IdentityDef*> ids;
  for (const char* s : {"tbp", "bp", "bihom-assoc", "tbp-consequences", "tbp-bp-overlap", "strong-bp"})
    for (const auto& d : reg.get(s).identities) ids.push_back(&reg.identity(d.id));
  int failing = 0;
  for (int k = 0; k < 6; ++k) {
    AlgebraBundle b = random_bundle(rng);
    for (const auto* d : ids) {
      CAPTURE(d->id);
      Verdict par = check_identity(d->ast, b, d->id, {true});
      Verdict ser = check_identity(d->ast, b, d->id, {false});
      Verdict ref = check_identity_reference(d->ast, b, d->id);
      REQUIRE(par.status == ref.status);
      REQUIRE(ser.status == ref.status);
      if (ref.status == Status::fail) {
        ++failing;
        REQUIRE(par.counterexample->tuple == ref.counterexample->tuple);
        REQUIRE(ser.counterexample->tuple == ref.counterexample->tuple);
        REQUIRE(vectors_equal(par.counterexample->residual, ref.counterexample->residual));
      }
      CompiledIdentity ci(d->ast, b);
      REQUIRE(ci.tabulate({true}).size() == ci.tabulate({false}).size());
    }
  }
  CHECK(failing > 0);
}

TEST_CASE("tabulated values match direct evaluation") {
  const AlgebraBundle& e = catalog_entry(26);
  IdentityAst ast = parse_identity("forall x,y: br(b(x), a(y)) + 2*br(b(y), a(x)) - mul(a(x), b(y)) = 0");
  auto tab = CompiledIdentity(ast, e).tabulate();
  REQUIRE(tab.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<Vector> asg{basis_vector(2, i / 2), basis_vector(2, i % 2)};
    CHECK(vectors_equal(tab[i], evaluate_at(ast, e, asg)));
  }
}

TEST_CASE("shared subterms with different maps stay distinct") {
  const AlgebraBundle& e = catalog_entry(26);
  IdentityAst ast = parse_identity("forall x,y: br(b(x), a(y)) + br(b(y), a(x)) = 0");
  CHECK(check_identity(ast, e).status == Status::pass);
  IdentityAst other = parse_identity("forall x,y: br(b(x), a(y)) + br(a(x), b(y)) = 0");
  CHECK(check_identity(other, e).status == Status::fail);
  CHECK(CompiledIdentity(ast, e).node_count() == 9);
}

TEST_CASE("counterexample is the lexicographically first failing tuple") {
  AlgebraBundle zero = zero_completed(catalog_entry(26));
  Verdict v = check_identity(Registry::builtin().identity("bihom-skew").ast, zero, "bihom-skew");
  REQUIRE(v.status == Status::fail);
  CHECK(v.counterexample->tuple == std::vector<std::size_t>{0, 0});
  CHECK(vector_str(v.counterexample->residual, zero.space.labels, zero.ring.params) == "2*k1*e2");
}

TEST_CASE("sampled checking reports the point") {
  const AlgebraBundle& e = catalog_entry(26);
  IdentityAst leib = Registry::builtin().identity("bihom-leibniz").ast;
  Verdict v = check_identity_sampled(leib, e, {{Rational(3), Rational(5)}}, "bihom-leibniz");
  REQUIRE(v.status == Status::fail);
  REQUIRE(v.counterexample->point);
  CHECK(v.counterexample->tuple == std::vector<std::size_t>{0, 0, 0});
  CHECK(vector_str(v.counterexample->residual, e.space.labels, {}) == "e2");
  CHECK_THROWS_AS(check_identity_sampled(leib, catalog_entry(16), {{Rational(2), Rational(1), Rational(0)}}),
                  ConstraintViolated);
}

TEST_CASE("evaluation errors") {
  const AlgebraBundle& e = catalog_entry(26);
  CHECK_THROWS_AS(check_identity(parse_identity("forall x,y: star(x,y) = 0"), e), UnknownName);
  CHECK_THROWS_AS(check_identity(parse_identity("forall x,y: f(br(x,y)) = 0"), e), UnknownName);
  CHECK_THROWS_AS(check_identity(parse_identity("forall x,y,z: br(x,y,z) = 0"), e), ArityMismatch);
  const AlgebraBundle& sing = catalog_entry(1);
  CHECK_THROWS_AS(check_identity(parse_identity("forall x,y: mul(a^-1(x), y) = 0"), sing), NotInvertible);
}

TEST_CASE("tabulate_op builds structure constants") {
  const AlgebraBundle& e = catalog_entry(26);
  MultiOp op = tabulate_op(parse_identity("forall x,y: br(x,y) + br(y,x) = 0"), e);
  CHECK(op.get({0, 1}) == Vector{Scalar(0), Scalar(0)});
  CHECK(op.get({0, 0})[1] == parse_scalar("2*k1 - 2*k2", e.ring.params));
}
