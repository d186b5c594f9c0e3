#include "doctest.h"

#include "bihom/bundle.hpp"
#include "bihom/errors.hpp"
#include "bihom/linear.hpp"

using namespace bihom;

namespace {

const std::vector<std::string> kP{"k1", "k2"};

Scalar s(const std::string& text) { return parse_scalar(text, kP); }

LinMap mat(const std::vector<std::vector<std::string>>& rows) {
  LinMap m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m.at(i, j) = s(rows[i][j]);
  return m;
}

}  // namespace

TEST_CASE("columns are images of basis vectors") {
  LinMap a = mat({{"1", "0"}, {"k2", "1"}});
  Vector img = a.apply(basis_vector(2, 0));
  CHECK(img[0] == Scalar(1));
  CHECK(img[1] == s("k2"));
  CHECK(vector_str(img, {"e1", "e2"}, kP) == "e1 + k2*e2");
}

TEST_CASE("composition, inverse and powers") {
  LinMap a = mat({{"1", "0"}, {"k2", "1"}});
  LinMap b = mat({{"1", "0"}, {"k1", "1"}});
  CHECK((a * b) == mat({{"1", "0"}, {"k1 + k2", "1"}}));
  CHECK((a * a.inverse()).is_identity());
  CHECK(a.power(-2) == mat({{"1", "0"}, {"-2*k2", "1"}}));
  CHECK(a.power(0).is_identity());
  CHECK(a.determinant() == Scalar(1));

  LinMap singular = mat({{"0", "0"}, {"1", "0"}});
  CHECK(singular.determinant().is_zero());
  CHECK_THROWS_AS(singular.inverse(), NotInvertible);
  CHECK_THROWS_AS(singular.power(-1), NotInvertible);

  LinMap generic = mat({{"k1", "1"}, {"0", "k2"}});
  LinMap inv = generic.inverse();
  CHECK((generic * inv).is_identity());
  CHECK(inv.at(0, 0) == s("1/k1"));
}

TEST_CASE("commutation check reports the first failing basis vector") {
  // a = [[0,0],[1,0]], b = diag(k1,k2): ab(e1) = k1 e2, ba(e1) = k2 e2
  LinMap a = mat({{"0", "0"}, {"1", "0"}});
  LinMap b = mat({{"k1", "0"}, {"0", "k2"}});
  Verdict v = check_commute(a, b, "commute(a,b)");
  REQUIRE(v.status == Status::fail);
  REQUIRE(v.counterexample);
  CHECK(v.counterexample->tuple == std::vector<std::size_t>{0});
  CHECK(vector_str(v.counterexample->residual, {"e1", "e2"}, kP) == "(k1 - k2)*e2");
  CHECK(check_commute(b, b).status == Status::pass);
}

TEST_CASE("multilinear ops") {
  MultiOp br(2, 2);
  br.add({0, 0}, 1, s("k1 - k2"));
  br.add({0, 1}, 1, Scalar(1));
  br.add({1, 0}, 1, Scalar(-1));
  Vector x = {Scalar(1), s("k1")};
  Vector y = {Scalar(1), s("k2")};
  // br(e1 + k1 e2, e1 + k2 e2) = (k1 - k2) + k2 - k1 = 0
  CHECK(is_zero(br.apply(std::vector<Vector>{x, y})));
  CHECK_THROWS_AS(br.add({2, 0}, 0, Scalar(1)), IndexOutOfRange);
  CHECK_THROWS_AS(br.apply(std::vector<Vector>{x}), ArityMismatch);

  LinMap sw = mat({{"0", "1"}, {"1", "0"}});
  MultiOp tw = twist_op(br, std::vector<LinMap>{sw, LinMap::identity(2)});
  CHECK(tw.get({1, 0})[1] == s("k1 - k2"));
}

TEST_CASE("tensor products use the index i*dimB + j") {
  LinMap a = mat({{"1", "0"}, {"k2", "1"}});
  LinMap d = LinMap::diagonal({Scalar(2), Scalar(3)});
  LinMap t = tensor_map(a, d);
  REQUIRE(t.dim() == 4);
  Vector img = t.apply(basis_vector(4, 1));  // e1⊗e2
  CHECK(img[1] == Scalar(3));
  CHECK(img[3] == s("3*k2"));
  BasisSpace sp = tensor_space(BasisSpace::standard(2), BasisSpace::standard(2));
  CHECK(sp.labels[1] == "e1⊗e2");
}

TEST_CASE("bundle specialization and rings") {
  AlgebraBundle b;
  b.id = "t";
  b.space = BasisSpace::standard(2);
  b.ring.params = kP;
  b.ring.constraints = {s("k1 - 1")};
  b.maps["a"] = mat({{"k1", "0"}, {"0", "k2"}});
  b.ops["mul"] = MultiOp(2, 2);
  b.validate();

  AlgebraBundle sp = specialize(b, {Rational(1), Rational(4)});
  CHECK(sp.ring.params.empty());
  CHECK(sp.map("a").at(1, 1) == Scalar(4));
  CHECK_THROWS_AS(specialize(b, {Rational(2), Rational(4)}), ConstraintViolated);
  CHECK(constraints_hold(b, {Rational(1), Rational(0)}));

  AlgebraBundle ext = extend_ring(b, {"k0", "k1", "k2"});
  CHECK(ext.map("a").at(0, 0).str(ext.ring.params) == "k1");
  AlgebraBundle ren = rename_params(b, {{"k1", "k3"}});
  CHECK(ren.ring.params == std::vector<std::string>{"k3", "k2"});

  auto pts = sample_points(b, 5, 11);
  REQUIRE(pts.size() == 5);
  for (const auto& p : pts) CHECK(constraints_hold(b, p));
  CHECK(pts == sample_points(b, 5, 11));
}
