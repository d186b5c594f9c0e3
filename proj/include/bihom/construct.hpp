#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bihom/bundle.hpp"
#include "bihom/evaluator.hpp"

namespace bihom {

struct ConstructOptions {
  // strict: a failed hypothesis throws PredicateFailed; otherwise it is
  // recorded as a provenance warning and the construction proceeds.
  bool strict = true;
  EvalOptions eval;
};

// Map applied in one argument slot; map "id" is the identity.
struct TwistSlot {
  std::string map = "id";
  int power = 1;
};

struct TwistSpec {
  std::string op;
  std::vector<TwistSlot> slots;
};

// op(x1..xr) -> op(m1(x1), ..., mr(xr)) for every listed op.
AlgebraBundle yau_twist(const AlgebraBundle& b, const std::vector<TwistSpec>& specs, const ConstructOptions& opt = {});

// Input: commutative associative "mul" with maps D, a, b (a, b default to the identity).
// Output mul = mul∘(a⊗b), br(x,y) = mul(a(x), D b(y)) - mul(b(y), D a(x)); D is kept.
AlgebraBundle derivation_tbp(const AlgebraBundle& b, const ConstructOptions& opt = {});
// Same input; output mul = mul∘(a⊗b) and star(x,y) = mul(a(x), D b(y)).
AlgebraBundle pre_lie_from_derivation(const AlgebraBundle& b, const ConstructOptions& opt = {});
// Adds br(x,y) = star(x,y) - star(a^-1 b(y), a b^-1(x)).
AlgebraBundle np_commutator(const AlgebraBundle& b, const ConstructOptions& opt = {});

enum class TensorKind { bp_tbp, pre_lie_poisson };
// Both bundles must have the same parameter list (see extend_ring).
AlgebraBundle tensor_bundle(const AlgebraBundle& A, const AlgebraBundle& B, TensorKind kind,
                            const ConstructOptions& opt = {});

// Ternary brackets "tbr" built from a transposed structure (mul, br, a, b invertible).
AlgebraBundle ternary_from_derivation(const AlgebraBundle& b, const std::string& D = "D",
                                      const ConstructOptions& opt = {});
AlgebraBundle ternary_from_involution(const AlgebraBundle& b, const std::string& f = "f",
                                      const ConstructOptions& opt = {});
AlgebraBundle ternary_from_product(const AlgebraBundle& b, const ConstructOptions& opt = {});

// Q[x1..xn] modulo all monomials of total degree >= bound; the bundle has
// op mul and maps a = b = id. Basis ordered by total degree, then
// lexicographically with the first variable largest (1, u, v, u^2, uv, v^2).
struct Truncated {
  std::vector<std::string> vars;
  std::size_t bound = 0;
  std::vector<Monomial> basis;
  AlgebraBundle bundle;

  std::size_t index_of(const Monomial& m) const;  // dim() when truncated away
  // The derivation sum_i c_i d/dx_i, each c_i a polynomial in the variables,
  // e.g. {"v", "0"} for v d/du.
  LinMap vector_field(const std::vector<std::string>& coefficients) const;
  // The automorphism x_i -> lambda_i x_i.
  LinMap scaling(const std::vector<Rational>& lambdas) const;
};

Truncated truncated_polynomials(const std::vector<std::string>& vars, std::size_t bound);

}  // namespace bihom
