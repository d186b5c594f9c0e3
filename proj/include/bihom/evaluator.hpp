#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bihom/bundle.hpp"
#include "bihom/identity.hpp"
#include "bihom/verdict.hpp"

namespace bihom {

struct EvalOptions {
  bool parallel = true;
};

// An identity bound to a bundle: cyc sums expanded, names resolved, map
// chains folded into single matrices and equal subterms shared. Each node is
// tabulated over the basis assignments of the variables it actually uses.
class CompiledIdentity {
 public:
  CompiledIdentity(const IdentityAst& ast, const AlgebraBundle& bundle);
  ~CompiledIdentity();
  CompiledIdentity(CompiledIdentity&&) noexcept;

  // Value at every basis tuple, tuples in lexicographic order of the declared variables.
  std::vector<Vector> tabulate(const EvalOptions& opt = {}) const;
  std::size_t node_count() const;
  std::size_t var_count() const;
  std::size_t dim() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// pass iff the identity vanishes on every basis tuple; the counterexample is
// the lexicographically smallest failing tuple.
Verdict check_identity(const IdentityAst& ast, const AlgebraBundle& bundle, const std::string& id = "identity",
                       const EvalOptions& opt = {});

// Serial per-tuple recursive evaluation; reference for the tabulated kernel.
Verdict check_identity_reference(const IdentityAst& ast, const AlgebraBundle& bundle,
                                 const std::string& id = "identity");

// Value of the identity's expression at arbitrary vectors (one per variable).
Vector evaluate_at(const IdentityAst& ast, const AlgebraBundle& bundle, const std::vector<Vector>& assignment);

// Checks at each parameter point in turn; the first failing (point, tuple) is reported.
Verdict check_identity_sampled(const IdentityAst& ast, const AlgebraBundle& bundle,
                               const std::vector<std::vector<Rational>>& points, const std::string& id = "identity",
                               const EvalOptions& opt = {});

// Structure constants of the multilinear map (x1..xn) -> expr, variables in declaration order.
MultiOp tabulate_op(const IdentityAst& ast, const AlgebraBundle& bundle, const EvalOptions& opt = {});

}  // namespace bihom
