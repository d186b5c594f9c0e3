#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bihom/bundle.hpp"
#include "bihom/evaluator.hpp"
#include "bihom/registry.hpp"
#include "bihom/verdict.hpp"

namespace bihom {

struct CheckMode {
  enum class Kind { symbolic, sampled };
  Kind kind = Kind::symbolic;
  std::size_t samples = 5;
  std::uint64_t seed = 0;
  // Exponent tuples for the shift family; empty means default_exponent_grid(seed).
  std::vector<ExponentTuple> exponents;
  EvalOptions eval;

  static CheckMode sampled(std::size_t n, std::uint64_t seed) {
    CheckMode m;
    m.kind = Kind::sampled;
    m.samples = n;
    m.seed = seed;
    return m;
  }
};

struct Report {
  std::string bundle_id;
  std::string structure;
  CheckMode mode;
  std::vector<std::string> params;
  std::vector<std::vector<Rational>> points;  // sampled mode only
  std::vector<Verdict> verdicts;
  std::vector<std::string> notes;
  Status overall = Status::pass;

  // Sorts verdicts by id and recomputes overall.
  void finalize();
  const Verdict* find(const std::string& id) const;
};

// Runs fn on the bundle as the mode dictates: once generically (or once per
// catalog branch) in symbolic mode, once per sample point in sampled mode.
// The first failure wins and carries its branch or point.
Verdict check_across(const AlgebraBundle& b, const CheckMode& mode, const std::vector<std::vector<Rational>>& points,
                     const std::function<Verdict(const AlgebraBundle&)>& fn);

Verdict check_predicate(const Predicate& p, const AlgebraBundle& b, const EvalOptions& opt = {});
Verdict check_identity_def(const IdentityDef& def, const AlgebraBundle& b, const EvalOptions& opt = {});

Report check_structure(const std::string& name, const AlgebraBundle& b, const CheckMode& mode = {});
Report check_structure(const StructureDef& def, const AlgebraBundle& b, const CheckMode& mode = {});

Report check_tbp_consequences(const AlgebraBundle& b, const CheckMode& mode = {});
Report check_overlap_tbp_bp(const AlgebraBundle& b, const CheckMode& mode = {});
Report check_ternary_overlap(const AlgebraBundle& b, const CheckMode& mode = {});
Report check_shift_family(const AlgebraBundle& b, const CheckMode& mode = {});

// Leibniz rule of map D over each named op, plus commute(D, a) and commute(D, b) when asked.
Report check_derivation(const AlgebraBundle& b, const std::string& map, const std::vector<std::string>& ops,
                        bool with_commute = false, const CheckMode& mode = {});
// f∘f = id, f(br(x,y)) = -br(f(x),f(y)), f commutes with a and b.
Report check_involution(const AlgebraBundle& b, const std::string& map, const CheckMode& mode = {});
// Both forms of the right Novikov-Poisson compatibility plus an agreement verdict.
Report check_novikov_compat_equivalence(const AlgebraBundle& b, const CheckMode& mode = {});

}  // namespace bihom
