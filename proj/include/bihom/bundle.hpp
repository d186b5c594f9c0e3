#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bihom/linear.hpp"
#include "bihom/rng.hpp"
#include "bihom/scalar.hpp"

namespace bihom {

struct Ring {
  std::vector<std::string> params;
  std::vector<Scalar> constraints;  // each must vanish
};

// One solution family of the constraints: parameters replaced in order by
// expressions in the remaining ones, e.g. k3 := -1 - (k1 - 1)*k2.
struct Branch {
  std::vector<std::pair<std::string, Scalar>> assign;
  std::string str(const std::vector<std::string>& params) const;
};

struct Provenance {
  std::string construction;
  std::vector<std::string> inputs;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::string> warnings;
};

// Bracket constants the listing leaves out, derived rather than given.
struct Completion {
  std::vector<MultiOp::Index> slots;  // every unlisted slot, zero-valued ones included
  MultiOp values;
};

struct CatalogInfo {
  int entry = 0;
  std::string case_label;  // I, II or III
  std::string status;      // asserted-pass or report-only
  std::map<std::string, Completion> completion;
  std::vector<Branch> branches;
  std::string note;
};

struct AlgebraBundle {
  std::string id;
  BasisSpace space;
  Ring ring;
  std::map<std::string, MultiOp> ops;
  std::map<std::string, LinMap> maps;
  std::optional<Provenance> provenance;
  std::optional<CatalogInfo> catalog;

  std::size_t dim() const { return space.dim(); }
  bool has_op(const std::string& n) const { return ops.count(n) > 0; }
  bool has_map(const std::string& n) const { return maps.count(n) > 0; }
  const MultiOp& op(const std::string& n) const;
  const LinMap& map(const std::string& n) const;
  // Dimensions, index ranges and scalar rings all consistent.
  void validate() const;
};

// Applies f to every scalar of ops, maps and constraints.
template <class F>
AlgebraBundle transform_scalars(const AlgebraBundle& b, F&& f) {
  AlgebraBundle r = b;
  for (auto& [name, op] : r.ops) {
    MultiOp out(op.dim(), op.arity());
    for (const auto& [idx, v] : op.entries()) {
      Vector w(v.size());
      for (std::size_t k = 0; k < v.size(); ++k) w[k] = f(v[k]);
      out.set(idx, std::move(w));
    }
    op = std::move(out);
  }
  for (auto& [name, m] : r.maps)
    for (std::size_t i = 0; i < m.dim(); ++i)
      for (std::size_t j = 0; j < m.dim(); ++j) m.at(i, j) = f(m.at(i, j));
  std::vector<Scalar> cons;
  for (const auto& c : r.ring.constraints) {
    Scalar s = f(c);
    if (!s.is_zero()) cons.push_back(std::move(s));
  }
  r.ring.constraints = std::move(cons);
  return r;
}

// Evaluates at a parameter point; the result has no parameters.
AlgebraBundle specialize(const AlgebraBundle& b, const std::vector<Rational>& point);
AlgebraBundle apply_branch(const AlgebraBundle& b, const Branch& br);
// Re-embeds into a ring whose parameter list contains every current parameter.
AlgebraBundle extend_ring(const AlgebraBundle& b, const std::vector<std::string>& params);
AlgebraBundle rename_params(const AlgebraBundle& b, const std::map<std::string, std::string>& renames);

bool constraints_hold(const AlgebraBundle& b, const std::vector<Rational>& point);
Point make_point(const std::vector<std::string>& params, const std::vector<Rational>& values);

// Random parameter points in [-10, 10] satisfying the constraints (via the
// catalog branches when present, otherwise by solving constraints that are
// linear in some parameter). Points where a generically invertible map turns
// singular are skipped.
std::vector<std::vector<Rational>> sample_points(const AlgebraBundle& b, std::size_t n, std::uint64_t seed);

}  // namespace bihom
