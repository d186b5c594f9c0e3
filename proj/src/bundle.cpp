#include "bihom/bundle.hpp"

#include <algorithm>
#include <set>

#include "bihom/errors.hpp"

namespace bihom {

std::string Branch::str(const std::vector<std::string>& params) const {
  std::string out;
  for (const auto& [name, value] : assign) {
    if (!out.empty()) out += ", ";
    out += name + " = " + value.str(params);
  }
  return out;
}

const MultiOp& AlgebraBundle::op(const std::string& n) const {
  auto it = ops.find(n);
  if (it == ops.end()) throw MissingOp("bundle has no operation '" + n + "'");
  return it->second;
}

const LinMap& AlgebraBundle::map(const std::string& n) const {
  auto it = maps.find(n);
  if (it == maps.end()) throw MissingMap("bundle has no map '" + n + "'");
  return it->second;
}

void AlgebraBundle::validate() const {
  const std::size_t np = ring.params.size();
  std::set<std::string> names(ring.params.begin(), ring.params.end());
  if (names.size() != np) throw SchemaError("parameter names must be distinct");
  auto check = [&](const Scalar& s) {
    if (s.nvars() != 0 && s.nvars() != np) throw RingMismatch("scalar over a different parameter list");
  };
  for (const auto& [name, op] : ops) {
    if (op.dim() != dim()) throw SpaceMismatch("operation '" + name + "' has wrong dimension");
    if (op.arity() == 0) throw SchemaError("operation '" + name + "' has arity 0");
    for (const auto& [idx, v] : op.entries())
      for (const auto& s : v) check(s);
  }
  for (const auto& [name, m] : maps) {
    if (m.dim() != dim()) throw SpaceMismatch("map '" + name + "' has wrong dimension");
    for (std::size_t i = 0; i < m.dim(); ++i)
      for (std::size_t j = 0; j < m.dim(); ++j) check(m.at(i, j));
  }
  for (const auto& c : ring.constraints) check(c);
}

bool constraints_hold(const AlgebraBundle& b, const std::vector<Rational>& point) {
  for (const auto& c : b.ring.constraints)
    if (!c.eval(point).is_zero()) return false;
  return true;
}

Point make_point(const std::vector<std::string>& params, const std::vector<Rational>& values) {
  Point p;
  for (std::size_t i = 0; i < params.size(); ++i) p.emplace_back(params[i], values.at(i));
  return p;
}

AlgebraBundle specialize(const AlgebraBundle& b, const std::vector<Rational>& point) {
  if (point.size() != b.ring.params.size()) throw RingMismatch("point does not assign every parameter");
  if (!constraints_hold(b, point)) throw ConstraintViolated("point violates the bundle constraints");
  AlgebraBundle r = transform_scalars(b, [&](const Scalar& s) { return Scalar(s.eval(point)); });
  r.ring = Ring{};
  r.catalog.reset();
  return r;
}

AlgebraBundle apply_branch(const AlgebraBundle& b, const Branch& br) {
  AlgebraBundle r = b;
  for (const auto& [name, value] : br.assign) {
    auto it = std::find(b.ring.params.begin(), b.ring.params.end(), name);
    if (it == b.ring.params.end()) throw UnknownParameter("unknown parameter '" + name + "'");
    auto var = static_cast<std::size_t>(it - b.ring.params.begin());
    r = transform_scalars(r, [&](const Scalar& s) { return s.substitute(var, value); });
  }
  if (!r.ring.constraints.empty()) throw Inconsistent("branch '" + br.str(b.ring.params) + "' leaves a constraint nonzero");
  r.catalog.reset();
  return r;
}

AlgebraBundle extend_ring(const AlgebraBundle& b, const std::vector<std::string>& params) {
  std::vector<std::size_t> mapping;
  for (const auto& p : b.ring.params) {
    auto it = std::find(params.begin(), params.end(), p);
    if (it == params.end()) throw RingMismatch("parameter '" + p + "' missing from the extended ring");
    mapping.push_back(static_cast<std::size_t>(it - params.begin()));
  }
  AlgebraBundle r = transform_scalars(b, [&](const Scalar& s) { return s.remap(params.size(), mapping); });
  r.ring.params = params;
  return r;
}

AlgebraBundle rename_params(const AlgebraBundle& b, const std::map<std::string, std::string>& renames) {
  AlgebraBundle r = b;
  for (auto& p : r.ring.params) {
    auto it = renames.find(p);
    if (it != renames.end()) p = it->second;
  }
  std::set<std::string> names(r.ring.params.begin(), r.ring.params.end());
  if (names.size() != r.ring.params.size()) throw SchemaError("renaming makes parameter names collide");
  if (r.catalog)
    for (auto& br : r.catalog->branches)
      for (auto& [name, value] : br.assign)
        if (renames.count(name)) name = renames.at(name);
  return r;
}

namespace {

std::size_t param_index(const std::vector<std::string>& params, const std::string& name) {
  auto it = std::find(params.begin(), params.end(), name);
  if (it == params.end()) throw UnknownParameter("unknown parameter '" + name + "'");
  return static_cast<std::size_t>(it - params.begin());
}

// Tries to make the constraints hold by solving each one for a parameter that
// occurs with degree 1 in its numerator.
bool solve_linear(const AlgebraBundle& b, std::vector<Rational>& point) {
  std::vector<bool> solved(point.size(), false);
  for (const auto& c : b.ring.constraints) {
    if (c.is_rational()) return c.is_zero();
    const Poly& num = c.frac().num;
    bool done = false;
    for (std::size_t v = 0; v < point.size() && !done; ++v) {
      if (solved[v] || num.degree_in(v) != 1) continue;
      std::vector<Poly> parts = num.split_by(v);
      Rational a = parts[1].eval(point);
      if (a.is_zero()) continue;
      point[v] = -parts[0].eval(point) / a;
      solved[v] = done = true;
    }
    if (!done) return false;
  }
  return constraints_hold(b, point);
}

}  // namespace

std::vector<std::vector<Rational>> sample_points(const AlgebraBundle& b, std::size_t n, std::uint64_t seed) {
  const auto& params = b.ring.params;
  std::vector<Scalar> dets;
  for (const auto& [name, m] : b.maps) {
    Scalar d = m.determinant();
    if (!d.is_zero() && !d.is_rational()) dets.push_back(d);
  }
  std::vector<Branch> branches;
  if (b.catalog) branches = b.catalog->branches;

  std::vector<std::vector<Rational>> points;
  Rng root(seed);
  for (std::size_t i = 0; i < n; ++i) {
    Rng rng = root.split(i);
    bool ok = false;
    for (int attempt = 0; attempt < 200 && !ok; ++attempt) {
      std::vector<Rational> pt;
      for (std::size_t k = 0; k < params.size(); ++k) pt.emplace_back(rng.uniform(-10, 10));
      try {
        if (!branches.empty()) {
          const Branch& br = branches[i % branches.size()];
          for (const auto& [name, value] : br.assign) pt[param_index(params, name)] = value.eval(pt);
          if (!constraints_hold(b, pt)) continue;
        } else if (!b.ring.constraints.empty()) {
          if (!solve_linear(b, pt)) continue;
        }
        bool singular = false;
        for (const auto& d : dets) singular = singular || d.eval(pt).is_zero();
        if (singular) continue;
        // every scalar must be defined at the point
        (void)transform_scalars(b, [&](const Scalar& s) { return Scalar(s.eval(pt)); });
      } catch (const DenominatorVanishes&) {
        continue;
      }
      points.push_back(std::move(pt));
      ok = true;
    }
    if (!ok) throw ConstraintViolated("could not sample a parameter point satisfying the constraints");
  }
  return points;
}

}  // namespace bihom
