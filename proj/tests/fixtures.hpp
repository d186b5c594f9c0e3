#pragma once

// Bundles shared by the unit tests, the acceptance binary and the benchmark.

#include <string>
#include <vector>

#include "bihom/catalog.hpp"
#include "bihom/construct.hpp"
#include "bihom/identity.hpp"

namespace fixtures {

using namespace bihom;

// Q[t]/(t^n) with the derivation given as a polynomial coefficient of d/dt,
// stored as map D; a and b are the scaling t -> lambda t.
inline AlgebraBundle truncated_t(std::size_t n, const std::string& coeff, const Rational& lambda = 1) {
  Truncated t = truncated_polynomials({"t"}, n);
  AlgebraBundle b = t.bundle;
  b.maps["D"] = t.vector_field({coeff});
  b.maps["a"] = t.scaling({lambda});
  b.maps["b"] = t.scaling({lambda});
  return b;
}

// Q[u,v]/(deg >= bound) with a derivation D = c_u d/du + c_v d/dv.
inline AlgebraBundle truncated_uv(std::size_t bound, const std::string& cu, const std::string& cv) {
  Truncated t = truncated_polynomials({"u", "v"}, bound);
  AlgebraBundle b = t.bundle;
  b.maps["D"] = t.vector_field({cu, cv});
  return b;
}

inline ConstructOptions relaxed() {
  ConstructOptions o;
  o.strict = false;
  return o;
}

// Commutative associative algebras with a genuine derivation commuting with a and b.
inline std::vector<AlgebraBundle> differential_algebras() {
  std::vector<AlgebraBundle> out;
  for (std::size_t n : {2, 3, 4}) {
    out.push_back(truncated_t(n, "t"));
    out.push_back(truncated_t(n, "t^2"));
    out.push_back(truncated_t(n, "3*t"));
    out.push_back(truncated_t(n, "t", 2));
    out.push_back(truncated_t(n, "-t", Rational(-1, 2)));
  }
  out.push_back(truncated_uv(2, "u", "v"));
  out.push_back(truncated_uv(2, "v", "0"));
  out.push_back(truncated_uv(2, "u", "2*v"));
  return out;
}

// Parameter-free specializations of the asserted-pass catalog entries.
inline std::vector<AlgebraBundle> catalog_points(std::size_t per_entry, std::uint64_t seed) {
  std::vector<AlgebraBundle> out;
  for (const auto& e : catalog_entries()) {
    if (e.catalog->status != "asserted-pass") continue;
    for (const auto& pt : sample_points(e, per_entry, seed)) out.push_back(specialize(e, pt));
  }
  return out;
}

}  // namespace fixtures
