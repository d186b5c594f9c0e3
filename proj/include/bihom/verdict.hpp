#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bihom/scalar.hpp"

namespace bihom {

using Vector = std::vector<Scalar>;
using Point = std::vector<std::pair<std::string, Rational>>;

enum class Status { pass, fail, inapplicable };

const char* status_name(Status s);

struct Counterexample {
  std::vector<std::size_t> tuple;  // basis indices, one per variable
  std::optional<Point> point;      // parameter values when checked numerically
  std::string branch;              // constraint branch, e.g. "k1 = 1"
  Vector residual;
};

struct Verdict {
  std::string id;
  Status status = Status::pass;
  std::string reason;  // why inapplicable, or a short note
  std::optional<Counterexample> counterexample;

  static Verdict passed(std::string id) { return {std::move(id), Status::pass, {}, {}}; }
  static Verdict inapplicable(std::string id, std::string why) {
    return {std::move(id), Status::inapplicable, std::move(why), {}};
  }
};

// fail beats inapplicable beats pass
Status combine(Status a, Status b);

}  // namespace bihom
