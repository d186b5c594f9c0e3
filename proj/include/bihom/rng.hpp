#pragma once

#include <cstdint>

namespace bihom {

// Counter-based generator: the n-th draw is a pure function of (key, n), and
// split() derives independent streams, so results never depend on call order
// across threads.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) : key_(mix(mix(seed) ^ (stream + kGolden))) {}

  std::uint64_t next() { return mix(key_ + (++counter_) * kGolden); }
  Rng split(std::uint64_t stream) const { return Rng(key_, stream + 1); }

  // Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(next() % span);
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace bihom
