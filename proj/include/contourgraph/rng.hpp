#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace cng {

/// splitmix64 generator. Everything stochastic in the library runs through
/// this engine instead of <random> distributions, whose output differs
/// between standard library implementations; results here are reproducible
/// from the seed alone.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound), bound > 0. Rejection sampling, no modulo bias.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t min = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next_u64();
      if (r >= min) return r % bound;
    }
  }

  /// Uniform integer in [lo, hi], inclusive on both ends.
  std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(
                    next_below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  /// Uniform double in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[next_below(i)]);
    }
  }

 private:
  std::uint64_t state_;
};

/// Derives an independent stream seed from a base seed and a stream index,
/// so parallel consumers (repeats, samples) never share a stream.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  Rng r(base ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
  return r.next_u64();
}

}  // namespace cng
