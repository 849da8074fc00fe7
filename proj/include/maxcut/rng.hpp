#ifndef MAXCUT_RNG_HPP
#define MAXCUT_RNG_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <random>

namespace maxcut {

/// Deterministic random stream. Wraps std::mt19937_64 (fully specified by the
/// standard) and implements the distributions explicitly, since the standard
/// library's distribution algorithms are implementation-defined and would
/// break cross-platform reproducibility of seeded runs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform double in [0, 1), 53 random mantissa bits.
  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

  /// True with probability p. Exactly never for p=0, always for p=1.
  bool bernoulli(double p) { return uniform01() < p; }

  /// Normal(mean, stddev^2) via Box-Muller. Consumes exactly two raw draws
  /// per call so streams stay aligned regardless of outcomes.
  double normal(double mean, double stddev) {
    const double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    return mean + stddev * r * std::cos(2.0 * std::numbers::pi * u2);
  }

  /// Uniform index in [0, count). The clamp guards the corner where
  /// uniform01() * count rounds up to count.
  std::size_t index(std::size_t count) {
    return std::min(count - 1,
                    static_cast<std::size_t>(uniform01() *
                                             static_cast<double>(count)));
  }

 private:
  std::mt19937_64 gen_;
};

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
}  // namespace detail

/// Derives an independent child seed from a base seed and a path of stream
/// indices (e.g. {noise level, trial, instance}). Each path component is
/// folded into the state with one splitmix64 round, so sibling streams are
/// decorrelated and the mapping is stable across platforms and runs.
inline std::uint64_t derive_seed(std::uint64_t base,
                                 std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = detail::splitmix64(base);
  for (std::uint64_t p : path) h = detail::splitmix64(h ^ p);
  return h;
}

}  // namespace maxcut

#endif  // MAXCUT_RNG_HPP
