#pragma once

#include <cstdint>

#include "nij/acs.hpp"

namespace nij {

/// Counter-based generator: value i of stream `seed` is a pure function of
/// (seed, i), so parallel restarts and test loops stay reproducible.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, 1) from the top 53 bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  /// Uniform integer in [lo, hi] (modulo bias is below 2^-58 for small ranges).
  long integer(long lo, long hi) { return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

 private:
  std::uint64_t state_;
};

/// Stream seed for item `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// Rational in [-9, 9] with numerator and denominator in [-9, 9] (denominator nonzero).
Rational random_rational(SplitMix64& rng);

template <std::size_t N>
Vec<Rational, N> random_rational_vec(SplitMix64& rng) {
  Vec<Rational, N> v;
  for (std::size_t i = 0; i < N; ++i) v[i] = random_rational(rng);
  return v;
}

/// Random complex structure P J0 P^-1 with J0 = [[0,-Id],[Id,0]] and P an
/// invertible integer matrix with entries in [-3, 3].
Acs<Rational> random_conjugated_acs(SplitMix64& rng);

}  // namespace nij
