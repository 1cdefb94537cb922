#include "nij/sampling.hpp"

namespace nij {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 a(seed);
  const std::uint64_t base = a.next();
  SplitMix64 b(base ^ (index * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL));
  return b.next();
}

Rational random_rational(SplitMix64& rng) {
  long num = rng.integer(-9, 9);
  long den = 0;
  while (den == 0) den = rng.integer(-9, 9);
  return make_rational(num, den);
}

Acs<Rational> random_conjugated_acs(SplitMix64& rng) {
  for (;;) {
    Mat6<Rational> p;
    for (auto& x : p.data()) x = rng.integer(-3, 3);
    Mat6<Rational> pinv;
    try {
      pinv = inverse(p);
    } catch (const std::domain_error&) {
      continue;
    }
    return Acs<Rational>(p * Acs<Rational>::standard().matrix() * pinv);
  }
}

}  // namespace nij
