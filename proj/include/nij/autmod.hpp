#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nij/lie_core.hpp"

namespace nij {

template <class T>
using LinMap3 = Mat3<T>;

/// Minimum |det| for a float map to count as invertible.
inline constexpr double kAutDetFloor = 1e-6;
/// Residual at which a sampled map is accepted as an automorphism.
inline constexpr double kAutAcceptTol = 1e-10;

template <class T>
struct AutCheck {
  bool ok = false;
  T residual{};  ///< max over basis pairs of max_k |phi[b_i,b_j] - [phi b_i, phi b_j]|_k
  T det{};
};

/// phi preserves the bracket (exactly, or within eps) and is invertible
/// (det != 0 exactly, |det| > kAutDetFloor in float mode).
template <class T>
AutCheck<T> is_automorphism(const LieAlgebra3<T>& alg, const LinMap3<T>& phi, double eps = kDefaultEps);

struct AutSample {
  std::vector<LinMap3<double>> maps;
  std::vector<double> residuals;
  int attempts = 0;
  int shortfall = 0;  ///< requested minus accepted
};

/// Random invertible starts (entries uniform in [-2, 2]) refined by damped
/// least squares on the bracket-preservation residual; accepted at residual
/// <= kAutAcceptTol and |det| >= kAutDetFloor. Deterministic per seed; at
/// most `max_attempts` starts (default 20 n).
AutSample sample_automorphisms(const LieAlgebra3<double>& alg, int n, std::uint64_t seed, int max_attempts = 0);

struct OrbitReport {
  std::vector<std::string> claims;  ///< invariance statements tested for this tag; empty = vacuous
  int maps_checked = 0;
  int failures = 0;
  double worst_deviation = 0.0;     ///< largest off-subspace component seen
  bool passed = true;
};

/// Necessary invariances of the automorphism group:
/// tag 2: phi e1 || e1 and phi e3 || e3; tag 3: phi e3 || e3;
/// tags 4, 6: phi(span{e1,e2}) = span{e1,e2}. Other tags: vacuous.
/// Throws std::invalid_argument if a map is not an automorphism within eps.
OrbitReport orbit_invariance_check(const LieAlgebra3<double>& alg, const std::vector<LinMap3<double>>& maps,
                                   double eps = 1e-8);

enum class WitnessStatus { Found, Inconclusive };

struct Witness {
  WitnessStatus status = WitnessStatus::Inconclusive;
  std::optional<LinMap3<double>> map;
  double residual = 0.0;
};

/// Searches for an automorphism phi with phi(from) = to. Failure is reported
/// as inconclusive: it does not show that no such automorphism exists.
Witness find_carrying_automorphism(const LieAlgebra3<double>& alg, const Vec3<double>& from, const Vec3<double>& to,
                                   std::uint64_t seed, int attempts = 50);

}  // namespace nij
