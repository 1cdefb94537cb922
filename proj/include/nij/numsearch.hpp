#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nij/acs.hpp"
#include "nij/lie_core.hpp"

namespace nij {

/// Floor separating "found" from "no structure exists" in search reports.
/// Frozen after scanning the minimum reachable residual on types 5 and
/// 4 with theta in {1/2, 2, 3}; see README.
inline constexpr double kNonexistTol = 1e-3;

inline constexpr int kResidualSize = 36 + 15 * 6;

using ResidualVector = Eigen::Matrix<double, kResidualSize, 1>;
using ResidualJacobian = Eigen::Matrix<double, kResidualSize, 36>;

/// Stacked residual: the 36 entries of J^2 + Id (row-major), then N(b_i, b_j)
/// for the 15 basis pairs i < j in lexicographic order.
ResidualVector residual_vector(const ProductAlgebra<double>& palg, const Mat6<double>& j);

/// Jacobian of residual_vector with respect to the entries J(r, s), column r*6+s.
ResidualJacobian residual_jacobian(const ProductAlgebra<double>& palg, const Mat6<double>& j);

/// |J^2 + Id|_F^2 + sum over basis pairs |N(b_i, b_j)|^2. Throws on non-finite input.
double residual(const ProductAlgebra<double>& palg, const Mat6<double>& j);

/// Analytic gradient of residual(), entry (r, s) = d residual / d J(r, s).
Mat6<double> residual_gradient(const ProductAlgebra<double>& palg, const Mat6<double>& j);

enum class InitMode { Random, FamilyNoise };
enum class Verdict { Found, NotFound };

std::string_view to_string(Verdict v);

struct SearchConfig {
  int restarts = 50;
  int max_iters = 300;
  double success_tol = 1e-10;
  double nonexist_tol = kNonexistTol;
  std::uint64_t seed = 1;
  // Levenberg-Marquardt damping: multiplied on reject, divided on accept.
  double initial_damping = 1e-3;
  double damping_factor = 10.0;
  double max_damping = 1e12;
  double min_damping = 1e-15;
  InitMode init = InitMode::Random;
  double init_range = 2.0;   ///< random starts uniform in [-init_range, init_range]
  double init_noise = 0.1;   ///< amplitude added to family starts
  int threads = 1;

  /// Throws std::invalid_argument for restarts < 1, max_iters < 1 or success_tol >= nonexist_tol.
  void validate() const;
};

struct SearchResult {
  double best_residual = 0.0;
  Acs<double> best_matrix;
  int restart_index = -1;
  int iterations_used = 0;       ///< LM iterations of the best restart
  Verdict verdict = Verdict::NotFound;
  std::vector<double> trace;     ///< residual after each accepted step of the best restart
  std::vector<double> restart_residuals;
};

/// Outcome of one damped least-squares descent.
struct DescentResult {
  Mat6<double> matrix;
  double residual = 0.0;
  int iterations = 0;
  std::vector<double> trace;
};

/// Runs Levenberg-Marquardt from `start` until the residual drops below
/// cfg.success_tol^2, the damping saturates or max_iters is reached.
DescentResult descend(const ProductAlgebra<double>& palg, const Mat6<double>& start, const SearchConfig& cfg);

/// Start matrix for restart `index` (entries uniform in [-range, range], or a
/// family sample plus noise).
Mat6<double> start_matrix(const ProductAlgebra<double>& palg, const SearchConfig& cfg, int index);

/// Multistart search; deterministic in (algebra, cfg). Restarts are merged by
/// minimum residual, ties broken by the lowest restart index.
SearchResult search_integrable(const ProductAlgebra<double>& palg, const SearchConfig& cfg);

struct ScanEntry {
  double theta = 0.0;
  SearchResult result;
};

/// search_integrable on type 4 for each theta (zero rejected).
std::vector<ScanEntry> nonexistence_scan(const std::vector<double>& thetas, const SearchConfig& cfg);

}  // namespace nij
