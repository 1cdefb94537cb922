#include "nij/numsearch.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

#include "nij/families.hpp"
#include "nij/sampling.hpp"

namespace nij {

namespace {

using M6 = Eigen::Matrix<double, 6, 6>;
using V6 = Eigen::Matrix<double, 6, 1>;

// ad[i](k, j) = [e_i, e_j]_k on the product algebra.
struct Adjoints {
  std::array<M6, 6> ad;

  explicit Adjoints(const ProductAlgebra<double>& palg) {
    for (auto& m : ad) m.setZero();
    const auto& c = palg.base.constants;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          const double v = c.coeff(static_cast<std::size_t>(i), static_cast<std::size_t>(j), static_cast<std::size_t>(k));
          ad[i](k, j) = v;
          ad[i + 3](k + 3, j + 3) = v;
        }
  }

  V6 bracket(const V6& x, const V6& y) const {
    V6 out = V6::Zero();
    for (int i = 0; i < 6; ++i)
      if (x[i] != 0.0) out += x[i] * (ad[i] * y);
    return out;
  }
};

M6 to_eigen(const Mat6<double>& m) {
  M6 e;
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) {
      const double x = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
      if (!std::isfinite(x)) throw std::invalid_argument("matrix entries must be finite");
      e(r, c) = x;
    }
  return e;
}

Mat6<double> from_eigen(const M6& e) {
  Mat6<double> m;
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = e(r, c);
  return m;
}

ResidualVector stacked(const Adjoints& ad, const M6& j) {
  ResidualVector out;
  const M6 sq = j * j + M6::Identity();
  for (int i = 0; i < 6; ++i)
    for (int k = 0; k < 6; ++k) out[i * 6 + k] = sq(i, k);
  int row = 36;
  for (int p = 0; p < 6; ++p)
    for (int q = p + 1; q < 6; ++q, row += 6) {
      const V6 a = j.col(p), b = j.col(q);
      const V6 u = -(ad.ad[q] * a) + ad.ad[p] * b;  // [a, e_q] + [e_p, b]
      out.segment<6>(row) = ad.ad[p].col(q) + j * u - ad.bracket(a, b);
    }
  return out;
}

ResidualJacobian jacobian(const Adjoints& ad, const M6& j) {
  ResidualJacobian out = ResidualJacobian::Zero();
  // d(J^2) along E_rs is E J + J E.
  for (int r = 0; r < 6; ++r)
    for (int s = 0; s < 6; ++s) {
      const int col = r * 6 + s;
      for (int k = 0; k < 6; ++k) out(r * 6 + k, col) += j(s, k);
      for (int i = 0; i < 6; ++i) out(i * 6 + s, col) += j(i, r);
    }
  // dN(e_p, e_q) along E_rs:
  //   u_s e_r + [s == p](J[e_r, e_q] - [e_r, b]) + [s == q](J[e_p, e_r] - [a, e_r])
  int row = 36;
  for (int p = 0; p < 6; ++p)
    for (int q = p + 1; q < 6; ++q, row += 6) {
      const V6 a = j.col(p), b = j.col(q);
      const V6 u = -(ad.ad[q] * a) + ad.ad[p] * b;
      for (int r = 0; r < 6; ++r) {
        for (int s = 0; s < 6; ++s) out(row + r, r * 6 + s) += u[s];
        out.block<6, 1>(row, r * 6 + p) += j * ad.ad[r].col(q) - ad.ad[r] * b;
        out.block<6, 1>(row, r * 6 + q) += j * ad.ad[p].col(r) + ad.ad[r] * a;
      }
    }
  return out;
}

}  // namespace

std::string_view to_string(Verdict v) { return v == Verdict::Found ? "found" : "not-found"; }

ResidualVector residual_vector(const ProductAlgebra<double>& palg, const Mat6<double>& j) {
  return stacked(Adjoints(palg), to_eigen(j));
}

ResidualJacobian residual_jacobian(const ProductAlgebra<double>& palg, const Mat6<double>& j) {
  return jacobian(Adjoints(palg), to_eigen(j));
}

double residual(const ProductAlgebra<double>& palg, const Mat6<double>& j) {
  return residual_vector(palg, j).squaredNorm();
}

Mat6<double> residual_gradient(const ProductAlgebra<double>& palg, const Mat6<double>& j) {
  const Adjoints ad(palg);
  const M6 e = to_eigen(j);
  const Eigen::Matrix<double, 36, 1> g = 2.0 * jacobian(ad, e).transpose() * stacked(ad, e);
  Mat6<double> out;
  for (std::size_t i = 0; i < 36; ++i) out.data()[i] = g[static_cast<int>(i)];
  return out;
}

void SearchConfig::validate() const {
  if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  if (max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
  if (!(success_tol > 0.0) || !(success_tol < nonexist_tol))
    throw std::invalid_argument("need 0 < success_tol < nonexist_tol");
  if (!(damping_factor > 1.0)) throw std::invalid_argument("damping factor must exceed 1");
  if (threads < 1) throw std::invalid_argument("threads must be >= 1");
}

DescentResult descend(const ProductAlgebra<double>& palg, const Mat6<double>& start, const SearchConfig& cfg) {
  const Adjoints ad(palg);
  M6 x = to_eigen(start);
  ResidualVector r = stacked(ad, x);
  ResidualJacobian jac = jacobian(ad, x);
  double f = r.squaredNorm();
  double mu = cfg.initial_damping;
  const double stop = cfg.success_tol * cfg.success_tol;

  DescentResult out;
  out.trace.push_back(f);
  int iter = 0;
  Eigen::Matrix<double, 36, 36> normal = jac.transpose() * jac;
  Eigen::Matrix<double, 36, 1> grad = jac.transpose() * r;
  while (iter < cfg.max_iters && f > stop) {
    ++iter;
    Eigen::Matrix<double, 36, 36> a = normal;
    a.diagonal().array() += mu;
    const Eigen::Matrix<double, 36, 1> step = a.ldlt().solve(-grad);
    M6 trial = x;
    for (int i = 0; i < 36; ++i) trial(i / 6, i % 6) += step[i];
    const ResidualVector rt = stacked(ad, trial);
    const double ft = rt.squaredNorm();
    if (std::isfinite(ft) && ft < f) {
      x = trial;
      r = rt;
      f = ft;
      jac = jacobian(ad, x);
      normal = jac.transpose() * jac;
      grad = jac.transpose() * r;
      mu = std::max(mu / cfg.damping_factor, cfg.min_damping);
      out.trace.push_back(f);
    } else {
      mu *= cfg.damping_factor;
      if (mu > cfg.max_damping) break;
    }
  }
  out.matrix = from_eigen(x);
  out.residual = f;
  out.iterations = iter;
  return out;
}

Mat6<double> start_matrix(const ProductAlgebra<double>& palg, const SearchConfig& cfg, int index) {
  SplitMix64 rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(index)));
  Mat6<double> m;
  if (cfg.init == InitMode::Random) {
    for (auto& x : m.data()) x = rng.uniform(-cfg.init_range, cfg.init_range);
    return m;
  }
  std::optional<Rational> theta;
  if (palg.base.theta) theta = Rational(*palg.base.theta);  // exact binary value
  const auto alg = bianchi<Rational>(palg.base.type, theta);
  std::vector<FamilyId> ids;
  for (FamilyId id : all_families())
    if (id != FamilyId::Case6Theta1Lambda2 && id != FamilyId::Case6Theta1LambdaMinus2 && family_admissible(id, alg))
      ids.push_back(id);
  if (ids.empty())
    throw std::invalid_argument("family initialisation needs an algebra with integrable structures, got " +
                                designator_of(alg));
  const FamilyId id = ids[static_cast<std::size_t>(index) % ids.size()];
  const auto params = sample_params(id, derive_seed(cfg.seed, static_cast<std::uint64_t>(index)), 1).front();
  m = to_double(family(params, alg).matrix());
  for (auto& x : m.data()) x += rng.uniform(-cfg.init_noise, cfg.init_noise);
  return m;
}

SearchResult search_integrable(const ProductAlgebra<double>& palg, const SearchConfig& cfg) {
  cfg.validate();
  const auto n = static_cast<std::size_t>(cfg.restarts);
  std::vector<DescentResult> runs(n);
  auto worker = [&](std::size_t first, std::size_t stride) {
    for (std::size_t i = first; i < n; i += stride)
      runs[i] = descend(palg, start_matrix(palg, cfg, static_cast<int>(i)), cfg);
  };
  const auto threads = std::min<std::size_t>(static_cast<std::size_t>(cfg.threads), n);
  if (threads <= 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker, t, threads);
    for (auto& th : pool) th.join();
  }

  SearchResult out;
  std::size_t best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    out.restart_residuals.push_back(runs[i].residual);
    if (runs[i].residual < runs[best].residual) best = i;  // strict: ties keep the lower index
  }
  out.best_matrix = Acs<double>(runs[best].matrix);
  out.best_residual = residual(palg, runs[best].matrix);
  out.restart_index = static_cast<int>(best);
  out.iterations_used = runs[best].iterations;
  out.trace = std::move(runs[best].trace);
  out.verdict = out.best_residual <= cfg.success_tol ? Verdict::Found : Verdict::NotFound;
  return out;
}

std::vector<ScanEntry> nonexistence_scan(const std::vector<double>& thetas, const SearchConfig& cfg) {
  std::vector<ScanEntry> out;
  for (double theta : thetas) {
    if (theta == 0.0) throw std::invalid_argument("theta must be nonzero for type 4");
    const auto palg = product(bianchi<double>(BianchiType::T4, theta));
    out.push_back({theta, search_integrable(palg, cfg)});
  }
  return out;
}

}  // namespace nij
