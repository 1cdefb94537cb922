#include "nij/autmod.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

#include "nij/sampling.hpp"

namespace nij {

template <class T>
AutCheck<T> is_automorphism(const LieAlgebra3<T>& alg, const LinMap3<T>& phi, double eps) {
  AutCheck<T> out;
  const auto& c = alg.constants;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      Vec3<T> pi, pj;
      for (std::size_t k = 0; k < 3; ++k) pi[k] = phi(k, i), pj[k] = phi(k, j);
      const T d = max_abs(Vec3<T>(phi * c(i, j) - bracket(c, pi, pj)));
      if (d > out.residual) out.residual = d;
    }
  out.det = determinant(phi);
  if constexpr (kIsExact<T>)
    out.ok = sgn(out.residual) == 0 && sgn(out.det) != 0;
  else
    out.ok = out.residual <= eps && std::fabs(out.det) > kAutDetFloor;
  return out;
}

template AutCheck<Rational> is_automorphism(const LieAlgebra3<Rational>&, const LinMap3<Rational>&, double);
template AutCheck<double> is_automorphism(const LieAlgebra3<double>&, const LinMap3<double>&, double);

namespace {

using M3 = Eigen::Matrix3d;
using V3 = Eigen::Vector3d;

struct Problem {
  std::array<M3, 3> ad;  // ad[i](k, j) = [e_i, e_j]_k
  std::optional<std::pair<V3, V3>> carry;  // phi * first = second

  explicit Problem(const LieAlgebra3<double>& alg) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          ad[i](k, j) = alg.constants.coeff(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                                            static_cast<std::size_t>(k));
  }

  V3 bracket(const V3& x, const V3& y) const { return x[0] * (ad[0] * y) + x[1] * (ad[1] * y) + x[2] * (ad[2] * y); }

  int rows() const { return carry ? 12 : 9; }

  Eigen::VectorXd residual(const M3& phi) const {
    Eigen::VectorXd r(rows());
    int row = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j, row += 3)
        r.segment<3>(row) = phi * ad[i].col(j) - bracket(phi.col(i), phi.col(j));
    if (carry) r.segment<3>(9) = phi * carry->first - carry->second;
    return r;
  }

  // Column r*3+s is the derivative along the unit matrix E_rs.
  Eigen::MatrixXd jacobian(const M3& phi) const {
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(rows(), 9);
    int row = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j, row += 3) {
        const V3 cij = ad[i].col(j);
        for (int r = 0; r < 3; ++r) {
          const V3 er = V3::Unit(r);
          for (int s = 0; s < 3; ++s) jac(row + r, r * 3 + s) += cij[s];
          jac.block<3, 1>(row, r * 3 + i) -= bracket(er, phi.col(j));
          jac.block<3, 1>(row, r * 3 + j) -= bracket(phi.col(i), er);
        }
      }
    if (carry)
      for (int r = 0; r < 3; ++r)
        for (int s = 0; s < 3; ++s) jac(9 + r, r * 3 + s) = carry->first[s];
    return jac;
  }
};

M3 refine(const Problem& pb, M3 phi, int max_iters) {
  Eigen::VectorXd r = pb.residual(phi);
  double f = r.squaredNorm();
  double mu = 1e-3;
  for (int it = 0; it < max_iters && f > 1e-30; ++it) {
    const Eigen::MatrixXd jac = pb.jacobian(phi);
    Eigen::MatrixXd a = jac.transpose() * jac;
    a.diagonal().array() += mu;
    const Eigen::VectorXd step = a.ldlt().solve(-(jac.transpose() * r));
    M3 trial = phi;
    for (int k = 0; k < 9; ++k) trial(k / 3, k % 3) += step[k];
    const Eigen::VectorXd rt = pb.residual(trial);
    const double ft = rt.squaredNorm();
    if (std::isfinite(ft) && ft < f) {
      phi = trial, r = rt, f = ft;
      mu = std::max(mu / 10, 1e-15);
    } else {
      mu *= 10;
      if (mu > 1e12) break;
    }
  }
  return phi;
}

M3 random_start(SplitMix64& rng) {
  for (;;) {
    M3 m;
    for (int k = 0; k < 9; ++k) m(k / 3, k % 3) = rng.uniform(-2.0, 2.0);
    if (std::fabs(m.determinant()) >= 0.1) return m;
  }
}

LinMap3<double> to_map(const M3& m) {
  LinMap3<double> out;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) out(r, c) = m(static_cast<int>(r), static_cast<int>(c));
  return out;
}

}  // namespace

AutSample sample_automorphisms(const LieAlgebra3<double>& alg, int n, std::uint64_t seed, int max_attempts) {
  if (n < 1) throw std::invalid_argument("automorphism count must be >= 1");
  if (max_attempts <= 0) max_attempts = 20 * n;
  const Problem pb(alg);
  AutSample out;
  while (static_cast<int>(out.maps.size()) < n && out.attempts < max_attempts) {
    SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(out.attempts)));
    ++out.attempts;
    const auto phi = to_map(refine(pb, random_start(rng), 200));
    const auto check = is_automorphism(alg, phi, kAutAcceptTol);
    if (!check.ok || std::fabs(check.det) < kAutDetFloor) continue;
    out.maps.push_back(phi);
    out.residuals.push_back(check.residual);
  }
  out.shortfall = n - static_cast<int>(out.maps.size());
  return out;
}

OrbitReport orbit_invariance_check(const LieAlgebra3<double>& alg, const std::vector<LinMap3<double>>& maps,
                                   double eps) {
  OrbitReport rep;
  // (row, column) entries that must vanish, i.e. components leaving the invariant subspace.
  std::vector<std::pair<std::size_t, std::size_t>> zeros;
  switch (alg.type) {
    case BianchiType::T2:
      rep.claims = {"phi(e1) parallel to e1", "phi(e3) parallel to e3"};
      zeros = {{1, 0}, {2, 0}, {0, 2}, {1, 2}};
      break;
    case BianchiType::T3:
      rep.claims = {"phi(e3) parallel to e3"};
      zeros = {{0, 2}, {1, 2}};
      break;
    case BianchiType::T4:
    case BianchiType::T6:
      rep.claims = {"phi(span{e1,e2}) = span{e1,e2}"};
      zeros = {{2, 0}, {2, 1}};
      break;
    default:
      break;
  }
  for (const auto& phi : maps) {
    const auto check = is_automorphism(alg, phi, eps);
    if (!check.ok)
      throw std::invalid_argument("orbit check input is not an automorphism (residual " +
                                  std::to_string(check.residual) + ", det " + std::to_string(check.det) + ")");
    ++rep.maps_checked;
    double dev = 0.0;
    for (auto [r, c] : zeros) dev = std::max(dev, std::fabs(phi(r, c)));
    rep.worst_deviation = std::max(rep.worst_deviation, dev);
    if (dev > eps) ++rep.failures;
  }
  rep.passed = rep.failures == 0;
  return rep;
}

Witness find_carrying_automorphism(const LieAlgebra3<double>& alg, const Vec3<double>& from, const Vec3<double>& to,
                                   std::uint64_t seed, int attempts) {
  Problem pb(alg);
  pb.carry = std::make_pair(V3(from[0], from[1], from[2]), V3(to[0], to[1], to[2]));
  Witness best;
  best.residual = INFINITY;
  for (int a = 0; a < attempts; ++a) {
    SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(a)));
    const M3 phi = refine(pb, random_start(rng), 300);
    const double res = pb.residual(phi).cwiseAbs().maxCoeff();
    const auto map = to_map(phi);
    if (res < best.residual) best.residual = res;
    if (res <= kAutAcceptTol && is_automorphism(alg, map, kAutAcceptTol).ok) {
      best.status = WitnessStatus::Found;
      best.map = map;
      best.residual = res;
      return best;
    }
  }
  return best;
}

}  // namespace nij
