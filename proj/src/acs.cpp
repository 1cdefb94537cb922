#include "nij/acs.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace nij {

template <class T>
Acs<T>::Acs(const Mat6<T>& m) : m_(m) {
  if constexpr (!kIsExact<T>) {
    for (double x : m.data())
      if (!std::isfinite(x)) throw std::invalid_argument("almost complex structure entries must be finite");
  }
}

template <class T>
Acs<T> Acs<T>::standard() {
  Mat6<T> m;
  for (std::size_t i = 0; i < 3; ++i) {
    m(i + 3, i) = T(1);
    m(i, i + 3) = T(-1);
  }
  return Acs(m);
}

Acs<double> to_double(const Acs<Rational>& j) { return Acs<double>(to_double(j.matrix())); }

template <class T>
AcsCheck<T> is_acs(const Acs<T>& j, double eps) {
  AcsCheck<T> out;
  out.residual = j.matrix() * j.matrix() + Mat6<T>::identity();
  out.max_abs = max_abs(out.residual);
  if constexpr (kIsExact<T>)
    out.ok = sgn(out.max_abs) == 0;
  else
    out.ok = out.max_abs <= eps;
  return out;
}

template <class T>
Vec6<T> nijenhuis(const ProductAlgebra<T>& palg, const Acs<T>& j, const Vec6<T>& v, const Vec6<T>& w) {
  const Vec6<T> jv = j.apply(v);
  const Vec6<T> jw = j.apply(w);
  return bracket6(palg, v, w) + j.apply(bracket6(palg, jv, w)) + j.apply(bracket6(palg, v, jw)) -
         bracket6(palg, jv, jw);
}

template <class T>
IntegrabilityReport<T> integrability_report(const ProductAlgebra<T>& palg, const Acs<T>& j, double eps) {
  IntegrabilityReport<T> report;
  std::size_t k = 0;
  T worst(0);
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b) {
      auto& p = report.pairs[k++];
      p.i = a;
      p.j = b;
      p.value = nijenhuis(palg, j, unit<T, 6>(static_cast<std::size_t>(a)), unit<T, 6>(static_cast<std::size_t>(b)));
      T m = max_abs(p.value);
      if (m > worst) worst = m;
    }
  report.max_norm = worst;
  if constexpr (kIsExact<T>)
    report.integrable = sgn(worst) == 0;
  else
    report.integrable = worst <= eps;
  return report;
}

// ---------------------------------------------------------------------------
// Quasi-invariant vectors, exact mode.

namespace {

using FieldPtr = std::shared_ptr<const NumberField>;

Poly characteristic_polynomial(const Mat3<Rational>& m) {
  Rational tr = m(0, 0) + m(1, 1) + m(2, 2);
  Rational minors = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0) + m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0) +
                    m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  Rational det = determinant(m);
  return Poly({Rational(-det), minors, Rational(-tr), Rational(1)});
}

/// Basis of {x : a x = 0} over Q(alpha) from the reduced row echelon form;
/// each basis vector has a 1 in its free coordinate, so its first nonzero
/// coordinate is already 1 after normalisation below.
std::vector<std::array<FieldElem, 3>> nullspace(std::array<std::array<FieldElem, 3>, 3> a, const FieldPtr& k) {
  const FieldElem zero = FieldElem::rational(k, 0);
  const FieldElem one = FieldElem::rational(k, 1);
  std::array<int, 3> pivot_col{-1, -1, -1};
  std::size_t row = 0;
  for (std::size_t col = 0; col < 3 && row < 3; ++col) {
    std::size_t p = row;
    while (p < 3 && a[p][col].is_zero()) ++p;
    if (p == 3) continue;
    std::swap(a[p], a[row]);
    FieldElem inv = a[row][col].inverse();
    for (auto& x : a[row]) x = x * inv;
    for (std::size_t r = 0; r < 3; ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      FieldElem f = a[r][col];
      for (std::size_t c = 0; c < 3; ++c) a[r][c] = a[r][c] - f * a[row][c];
    }
    pivot_col[row] = static_cast<int>(col);
    ++row;
  }
  std::vector<std::array<FieldElem, 3>> basis;
  for (std::size_t free = 0; free < 3; ++free) {
    bool is_pivot = false;
    for (std::size_t r = 0; r < row; ++r)
      if (pivot_col[r] == static_cast<int>(free)) is_pivot = true;
    if (is_pivot) continue;
    std::array<FieldElem, 3> v{zero, zero, zero};
    v[free] = one;
    for (std::size_t r = 0; r < row; ++r) v[static_cast<std::size_t>(pivot_col[r])] = -a[r][free];
    // First nonzero coordinate scaled to 1.
    for (std::size_t c = 0; c < 3; ++c)
      if (!v[c].is_zero()) {
        FieldElem inv = v[c].inverse();
        for (auto& x : v) x = x * inv;
        break;
      }
    basis.push_back(v);
  }
  return basis;
}

std::array<FieldElem, 3> apply_rational(const Mat3<Rational>& m, const std::array<FieldElem, 3>& v, const FieldPtr& k) {
  std::array<FieldElem, 3> out;
  for (std::size_t i = 0; i < 3; ++i) {
    FieldElem acc = FieldElem::rational(k, 0);
    for (std::size_t c = 0; c < 3; ++c) acc = acc + FieldElem::rational(k, m(i, c)) * v[c];
    out[i] = acc;
  }
  return out;
}

void append_for_field(std::vector<QuasiInvariantQ>& out, const Acs<Rational>& j, const FieldPtr& k,
                      const std::vector<IsolatedRoot>& embeddings) {
  const Mat3<Rational> m = j.g_block();
  const FieldElem alpha = FieldElem::generator(k);
  std::array<std::array<FieldElem, 3>, 3> a;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      a[r][c] = FieldElem::rational(k, m(r, c));
      if (r == c) a[r][c] = a[r][c] - alpha;
    }
  const auto basis = nullspace(a, k);
  const Mat3<Rational> star = j.star_block();
  for (const auto& root : embeddings)
    for (const auto& v : basis) {
      QuasiInvariantQ q;
      q.lambda = AlgebraicReal{k, root.lo, root.hi, root.approx};
      q.v = v;
      q.jstar_v = apply_rational(star, v, k);
      out.push_back(std::move(q));
    }
}

}  // namespace

Vec3<Rational> QuasiInvariantQ::rational_v() const {
  if (!is_rational()) throw std::logic_error("quasi-invariant vector is not rational");
  Vec3<Rational> out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = v[i].rational_value();
  return out;
}

Vec3<Rational> QuasiInvariantQ::rational_jstar_v() const {
  if (!is_rational()) throw std::logic_error("quasi-invariant vector is not rational");
  Vec3<Rational> out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = jstar_v[i].rational_value();
  return out;
}

Vec3<double> QuasiInvariantQ::approx_v() const {
  Vec3<double> out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = v[i].approx(lambda.approx);
  return out;
}

std::vector<QuasiInvariantQ> quasi_invariant(const Acs<Rational>& j) {
  const Poly chi = characteristic_polynomial(j.g_block());
  const SmallFactorisation f = factor_small(chi);
  std::vector<QuasiInvariantQ> out;
  for (const auto& r : f.rational_roots) {
    auto k = std::make_shared<const NumberField>(NumberField{Poly({Rational(-r), Rational(1)})});
    IsolatedRoot root;
    root.lo = r - 1;
    root.hi = r;
    root.exact = r;
    root.approx = r.get_d();
    append_for_field(out, j, k, {root});
  }
  if (f.irreducible.degree() >= 2) {
    auto k = std::make_shared<const NumberField>(NumberField{f.irreducible});
    append_for_field(out, j, k, real_roots(f.irreducible));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const QuasiInvariantQ& a, const QuasiInvariantQ& b) { return a.lambda.approx < b.lambda.approx; });
  return out;
}

bool satisfies_quasi_invariant_identity(const Acs<Rational>& j, const QuasiInvariantQ& q) {
  const FieldPtr& k = q.lambda.field;
  const FieldElem lambda = FieldElem::generator(k);
  // g-part of J v must be lambda v, and J* v nonzero.
  const auto jv = apply_rational(j.g_block(), q.v, k);
  for (std::size_t i = 0; i < 3; ++i)
    if (!(jv[i] == lambda * q.v[i])) return false;
  if (std::all_of(q.jstar_v.begin(), q.jstar_v.end(), [](const FieldElem& x) { return x.is_zero(); })) return false;
  // J applied to the starred vector J* v.
  const auto top = apply_rational(j.cross_block(), q.jstar_v, k);
  const auto bottom = apply_rational(j.starstar_block(), q.jstar_v, k);
  const FieldElem coef = FieldElem::rational(k, -1) - lambda * lambda;
  for (std::size_t i = 0; i < 3; ++i) {
    if (!(top[i] == coef * q.v[i])) return false;
    if (!(bottom[i] == -(lambda * q.jstar_v[i]))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Quasi-invariant vectors, float mode.

std::vector<QuasiInvariantF> quasi_invariant(const Acs<double>& j, double eps) {
  const Mat3<double> m = j.g_block();
  Eigen::Matrix3d em;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) em(r, c) = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));

  // Characteristic polynomial t^3 + c2 t^2 + c1 t + c0 and its companion matrix.
  const double tr = em.trace();
  const double minors = em(0, 0) * em(1, 1) - em(0, 1) * em(1, 0) + em(0, 0) * em(2, 2) - em(0, 2) * em(2, 0) +
                        em(1, 1) * em(2, 2) - em(1, 2) * em(2, 1);
  const double det = em.determinant();
  const double c2 = -tr, c1 = minors, c0 = -det;
  Eigen::Matrix3d companion;
  companion << 0, 0, -c0, 1, 0, -c1, 0, 1, -c2;
  Eigen::EigenSolver<Eigen::Matrix3d> es(companion, false);

  auto chi = [&](double t) { return ((t + c2) * t + c1) * t + c0; };
  auto dchi = [&](double t) { return (3 * t + 2 * c2) * t + c1; };

  std::vector<double> real_eigs;
  for (int i = 0; i < 3; ++i) {
    std::complex<double> z = es.eigenvalues()[i];
    if (std::fabs(z.imag()) > eps) continue;
    double t = z.real();
    double d = dchi(t);
    if (std::fabs(d) > 1e-12) t -= chi(t) / d;  // one Newton polish step
    real_eigs.push_back(t);
  }
  std::sort(real_eigs.begin(), real_eigs.end());
  // Merge numerically repeated roots.
  std::vector<double> distinct;
  for (double t : real_eigs)
    if (distinct.empty() || std::fabs(t - distinct.back()) > 1e-6 * std::max(1.0, std::fabs(t))) distinct.push_back(t);

  const double scale = std::max(1.0, em.norm());
  std::vector<QuasiInvariantF> out;
  for (double lambda : distinct) {
    Eigen::Matrix3d a = em - lambda * Eigen::Matrix3d::Identity();
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(a, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    int nullity = 0;
    for (int i = 0; i < 3; ++i)
      if (s[i] <= 1e-8 * scale) ++nullity;
    nullity = std::max(nullity, 1);
    Eigen::MatrixXd basis = svd.matrixV().rightCols(nullity).transpose();  // rows span the eigenspace
    // Canonical basis: reduced row echelon form of the spanning rows.
    int row = 0;
    for (int col = 0; col < 3 && row < basis.rows(); ++col) {
      Eigen::Index p;
      double best = basis.col(col).tail(basis.rows() - row).cwiseAbs().maxCoeff(&p);
      if (best <= eps) continue;
      basis.row(row).swap(basis.row(row + static_cast<int>(p)));
      basis.row(row) /= basis(row, col);
      for (int r = 0; r < basis.rows(); ++r)
        if (r != row) basis.row(r) -= basis(r, col) * basis.row(row);
      ++row;
    }
    for (int r = 0; r < basis.rows(); ++r) {
      Eigen::Vector3d v = basis.row(r).transpose();
      for (int c = 0; c < 3; ++c)
        if (std::fabs(v[c]) > eps) {
          v /= v[c];
          break;
        }
      QuasiInvariantF q;
      q.lambda = lambda;
      for (std::size_t c = 0; c < 3; ++c) q.v[c] = v[static_cast<int>(c)];
      q.jstar_v = j.star_block() * q.v;
      out.push_back(q);
    }
  }
  return out;
}

bool satisfies_quasi_invariant_identity(const Acs<double>& j, const QuasiInvariantF& q, double tol) {
  const Vec3<double> jv = j.g_block() * q.v;
  if (max_abs(jv - q.v * q.lambda) > tol) return false;
  if (max_abs(q.jstar_v) <= tol) return false;
  const Vec3<double> top = j.cross_block() * q.jstar_v;
  const Vec3<double> bottom = j.starstar_block() * q.jstar_v;
  return max_abs(top - q.v * (-1.0 - q.lambda * q.lambda)) <= tol && max_abs(bottom + q.jstar_v * q.lambda) <= tol;
}

// ---------------------------------------------------------------------------
// Ranks and factor switching.

int exact_rank(const Mat3<Rational>& m) {
  // Scale rows to integers, then Bareiss elimination stays in Z.
  std::array<std::array<mpz_class, 3>, 3> a;
  for (std::size_t r = 0; r < 3; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < 3; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < 3; ++c) a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
  }
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < 3 && rank < 3; ++col) {
    std::size_t p = rank;
    while (p < 3 && a[p][col] == 0) ++p;
    if (p == 3) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = rank + 1; r < 3; ++r) {
      for (std::size_t c = col + 1; c < 3; ++c)
        a[r][c] = (a[rank][col] * a[r][c] - a[r][col] * a[rank][c]) / prev;
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

int numerical_rank(const Mat3<double>& m, double rel_cutoff) {
  Eigen::Matrix3d em;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) em(r, c) = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(em);
  const auto& s = svd.singularValues();
  if (s[0] == 0.0) return 0;
  int rank = 0;
  for (int i = 0; i < 3; ++i)
    if (s[i] > rel_cutoff * s[0]) ++rank;
  return rank;
}

template <class T>
StarRank star_rank(const Acs<T>& j) {
  if constexpr (kIsExact<T>)
    return {exact_rank(j.star_block()), exact_rank(j.cross_block())};
  else
    return {numerical_rank(j.star_block()), numerical_rank(j.cross_block())};
}

template <class T>
bool swaps_factors(const Acs<T>& j, double eps) {
  return is_zero(j.g_block(), eps) && is_zero(j.starstar_block(), eps);
}

template class Acs<Rational>;
template class Acs<double>;
template AcsCheck<Rational> is_acs(const Acs<Rational>&, double);
template AcsCheck<double> is_acs(const Acs<double>&, double);
template Vec6<Rational> nijenhuis(const ProductAlgebra<Rational>&, const Acs<Rational>&, const Vec6<Rational>&,
                                  const Vec6<Rational>&);
template Vec6<double> nijenhuis(const ProductAlgebra<double>&, const Acs<double>&, const Vec6<double>&,
                                const Vec6<double>&);
template IntegrabilityReport<Rational> integrability_report(const ProductAlgebra<Rational>&, const Acs<Rational>&,
                                                            double);
template IntegrabilityReport<double> integrability_report(const ProductAlgebra<double>&, const Acs<double>&, double);
template StarRank star_rank(const Acs<Rational>&);
template StarRank star_rank(const Acs<double>&);
template bool swaps_factors(const Acs<Rational>&, double);
template bool swaps_factors(const Acs<double>&, double);

}  // namespace nij
