#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nij/algebraic.hpp"
#include "nij/lie_core.hpp"
#include "nij/matrix.hpp"

namespace nij {

enum class FamilyId;

/// Candidate almost complex structure on g x g. Column j of the matrix is the
/// image of basis vector j (e1, e2, e3, e1*, e2*, e3*). For v in g the rows
/// 0..2 of m*v are its g-part (J v) and rows 3..5 its g*-part (J* v).
/// J^2 = -Id is not enforced: candidates mid-search are valid inputs.
template <class T>
class Acs {
 public:
  Acs() = default;
  explicit Acs(const Mat6<T>& m);

  static Acs standard();  ///< [[0, -Id], [Id, 0]]: e_i -> e_i*, e_i* -> -e_i

  const Mat6<T>& matrix() const { return m_; }
  const T& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  Vec6<T> apply(const Vec6<T>& v) const { return m_ * v; }

  Mat3<T> g_block() const { return m_.template block<3, 3>(0, 0); }        ///< g -> g
  Mat3<T> star_block() const { return m_.template block<3, 3>(3, 0); }     ///< g -> g*
  Mat3<T> cross_block() const { return m_.template block<3, 3>(0, 3); }    ///< g* -> g
  Mat3<T> starstar_block() const { return m_.template block<3, 3>(3, 3); } ///< g* -> g*

  friend bool operator==(const Acs&, const Acs&) = default;

 private:
  Mat6<T> m_ = Mat6<T>::zero();
};

Acs<double> to_double(const Acs<Rational>& j);

template <class T>
struct AcsCheck {
  bool ok = false;
  Mat6<T> residual;   ///< J^2 + Id
  T max_abs{};        ///< largest |entry| of the residual
};

/// J^2 = -Id exactly (rational) or within eps (float).
template <class T>
AcsCheck<T> is_acs(const Acs<T>& j, double eps = kDefaultEps);

/// N(v,w) = [v,w] + J[Jv,w] + J[v,Jw] - [Jv,Jw], evaluated literally.
template <class T>
Vec6<T> nijenhuis(const ProductAlgebra<T>& palg, const Acs<T>& j, const Vec6<T>& v, const Vec6<T>& w);

template <class T>
struct PairResidual {
  int i = 0, j = 0;  ///< 0-based basis indices, i < j
  Vec6<T> value;
};

template <class T>
struct IntegrabilityReport {
  std::array<PairResidual<T>, 15> pairs;
  T max_norm{};  ///< largest |component| over all 15 residuals
  bool integrable = false;
};

/// Nijenhuis tensor on all 15 basis pairs; bilinearity makes these sufficient.
template <class T>
IntegrabilityReport<T> integrability_report(const ProductAlgebra<T>& palg, const Acs<T>& j,
                                            double eps = kDefaultEps);

/// Quasi-invariant vector in float mode: g-part of J v equals lambda v.
struct QuasiInvariantF {
  Vec3<double> v;
  double lambda = 0.0;
  Vec3<double> jstar_v;  ///< g*-part of J v, coordinates in e1*, e2*, e3*
};

/// Exact quasi-invariant vector. lambda is a real algebraic number; v and
/// J*v have coordinates in Q(lambda). When lambda is rational every
/// coordinate is rational too.
struct QuasiInvariantQ {
  AlgebraicReal lambda;
  std::array<FieldElem, 3> v;
  std::array<FieldElem, 3> jstar_v;

  bool is_rational() const { return lambda.is_rational(); }
  Vec3<Rational> rational_v() const;
  Vec3<Rational> rational_jstar_v() const;
  Vec3<double> approx_v() const;
};

/// Real eigenvectors of the g -> g block (a basis of each real eigenspace),
/// first nonzero coordinate normalised to 1. Never empty for a real 3x3 block.
std::vector<QuasiInvariantQ> quasi_invariant(const Acs<Rational>& j);
std::vector<QuasiInvariantF> quasi_invariant(const Acs<double>& j, double eps = kDefaultEps);

/// J(J*v) = (-1 - lambda^2) v - lambda J*v, checked in Q(lambda) exactly.
bool satisfies_quasi_invariant_identity(const Acs<Rational>& j, const QuasiInvariantQ& q);
bool satisfies_quasi_invariant_identity(const Acs<double>& j, const QuasiInvariantF& q, double tol = 1e-8);

/// Ranks of the g -> g* and g* -> g blocks.
struct StarRank {
  int g_to_star = 0;
  int star_to_g = 0;
  friend bool operator==(const StarRank&, const StarRank&) = default;
};

template <class T>
StarRank star_rank(const Acs<T>& j);

/// Exact rank by fraction-free (Bareiss) elimination.
int exact_rank(const Mat3<Rational>& m);
/// Numerical rank: singular values below 1e-8 * largest count as zero.
int numerical_rank(const Mat3<double>& m, double rel_cutoff = 1e-8);

/// True iff J g = g* and J g* = g, i.e. both diagonal 3x3 blocks vanish.
template <class T>
bool swaps_factors(const Acs<T>& j, double eps = kDefaultEps);

class NotIntegrable : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Diagnostics {
  StarRank ranks;
  std::vector<std::string> eigenvalues;   ///< exact "p/q" or an algebraic description
  std::vector<double> eigenvalue_approx;
  bool swaps = false;
  std::vector<FamilyId> matches;          ///< basis-dependent template matches, in family order
};

/// Aggregated structural diagnostics for an integrable complex structure.
/// Family matches are pattern tests in the given basis only; an empty list
/// means "no match in this basis". Throws NotIntegrable.
template <class T>
Diagnostics classify(const ProductAlgebra<T>& palg, const Acs<T>& j, double eps = kDefaultEps);

}  // namespace nij
