#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "nij/matrix.hpp"
#include "nij/rational.hpp"

namespace nij {

/// Bianchi type of a real 3-dimensional Lie algebra, in the order
/// 1 abelian, 2 [e1,e2]=e1, 3 Heisenberg, 4 R^2 x| R (theta), 5,
/// 6 rotation-dilation (theta > 0), 7 sl(2,R), 8 so(3).
/// Type 4 with theta = 1 (often called Bianchi IX elsewhere) is not a separate tag.
enum class BianchiType : int { T1 = 1, T2, T3, T4, T5, T6, T7, T8 };

inline int tag_number(BianchiType t) { return static_cast<int>(t); }
BianchiType bianchi_type_from_int(int tag);
inline bool takes_theta(BianchiType t) { return t == BianchiType::T4 || t == BianchiType::T6; }

/// Structure constants c[i][j] = [e_i, e_j] expressed in the basis e_1..e_3
/// (0-based indices). Antisymmetry is enforced at construction.
template <class T>
class StructureConstants {
 public:
  StructureConstants() = default;

  /// Builds the table from the three independent brackets.
  static StructureConstants from_brackets(const Vec3<T>& e1e2, const Vec3<T>& e1e3,
                                          const Vec3<T>& e2e3);

  const Vec3<T>& operator()(std::size_t i, std::size_t j) const { return c_[i][j]; }
  const T& coeff(std::size_t i, std::size_t j, std::size_t k) const { return c_[i][j][k]; }

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

 private:
  std::array<std::array<Vec3<T>, 3>, 3> c_{};
};

/// A Bianchi algebra realized on R^3 with its standard basis.
template <class T>
struct LieAlgebra3 {
  BianchiType type;
  std::optional<T> theta;
  StructureConstants<T> constants;
};

/// Direct product g x g; basis indices 0..2 are g, 3..5 the starred copy.
template <class T>
struct ProductAlgebra {
  LieAlgebra3<T> base;
};

/// Constructs the Bianchi algebra of the given type. theta must be supplied
/// exactly for types 4 and 6 (nonzero for 4, positive for 6).
/// Throws std::invalid_argument otherwise.
template <class T>
LieAlgebra3<T> bianchi(BianchiType type, std::optional<T> theta = std::nullopt);

template <class T>
ProductAlgebra<T> product(const LieAlgebra3<T>& g) {
  return ProductAlgebra<T>{g};
}

template <class T>
Vec3<T> bracket(const StructureConstants<T>& c, const Vec3<T>& u, const Vec3<T>& v) {
  Vec3<T> out;
  for (std::size_t i = 0; i < 3; ++i) {
    if (is_zero(u[i], 0.0)) continue;
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j || is_zero(v[j], 0.0)) continue;
      T w = u[i] * v[j];
      const Vec3<T>& cij = c(i, j);
      for (std::size_t k = 0; k < 3; ++k) out[k] += w * cij[k];
    }
  }
  return out;
}

template <class T>
Vec3<T> bracket3(const LieAlgebra3<T>& alg, const Vec3<T>& u, const Vec3<T>& v) {
  return bracket(alg.constants, u, v);
}

/// Componentwise bracket [u+u*, v+v*] = [u,v] + [u*,v*].
template <class T>
Vec6<T> bracket6(const ProductAlgebra<T>& palg, const Vec6<T>& u, const Vec6<T>& v) {
  Vec6<T> out;
  out.set_block(0, 0, bracket(palg.base.constants, u.template block<3, 1>(0, 0), v.template block<3, 1>(0, 0)));
  out.set_block(3, 0, bracket(palg.base.constants, u.template block<3, 1>(3, 0), v.template block<3, 1>(3, 0)));
  return out;
}

/// Cyclic sum [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2]; zero iff Jacobi holds
/// (for a trilinear antisymmetric cyclic sum one basis triple suffices in dim 3).
template <class T>
Vec3<T> jacobi_check(const StructureConstants<T>& c) {
  const Vec3<T> e1 = unit<T, 3>(0), e2 = unit<T, 3>(1), e3 = unit<T, 3>(2);
  return bracket(c, bracket(c, e1, e2), e3) + bracket(c, bracket(c, e2, e3), e1) +
         bracket(c, bracket(c, e3, e1), e2);
}

/// Algebra designator "<tag>" or "<tag>:<theta>", theta decimal or "p/q".
struct Designator {
  BianchiType type = BianchiType::T1;
  std::optional<std::string> theta_text;

  static Designator parse(std::string_view text);
  std::string str() const;
  friend bool operator==(const Designator&, const Designator&) = default;
};

/// Realizes a designator in the requested scalar mode. Throws ParseError or
/// std::invalid_argument.
template <class T>
LieAlgebra3<T> make_algebra(const Designator& d);

/// Canonical designator for an algebra ("6:3/2" in rational mode,
/// shortest round-trip decimal in float mode).
template <class T>
std::string designator_of(const LieAlgebra3<T>& alg);

/// True for the algebras that carry an integrable complex structure on g x g:
/// types 1, 2, 3, 6, 7, 8, and 4 with theta = 1.
template <class T>
bool admits_integrable(const LieAlgebra3<T>& alg);

LieAlgebra3<double> to_double(const LieAlgebra3<Rational>& alg);
ProductAlgebra<double> to_double(const ProductAlgebra<Rational>& palg);

}  // namespace nij
