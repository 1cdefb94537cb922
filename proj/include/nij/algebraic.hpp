#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nij/rational.hpp"

namespace nij {

/// Dense univariate polynomial over Q, coefficients low degree first.
/// The zero polynomial has no coefficients; trailing zeros are never stored.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  static Poly constant(const Rational& c);
  static Poly x();

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational eval(const Rational& t) const;
  double eval(double t) const;
  Poly derivative() const;
  Poly monic() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& s, const Poly& p);
  friend bool operator==(const Poly&, const Poly&) = default;

  /// Euclidean division; throws std::domain_error for a zero divisor.
  static void divmod(const Poly& a, const Poly& b, Poly& quotient, Poly& remainder);
  friend Poly operator%(const Poly& a, const Poly& b);
  friend Poly operator/(const Poly& a, const Poly& b);

  /// Monic gcd (zero if both are zero).
  static Poly gcd(Poly a, Poly b);

  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Real root of a squarefree polynomial, isolated in the half-open interval
/// (lo, hi]. `exact` holds the value when the root is rational.
struct IsolatedRoot {
  Rational lo, hi;
  std::optional<Rational> exact;
  double approx = 0.0;
};

/// Number of distinct real roots of squarefree p in (a, b], via Sturm sequences.
int count_roots(const Poly& p, const Rational& a, const Rational& b);

/// Isolates every distinct real root of p (any multiplicity), sorted ascending.
/// Rational roots are detected exactly, without integer factorisation.
std::vector<IsolatedRoot> real_roots(const Poly& p);

/// Factorisation of a polynomial of degree <= 3 into distinct rational roots
/// and one irreducible remainder (degree 0, 2 or 3).
struct SmallFactorisation {
  std::vector<Rational> rational_roots;  // distinct
  Poly irreducible;                     // monic, no rational roots; constant 1 if none
};
SmallFactorisation factor_small(const Poly& p);

/// The field Q[t]/(f) for an irreducible monic f. Shared between elements.
struct NumberField {
  Poly modulus;
};

/// Element of Q[t]/(f), stored as a polynomial of degree < deg f.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(std::shared_ptr<const NumberField> field, Poly value);
  static FieldElem rational(std::shared_ptr<const NumberField> field, const Rational& q);
  static FieldElem generator(std::shared_ptr<const NumberField> field);

  const Poly& value() const { return v_; }
  const std::shared_ptr<const NumberField>& field() const { return k_; }
  bool is_zero() const { return v_.is_zero(); }
  bool is_rational() const { return v_.degree() <= 0; }
  Rational rational_value() const { return v_.coeff(0); }

  /// Value at the real embedding t = alpha (double evaluation).
  double approx(double alpha) const { return v_.eval(alpha); }

  FieldElem inverse() const;

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }
  friend bool operator==(const FieldElem& a, const FieldElem& b) { return a.v_ == b.v_; }

 private:
  std::shared_ptr<const NumberField> k_;
  Poly v_;
};

/// A real algebraic number: a real root of an irreducible monic polynomial,
/// identified by an isolating interval.
struct AlgebraicReal {
  std::shared_ptr<const NumberField> field;  // Q[t]/(minimal polynomial)
  Rational lo, hi;                           // isolating interval (lo, hi]
  double approx = 0.0;

  bool is_rational() const { return field->modulus.degree() == 1; }
  /// Valid only when is_rational().
  Rational rational_value() const { return -field->modulus.coeff(0); }
  int degree() const { return field->modulus.degree(); }
  std::string str() const;
};

}  // namespace nij
