#pragma once

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>

namespace nij {

/// Arbitrary-precision rational. GMP keeps results of arithmetic canonical
/// (lowest terms, positive denominator); values built from raw parts go
/// through make_rational() which canonicalizes.
using Rational = mpq_class;

/// Raised for malformed textual input (designators, scalars, JSON documents).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Rational make_rational(long num, long den = 1);

/// Parses "p/q", an integer, or a decimal with optional exponent ("-1.25e-3")
/// into an exact rational. Throws ParseError.
Rational parse_rational(std::string_view text);

/// Parses a finite float64; accepts the same grammar as parse_rational.
double parse_double(std::string_view text);

/// Always "p/q", integers included ("3/1").
std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

enum class ScalarMode { Rational, Float };

std::string_view to_string(ScalarMode mode);
ScalarMode parse_scalar_mode(std::string_view text);

/// Runtime view of a coefficient at the I/O boundary. Kernels are templates
/// over Rational or double, so a structure can never mix modes.
using Scalar = std::variant<Rational, double>;

inline ScalarMode mode_of(const Scalar& s) {
  return std::holds_alternative<Rational>(s) ? ScalarMode::Rational : ScalarMode::Float;
}

/// Absolute tolerance for float-mode zero tests.
inline constexpr double kDefaultEps = 1e-9;

// Zero/abs helpers shared by the templated kernels.
inline bool is_zero(const Rational& q, double = kDefaultEps) { return sgn(q) == 0; }
inline bool is_zero(double x, double eps = kDefaultEps) { return std::fabs(x) <= eps; }

inline Rational abs_value(const Rational& q) { return abs(q); }
inline double abs_value(double x) { return std::fabs(x); }

template <class T>
inline constexpr bool kIsExact = std::is_same_v<T, Rational>;

}  // namespace nij
