#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nij/acs.hpp"
#include "nij/lie_core.hpp"

namespace nij {

/// Classified families of integrable complex structures on g x g.
enum class FamilyId {
  AbelianStandard,
  AbelianGeneral,
  AbelianRank1,
  Case2,
  Case3Split,
  Case3Full,
  Case4Split,
  Case6Rank1,
  Case6Theta1Lambda0a,
  Case6Theta1Lambda0b,
  Case6Theta1Lambda2,
  Case6Theta1LambdaMinus2,
  Magnin,
  Mixed,
};

inline constexpr int kFamilyCount = 14;

const std::vector<FamilyId>& all_families();
/// Canonical ASCII name, e.g. "case6-theta1-lambda-2".
std::string_view to_string(FamilyId id);
/// Accepts canonical names and the λ spellings ("case6-theta1-λ2", "case6-theta1-λ−2").
FamilyId parse_family_id(std::string_view text);

class FamilyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
/// Parameter outside the family's constraints (Y = 0, X + B = 0, eta = 0, ...).
class ConstraintViolation : public FamilyError {
 public:
  using FamilyError::FamilyError;
};
/// Family not defined on the requested algebra.
class AlgebraMismatch : public FamilyError {
 public:
  using FamilyError::FamilyError;
};
/// Parameter key the family does not take.
class UnknownParameter : public FamilyError {
 public:
  using FamilyError::FamilyError;
};
/// The constructed matrix failed the exact J^2 = -Id or N = 0 check.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParamSpec {
  std::string key;
  Rational default_value;
  bool nonzero = false;
};

/// Parameter keys of a family in display order with defaults.
const std::vector<ParamSpec>& param_specs(FamilyId id);

/// Parameter bundle tagged by family. Keys not given explicitly take the
/// defaults from param_specs.
struct FamilyParams {
  FamilyId id = FamilyId::AbelianStandard;
  std::map<std::string, Rational> values;

  static FamilyParams defaults(FamilyId id);
  /// Throws UnknownParameter for a key outside param_specs(id).
  FamilyParams& set(const std::string& key, const Rational& value);
  const Rational& get(const std::string& key) const;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// Algebra designators on which the family is exercised by verify-families
/// and the test suites (all admissible tags; theta samples for type 6).
const std::vector<std::string>& reference_algebras(FamilyId id);

/// True iff the family is defined on this algebra.
template <class T>
bool family_admissible(FamilyId id, const LieAlgebra3<T>& alg);

/// Builds and self-verifies the family member (exact J^2 = -Id and N = 0).
/// Throws AlgebraMismatch, ConstraintViolation or VerificationFailure.
Acs<Rational> family(const FamilyParams& params, const LieAlgebra3<Rational>& alg);

/// The matrix exactly as classically printed for this family (no corrections,
/// no verification). Differs from family() only for the ids whose printed
/// form is defective, and for magnin on tag 7; see README. Throws
/// FamilyError for mixed, which has no printed form.
Mat6<Rational> printed_matrix(const FamilyParams& params);

/// Basis choice of a mixed structure: J u = u*, J v = s w, J v* = s w*.
struct MixedBasis {
  int u = 2, v = 0, w = 1;  ///< 0-based basis indices of g
  int sign = 1;
};

/// Candidate (u, v, w, sign) choices are tried in a fixed order and the first
/// exactly integrable one is returned. Throws AlgebraMismatch for algebras
/// without integrable structures.
template <class T>
MixedBasis mixed_basis(const LieAlgebra3<T>& alg);

template <class T>
Acs<T> mixed_structure(const ProductAlgebra<T>& palg);

/// Deterministic parameter samples; numerators and denominators in [-9, 9],
/// constraints enforced by rejection.
std::vector<FamilyParams> sample_params(FamilyId id, std::uint64_t seed, int count);

/// Families whose zero/constraint pattern J matches in the given basis,
/// in enum order. Parameters are read off the matrix entries, the template
/// is rebuilt and compared (exactly, or within eps in float mode).
template <class T>
std::vector<FamilyId> match_families(const LieAlgebra3<T>& alg, const Acs<T>& j, double eps = kDefaultEps);

}  // namespace nij
