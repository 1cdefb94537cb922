#include "nij/families.hpp"

#include "nij/sampling.hpp"

#include <algorithm>
#include <charconv>

namespace nij {

namespace {

struct NameEntry {
  FamilyId id;
  std::string_view name;
};

constexpr NameEntry kNames[] = {
    {FamilyId::AbelianStandard, "abelian-standard"},
    {FamilyId::AbelianGeneral, "abelian-general"},
    {FamilyId::AbelianRank1, "abelian-rank1"},
    {FamilyId::Case2, "case2"},
    {FamilyId::Case3Split, "case3-split"},
    {FamilyId::Case3Full, "case3-full"},
    {FamilyId::Case4Split, "case4-split"},
    {FamilyId::Case6Rank1, "case6-rank1"},
    {FamilyId::Case6Theta1Lambda0a, "case6-theta1-lambda0a"},
    {FamilyId::Case6Theta1Lambda0b, "case6-theta1-lambda0b"},
    {FamilyId::Case6Theta1Lambda2, "case6-theta1-lambda2"},
    {FamilyId::Case6Theta1LambdaMinus2, "case6-theta1-lambda-2"},
    {FamilyId::Magnin, "magnin"},
    {FamilyId::Mixed, "mixed"},
};

template <class T>
using PMap = std::map<std::string, T>;

template <class T>
Mat6<T> from_rows(const std::array<std::array<T, 6>, 6>& rows) {
  Mat6<T> m;
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c) m(r, c) = rows[r][c];
  return m;
}

template <class T>
Mat6<T> from_ints(const std::array<std::array<int, 6>, 6>& rows) {
  Mat6<T> m;
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c) m(r, c) = T(rows[r][c]);
  return m;
}

// Two rotation-like 2x2 blocks on (e1,e2) and (e1*,e2*) plus a coupled
// (e3, e3*) block. kappa = kappa* = 0 gives the split template.
template <class T>
Mat6<T> split_template(const PMap<T>& p, bool with_kappa) {
  const T one(1), zero(0);
  const T& x = p.at("X");
  const T& y = p.at("Y");
  const T& l = p.at("lambda");
  const T& xs = p.at("X*");
  const T& ys = p.at("Y*");
  const T k = with_kappa ? p.at("kappa") : zero;
  const T ks = with_kappa ? p.at("kappa*") : zero;
  const T m1l = T(-one - l * l);
  return from_rows<T>({{
      {x, T((-one - x * x) / y), zero, zero, zero, zero},
      {y, T(-x), zero, zero, zero, zero},
      {T(k * (l - x)), T(k * (one + x * x) / y), l, T(ks * m1l), zero, m1l},
      {zero, zero, zero, xs, T((-one - xs * xs) / ys), zero},
      {zero, zero, zero, ys, T(-xs), zero},
      {k, zero, one, T(ks * (-l - xs)), T(ks * (one + xs * xs) / ys), T(-l)},
  }});
}

template <class T>
Mat6<T> abelian_general(const PMap<T>& p) {
  const T one(1), zero(0);
  const T &x = p.at("X"), &y = p.at("Y"), &z = p.at("Z");
  const T &a = p.at("A"), &b = p.at("B"), &c = p.at("C"), &l = p.at("lambda");
  return from_rows<T>({{
      {x, a, zero, T(-one - x * x - a * y), T(-a * x - a * b), zero},
      {y, b, zero, T(-x * y - b * y), T(-one - b * b - a * y), zero},
      {z, c, l, T(-x * z - y * c - z * l), T(-a * z - b * c - c * l), T(-one - l * l)},
      {one, zero, zero, T(-x), T(-a), zero},
      {zero, one, zero, T(-y), T(-b), zero},
      {zero, zero, one, T(-z), T(-c), T(-l)},
  }});
}

template <class T>
T case3_lambda(const PMap<T>& p) {
  const T &x = p.at("X"), &y = p.at("Y"), &a = p.at("A"), &b = p.at("B");
  return T((T(-1) + x * b - a * y) / (x + b));
}

// printed = true reproduces the classical (2,5) entry with X^2, which breaks J^2 = -Id.
template <class T>
Mat6<T> case3_full(const PMap<T>& p, bool printed) {
  const T one(1), zero(0);
  const T &x = p.at("X"), &y = p.at("Y"), &z = p.at("Z");
  const T &a = p.at("A"), &b = p.at("B"), &c = p.at("C");
  const T s = T(x + b);
  const T l = case3_lambda(p);
  const T e25 = printed ? T((-one - x * x - a * y) / s) : T((-one - b * b - a * y) / s);
  return from_rows<T>({{
      {x, a, zero, T(-one - x * x - a * y), T(-a), zero},
      {y, b, zero, T(-y * s), e25, zero},
      {z, c, l, T(-x * z - c * y - z * l), T((-a * z - b * c - c * l) / s), T(-one - l * l)},
      {one, zero, zero, T(-x), T(-a / s), zero},
      {zero, s, zero, T(-y * s), T(-b), zero},
      {zero, zero, one, T(-z), T(-c / s), T(-l)},
  }});
}

template <class T>
Mat6<T> magnin_printed(const PMap<T>& p) {
  const T one(1), zero(0);
  const T &l = p.at("lambda"), &eta = p.at("eta");
  return from_rows<T>({{
      {zero, T(-one), zero, zero, zero, zero},
      {one, zero, zero, zero, zero, zero},
      {zero, zero, l, zero, zero, eta},
      {zero, zero, zero, zero, T(-one), zero},
      {zero, zero, zero, one, zero, zero},
      {zero, zero, T((-one - l * l) / eta), zero, zero, T(-l)},
  }});
}

// Relabels e2 <-> e3 in both factors (P J P with P the permutation).
template <class T>
Mat6<T> swap_e2_e3(const Mat6<T>& m) {
  constexpr std::size_t perm[6] = {0, 2, 1, 3, 5, 4};
  Mat6<T> out;
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c) out(perm[r], perm[c]) = m(r, c);
  return out;
}

const Mat6<Rational>& lambda0a() {
  static const Mat6<Rational> m = from_ints<Rational>({{
      {0, -1, 0, 0, 0, 0},
      {1, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, -1},
      {0, 1, 0, 0, -1, 0},
      {1, 0, 0, 1, 0, 0},
      {0, 0, 1, 0, 0, 0},
  }});
  return m;
}

const Mat6<Rational>& lambda0b_printed() {
  static const Mat6<Rational> m = from_ints<Rational>({{
      {0, -1, 0, 0, 1, 0},
      {1, 0, 0, 1, 0, 0},
      {0, 0, 0, 0, 0, -1},
      {0, 0, 0, 0, -1, 0},
      {0, 0, 0, 1, 0, 0},
      {0, 0, 1, 0, 0, 0},
  }});
  return m;
}

// Entries (3,6) and (6,3) of the printed form with their signs flipped.
const Mat6<Rational>& lambda0b_corrected() {
  static const Mat6<Rational> m = from_ints<Rational>({{
      {0, -1, 0, 0, 1, 0},
      {1, 0, 0, 1, 0, 0},
      {0, 0, 0, 0, 0, 1},
      {0, 0, 0, 0, -1, 0},
      {0, 0, 0, 1, 0, 0},
      {0, 0, -1, 0, 0, 0},
  }});
  return m;
}

const Mat6<Rational>& lambda2() {
  static const Mat6<Rational> m = from_ints<Rational>({{
      {0, -1, 0, 0, 0, 0},
      {1, 0, 0, 0, 0, 0},
      {0, 0, 2, 0, 0, -5},
      {1, 0, 0, 0, 1, 0},
      {0, 1, 0, -1, 0, 0},
      {0, 0, 1, 0, 0, -2},
  }});
  return m;
}

const Mat6<Rational>& lambda_minus2() {
  static const Mat6<Rational> m = from_ints<Rational>({{
      {0, 1, 0, 1, 0, 0},
      {-1, 0, 0, 0, 1, 0},
      {0, 0, -2, 0, 0, 1},
      {0, 0, 0, 0, -1, 0},
      {0, 0, 0, 1, 0, 0},
      {0, 0, -5, 0, 0, 2},
  }});
  return m;
}

template <class T>
Mat6<T> cast(const Mat6<Rational>& m) {
  if constexpr (kIsExact<T>)
    return m;
  else
    return to_double(m);
}

/// Corrected (emitted) or printed matrix; constraints must already hold.
template <class T>
Mat6<T> build(FamilyId id, const PMap<T>& p, BianchiType type, bool printed) {
  switch (id) {
    case FamilyId::AbelianStandard:
      return Acs<T>::standard().matrix();
    case FamilyId::AbelianGeneral:
      return abelian_general(p);
    case FamilyId::AbelianRank1: {
      PMap<T> q{{"X", T(0)}, {"Y", T(1)}, {"lambda", p.at("lambda")}, {"X*", T(0)}, {"Y*", T(1)}};
      return split_template(q, false);
    }
    case FamilyId::Case2:
      return split_template(p, true);
    case FamilyId::Case3Split:
    case FamilyId::Case4Split:
    case FamilyId::Case6Rank1:
      return split_template(p, false);
    case FamilyId::Case3Full:
      return case3_full(p, printed);
    case FamilyId::Case6Theta1Lambda0a:
      return cast<T>(lambda0a());
    case FamilyId::Case6Theta1Lambda0b:
      return cast<T>(printed ? lambda0b_printed() : lambda0b_corrected());
    case FamilyId::Case6Theta1Lambda2:
      return cast<T>(lambda2());
    case FamilyId::Case6Theta1LambdaMinus2:
      return cast<T>(lambda_minus2());
    case FamilyId::Magnin:
      return (!printed && type == BianchiType::T7) ? swap_e2_e3(magnin_printed(p)) : magnin_printed(p);
    case FamilyId::Mixed:
      break;
  }
  throw FamilyError("family has no matrix template");
}

template <class T>
std::optional<std::string> constraint_error(FamilyId id, const PMap<T>& p, double eps) {
  for (const auto& spec : param_specs(id))
    if (spec.nonzero && is_zero(p.at(spec.key), eps)) return spec.key + " must be nonzero";
  if (id == FamilyId::Case3Full && is_zero(T(p.at("X") + p.at("B")), eps)) return std::string("X + B must be nonzero");
  if (id == FamilyId::Case6Rank1) {
    // Integrable on type 6 only for rotation blocks X = 0, Y = +-1 (and starred).
    for (const char* k : {"X", "X*"})
      if (!is_zero(p.at(k), eps)) return std::string(k) + " must be 0 on type 6";
    for (const char* k : {"Y", "Y*"})
      if (!is_zero(T(p.at(k) * p.at(k) - T(1)), eps)) return std::string(k) + " must be 1 or -1 on type 6";
  }
  return std::nullopt;
}

template <class T>
bool theta_is_one(const LieAlgebra3<T>& alg) {
  return alg.theta && is_zero(T(*alg.theta - T(1)), kDefaultEps);
}

}  // namespace

const std::vector<FamilyId>& all_families() {
  static const std::vector<FamilyId> ids = [] {
    std::vector<FamilyId> v;
    for (const auto& e : kNames) v.push_back(e.id);
    return v;
  }();
  return ids;
}

std::string_view to_string(FamilyId id) {
  for (const auto& e : kNames)
    if (e.id == id) return e.name;
  return "unknown";
}

FamilyId parse_family_id(std::string_view text) {
  std::string s(text);
  // λ spellings: "λ" -> "lambda", U+2212 minus -> '-'.
  for (auto [from, to] : {std::pair<std::string_view, std::string_view>{"\xCE\xBB", "lambda"}, {"\xE2\x88\x92", "-"}}) {
    for (std::size_t pos; (pos = s.find(from)) != std::string::npos;) s.replace(pos, from.size(), to);
  }
  for (const auto& e : kNames)
    if (e.name == s) return e.id;
  throw ParseError("unknown family '" + std::string(text) + "'");
}

const std::vector<ParamSpec>& param_specs(FamilyId id) {
  static const std::map<FamilyId, std::vector<ParamSpec>> specs = [] {
    const Rational z(0), one(1);
    const std::vector<ParamSpec> split = {
        {"X", z, false}, {"Y", one, true}, {"lambda", z, false}, {"X*", z, false}, {"Y*", one, true}};
    std::map<FamilyId, std::vector<ParamSpec>> m;
    for (FamilyId f : all_families()) m[f] = {};
    m[FamilyId::AbelianGeneral] = {{"X", z, false}, {"Y", z, false}, {"Z", z, false}, {"A", z, false},
                                   {"B", z, false}, {"C", z, false}, {"lambda", z, false}};
    m[FamilyId::AbelianRank1] = {{"lambda", z, false}};
    m[FamilyId::Case2] = {{"X", z, false},      {"Y", one, true},     {"lambda", z, false}, {"kappa", z, false},
                          {"kappa*", z, false}, {"X*", z, false},     {"Y*", one, true}};
    m[FamilyId::Case3Split] = split;
    m[FamilyId::Case4Split] = split;
    m[FamilyId::Case6Rank1] = split;
    m[FamilyId::Case3Full] = {{"X", one, false}, {"Y", z, false}, {"Z", z, false},
                              {"A", z, false},   {"B", z, false}, {"C", z, false}};
    m[FamilyId::Magnin] = {{"lambda", z, false}, {"eta", one, true}};
    return m;
  }();
  return specs.at(id);
}

FamilyParams FamilyParams::defaults(FamilyId id) {
  FamilyParams p;
  p.id = id;
  for (const auto& spec : param_specs(id)) p.values[spec.key] = spec.default_value;
  return p;
}

FamilyParams& FamilyParams::set(const std::string& key, const Rational& value) {
  const auto& specs = param_specs(id);
  if (std::none_of(specs.begin(), specs.end(), [&](const ParamSpec& s) { return s.key == key; }))
    throw UnknownParameter("family " + std::string(to_string(id)) + " takes no parameter '" + key + "'");
  values[key] = value;
  return *this;
}

const Rational& FamilyParams::get(const std::string& key) const {
  auto it = values.find(key);
  if (it == values.end()) throw UnknownParameter("parameter '" + key + "' not set");
  return it->second;
}

const std::vector<std::string>& reference_algebras(FamilyId id) {
  static const std::map<FamilyId, std::vector<std::string>> table = [] {
    std::map<FamilyId, std::vector<std::string>> m;
    for (FamilyId f : all_families()) m[f] = {"6:1"};
    for (FamilyId f : {FamilyId::AbelianStandard, FamilyId::AbelianGeneral, FamilyId::AbelianRank1}) m[f] = {"1"};
    m[FamilyId::Case2] = {"2"};
    m[FamilyId::Case3Split] = {"3"};
    m[FamilyId::Case3Full] = {"3"};
    m[FamilyId::Case4Split] = {"4:1"};
    m[FamilyId::Case6Rank1] = {"6:1", "6:1/2", "6:3/2", "6:2"};
    m[FamilyId::Magnin] = {"7", "8"};
    m[FamilyId::Mixed] = {"1", "2", "3", "4:1", "6:1", "6:2", "7", "8"};
    return m;
  }();
  return table.at(id);
}

template <class T>
bool family_admissible(FamilyId id, const LieAlgebra3<T>& alg) {
  switch (id) {
    case FamilyId::AbelianStandard:
    case FamilyId::AbelianGeneral:
    case FamilyId::AbelianRank1:
      return alg.type == BianchiType::T1;
    case FamilyId::Case2:
      return alg.type == BianchiType::T2;
    case FamilyId::Case3Split:
    case FamilyId::Case3Full:
      return alg.type == BianchiType::T3;
    case FamilyId::Case4Split:
      return alg.type == BianchiType::T4 && theta_is_one(alg);
    case FamilyId::Case6Rank1:
      return alg.type == BianchiType::T6;
    case FamilyId::Case6Theta1Lambda0a:
    case FamilyId::Case6Theta1Lambda0b:
    case FamilyId::Case6Theta1Lambda2:
    case FamilyId::Case6Theta1LambdaMinus2:
      return alg.type == BianchiType::T6 && theta_is_one(alg);
    case FamilyId::Magnin:
      return alg.type == BianchiType::T7 || alg.type == BianchiType::T8;
    case FamilyId::Mixed:
      return admits_integrable(alg);
  }
  return false;
}

namespace {

PMap<Rational> complete(const FamilyParams& params) {
  PMap<Rational> p = FamilyParams::defaults(params.id).values;
  for (const auto& [k, v] : params.values) {
    if (!p.count(k))
      throw UnknownParameter("family " + std::string(to_string(params.id)) + " takes no parameter '" + k + "'");
    p[k] = v;
  }
  return p;
}

void verify(const ProductAlgebra<Rational>& palg, const Acs<Rational>& j, FamilyId id) {
  const std::string name(to_string(id));
  if (!is_acs(j).ok) throw VerificationFailure(name + ": constructed matrix does not square to -Id");
  const auto report = integrability_report(palg, j);
  if (!report.integrable) {
    for (const auto& pr : report.pairs)
      if (!is_zero(pr.value, 0.0))
        throw VerificationFailure(name + ": Nijenhuis tensor nonzero on basis pair (" + std::to_string(pr.i + 1) +
                                  "," + std::to_string(pr.j + 1) + ") for algebra " + designator_of(palg.base));
  }
}

}  // namespace

Acs<Rational> family(const FamilyParams& params, const LieAlgebra3<Rational>& alg) {
  const FamilyId id = params.id;
  if (!family_admissible(id, alg))
    throw AlgebraMismatch("family " + std::string(to_string(id)) + " is not defined on algebra " +
                          designator_of(alg));
  if (id == FamilyId::Mixed) {
    if (!params.values.empty()) throw UnknownParameter("family mixed takes no parameters");
    return mixed_structure(product(alg));
  }
  const PMap<Rational> p = complete(params);
  if (auto err = constraint_error(id, p, 0.0)) throw ConstraintViolation(std::string(to_string(id)) + ": " + *err);
  Acs<Rational> j(build(id, p, alg.type, false));
  verify(product(alg), j, id);
  return j;
}

Mat6<Rational> printed_matrix(const FamilyParams& params) {
  if (params.id == FamilyId::Mixed) throw FamilyError("family mixed has no printed form");
  const PMap<Rational> p = complete(params);
  if (auto err = constraint_error(params.id, p, 0.0))
    throw ConstraintViolation(std::string(to_string(params.id)) + ": " + *err);
  return build(params.id, p, BianchiType::T8, true);
}

namespace {

template <class T>
Acs<T> mixed_from(const MixedBasis& b) {
  Mat6<T> m;
  const auto u = static_cast<std::size_t>(b.u), v = static_cast<std::size_t>(b.v), w = static_cast<std::size_t>(b.w);
  const T s(b.sign);
  m(u + 3, u) = T(1);   // J u = u*
  m(u, u + 3) = T(-1);  // J u* = -u
  m(w, v) = s;          // J v = s w
  m(v, w) = T(-s);      // J w = -s v
  m(w + 3, v + 3) = s;
  m(v + 3, w + 3) = T(-s);
  return Acs<T>(m);
}

}  // namespace

template <class T>
MixedBasis mixed_basis(const LieAlgebra3<T>& alg) {
  if (!admits_integrable(alg))
    throw AlgebraMismatch("algebra " + designator_of(alg) + " carries no integrable complex structure");
  constexpr int triples[6][3] = {{2, 0, 1}, {1, 0, 2}, {0, 1, 2}, {2, 1, 0}, {1, 2, 0}, {0, 2, 1}};
  const auto palg = product(alg);
  for (const auto& t : triples)
    for (int sign : {1, -1}) {
      MixedBasis b{t[0], t[1], t[2], sign};
      if (integrability_report(palg, mixed_from<T>(b)).integrable) return b;
    }
  throw VerificationFailure("no mixed structure candidate is integrable on " + designator_of(alg));
}

template <class T>
Acs<T> mixed_structure(const ProductAlgebra<T>& palg) {
  return mixed_from<T>(mixed_basis(palg.base));
}

std::vector<FamilyParams> sample_params(FamilyId id, std::uint64_t seed, int count) {
  SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(id)));
  auto draw = [&](bool nonzero) {
    for (;;) {
      Rational q = random_rational(rng);
      if (!(nonzero && sgn(q) == 0)) return q;
    }
  };
  std::vector<FamilyParams> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  while (static_cast<int>(out.size()) < count) {
    FamilyParams p;
    p.id = id;
    for (const auto& spec : param_specs(id)) p.values[spec.key] = draw(spec.nonzero);
    if (id == FamilyId::Case6Rank1) {
      p.values["X"] = 0;
      p.values["X*"] = 0;
      p.values["Y"] = (rng.next() & 1) ? 1 : -1;
      p.values["Y*"] = (rng.next() & 1) ? 1 : -1;
    }
    if (constraint_error(id, p.values, 0.0)) continue;
    out.push_back(std::move(p));
  }
  return out;
}

template <class T>
std::vector<FamilyId> match_families(const LieAlgebra3<T>& alg, const Acs<T>& j, double eps) {
  const Mat6<T>& m = j.matrix();
  std::vector<FamilyId> out;
  for (FamilyId id : all_families()) {
    if (!family_admissible(id, alg)) continue;
    Mat6<T> candidate;
    if (id == FamilyId::Mixed) {
      candidate = mixed_structure(product(alg)).matrix();
    } else {
      PMap<T> p;
      auto read = [&](const char* key, std::size_t r, std::size_t c) { p[key] = m(r, c); };
      switch (id) {
        case FamilyId::AbelianGeneral:
        case FamilyId::Case3Full:
          read("X", 0, 0), read("A", 0, 1), read("Y", 1, 0), read("B", 1, 1), read("Z", 2, 0), read("C", 2, 1);
          if (id == FamilyId::AbelianGeneral) read("lambda", 2, 2);
          break;
        case FamilyId::AbelianRank1:
          read("lambda", 2, 2);
          break;
        case FamilyId::Case2:
        case FamilyId::Case3Split:
        case FamilyId::Case4Split:
        case FamilyId::Case6Rank1:
          read("X", 0, 0), read("Y", 1, 0), read("lambda", 2, 2), read("X*", 3, 3), read("Y*", 4, 3);
          if (id == FamilyId::Case2) {
            read("kappa", 5, 0);
            p["kappa*"] = T(m(2, 3) / (T(-1) - p["lambda"] * p["lambda"]));
          }
          break;
        case FamilyId::Magnin:
          if (alg.type == BianchiType::T7)
            read("lambda", 1, 1), read("eta", 1, 4);
          else
            read("lambda", 2, 2), read("eta", 2, 5);
          break;
        default:
          break;
      }
      if (constraint_error(id, p, eps)) continue;
      candidate = build(id, p, alg.type, false);
    }
    if (is_zero(Mat6<T>(candidate - m), eps)) out.push_back(id);
  }
  return out;
}

template <class T>
Diagnostics classify(const ProductAlgebra<T>& palg, const Acs<T>& j, double eps) {
  if (!is_acs(j, eps).ok) throw NotIntegrable("matrix does not square to -Id");
  if (!integrability_report(palg, j, eps).integrable) throw NotIntegrable("Nijenhuis tensor does not vanish");
  Diagnostics d;
  d.ranks = star_rank(j);
  d.swaps = swaps_factors(j, eps);
  d.matches = match_families(palg.base, j, eps);
  if constexpr (kIsExact<T>) {
    for (const auto& q : quasi_invariant(j)) {
      d.eigenvalues.push_back(q.lambda.str());
      d.eigenvalue_approx.push_back(q.lambda.approx);
    }
  } else {
    for (const auto& q : quasi_invariant(j, eps)) {
      char buf[64];
      auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, q.lambda);
      d.eigenvalues.emplace_back(buf, ptr);
      d.eigenvalue_approx.push_back(q.lambda);
    }
  }
  return d;
}

template bool family_admissible(FamilyId, const LieAlgebra3<Rational>&);
template bool family_admissible(FamilyId, const LieAlgebra3<double>&);
template MixedBasis mixed_basis(const LieAlgebra3<Rational>&);
template MixedBasis mixed_basis(const LieAlgebra3<double>&);
template Acs<Rational> mixed_structure(const ProductAlgebra<Rational>&);
template Acs<double> mixed_structure(const ProductAlgebra<double>&);
template std::vector<FamilyId> match_families(const LieAlgebra3<Rational>&, const Acs<Rational>&, double);
template std::vector<FamilyId> match_families(const LieAlgebra3<double>&, const Acs<double>&, double);
template Diagnostics classify(const ProductAlgebra<Rational>&, const Acs<Rational>&, double);
template Diagnostics classify(const ProductAlgebra<double>&, const Acs<double>&, double);

}  // namespace nij
