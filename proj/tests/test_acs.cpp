#include <gtest/gtest.h>

#include "nij/acs.hpp"
#include "nij/families.hpp"
#include "nij/sampling.hpp"
#include "test_util.hpp"

using namespace nij;
using nij::test::e6;
using nij::test::qalg;

static Vec3<Rational> unit3(std::size_t i) { return unit<Rational, 3>(i); }

namespace {

Acs<Rational> identity6() { return Acs<Rational>(Mat6<Rational>::identity()); }

Acs<Rational> case2_basic() {
  auto p = FamilyParams::defaults(FamilyId::Case2);  // X=0, Y=1, lambda=0, kappa=kappa*=0, X*=0, Y*=1
  return family(p, qalg("2"));
}

}  // namespace

TEST(IsAcs, Standard) {
  auto c = is_acs(Acs<Rational>::standard());
  EXPECT_TRUE(c.ok);
  EXPECT_EQ(c.max_abs, Rational(0));
}

TEST(IsAcs, IdentityFails) {
  auto c = is_acs(identity6());
  EXPECT_FALSE(c.ok);
  EXPECT_EQ(c.residual, Mat6<Rational>::identity() * Rational(2));
}

TEST(IsAcs, Case2Sample) { EXPECT_TRUE(is_acs(case2_basic()).ok); }

TEST(IsAcs, FloatTolerance) {
  Mat6<double> m = to_double(Acs<Rational>::standard().matrix());
  m(0, 0) = 1e-12;
  EXPECT_TRUE(is_acs(Acs<double>(m)).ok);
  m(0, 0) = 1e-3;
  EXPECT_FALSE(is_acs(Acs<double>(m)).ok);
}

TEST(Nijenhuis, AbelianVanishes) {
  const auto p = product(qalg("1"));
  SplitMix64 rng(5);
  auto j = random_conjugated_acs(rng);
  for (int k = 0; k < 10; ++k)
    EXPECT_EQ(nijenhuis(p, j, random_rational_vec<6>(rng), random_rational_vec<6>(rng)), Vec6<Rational>());
}

TEST(Nijenhuis, Type2NaiveSwap) {
  const auto p = product(qalg("2"));
  EXPECT_EQ(nijenhuis(p, Acs<Rational>::standard(), e6(0), e6(1)), e6(0) - e6(3));
}

TEST(Nijenhuis, Type2Case2Vanishes) {
  const auto p = product(qalg("2"));
  EXPECT_EQ(nijenhuis(p, case2_basic(), e6(0), e6(1)), Vec6<Rational>());
}

TEST(Integrability, AbelianAnyStructure) {
  const auto p = product(qalg("1"));
  SplitMix64 rng(8);
  for (int k = 0; k < 10; ++k) EXPECT_TRUE(integrability_report(p, random_conjugated_acs(rng)).integrable);
}

TEST(Integrability, Type5SwapFails) {
  auto r = integrability_report(product(qalg("5")), Acs<Rational>::standard());
  EXPECT_FALSE(r.integrable);
  EXPECT_GT(r.max_norm, Rational(0));
  EXPECT_EQ(r.pairs[0].i, 0);
  EXPECT_EQ(r.pairs[14].j, 5);
}

TEST(QuasiInvariant, StandardHasAllBasisVectors) {
  auto qs = quasi_invariant(Acs<Rational>::standard());
  ASSERT_EQ(qs.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_TRUE(qs[i].is_rational());
    EXPECT_EQ(qs[i].lambda.rational_value(), Rational(0));
    EXPECT_EQ(qs[i].rational_v(), unit3(i));
  }
}

TEST(QuasiInvariant, Case2SingleDirection) {
  auto qs = quasi_invariant(case2_basic());
  ASSERT_EQ(qs.size(), 1u);
  EXPECT_EQ(qs[0].rational_v(), unit3(2));
  EXPECT_EQ(qs[0].lambda.rational_value(), Rational(0));
  EXPECT_EQ(qs[0].rational_jstar_v(), unit3(2));
}

TEST(QuasiInvariant, Case4E3WithJStarE3) {
  auto p = FamilyParams::defaults(FamilyId::Case4Split);
  p.set("lambda", make_rational(2, 3)).set("X", 1).set("Y", 2);
  auto j = family(p, qalg("4:1"));
  auto qs = quasi_invariant(j);
  bool found = false;
  for (const auto& q : qs)
    if (q.is_rational() && q.rational_v() == unit3(2)) {
      found = true;
      EXPECT_EQ(q.lambda.rational_value(), make_rational(2, 3));
      EXPECT_EQ(q.rational_jstar_v(), unit3(2));
    }
  EXPECT_TRUE(found);
}

TEST(QuasiInvariant, IrrationalEigenvalueExactIdentity) {
  // A random conjugate whose g-block has an irreducible cubic characteristic polynomial.
  SplitMix64 rng(123);
  int irrational_seen = 0;
  for (int k = 0; k < 40; ++k) {
    auto j = random_conjugated_acs(rng);
    auto qs = quasi_invariant(j);
    ASSERT_FALSE(qs.empty());
    for (const auto& q : qs) {
      ASSERT_TRUE(satisfies_quasi_invariant_identity(j, q));
      if (!q.is_rational()) ++irrational_seen;
    }
  }
  EXPECT_GT(irrational_seen, 0);
}

TEST(QuasiInvariant, FloatAgreesWithExact) {
  SplitMix64 rng(77);
  for (int k = 0; k < 30; ++k) {
    auto j = random_conjugated_acs(rng);
    auto exact = quasi_invariant(j);
    auto approx = quasi_invariant(to_double(j));
    ASSERT_EQ(exact.size(), approx.size());
    for (std::size_t i = 0; i < exact.size(); ++i) {
      EXPECT_NEAR(exact[i].lambda.approx, approx[i].lambda, 1e-7);
      EXPECT_TRUE(satisfies_quasi_invariant_identity(to_double(j), approx[i], 1e-6));
    }
  }
}

TEST(StarRank, Examples) {
  EXPECT_EQ(star_rank(Acs<Rational>::standard()), (StarRank{3, 3}));
  auto split = family(FamilyParams::defaults(FamilyId::Case3Split), qalg("3"));
  EXPECT_EQ(star_rank(split), (StarRank{1, 1}));
  auto full = family(FamilyParams::defaults(FamilyId::Case3Full), qalg("3"));
  EXPECT_EQ(star_rank(full), (StarRank{3, 3}));
  EXPECT_EQ(star_rank(to_double(full)), (StarRank{3, 3}));
}

TEST(ExactRank, Bareiss) {
  Mat3<Rational> m;
  m(0, 0) = make_rational(1, 2), m(0, 1) = make_rational(1, 3);
  m(1, 0) = 3, m(1, 1) = 2;
  EXPECT_EQ(exact_rank(m), 1);
  m(2, 2) = make_rational(-7, 5);
  EXPECT_EQ(exact_rank(m), 2);
  EXPECT_EQ(exact_rank(Mat3<Rational>()), 0);
}

TEST(SwapsFactors, Examples) {
  EXPECT_TRUE(swaps_factors(Acs<Rational>::standard()));
  EXPECT_FALSE(swaps_factors(case2_basic()));
  auto l0a = family(FamilyParams::defaults(FamilyId::Case6Theta1Lambda0a), qalg("6:1"));
  EXPECT_FALSE(swaps_factors(l0a));
}

TEST(Classify, Abelian) {
  auto d = classify(product(qalg("1")), Acs<Rational>::standard());
  EXPECT_EQ(d.ranks, (StarRank{3, 3}));
  EXPECT_TRUE(d.swaps);
  EXPECT_EQ(d.eigenvalues, (std::vector<std::string>{"0/1", "0/1", "0/1"}));
  ASSERT_FALSE(d.matches.empty());
  EXPECT_EQ(d.matches.front(), FamilyId::AbelianStandard);
}

TEST(Classify, Case4Split) {
  auto p = FamilyParams::defaults(FamilyId::Case4Split);
  p.set("lambda", 3);
  auto d = classify(product(qalg("4:1")), family(p, qalg("4:1")));
  EXPECT_EQ(d.ranks, (StarRank{1, 1}));
  EXPECT_FALSE(d.swaps);
  EXPECT_EQ(d.matches, (std::vector<FamilyId>{FamilyId::Case4Split}));
  EXPECT_NE(std::find(d.eigenvalues.begin(), d.eigenvalues.end(), "3/1"), d.eigenvalues.end());
}

TEST(Classify, Case3FullLambda) {
  auto p = FamilyParams::defaults(FamilyId::Case3Full);
  p.set("X", 2).set("B", 1).set("A", 1).set("Y", 1);  // lambda = (-1 + 2 - 1)/3 = 0
  auto d = classify(product(qalg("3")), family(p, qalg("3")));
  EXPECT_EQ(d.ranks, (StarRank{3, 3}));
  EXPECT_FALSE(d.swaps);
  EXPECT_NE(std::find(d.matches.begin(), d.matches.end(), FamilyId::Case3Full), d.matches.end());
}

TEST(Classify, RejectsNonIntegrable) {
  EXPECT_THROW(classify(product(qalg("2")), Acs<Rational>::standard()), NotIntegrable);
  EXPECT_THROW(classify(product(qalg("1")), identity6()), NotIntegrable);
}

// Properties on random structures P J0 P^-1.

class AcsProperties : public ::testing::TestWithParam<std::string> {};

TEST_P(AcsProperties, NijenhuisSymmetries) {
  const auto p = product(qalg(GetParam()));
  SplitMix64 rng(derive_seed(2024, std::hash<std::string>{}(GetParam()) & 0xff));
  for (int k = 0; k < 25; ++k) {
    auto j = random_conjugated_acs(rng);
    auto v = random_rational_vec<6>(rng), w = random_rational_vec<6>(rng), u = random_rational_vec<6>(rng);
    Rational a = random_rational(rng), b = random_rational(rng);
    const auto n = nijenhuis(p, j, v, w);
    ASSERT_EQ(nijenhuis(p, j, j.apply(v), w), -j.apply(n));
    ASSERT_EQ(nijenhuis(p, j, j.apply(v), j.apply(w)), -n);
    ASSERT_EQ(nijenhuis(p, j, w, v), -n);
    ASSERT_EQ(nijenhuis(p, j, v * a + u * b, w), n * a + nijenhuis(p, j, u, w) * b);
  }
}

TEST_P(AcsProperties, RankParityAndQuasiInvariants) {
  SplitMix64 rng(derive_seed(99, std::hash<std::string>{}(GetParam()) & 0xff));
  for (int k = 0; k < 25; ++k) {
    auto j = random_conjugated_acs(rng);
    auto r = star_rank(j);
    ASSERT_TRUE(r.g_to_star == 1 || r.g_to_star == 3);
    ASSERT_TRUE(r.star_to_g == 1 || r.star_to_g == 3);
    auto qs = quasi_invariant(j);
    ASSERT_FALSE(qs.empty());
    for (const auto& q : qs) ASSERT_TRUE(satisfies_quasi_invariant_identity(j, q));
  }
}

TEST_P(AcsProperties, IntegrableImpliesTensorialZero) {
  const auto alg = qalg(GetParam());
  if (!admits_integrable(alg)) GTEST_SKIP();
  const auto p = product(alg);
  const auto j = mixed_structure(p);
  SplitMix64 rng(31);
  for (int k = 0; k < 50; ++k)
    ASSERT_EQ(nijenhuis(p, j, random_rational_vec<6>(rng), random_rational_vec<6>(rng)), Vec6<Rational>());
}

INSTANTIATE_TEST_SUITE_P(Algebras, AcsProperties, ::testing::Values("1", "2", "3", "4:1", "4:1/2", "5", "6:3/2", "7", "8"),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (char& c : s)
                             if (c == ':' || c == '/') c = '_';
                           return "type" + s;
                         });
