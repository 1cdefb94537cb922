#include <gtest/gtest.h>

#include <cmath>

#include "nij/autmod.hpp"
#include "test_util.hpp"

using namespace nij;
using nij::test::falg;
using nij::test::qalg;

namespace {

Mat3<Rational> qmat(std::initializer_list<long> rowmajor) {
  Mat3<Rational> m;
  std::size_t k = 0;
  for (long x : rowmajor) m(k / 3, k % 3) = x, ++k;
  return m;
}

}  // namespace

TEST(Automorphism, IdentityOnEveryAlgebra) {
  for (const auto& d : test::designators()) {
    const auto c = is_automorphism(qalg(d), Mat3<Rational>::identity());
    EXPECT_TRUE(c.ok) << d;
    EXPECT_EQ(c.residual, 0) << d;
  }
}

TEST(Automorphism, ScalingOnType2) {
  // [e1,e2] = e1: any diag(a, 1, c) with a c != 0 preserves the bracket.
  auto phi = qmat({3, 0, 0, 0, 1, 0, 0, 0, -2});
  EXPECT_TRUE(is_automorphism(qalg("2"), phi).ok);
  phi(1, 1) = 2;
  EXPECT_FALSE(is_automorphism(qalg("2"), phi).ok);
}

TEST(Automorphism, SwapOfE1E3FailsOnHeisenberg) {
  const auto c = is_automorphism(qalg("3"), qmat({0, 0, 1, 0, 1, 0, 1, 0, 0}));
  EXPECT_FALSE(c.ok);
  EXPECT_GT(c.residual, 0);
}

TEST(Automorphism, SingularMapRejected) {
  const auto c = is_automorphism(qalg("1"), qmat({1, 0, 0, 0, 1, 0, 0, 0, 0}));
  EXPECT_EQ(c.residual, 0);
  EXPECT_FALSE(c.ok);
}

TEST(Automorphism, FloatModeUsesTolerance) {
  Mat3<double> phi = Mat3<double>::identity();
  phi(0, 1) = 1e-12;
  EXPECT_TRUE(is_automorphism(falg("7"), phi, 1e-10).ok);
  phi(0, 1) = 1e-3;
  EXPECT_FALSE(is_automorphism(falg("7"), phi, 1e-10).ok);
}

class AutSampling : public ::testing::TestWithParam<std::string> {};

TEST_P(AutSampling, FiftyMapsPassOrbitChecks) {
  const auto alg = falg(GetParam());
  const auto s = sample_automorphisms(alg, 50, 1);
  ASSERT_EQ(s.shortfall, 0);
  ASSERT_EQ(s.maps.size(), 50u);
  for (std::size_t k = 0; k < s.maps.size(); ++k) {
    const auto c = is_automorphism(alg, s.maps[k], kAutAcceptTol);
    EXPECT_TRUE(c.ok);
    EXPECT_GE(std::fabs(c.det), kAutDetFloor);
  }
  const auto rep = orbit_invariance_check(alg, s.maps);
  EXPECT_TRUE(rep.passed) << "worst deviation " << rep.worst_deviation;
  EXPECT_FALSE(rep.claims.empty());
  EXPECT_EQ(rep.maps_checked, 50);
}

// Automorphisms form a group: products and inverses of samples remain automorphisms.
TEST_P(AutSampling, ClosedUnderCompositionAndInverse) {
  const auto alg = falg(GetParam());
  const auto s = sample_automorphisms(alg, 6, 9);
  ASSERT_EQ(s.shortfall, 0);
  for (std::size_t a = 0; a + 1 < s.maps.size(); ++a) {
    const Mat3<double> prod = s.maps[a] * s.maps[a + 1];
    EXPECT_TRUE(is_automorphism(alg, prod, 1e-8).ok);
    EXPECT_TRUE(is_automorphism(alg, inverse(s.maps[a]), 1e-8).ok);
  }
}

INSTANTIATE_TEST_SUITE_P(Tags, AutSampling, ::testing::Values("2", "3", "4:1", "4:2", "6:1", "6:2"),
                         [](const auto& info) {
                           std::string s = "t" + info.param;
                           for (char& c : s)
                             if (c == ':' || c == '/') c = '_';
                           return s;
                         });

TEST(AutSampling, DeterministicPerSeed) {
  const auto a = sample_automorphisms(falg("8"), 3, 5);
  const auto b = sample_automorphisms(falg("8"), 3, 5);
  EXPECT_EQ(a.maps, b.maps);
  EXPECT_THROW(sample_automorphisms(falg("8"), 0, 5), std::invalid_argument);
}

TEST(OrbitCheck, VacuousForSimpleAlgebras) {
  const auto rep = orbit_invariance_check(falg("8"), {Mat3<double>::identity()});
  EXPECT_TRUE(rep.claims.empty());
  EXPECT_TRUE(rep.passed);
}

TEST(OrbitCheck, RejectsNonAutomorphismInput) {
  Mat3<double> bad = Mat3<double>::identity();
  bad(1, 1) = 2;
  EXPECT_THROW(orbit_invariance_check(falg("2"), {bad}), std::invalid_argument);
}

TEST(Witness, CarriesWithinOrbit) {
  // On type 2, e2 -> e2 + e1 is realised by an automorphism (x e1 + e2 shear).
  const auto w = find_carrying_automorphism(falg("2"), test::fv3(0, 1, 0), test::fv3(1, 1, 0), 4);
  ASSERT_EQ(w.status, WitnessStatus::Found);
  ASSERT_TRUE(w.map.has_value());
  const Mat3<double>& phi = *w.map;
  EXPECT_NEAR(phi(0, 1), 1.0, 1e-8);
  EXPECT_NEAR(phi(1, 1), 1.0, 1e-8);
  EXPECT_TRUE(is_automorphism(falg("2"), phi, 1e-8).ok);
}

TEST(Witness, InconclusiveAcrossInvariantLine) {
  // phi(e1) stays on the line of e1 for every automorphism of type 2.
  const auto w = find_carrying_automorphism(falg("2"), test::fv3(1, 0, 0), test::fv3(0, 1, 0), 4, 10);
  EXPECT_EQ(w.status, WitnessStatus::Inconclusive);
  EXPECT_GT(w.residual, kAutAcceptTol);
}
