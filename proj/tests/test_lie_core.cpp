#include <gtest/gtest.h>

#include "nij/lie_core.hpp"
#include "nij/sampling.hpp"
#include "test_util.hpp"

using namespace nij;
using nij::test::qalg;
using nij::test::v3;

TEST(Bianchi, Type2Table) {
  const auto g = qalg("2");
  EXPECT_EQ(g.constants(0, 1), v3(1, 0, 0));
  EXPECT_EQ(g.constants(0, 2), v3(0, 0, 0));
  EXPECT_EQ(g.constants(1, 2), v3(0, 0, 0));
}

TEST(Bianchi, Type6ThreeHalves) {
  const auto g = qalg("6:3/2");
  Vec3<Rational> e13;
  e13[0] = make_rational(3, 2), e13[1] = -1, e13[2] = 0;
  Vec3<Rational> e23;
  e23[0] = 1, e23[1] = make_rational(3, 2), e23[2] = 0;
  EXPECT_EQ(g.constants(0, 2), e13);
  EXPECT_EQ(g.constants(1, 2), e23);
  EXPECT_EQ(g.constants(2, 0), -e13);
}

TEST(Bianchi, AbelianIsZero) {
  const auto g = qalg("1");
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(g.constants(i, j), v3(0, 0, 0));
}

TEST(Bianchi, RejectsBadTheta) {
  EXPECT_THROW(bianchi<Rational>(BianchiType::T4, Rational(0)), std::invalid_argument);
  EXPECT_THROW(bianchi<Rational>(BianchiType::T6, Rational(-1)), std::invalid_argument);
  EXPECT_THROW(bianchi<Rational>(BianchiType::T6, Rational(0)), std::invalid_argument);
  EXPECT_THROW(bianchi<Rational>(BianchiType::T4), std::invalid_argument);
  EXPECT_THROW(bianchi<Rational>(BianchiType::T2, Rational(1)), std::invalid_argument);
  EXPECT_THROW(bianchi_type_from_int(9), std::invalid_argument);
  EXPECT_THROW(bianchi<double>(BianchiType::T6, std::nan("")), std::invalid_argument);
}

TEST(Bracket, HeisenbergE1E2) {
  EXPECT_EQ(bracket3(qalg("3"), v3(1, 0, 0), v3(0, 1, 0)), v3(0, 0, 1));
}

TEST(Bracket, Type8Linear) {
  EXPECT_EQ(bracket3(qalg("8"), v3(1, 1, 0), v3(0, 0, 1)), v3(1, -1, 0));
}

TEST(Bracket, ProductType2Starred) {
  const auto p = product(qalg("2"));
  EXPECT_EQ(bracket6(p, test::e6(3), test::e6(4)), test::e6(3));
}

TEST(Bracket, ProductType7Diagonal) {
  const auto p = product(qalg("7"));
  EXPECT_EQ(bracket6(p, test::e6(0) + test::e6(3), test::e6(1) + test::e6(4)), test::e6(2) + test::e6(5));
}

TEST(Bracket, CrossPairsVanish) {
  for (const auto& d : test::designators()) {
    const auto p = product(qalg(d));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 3; j < 6; ++j) EXPECT_EQ(bracket6(p, test::e6(i), test::e6(j)), Vec6<Rational>()) << d;
  }
}

TEST(Jacobi, AllTablesExact) {
  for (const auto& d : test::designators()) EXPECT_EQ(jacobi_check(qalg(d).constants), v3(0, 0, 0)) << d;
}

TEST(Jacobi, ModifiedTableFails) {
  const auto c = StructureConstants<Rational>::from_brackets(v3(0, 0, 1), v3(1, 0, 0), v3(0, 0, 0));
  EXPECT_EQ(jacobi_check(c), v3(0, 0, -1));
}

TEST(BracketProperty, BilinearAntisymmetric) {
  for (const auto& d : test::designators()) {
    const auto p = product(qalg(d));
    SplitMix64 rng(derive_seed(11, std::hash<std::string>{}(d) & 0xffff));
    for (int k = 0; k < 100; ++k) {
      auto u = random_rational_vec<6>(rng), v = random_rational_vec<6>(rng), w = random_rational_vec<6>(rng);
      Rational a = random_rational(rng), b = random_rational(rng);
      ASSERT_EQ(bracket6(p, u, v), -bracket6(p, v, u));
      ASSERT_EQ(bracket6(p, u, u), Vec6<Rational>());
      ASSERT_EQ(bracket6(p, u * a + w * b, v), bracket6(p, u, v) * a + bracket6(p, w, v) * b);
    }
  }
}

TEST(Designator, ParseAndPrint) {
  EXPECT_EQ(Designator::parse("6:3/2").str(), "6:3/2");
  EXPECT_EQ(designator_of(qalg("6:1.5")), "6:3/2");
  EXPECT_EQ(designator_of(qalg("4:2")), "4:2");
  EXPECT_THROW(Designator::parse("4"), ParseError);
  EXPECT_THROW(Designator::parse("2:1"), ParseError);
  EXPECT_THROW(Designator::parse("9"), ParseError);
  EXPECT_THROW(Designator::parse("x"), ParseError);
  EXPECT_THROW(Designator::parse("6:"), ParseError);
}

TEST(Admissible, PropositionTwoList) {
  for (const auto& d : test::designators()) {
    const bool expected = !(d == "5" || d == "4:1/2" || d == "4:2");
    EXPECT_EQ(admits_integrable(qalg(d)), expected) << d;
  }
}
