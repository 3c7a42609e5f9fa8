#include <gtest/gtest.h>

#include "helpers.hpp"
#include "taft/error.hpp"

using namespace taft;

TEST(Cyclotomic, PolynomialsAndDegrees) {
  EXPECT_EQ(cyclotomic_polynomial(1), (std::vector<long>{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (std::vector<long>{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (std::vector<long>{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (std::vector<long>{1, 0, -1, 0, 1}));
  for (int m : {2, 3, 4, 5, 6, 7, 8, 9, 10, 12}) EXPECT_EQ(CyclotomicField::get(m).degree(), euler_phi(m));
}

TEST(Cyclotomic, ZetaIsPrimitiveRoot) {
  for (int m = 2; m <= 12; ++m) {
    const CycNum z = CycNum::zeta_power(m, 1);
    EXPECT_TRUE(z.pow(m).is_one()) << m;
    for (int j = 1; j < m; ++j) EXPECT_FALSE(z.pow(j).is_one()) << m << " " << j;
    EXPECT_EQ(CycNum::zeta_power(m, -1), z.inverse());
    EXPECT_EQ(CycNum::zeta_power(m, 3 * m + 2), z.pow(2));
  }
}

TEST(Cyclotomic, FieldAxiomsOnRandomElements) {
  std::mt19937_64 rng(7);
  for (int m : {2, 3, 4, 5, 6, 8}) {
    for (int rep = 0; rep < 25; ++rep) {
      const CycNum a = th::random_cyc(m, rng), b = th::random_cyc(m, rng), c = th::random_cyc(m, rng);
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ(a - a, CycNum::zero(m));
      if (!a.is_zero()) {
        EXPECT_TRUE((a * a.inverse()).is_one());
        EXPECT_EQ((b / a) * a, b);
      }
    }
  }
}

TEST(Cyclotomic, RoundingFreeStringsAndRationals) {
  const CycNum z = CycNum::zeta_power(3, 1);
  EXPECT_EQ((z * z).to_string(), "-1 - z");  // zeta^2 = -1 - zeta
  EXPECT_TRUE(CycNum::rational(5, Rational(3, 4)).is_rational());
  EXPECT_EQ(CycNum::rational(5, Rational(3, 4)).rational_part(), Rational(3, 4));
  EXPECT_FALSE(z.is_rational());
  // sum of all m-th roots of unity is 0
  for (int m = 2; m <= 9; ++m) {
    CycNum s = CycNum::zero(m);
    for (int j = 0; j < m; ++j) s += CycNum::zeta_power(m, j);
    EXPECT_TRUE(s.is_zero()) << m;
  }
}

TEST(Cyclotomic, Errors) {
  EXPECT_THROW(CycNum::zero(3).inverse(), DivisionByZero);
  EXPECT_THROW(CycNum::one(3) + CycNum::one(4), ConductorMismatch);
  EXPECT_THROW(cyc_arith(CycNum::one(5), CycNum::zero(5), ArithOp::Div), DivisionByZero);
}

TEST(Matrix, InverseRankNullspace) {
  std::mt19937_64 rng(3);
  const int m = 5;
  for (int rep = 0; rep < 5; ++rep) {
    CycMatrix a = zeros(4, 4, m);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) a(i, j) = th::random_cyc(m, rng);
    auto inv = inverse(a);
    ASSERT_TRUE(inv.has_value());
    EXPECT_EQ(a * *inv, identity(4, m));
    EXPECT_EQ(rank(a), 4u);
    EXPECT_EQ(rank_fraction_free(a), 4u);
    EXPECT_EQ(determinant(a) * determinant(*inv), CycNum::one(m));
  }
  // rank-2 example, both elimination methods
  CycMatrix b = th::int_matrix(m, {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
  EXPECT_EQ(rank(b), 2u);
  EXPECT_EQ(rank_fraction_free(b), 2u);
  auto ns = nullspace(b);
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_TRUE(is_zero(mat_apply(b, ns[0])));
  EXPECT_FALSE(inverse(b).has_value());
}
