#include <gtest/gtest.h>

#include "taft/qcombinatorics.hpp"

using namespace taft;

namespace {
CycNum poly(int m, std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return CycNum::from_poly(m, v);
}
}  // namespace

// Values produced by tests/oracles/qbinom_oracle.py (sympy, reduction of the
// Gaussian polynomial modulo Phi_m).
TEST(QBinom, FrozenSympyOracle) {
  struct Case {
    int m;
    unsigned n, k;
    CycNum expected;
  };
  const std::vector<Case> cases = {
      {5, 4, 2, poly(5, {0, 0, 1, 0})}, {6, 5, 2, poly(6, {-1, 0})}, {4, 3, 1, poly(4, {0, 1})},
      {5, 8, 2, poly(5, {1, 1, 1, 0})}, {6, 10, 3, poly(6, {-1, 2})}, {3, 2, 1, poly(3, {1, 1})},
  };
  for (const auto& c : cases) {
    EXPECT_EQ(q_binom(c.n, c.k, CycNum::zeta_power(c.m, 1)), c.expected) << c.m << " " << c.n << " " << c.k;
  }
}

TEST(QBinom, VanishingAtInverseRoot) {
  for (int m = 2; m <= 6; ++m) {
    const CycNum q = CycNum::zeta_power(m, -1);
    for (unsigned j = 1; j < static_cast<unsigned>(m); ++j) EXPECT_TRUE(q_binom(static_cast<unsigned>(m), j, q).is_zero());
    EXPECT_TRUE(q_binom(static_cast<unsigned>(m), 0, q).is_one());
    EXPECT_TRUE(q_binom(static_cast<unsigned>(m), static_cast<unsigned>(m), q).is_one());
  }
}

TEST(QBinom, PascalIdentityGrid) {
  for (int m = 2; m <= 6; ++m) {
    for (long e : {1L, -1L}) {
      const CycNum q = CycNum::zeta_power(m, e);
      const QBinomTable t(q);
      const unsigned bound = static_cast<unsigned>(2 * m);
      ASSERT_EQ(t.bound(), bound);
      for (unsigned n = 1; n <= bound; ++n) {
        for (unsigned k = 1; k <= n; ++k) {
          // q^k binom(k+l-1, k) + binom(k+l-1, k-1) = binom(k+l, k)
          const CycNum first = k < n ? q.pow(k) * t(n - 1, k) : CycNum::zero(m);
          const CycNum lhs = first + t(n - 1, k - 1);
          EXPECT_EQ(lhs, t(n, k)) << m << " " << n << " " << k;
        }
      }
    }
  }
}

TEST(QBinom, FactorialQuotientWhereDefined) {
  // n!_q is invertible for n < m; the quotient formula must agree with Pascal.
  for (int m = 2; m <= 7; ++m) {
    const CycNum q = CycNum::zeta_power(m, 1);
    for (unsigned n = 0; n < static_cast<unsigned>(m); ++n)
      for (unsigned k = 0; k <= n; ++k)
        EXPECT_EQ(q_binom(n, k, q), q_factorial(n, q) / (q_factorial(k, q) * q_factorial(n - k, q)));
    EXPECT_TRUE(q_factorial(static_cast<unsigned>(m), q).is_zero());
  }
}

TEST(QBinom, RationalParameterMatchesCounting) {
  // at q = 1 the Gaussian binomial is the ordinary binomial
  const CycNum one = CycNum::one(3);
  EXPECT_EQ(q_binom(6, 3, one), CycNum::rational(3, 20));
  EXPECT_EQ(q_int(5, one), CycNum::rational(3, 5));
  // q = 2: number of 2-dim subspaces of F_2^4 is 35
  EXPECT_EQ(q_binom(4, 2, CycNum::rational(3, 2)), CycNum::rational(3, 35));
}

TEST(QBinom, LucasFactorisation) {
  // binom(n, k)_zeta = binom(n div m, k div m) binom(n mod m, k mod m)_zeta
  for (int m = 2; m <= 5; ++m) {
    const CycNum q = CycNum::zeta_power(m, 1);
    const unsigned mu = static_cast<unsigned>(m);
    for (unsigned n = 0; n <= 3 * mu; ++n) {
      for (unsigned k = 0; k <= n; ++k) {
        const CycNum outer = q_binom(n / mu, k / mu, CycNum::one(m));
        const CycNum inner = (n % mu) >= (k % mu) ? q_binom(n % mu, k % mu, q) : CycNum::zero(m);
        EXPECT_EQ(q_binom(n, k, q), outer * inner) << m << " " << n << " " << k;
      }
    }
  }
}
