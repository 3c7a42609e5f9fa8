#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"
#include "taft/kernels.hpp"
#include "taft/modular.hpp"

using namespace taft;

namespace {

std::vector<uint32_t> random_residues(std::size_t n, uint32_t p, std::mt19937_64& rng) {
  std::uniform_int_distribution<uint32_t> d(0, p - 1);
  std::vector<uint32_t> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace

TEST(Kernels, ReportsBackend) {
  const auto b = kernels::active_backend();
  std::printf("active kernel backend: %s\n", kernels::backend_name(b));
  if (!kernels::avx2_available()) EXPECT_EQ(b, kernels::Backend::Scalar);
}

TEST(Kernels, Avx2MatchesScalarReference) {
  if (!kernels::avx2_available()) GTEST_SKIP() << "AVX2 not available";
  std::mt19937_64 rng(5);
  for (uint32_t p : {3u, 65537u, 1073741827u, 2147483647u, 2147483629u}) {
    // lengths around the vector width exercise the tails
    for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 15u, 16u, 17u, 100u, 1023u}) {
      for (int rep = 0; rep < 4; ++rep) {
        const auto x = random_residues(n, p, rng);
        auto y1 = random_residues(n, p, rng);
        auto y2 = y1;
        const uint32_t a = random_residues(1, p, rng)[0];
        kernels::scalar::axpy_mod(y1, x, a, p);
        kernels::avx2::axpy_mod(y2, x, a, p);
        ASSERT_EQ(y1, y2) << "axpy p=" << p << " n=" << n;
        kernels::scalar::scale_mod(y1, a, p);
        kernels::avx2::scale_mod(y2, a, p);
        ASSERT_EQ(y1, y2) << "scale p=" << p << " n=" << n;
      }
    }
    // extreme multipliers
    auto y1 = random_residues(33, p, rng), y2 = y1;
    const auto x = random_residues(33, p, rng);
    kernels::scalar::axpy_mod(y1, x, p - 1, p);
    kernels::avx2::axpy_mod(y2, x, p - 1, p);
    EXPECT_EQ(y1, y2);
  }
}

TEST(Kernels, ScalarMatchesWideArithmetic) {
  std::mt19937_64 rng(9);
  const uint32_t p = 2147483629u;
  const auto x = random_residues(50, p, rng);
  auto y = random_residues(50, p, rng);
  const auto y0 = y;
  const uint32_t a = 123456789u;
  kernels::axpy_mod(y, x, a, p);
  for (std::size_t i = 0; i < y.size(); ++i)
    EXPECT_EQ(y[i], static_cast<uint32_t>((y0[i] + static_cast<unsigned __int128>(a) * x[i]) % p));
}

TEST(Modular, PrimeFieldChoice) {
  for (int m : {2, 3, 4, 5, 6, 12}) {
    const PrimeField F = choose_prime_field(m, 1);
    EXPECT_TRUE(is_prime_u32(F.p));
    EXPECT_EQ(F.p % static_cast<uint32_t>(m), 1u);
    EXPECT_EQ(F.pow(F.omega, static_cast<uint64_t>(m)), 1u);
    for (int j = 1; j < m; ++j) EXPECT_NE(F.pow(F.omega, static_cast<uint64_t>(j)), 1u);
  }
  EXPECT_FALSE(is_prime_u32(2147483649u));
  EXPECT_TRUE(is_prime_u32(2147483647u));
}

TEST(Modular, ReductionIsARingMap) {
  std::mt19937_64 rng(2);
  for (int m : {3, 4, 5}) {
    const PrimeField F = choose_prime_field(m, 3);
    for (int rep = 0; rep < 30; ++rep) {
      const CycNum a = th::random_cyc(m, rng), b = th::random_cyc(m, rng);
      EXPECT_EQ(reduce(a * b, F), F.mul(reduce(a, F), reduce(b, F)));
      EXPECT_EQ(reduce(a + b, F), F.add(reduce(a, F), reduce(b, F)));
    }
    EXPECT_EQ(reduce(CycNum::zeta_power(m, 1), F), F.omega);
  }
}

TEST(Modular, RankIsLowerBoundAndMatchesExact) {
  std::mt19937_64 rng(4);
  const int m = 5;
  const PrimeField F = choose_prime_field(m, 1);
  for (int rep = 0; rep < 5; ++rep) {
    // rank-3 5x6 matrix as a product
    const CycMatrix a = th::random_matrix(m, 5, 3, rng), b = th::random_matrix(m, 3, 6, rng);
    const CycMatrix c = a * b;
    EXPECT_EQ(rank(c), 3u);
    EXPECT_EQ(mod_rank(reduce(c, F), F.p), 3u);
  }
}

TEST(Modular, CharpolyAndRoots) {
  const uint32_t p = 1000003;
  // diag(2, 5, 5) conjugated by an upper unitriangular matrix
  ModMatrix a(3, 3);
  a(0, 0) = 2; a(0, 1) = 7; a(0, 2) = 1;
  a(1, 1) = 5; a(1, 2) = 3;
  a(2, 2) = 5;
  const auto f = mod_charpoly(a, p);
  // (x-2)(x-5)^2 = x^3 - 12x^2 + 45x - 50
  EXPECT_EQ(f, (std::vector<uint32_t>{p - 50, 45, p - 12, 1}));
  std::mt19937_64 rng(1);
  auto roots = mod_poly_roots(f, p, rng);
  std::sort(roots.begin(), roots.end());
  EXPECT_EQ(roots, (std::vector<uint32_t>{2, 5}));
}
