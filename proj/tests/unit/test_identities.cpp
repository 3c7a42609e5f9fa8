#include <gtest/gtest.h>

#include "helpers.hpp"
#include "taft/constructions.hpp"
#include "taft/error.hpp"
#include "taft/identities.hpp"

using namespace taft;
using th::int_matrix;

namespace {

HModuleAlgebra sweedler2dim() {
  return build_nilpotent_extension(make_nilext_spec(2, matrix_algebra(2, 1), identity(1, 2)));
}

HModuleAlgebra field_trivial(int m) { return make_hma(matrix_algebra(m, 1), identity(1, m), zeros(1, 1, m)); }

HModuleAlgebra from_spec(int m, std::size_t k, std::size_t t, const CycMatrix& P, const CycMatrix& Q) {
  return build_semisimple(make_semisimple_spec(m, k, t, P, Q));
}

HMonomial mono(std::vector<int> sigma, std::vector<std::pair<int, int>> h) { return HMonomial{std::move(sigma), std::move(h)}; }

// c_n of M_2 with the trivial action (ordinary codimensions, Procesi's formula)
std::size_t procesi_m2(std::size_t n) {
  auto binom = [](std::size_t a, std::size_t b) {
    if (b > a) return std::size_t{0};
    std::size_t r = 1;
    for (std::size_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
    return r;
  };
  return binom(2 * n + 2, n + 1) / (n + 2) - binom(n, 3) + 1 - (std::size_t{1} << n);
}

}  // namespace

TEST(Evaluate, Examples) {
  const HModuleAlgebra S = sweedler2dim();
  const CycVector one = unit_vector(2, 0, 2), w = unit_vector(2, 1, 2);
  const auto x1 = MultilinearHPoly::monomial(2, mono({0}, {{0, 0}}), CycNum::one(2));
  EXPECT_EQ(evaluate(x1, S, {w}), w);
  const auto xc = MultilinearHPoly::monomial(2, mono({0}, {{1, 0}}), CycNum::one(2));
  EXPECT_EQ(evaluate(xc, S, {w}), (CycVector{CycNum::zero(2), CycNum::rational(2, -1)}));

  // x1^v x2^c - x2^c x1^v on F + F with the trivial action
  const FinDimAlgebra F = matrix_algebra(2, 1);
  const HModuleAlgebra T = make_hma(direct_sum(F, F), identity(2, 2), zeros(2, 2, 2));
  MultilinearHPoly p = MultilinearHPoly::monomial(2, mono({0, 1}, {{0, 1}, {1, 0}}), CycNum::one(2));
  p.add(mono({1, 0}, {{1, 0}, {0, 1}}), CycNum::rational(2, -1));
  std::mt19937_64 rng(1);
  EXPECT_TRUE(is_zero(evaluate(p, T, {th::random_vector(2, 2, rng), th::random_vector(2, 2, rng)})));
  EXPECT_THROW(evaluate(p, T, {one}), ValidationError);
}

TEST(Alternate, SmallCases) {
  const int m = 2;
  const auto p = MultilinearHPoly::monomial(m, mono({0, 1}, {{0, 0}, {0, 0}}), CycNum::one(m));
  EXPECT_EQ(alternate(p, {0}), p);
  MultilinearHPoly expect = p;
  expect.add(mono({1, 0}, {{0, 0}, {0, 0}}), CycNum::rational(m, -1));
  EXPECT_EQ(alternate(p, {0, 1}), expect);
  EXPECT_THROW(alternate(p, {0, 0}), ValidationError);
}

TEST(Alternate, IdempotentUpToFactorialAndAntisymmetric) {
  const int m = 2;
  const HModuleAlgebra M = from_spec(m, 2, 1, int_matrix(m, {{0, 1}, {3, 0}}), int_matrix(m, {{1, 0}, {0, -1}}));
  MultilinearHPoly p = MultilinearHPoly::monomial(m, mono({0, 1, 2}, {{1, 0}, {0, 1}, {1, 1}}), CycNum::one(m));
  p.add(mono({2, 0, 1}, {{0, 0}, {1, 0}, {0, 1}}), CycNum::rational(m, 2));
  const std::vector<int> set{0, 1, 2};
  const MultilinearHPoly a = alternate(p, set);
  EXPECT_EQ(alternate(a, set), CycNum::rational(m, 6) * a);
  std::mt19937_64 rng(4);
  const CycVector x = th::random_vector(m, 4, rng), y = th::random_vector(m, 4, rng);
  EXPECT_TRUE(is_zero(evaluate(a, M, {x, y, x})));
  EXPECT_TRUE(is_zero(evaluate(alternate(p, {0, 1}), M, {y, y, x})));
  EXPECT_FALSE(is_zero(evaluate(p, M, {x, y, x})));
}

TEST(Codim, MonomialCounts) {
  EXPECT_EQ(monomial_count(1, 2), std::optional<std::uint64_t>(4));
  EXPECT_EQ(monomial_count(3, 2), std::optional<std::uint64_t>(384));
  EXPECT_EQ(monomial_count(2, 3), std::optional<std::uint64_t>(162));
  EXPECT_FALSE(monomial_count(40, 6).has_value());
  const CodimResult r = codimension(sweedler2dim(), 2);
  EXPECT_EQ(r.rows, 32u);
  EXPECT_EQ(r.cols, 8u);
}

TEST(Codim, TrivialFieldIsOne) {
  for (int m : {2, 3}) {
    for (std::size_t n = 1; n <= 5; ++n) {
      if (*monomial_count(n, m) > CodimOptions{}.row_budget) break;
      EXPECT_EQ(codimension(field_trivial(m), n).value, 1u) << m << " " << n;
    }
  }
}

TEST(Codim, SweedlerTwoDimensionalFirstDegree) {
  const HModuleAlgebra S = sweedler2dim();
  for (CodimBackend b : {CodimBackend::Graded, CodimBackend::LiteralModular, CodimBackend::DenseExact}) {
    CodimOptions o;
    o.backend = b;
    EXPECT_EQ(codimension(S, 1, o).value, 3u) << to_string(b);
  }
}

TEST(Codim, OrdinaryCodimensionsOfM2) {
  const HModuleAlgebra M = from_spec(2, 2, 1, zeros(2, 2, 2), identity(2, 2));
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(codimension(M, n).value, procesi_m2(n)) << n;
  EXPECT_EQ(procesi_m2(4), 23u);
}

TEST(Codim, BackendsAgree) {
  const int m = 2;
  const std::vector<HModuleAlgebra> algebras = {
      sweedler2dim(),
      from_spec(m, 2, 1, int_matrix(m, {{0, 1}, {3, 0}}), int_matrix(m, {{1, 0}, {0, -1}})),
      from_spec(m, 1, 2, int_matrix(m, {{2}}), identity(1, m)),
      build_nilpotent_extension(make_nilext_spec(3, matrix_algebra(3, 1), identity(1, 3))),
  };
  for (const auto& M : algebras) {
    for (std::size_t n = 1; n <= 2; ++n) {
      CodimOptions lit, dense;
      lit.backend = CodimBackend::LiteralModular;
      dense.backend = CodimBackend::DenseExact;
      const CodimResult g = codimension(M, n);
      EXPECT_EQ(codimension(M, n, lit).value, g.value);
      if (g.rows * g.cols <= dense.dense_cell_budget) EXPECT_EQ(codimension(M, n, dense).value, g.value);
      EXPECT_LE(g.value, g.cols);
    }
  }
}

TEST(Codim, InvariantUnderChangeOfBasis) {
  std::mt19937_64 rng(6);
  const int m = 2;
  const HModuleAlgebra M = from_spec(m, 2, 1, int_matrix(m, {{0, 1}, {3, 0}}), int_matrix(m, {{1, 0}, {0, -1}}));
  CycMatrix S = th::random_matrix(m, 4, 4, rng);
  while (!inverse(S)) S = th::random_matrix(m, 4, 4, rng);
  const CycMatrix Si = *inverse(S);
  const HModuleAlgebra N = make_hma(change_basis(M.A, S), Si * M.c_op * S, Si * M.v_op * S);
  for (std::size_t n = 1; n <= 3; ++n) EXPECT_EQ(codimension(M, n).value, codimension(N, n).value);
}

TEST(Codim, BudgetRefusal) {
  CodimOptions o;
  o.row_budget = 100;
  try {
    codimension(sweedler2dim(), 3, o);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("384"), std::string::npos);
  }
  o = CodimOptions{};
  o.backend = CodimBackend::DenseExact;
  o.dense_cell_budget = 10;
  EXPECT_THROW(codimension(sweedler2dim(), 1, o), BudgetExceeded);
  EXPECT_THROW(codimension(sweedler2dim(), 0), ValidationError);
}

TEST(CertifiedRank, MatchesFractionFree) {
  std::mt19937_64 rng(12);
  for (int m : {2, 3, 5}) {
    for (std::size_t r : {0u, 1u, 3u, 5u}) {
      const std::size_t rows = 9, cols = 7;
      CycMatrix a = zeros(rows, cols, m);
      if (r > 0) a = th::random_matrix(m, rows, r, rng) * th::random_matrix(m, r, cols, rng);
      std::vector<CycVector> rs;
      for (std::size_t i = 0; i < rows; ++i) rs.emplace_back(a.row(i).begin(), a.row(i).end());
      EXPECT_EQ(certified_rank(rs, cols, m).rank, rank_fraction_free(a));
      EXPECT_EQ(certified_rank(rs, cols, m).rank, r);
    }
  }
}
