#include <gtest/gtest.h>

#include "helpers.hpp"
#include "taft/algebra_core.hpp"
#include "taft/error.hpp"

using namespace taft;

namespace {

// span{1, w} with w^2 = 0
FinDimAlgebra dual_numbers(int m) {
  std::vector<CycVector> mult = {unit_vector(2, 0, m), unit_vector(2, 1, m), unit_vector(2, 1, m), zero_vector(2, m)};
  return alg_from_structure_constants(m, 2, mult, unit_vector(2, 0, m));
}

// upper triangular 2x2 matrices: basis E11, E12, E22
FinDimAlgebra upper_triangular(int m) {
  auto e = [&](std::size_t i) { return unit_vector(3, i, m); };
  const CycVector z = zero_vector(3, m);
  std::vector<CycVector> mult = {e(0), e(1), z,  //
                                 z,    z,    e(1),  //
                                 z,    z,    e(2)};
  return alg_from_structure_constants(m, 3, mult);
}

}  // namespace

TEST(Algebra, MatrixAlgebraUnitAndAssociativity) {
  for (std::size_t k = 1; k <= 3; ++k) {
    const FinDimAlgebra A = matrix_algebra(3, k);
    EXPECT_FALSE(find_associativity_violation(A).has_value());
    ASSERT_TRUE(A.is_unital());
    CycVector id = zero_vector(k * k, 3);
    for (std::size_t i = 0; i < k; ++i) id[i * k + i] = CycNum::one(3);
    EXPECT_EQ(*A.unit(), id);
  }
}

TEST(Algebra, UnitIsFoundWhenNotGiven) {
  const FinDimAlgebra T = upper_triangular(2);
  ASSERT_TRUE(T.is_unital());
  EXPECT_EQ(*T.unit(), (CycVector{CycNum::one(2), CycNum::zero(2), CycNum::one(2)}));
}

TEST(Algebra, NonAssociativeTableIsRejectedWithTriple) {
  const int m = 2;
  // e0 e0 = e1, everything else 0 except e1 e0 = e1: (e0 e0) e0 = e1 but e0 (e0 e0) = 0
  std::vector<CycVector> mult = {unit_vector(2, 1, m), zero_vector(2, m), unit_vector(2, 1, m), zero_vector(2, m)};
  try {
    alg_from_structure_constants(m, 2, mult);
    FAIL() << "expected NonAssociative";
  } catch (const NonAssociative& e) {
    EXPECT_EQ(e.triple, (std::array<std::size_t, 3>{0, 0, 0}));
  }
}

TEST(Algebra, RadicalExamples) {
  const int m = 2;
  EXPECT_EQ(jacobson_radical(dual_numbers(m)), Subspace::span(m, 2, {unit_vector(2, 1, m)}));
  EXPECT_EQ(jacobson_radical(upper_triangular(m)), Subspace::span(m, 3, {unit_vector(3, 1, m)}));
  EXPECT_EQ(jacobson_radical(matrix_algebra(m, 2)).dim(), 0u);
  // strictly upper triangular 3x3 (no unit) is nilpotent: its radical is everything
  const int q = 3;
  std::vector<CycVector> mult(9, zero_vector(3, q));
  mult[0 * 3 + 2] = unit_vector(3, 1, q);  // E12 E23 = E13 with basis E12, E13, E23
  const FinDimAlgebra N = alg_from_structure_constants(q, 3, mult);
  EXPECT_FALSE(N.is_unital());
  EXPECT_EQ(jacobson_radical(N).dim(), 3u);
  EXPECT_EQ(nilpotency_index(N, Subspace::whole(q, 3)), std::optional<std::size_t>(3));
}

TEST(Algebra, QuotientByRadical) {
  const FinDimAlgebra T = upper_triangular(2);
  const QuotientAlgebra Q = quotient_algebra(T, jacobson_radical(T));
  EXPECT_EQ(Q.algebra.dim(), 2u);
  EXPECT_EQ(jacobson_radical(Q.algebra).dim(), 0u);
  EXPECT_TRUE(is_algebra_homomorphism(T, Q.algebra, Q.projection));
  // a subspace that is not an ideal is refused
  EXPECT_THROW(quotient_algebra(T, Subspace::span(2, 3, {unit_vector(3, 0, 2)})), ValidationError);
}

TEST(Algebra, GradingOfM2ByDiagonalConjugation) {
  const int m = 2;
  const FinDimAlgebra A = matrix_algebra(m, 2);
  // c(E_ij) = (-1)^(i+j) E_ij
  const CycMatrix c = diagonal(std::vector<CycNum>{CycNum::one(m), CycNum::rational(m, -1), CycNum::rational(m, -1),
                                                   CycNum::one(m)});
  const GradingDecomposition G = grading_from_c(A, c, m);
  EXPECT_EQ(G.components[0], Subspace::span(m, 4, {unit_vector(4, 0, m), unit_vector(4, 3, m)}));
  EXPECT_EQ(G.components[1], Subspace::span(m, 4, {unit_vector(4, 1, m), unit_vector(4, 2, m)}));
  EXPECT_EQ(homogeneous_degree(G, unit_vector(4, 2, m)), 1);
  EXPECT_EQ(G.projections[0] + G.projections[1], identity(4, m));
  // trivial grading
  const GradingDecomposition T = grading_from_c(A, identity(4, m), m);
  EXPECT_EQ(T.components[0].dim(), 4u);
  EXPECT_EQ(T.components[1].dim(), 0u);
  // c with c^m != 1 and non-multiplicative c are rejected
  EXPECT_THROW(grading_from_c(A, CycNum::rational(m, 2) * identity(4, m), m), ValidationError);
  const CycMatrix bad = diagonal(std::vector<CycNum>{CycNum::rational(m, -1), CycNum::one(m), CycNum::one(m),
                                                     CycNum::one(m)});
  EXPECT_THROW(grading_from_c(A, bad, m), ValidationError);
}

TEST(Algebra, ChangeOfBasisIsIsomorphic) {
  std::mt19937_64 rng(11);
  const int m = 3;
  const FinDimAlgebra A = matrix_algebra(m, 2);
  CycMatrix S = th::random_matrix(m, 4, 4, rng);
  while (!inverse(S)) S = th::random_matrix(m, 4, 4, rng);
  const FinDimAlgebra B = change_basis(A, S);
  // coordinates in the new basis: x_new = S^-1 x_old
  EXPECT_TRUE(is_algebra_homomorphism(A, B, *inverse(S)));
  EXPECT_TRUE(is_algebra_homomorphism(B, A, S));
  EXPECT_FALSE(is_algebra_homomorphism(A, A, CycNum::rational(m, 2) * identity(4, m)));
}

TEST(Algebra, IdealGeneratedAndDirectSum) {
  const int m = 2;
  const FinDimAlgebra F = matrix_algebra(m, 1);
  const FinDimAlgebra FF = direct_sum(F, F);
  EXPECT_EQ(ideal_generated_by(FF, Subspace::span(m, 2, {unit_vector(2, 0, m)})).dim(), 1u);
  const FinDimAlgebra M2 = matrix_algebra(m, 2);
  EXPECT_EQ(ideal_generated_by(M2, Subspace::span(m, 4, {unit_vector(4, 1, m)})).dim(), 4u);
}
