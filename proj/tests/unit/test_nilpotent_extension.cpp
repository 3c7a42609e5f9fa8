#include <gtest/gtest.h>

#include "helpers.hpp"
#include "taft/constructions.hpp"
#include "taft/error.hpp"
#include "taft/qcombinatorics.hpp"

using namespace taft;

namespace {

NilpotentExtensionSpec spec_field(int m) { return make_nilext_spec(m, matrix_algebra(m, 1), identity(1, m)); }
NilpotentExtensionSpec spec_m2(int m) {
  return make_nilext_spec(m, matrix_algebra(m, 2), elementary_grading_operator(m, {0, 1}));
}

// phi^0(x) in the rebuilt extension, read back as an element of the recovered B
CycMatrix round_trip_map(const NilpotentExtensionSpec& in, const RecoveredStructure& r) {
  const std::size_t e = in.B.dim(), d = static_cast<std::size_t>(in.m) * e;
  const CycMatrix inv = *inverse(r.iso);
  CycMatrix T = zeros(r.spec.B.dim(), e, in.m);
  for (std::size_t j = 0; j < e; ++j) {
    const CycVector y = mat_apply(inv, unit_vector(d, j, in.m));
    for (std::size_t i = r.spec.B.dim(); i < d; ++i) EXPECT_TRUE(y[i].is_zero());
    for (std::size_t i = 0; i < r.spec.B.dim(); ++i) T(i, j) = y[i];
  }
  return T;
}

}  // namespace

TEST(NilExt, FieldGivesTwoDimensionalExample) {
  const HModuleAlgebra M = build_nilpotent_extension(spec_field(2));
  const CycVector one = unit_vector(2, 0, 2), w = unit_vector(2, 1, 2);
  EXPECT_EQ(M.A.multiply(w, w), zero_vector(2, 2));
  EXPECT_EQ(mat_apply(M.v_op, w), one);
  EXPECT_EQ(mat_apply(M.c_op, w), (CycVector{CycNum::zero(2), CycNum::rational(2, -1)}));
  EXPECT_EQ(*M.A.unit(), one);
}

TEST(NilExt, AxiomsAndMultiplicationRule) {
  for (int m : {2, 3, 4}) {
    for (const auto& spec : {spec_field(m), spec_m2(m)}) {
      const HModuleAlgebra M = build_nilpotent_extension(spec);
      ASSERT_TRUE(hma_verify(M).ok()) << m;
      EXPECT_FALSE(find_associativity_violation(M.A).has_value());
      // phi^k(a) phi^l(b) = binom(k+l, k)_zeta phi^{k+l}((c^l a) b)
      const std::size_t e = spec.B.dim();
      const std::size_t d = M.dim();
      const QBinomTable binom(CycNum::zeta_power(m, 1));
      for (std::size_t k = 0; k < static_cast<std::size_t>(m); ++k) {
        for (std::size_t l = 0; l < static_cast<std::size_t>(m); ++l) {
          const CycMatrix cl = matrix_power(spec.c_B, static_cast<unsigned>(l));
          for (std::size_t a = 0; a < e; ++a) {
            for (std::size_t b = 0; b < e; ++b) {
              CycVector expect = zero_vector(d, m);
              if (k + l < static_cast<std::size_t>(m)) {
                const CycVector inner = spec.B.multiply(mat_apply(cl, spec.B.basis_vector(a)), spec.B.basis_vector(b));
                for (std::size_t r = 0; r < e; ++r)
                  expect[(k + l) * e + r] = binom(static_cast<unsigned>(k + l), static_cast<unsigned>(k)) * inner[r];
              }
              EXPECT_EQ(M.A.product(k * e + a, l * e + b), expect);
            }
          }
        }
      }
    }
  }
}

TEST(NilExt, RadicalIsTheUpperLayers) {
  for (int m : {2, 3}) {
    for (const auto& spec : {spec_field(m), spec_m2(m)}) {
      const HModuleAlgebra M = build_nilpotent_extension(spec);
      Subspace upper = Subspace::zero(m, M.dim());
      for (std::size_t i = 1; i < static_cast<std::size_t>(m); ++i) upper = upper + extension_layer(spec, i);
      EXPECT_EQ(jacobson_radical(M.A), upper);
      const QuotientAlgebra Q = quotient_algebra(M.A, upper);
      // B -> A/J through phi^0
      CycMatrix T = zeros(Q.algebra.dim(), spec.B.dim(), m);
      for (std::size_t j = 0; j < spec.B.dim(); ++j) {
        const CycVector y = mat_apply(Q.projection, unit_vector(M.dim(), j, m));
        for (std::size_t r = 0; r < y.size(); ++r) T(r, j) = y[r];
      }
      ASSERT_TRUE(inverse(T).has_value());
      EXPECT_TRUE(is_algebra_homomorphism(spec.B, Q.algebra, T));
    }
  }
}

TEST(NilExt, RecoverRoundTrip) {
  for (int m : {2, 3}) {
    for (const auto& spec : {spec_field(m), spec_m2(m)}) {
      const HModuleAlgebra M = build_nilpotent_extension(spec);
      const RecoveredStructure r = recover_structure(M);
      EXPECT_EQ(r.radical_dim, (static_cast<std::size_t>(m) - 1) * spec.B.dim());
      EXPECT_EQ(r.nilpotency_index, static_cast<std::size_t>(m));
      EXPECT_EQ(r.spec.B.dim(), spec.B.dim());
      EXPECT_TRUE(is_hma_isomorphism(build_nilpotent_extension(r.spec), M, r.iso));
      std::string why;
      EXPECT_TRUE(is_graded_isomorphism(spec.B, spec.c_B, r.spec.B, r.spec.c_B, round_trip_map(spec, r), &why)) << why;
    }
  }
}

TEST(NilExt, RecoverAfterBasisChange) {
  std::mt19937_64 rng(17);
  const int m = 2;
  const HModuleAlgebra M = build_nilpotent_extension(spec_m2(m));
  CycMatrix S = th::random_matrix(m, 8, 8, rng);
  while (!inverse(S)) S = th::random_matrix(m, 8, 8, rng);
  const CycMatrix Si = *inverse(S);
  const HModuleAlgebra N = make_hma(change_basis(M.A, S), Si * M.c_op * S, Si * M.v_op * S);
  const RecoveredStructure r = recover_structure(N);
  EXPECT_TRUE(is_hma_isomorphism(build_nilpotent_extension(r.spec), N, r.iso));
  EXPECT_EQ(r.spec.B.dim(), 4u);
}

TEST(NilExt, Preconditions) {
  const int m = 2;
  const FinDimAlgebra F = matrix_algebra(m, 1);
  // F + F with trivial grading has graded ideals; with the swap it is graded-simple
  EXPECT_THROW(make_nilext_spec(m, direct_sum(F, F), identity(2, m)), ValidationError);
  EXPECT_NO_THROW(make_nilext_spec(m, direct_sum(F, F), th::int_matrix(m, {{0, 1}, {1, 0}})));
  // semisimple input
  const SemisimpleSpec s = make_semisimple_spec(m, 1, 2, th::int_matrix(m, {{1}}), identity(1, m));
  EXPECT_THROW(recover_structure(build_semisimple(s)), ValidationError);
  // non-simple input: the 2-dim algebra with trivial action
  const HModuleAlgebra M = build_nilpotent_extension(spec_field(m));
  EXPECT_THROW(recover_structure(make_hma(M.A, identity(2, m), zeros(2, 2, m))), ValidationError);
}
