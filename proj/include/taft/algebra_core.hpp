#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "taft/cyclotomic.hpp"
#include "taft/error.hpp"
#include "taft/matrix.hpp"

namespace taft {

/// Finite-dimensional associative algebra over Q(zeta_m) given by structure
/// constants: product(i, j) holds the coordinates of e_i e_j.
class FinDimAlgebra {
 public:
  FinDimAlgebra() = default;
  /// No validation here; use alg_from_structure_constants for untrusted input.
  FinDimAlgebra(int m, std::size_t dim, std::vector<CycVector> mult, std::optional<CycVector> unit);

  int m() const { return m_; }
  std::size_t dim() const { return dim_; }
  const CycVector& product(std::size_t i, std::size_t j) const { return mult_[i * dim_ + j]; }
  const std::vector<CycVector>& structure_constants() const { return mult_; }
  const std::optional<CycVector>& unit() const { return unit_; }
  bool is_unital() const { return unit_.has_value(); }

  CycVector multiply(std::span<const CycNum> a, std::span<const CycNum> b) const;
  CycVector basis_vector(std::size_t i) const { return unit_vector(dim_, i, m_); }
  CycVector zero() const { return zero_vector(dim_, m_); }

 private:
  struct Term {
    std::size_t index;
    CycNum coeff;
  };
  int m_ = 0;
  std::size_t dim_ = 0;
  std::vector<CycVector> mult_;
  std::vector<std::vector<Term>> sparse_;
  std::optional<CycVector> unit_;
};

/// Raised for a non-associative structure tensor; carries the failing triple.
class NonAssociative : public ValidationError {
 public:
  NonAssociative(std::size_t i, std::size_t j, std::size_t k);
  std::array<std::size_t, 3> triple;
};

struct AssociativityOptions {
  std::size_t exhaustive_limit = 12;
  std::size_t samples = 200;
  uint64_t seed = 1;
};

/// Basis triple (i, j, k) with (e_i e_j) e_k != e_i (e_j e_k), if one is found
/// (exhaustively up to the limit, sampled above it).
std::optional<std::array<std::size_t, 3>> find_associativity_violation(const FinDimAlgebra& A,
                                                                        const AssociativityOptions& opt = {});
/// Two-sided unit, if the algebra has one.
std::optional<CycVector> find_unit(const FinDimAlgebra& A);
bool is_two_sided_unit(const FinDimAlgebra& A, std::span<const CycNum> u);

/// Validating constructor: rejects bad shapes, non-associative tensors (with
/// witness) and a supplied unit that is not one. Detects a unit if none given.
FinDimAlgebra alg_from_structure_constants(int m, std::size_t dim, std::vector<CycVector> mult,
                                           std::optional<CycVector> unit = std::nullopt,
                                           const AssociativityOptions& opt = {});

/// Incremental echelon basis over Q(zeta): rows normalized to pivot 1.
class CycEchelon {
 public:
  CycEchelon(int m, std::size_t cols) : m_(m), cols_(cols) {}
  bool insert(CycVector v);
  CycVector reduce(CycVector v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool full() const { return rows_.size() == cols_; }
  const std::vector<CycVector>& rows() const { return rows_; }

 private:
  int m_;
  std::size_t cols_;
  std::vector<CycVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Subspace of Q(zeta)^n in reduced row echelon form, so equality of
/// subspaces is equality of representations.
class Subspace {
 public:
  Subspace() = default;
  static Subspace span(int m, std::size_t ambient, const std::vector<CycVector>& gens);
  static Subspace zero(int m, std::size_t ambient) { return span(m, ambient, {}); }
  static Subspace whole(int m, std::size_t ambient);

  int m() const { return m_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<CycVector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// x minus its reduction along the echelon basis; zero iff x is in the span.
  CycVector residual(std::span<const CycNum> x) const;
  bool contains(std::span<const CycNum> x) const;
  bool contains(const Subspace& other) const;
  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  int m_ = 0;
  std::size_t ambient_ = 0;
  std::vector<CycVector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Matrix of x -> a x (columns are images of basis vectors).
CycMatrix left_mult_operator(const FinDimAlgebra& A, std::span<const CycNum> a);
/// Matrix of x -> x a.
CycMatrix right_mult_operator(const FinDimAlgebra& A, std::span<const CycNum> a);

/// span{u v : u in U, v in V}.
Subspace subspace_product(const FinDimAlgebra& A, const Subspace& U, const Subspace& V);
/// Smallest k >= 1 with U^k = 0, or nullopt if U is not nilpotent.
std::optional<std::size_t> nilpotency_index(const FinDimAlgebra& A, const Subspace& U);

/// Smallest subspace containing S and closed under every operator.
Subspace closure_under(const Subspace& S, const std::vector<CycMatrix>& ops);
/// Two-sided ideal generated by S, additionally closed under extra_ops.
Subspace ideal_generated_by(const FinDimAlgebra& A, const Subspace& S, const std::vector<CycMatrix>& extra_ops = {});

/// Radical as the kernel of the trace form x, y -> Tr(L_{xy}), computed in
/// the unital hull when A has no unit.
Subspace jacobson_radical(const FinDimAlgebra& A);

struct GradingDecomposition {
  int m = 0;
  std::vector<Subspace> components;    // A^(0), ..., A^(m-1)
  std::vector<CycMatrix> projections;  // idempotent projections onto the components
  /// Degree of each vector of the eigenbasis, listed component by component.
  std::vector<int> eigen_degrees;
  /// Columns: the concatenated component bases.
  CycMatrix eigenbasis;
};

/// Eigenspace decomposition A^(i) = {a : c a = zeta^i a}; rejects c with
/// c^m != 1 and gradings that are not multiplicative.
GradingDecomposition grading_from_c(const FinDimAlgebra& A, const CycMatrix& c_op, int m);
/// Component of the decomposition that contains a homogeneous x, or -1.
int homogeneous_degree(const GradingDecomposition& G, std::span<const CycNum> x);

struct QuotientAlgebra {
  FinDimAlgebra algebra;
  CycMatrix projection;             // dim(A/I) x dim(A)
  std::vector<std::size_t> lifts;   // basis vector of A lifting each quotient basis vector
};

/// A/I for a two-sided ideal I (rejected if I is not an ideal).
QuotientAlgebra quotient_algebra(const FinDimAlgebra& A, const Subspace& I);

FinDimAlgebra direct_sum(const FinDimAlgebra& A, const FinDimAlgebra& B);
/// The k x k matrix algebra with basis E_ij at index i*k + j.
FinDimAlgebra matrix_algebra(int m, std::size_t k);
/// Same algebra in the basis given by the columns of S (must be invertible).
FinDimAlgebra change_basis(const FinDimAlgebra& A, const CycMatrix& S);

/// Whether T (dim B x dim A) satisfies T(xy) = T(x)T(y) on basis pairs and,
/// when both are unital, T(1) = 1. The first failing pair is written to *witness.
bool is_algebra_homomorphism(const FinDimAlgebra& A, const FinDimAlgebra& B, const CycMatrix& T,
                             std::string* witness = nullptr);

}  // namespace taft
