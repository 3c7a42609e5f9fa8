#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "taft/cyclotomic.hpp"

namespace taft {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using CycVector = std::vector<CycNum>;
using CycMatrix = Matrix<CycNum>;

CycVector zero_vector(std::size_t n, int m);
CycVector unit_vector(std::size_t n, std::size_t i, int m);
bool is_zero(std::span<const CycNum> v);

CycMatrix zeros(std::size_t rows, std::size_t cols, int m);
CycMatrix identity(std::size_t n, int m);
CycMatrix diagonal(std::span<const CycNum> d);
int conductor_of(const CycMatrix& a);

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
CycMatrix operator+(const CycMatrix& a, const CycMatrix& b);
CycMatrix operator-(const CycMatrix& a, const CycMatrix& b);
CycMatrix operator*(const CycNum& s, const CycMatrix& a);
CycVector mat_apply(const CycMatrix& a, std::span<const CycNum> x);
CycMatrix transpose(const CycMatrix& a);
CycMatrix matrix_power(const CycMatrix& a, unsigned e);
bool is_zero(const CycMatrix& a);
/// True when a == lambda * I for some lambda; the scalar is written to *lambda.
bool is_scalar_matrix(const CycMatrix& a, CycNum* lambda = nullptr);
/// Matrix whose columns are the given vectors.
CycMatrix from_columns(const std::vector<CycVector>& cols, std::size_t n, int m);
CycMatrix from_rows(const std::vector<CycVector>& rows, std::size_t n, int m);

struct Echelon {
  CycMatrix rref;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form by Gauss-Jordan elimination.
Echelon row_reduce(CycMatrix a);
std::size_t rank(const CycMatrix& a);
/// Rank by fraction-free (Bareiss) elimination; independent of row_reduce.
std::size_t rank_fraction_free(CycMatrix a);
/// Basis of the right kernel {x : a x = 0}.
std::vector<CycVector> nullspace(const CycMatrix& a);
std::optional<CycVector> solve(const CycMatrix& a, std::span<const CycNum> b);
std::optional<CycMatrix> inverse(const CycMatrix& a);
CycNum determinant(CycMatrix a);

}  // namespace taft
