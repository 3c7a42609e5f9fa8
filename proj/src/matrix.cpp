#include "taft/matrix.hpp"

#include "taft/error.hpp"

namespace taft {

CycVector zero_vector(std::size_t n, int m) { return CycVector(n, CycNum::zero(m)); }

CycVector unit_vector(std::size_t n, std::size_t i, int m) {
  CycVector v = zero_vector(n, m);
  v.at(i) = CycNum::one(m);
  return v;
}

bool is_zero(std::span<const CycNum> v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

CycMatrix zeros(std::size_t rows, std::size_t cols, int m) { return CycMatrix(rows, cols, CycNum::zero(m)); }

CycMatrix identity(std::size_t n, int m) {
  CycMatrix r = zeros(n, n, m);
  for (std::size_t i = 0; i < n; ++i) r(i, i) = CycNum::one(m);
  return r;
}

CycMatrix diagonal(std::span<const CycNum> d) {
  if (d.empty()) throw ValidationError("diagonal of empty list");
  const int m = d[0].conductor();
  CycMatrix r = zeros(d.size(), d.size(), m);
  for (std::size_t i = 0; i < d.size(); ++i) r(i, i) = d[i];
  return r;
}

int conductor_of(const CycMatrix& a) {
  if (a.data().empty()) throw ValidationError("empty matrix has no conductor");
  return a.data().front().conductor();
}

CycMatrix operator*(const CycMatrix& a, const CycMatrix& b) {
  if (a.cols() != b.rows()) throw ValidationError("matrix product shape mismatch");
  const int m = conductor_of(a);
  CycMatrix r = zeros(a.rows(), b.cols(), m);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const CycNum& x = a(i, l);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j).add_scaled(b(l, j), x);
    }
  }
  return r;
}

CycMatrix operator+(const CycMatrix& a, const CycMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ValidationError("matrix sum shape mismatch");
  CycMatrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) += b(i, j);
  return r;
}

CycMatrix operator-(const CycMatrix& a, const CycMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ValidationError("matrix difference shape mismatch");
  CycMatrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) -= b(i, j);
  return r;
}

CycMatrix operator*(const CycNum& s, const CycMatrix& a) {
  CycMatrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = s * a(i, j);
  return r;
}

CycVector mat_apply(const CycMatrix& a, std::span<const CycNum> x) {
  if (a.cols() != x.size()) throw ValidationError("matrix-vector shape mismatch");
  const int m = conductor_of(a);
  CycVector r = zero_vector(a.rows(), m);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (x[j].is_zero()) continue;
    for (std::size_t i = 0; i < a.rows(); ++i) r[i].add_scaled(a(i, j), x[j]);
  }
  return r;
}

CycMatrix transpose(const CycMatrix& a) {
  CycMatrix r(a.cols(), a.rows(), CycNum());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

CycMatrix matrix_power(const CycMatrix& a, unsigned e) {
  if (a.rows() != a.cols()) throw ValidationError("power of non-square matrix");
  CycMatrix result = identity(a.rows(), conductor_of(a));
  CycMatrix base = a;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

bool is_zero(const CycMatrix& a) { return is_zero(std::span<const CycNum>(a.data())); }

bool is_scalar_matrix(const CycMatrix& a, CycNum* lambda) {
  if (a.rows() != a.cols() || a.rows() == 0) return false;
  const CycNum& d = a(0, 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i == j ? a(i, j) != d : !a(i, j).is_zero()) return false;
    }
  }
  if (lambda) *lambda = d;
  return true;
}

CycMatrix from_columns(const std::vector<CycVector>& cols, std::size_t n, int m) {
  CycMatrix r = zeros(n, cols.size(), m);
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) r(i, j) = cols[j].at(i);
  return r;
}

CycMatrix from_rows(const std::vector<CycVector>& rows, std::size_t n, int m) {
  CycMatrix r = zeros(rows.size(), n, m);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = rows[i].at(j);
  return r;
}

Echelon row_reduce(CycMatrix a) {
  Echelon out;
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    }
    const CycNum inv = a(r, col).inverse();
    for (std::size_t j = col; j < a.cols(); ++j) a(r, j) = a(r, j) * inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, col).is_zero()) continue;
      const CycNum f = -a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j).add_scaled(a(r, j), f);
    }
    out.pivots.push_back(col);
    ++r;
  }
  CycMatrix trimmed(r, a.cols(), CycNum());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) trimmed(i, j) = a(i, j);
  out.rref = std::move(trimmed);
  return out;
}

std::size_t rank(const CycMatrix& a) { return row_reduce(a).pivots.size(); }

std::size_t rank_fraction_free(CycMatrix a) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  const int m = conductor_of(a);
  CycNum prev = CycNum::one(m);
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    }
    const CycNum pivot = a(r, col);
    const CycNum prev_inv = prev.inverse();
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      const CycNum lead = a(i, col);
      for (std::size_t j = col + 1; j < a.cols(); ++j) {
        // Sylvester identity: the division by the previous pivot is exact
        a(i, j) = (a(i, j) * pivot - lead * a(r, j)) * prev_inv;
      }
      a(i, col) = CycNum::zero(m);
    }
    prev = pivot;
    ++r;
  }
  return r;
}

std::vector<CycVector> nullspace(const CycMatrix& a) {
  if (a.rows() == 0) throw ValidationError("nullspace of a matrix without rows: conductor unknown");
  const int m = conductor_of(a);
  Echelon e = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<CycVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    CycVector v = zero_vector(a.cols(), m);
    v[free] = CycNum::one(m);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.rref(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<CycVector> solve(const CycMatrix& a, std::span<const CycNum> b) {
  if (b.size() != a.rows()) throw ValidationError("solve: right-hand side length mismatch");
  const int m = conductor_of(a);
  CycMatrix aug = zeros(a.rows(), a.cols() + 1, m);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  Echelon e = row_reduce(std::move(aug));
  CycVector x = zero_vector(a.cols(), m);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] == a.cols()) return std::nullopt;
    x[e.pivots[i]] = e.rref(i, a.cols());
  }
  return x;
}

std::optional<CycMatrix> inverse(const CycMatrix& a) {
  if (a.rows() != a.cols()) throw ValidationError("inverse of non-square matrix");
  const std::size_t n = a.rows();
  const int m = conductor_of(a);
  CycMatrix aug = zeros(n, 2 * n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = CycNum::one(m);
  }
  Echelon e = row_reduce(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  CycMatrix inv = zeros(n, n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rref(i, n + j);
  return inv;
}

CycNum determinant(CycMatrix a) {
  if (a.rows() != a.cols()) throw ValidationError("determinant of non-square matrix");
  const std::size_t n = a.rows();
  const int m = conductor_of(a);
  CycNum det = CycNum::one(m);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) return CycNum::zero(m);
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    const CycNum inv = a(col, col).inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col).is_zero()) continue;
      const CycNum f = -(a(i, col) * inv);
      for (std::size_t j = col; j < n; ++j) a(i, j).add_scaled(a(col, j), f);
    }
  }
  return det;
}

}  // namespace taft
