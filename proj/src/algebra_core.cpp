#include "taft/algebra_core.hpp"

#include <functional>
#include <random>

namespace taft {

FinDimAlgebra::FinDimAlgebra(int m, std::size_t dim, std::vector<CycVector> mult, std::optional<CycVector> unit)
    : m_(m), dim_(dim), mult_(std::move(mult)), unit_(std::move(unit)) {
  sparse_.resize(mult_.size());
  for (std::size_t ij = 0; ij < mult_.size(); ++ij) {
    for (std::size_t l = 0; l < mult_[ij].size(); ++l) {
      if (!mult_[ij][l].is_zero()) sparse_[ij].push_back({l, mult_[ij][l]});
    }
  }
}

CycVector FinDimAlgebra::multiply(std::span<const CycNum> a, std::span<const CycNum> b) const {
  if (a.size() != dim_ || b.size() != dim_) throw ValidationError("multiply: vector length differs from algebra dimension");
  CycVector r = zero();
  for (std::size_t i = 0; i < dim_; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (b[j].is_zero()) continue;
      const auto& terms = sparse_[i * dim_ + j];
      if (terms.empty()) continue;
      const CycNum s = a[i] * b[j];
      for (const auto& t : terms) r[t.index].add_scaled(t.coeff, s);
    }
  }
  return r;
}

NonAssociative::NonAssociative(std::size_t i, std::size_t j, std::size_t k)
    : ValidationError("non-associative structure constants: (e" + std::to_string(i + 1) + " e" + std::to_string(j + 1) +
                      ") e" + std::to_string(k + 1) + " != e" + std::to_string(i + 1) + " (e" + std::to_string(j + 1) +
                      " e" + std::to_string(k + 1) + ")"),
      triple{i, j, k} {}

namespace {

bool triple_associates(const FinDimAlgebra& A, std::size_t i, std::size_t j, std::size_t k) {
  const CycVector ek = A.basis_vector(k);
  const CycVector ei = A.basis_vector(i);
  return A.multiply(A.product(i, j), ek) == A.multiply(ei, A.product(j, k));
}

}  // namespace

std::optional<std::array<std::size_t, 3>> find_associativity_violation(const FinDimAlgebra& A,
                                                                        const AssociativityOptions& opt) {
  const std::size_t d = A.dim();
  if (d <= opt.exhaustive_limit) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
          if (!triple_associates(A, i, j, k)) return std::array<std::size_t, 3>{i, j, k};
    return std::nullopt;
  }
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> pick(0, d - 1);
  for (std::size_t s = 0; s < opt.samples; ++s) {
    const std::size_t i = pick(rng), j = pick(rng), k = pick(rng);
    if (!triple_associates(A, i, j, k)) return std::array<std::size_t, 3>{i, j, k};
  }
  return std::nullopt;
}

bool is_two_sided_unit(const FinDimAlgebra& A, std::span<const CycNum> u) {
  if (u.size() != A.dim()) return false;
  for (std::size_t j = 0; j < A.dim(); ++j) {
    const CycVector ej = A.basis_vector(j);
    if (A.multiply(u, ej) != ej || A.multiply(ej, u) != ej) return false;
  }
  return true;
}

std::optional<CycVector> find_unit(const FinDimAlgebra& A) {
  const std::size_t d = A.dim();
  const int m = A.m();
  CycEchelon E(m, d + 1);
  auto feed = [&](std::size_t j, std::size_t l, bool left) -> bool {
    CycVector row = zero_vector(d + 1, m);
    for (std::size_t i = 0; i < d; ++i) row[i] = left ? A.product(i, j)[l] : A.product(j, i)[l];
    if (j == l) row[d] = CycNum::one(m);
    CycVector r = E.reduce(row);
    std::size_t first = 0;
    while (first <= d && r[first].is_zero()) ++first;
    if (first > d) return true;
    if (first == d) return false;  // 0 = nonzero
    E.insert(std::move(r));
    return true;
  };
  for (std::size_t j = 0; j < d && E.rank() < d; ++j) {
    for (std::size_t l = 0; l < d && E.rank() < d; ++l) {
      if (!feed(j, l, true) || !feed(j, l, false)) return std::nullopt;
    }
  }
  Echelon rr = row_reduce(from_rows(E.rows(), d + 1, m));
  CycVector u = zero_vector(d, m);
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
    if (rr.pivots[i] == d) return std::nullopt;
    u[rr.pivots[i]] = rr.rref(i, d);
  }
  if (!is_two_sided_unit(A, u)) return std::nullopt;
  return u;
}

FinDimAlgebra alg_from_structure_constants(int m, std::size_t dim, std::vector<CycVector> mult,
                                           std::optional<CycVector> unit, const AssociativityOptions& opt) {
  CyclotomicField::get(m);
  if (dim == 0) throw ValidationError("algebra dimension must be positive");
  if (mult.size() != dim * dim) {
    throw ValidationError("structure tensor must have dim^2 = " + std::to_string(dim * dim) + " products, got " +
                          std::to_string(mult.size()));
  }
  for (const auto& v : mult) {
    if (v.size() != dim) throw ValidationError("structure tensor entry has wrong length");
    for (const auto& x : v) {
      if (!x.bound() || x.conductor() != m) throw ConductorMismatch("structure constant has wrong conductor");
    }
  }
  FinDimAlgebra A(m, dim, std::move(mult), std::nullopt);
  if (auto w = find_associativity_violation(A, opt)) throw NonAssociative((*w)[0], (*w)[1], (*w)[2]);
  if (unit) {
    if (unit->size() != dim) throw ValidationError("unit vector has wrong length");
    if (!is_two_sided_unit(A, *unit)) throw ValidationError("supplied unit is not a two-sided unit");
  } else {
    unit = find_unit(A);
  }
  return FinDimAlgebra(m, dim, A.structure_constants(), std::move(unit));
}

bool CycEchelon::insert(CycVector v) {
  if (v.size() != cols_) throw ValidationError("CycEchelon: vector length mismatch");
  v = reduce(std::move(v));
  std::size_t piv = 0;
  while (piv < cols_ && v[piv].is_zero()) ++piv;
  if (piv == cols_) return false;
  const CycNum inv = v[piv].inverse();
  for (std::size_t j = piv; j < cols_; ++j) {
    if (!v[j].is_zero()) v[j] *= inv;
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

CycVector CycEchelon::reduce(CycVector v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t piv = pivots_[r];
    if (v[piv].is_zero()) continue;
    const CycNum f = -v[piv];
    for (std::size_t j = piv; j < cols_; ++j) {
      if (!rows_[r][j].is_zero()) v[j].add_scaled(rows_[r][j], f);
    }
  }
  return v;
}

Subspace Subspace::span(int m, std::size_t ambient, const std::vector<CycVector>& gens) {
  Subspace s;
  s.m_ = m;
  s.ambient_ = ambient;
  if (gens.empty()) return s;
  Echelon e = row_reduce(from_rows(gens, ambient, m));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    s.basis_.emplace_back(e.rref.row(i).begin(), e.rref.row(i).end());
  }
  s.pivots_ = e.pivots;
  return s;
}

Subspace Subspace::whole(int m, std::size_t ambient) {
  std::vector<CycVector> gens;
  for (std::size_t i = 0; i < ambient; ++i) gens.push_back(unit_vector(ambient, i, m));
  return span(m, ambient, gens);
}

CycVector Subspace::residual(std::span<const CycNum> x) const {
  if (x.size() != ambient_) throw ValidationError("Subspace: vector length mismatch");
  CycVector r(x.begin(), x.end());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const CycNum f = -r[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (!basis_[i][j].is_zero()) r[j].add_scaled(basis_[i][j], f);
    }
  }
  return r;
}

bool Subspace::contains(std::span<const CycNum> x) const { return is_zero(residual(x)); }

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis_) {
    if (!contains(v)) return false;
  }
  return true;
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw ValidationError("Subspace sum: ambient mismatch");
  std::vector<CycVector> gens = basis_;
  gens.insert(gens.end(), other.basis_.begin(), other.basis_.end());
  return span(m_ ? m_ : other.m_, ambient_, gens);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw ValidationError("Subspace intersection: ambient mismatch");
  const int m = m_ ? m_ : other.m_;
  if (basis_.empty() || other.basis_.empty()) return zero(m, ambient_);
  const std::size_t a = basis_.size(), b = other.basis_.size();
  CycMatrix M = zeros(ambient_, a + b, m);
  for (std::size_t j = 0; j < a; ++j)
    for (std::size_t i = 0; i < ambient_; ++i) M(i, j) = basis_[j][i];
  for (std::size_t j = 0; j < b; ++j)
    for (std::size_t i = 0; i < ambient_; ++i) M(i, a + j) = -other.basis_[j][i];
  std::vector<CycVector> gens;
  for (const auto& z : nullspace(M)) {
    CycVector x = zero_vector(ambient_, m);
    for (std::size_t j = 0; j < a; ++j) {
      if (z[j].is_zero()) continue;
      for (std::size_t i = 0; i < ambient_; ++i) x[i].add_scaled(basis_[j][i], z[j]);
    }
    gens.push_back(std::move(x));
  }
  return span(m, ambient_, gens);
}

CycMatrix left_mult_operator(const FinDimAlgebra& A, std::span<const CycNum> a) {
  CycMatrix L = zeros(A.dim(), A.dim(), A.m());
  for (std::size_t j = 0; j < A.dim(); ++j) {
    CycVector col = A.multiply(a, A.basis_vector(j));
    for (std::size_t i = 0; i < A.dim(); ++i) L(i, j) = std::move(col[i]);
  }
  return L;
}

CycMatrix right_mult_operator(const FinDimAlgebra& A, std::span<const CycNum> a) {
  CycMatrix R = zeros(A.dim(), A.dim(), A.m());
  for (std::size_t j = 0; j < A.dim(); ++j) {
    CycVector col = A.multiply(A.basis_vector(j), a);
    for (std::size_t i = 0; i < A.dim(); ++i) R(i, j) = std::move(col[i]);
  }
  return R;
}

Subspace subspace_product(const FinDimAlgebra& A, const Subspace& U, const Subspace& V) {
  std::vector<CycVector> gens;
  for (const auto& u : U.basis())
    for (const auto& v : V.basis()) gens.push_back(A.multiply(u, v));
  return Subspace::span(A.m(), A.dim(), gens);
}

std::optional<std::size_t> nilpotency_index(const FinDimAlgebra& A, const Subspace& U) {
  Subspace power = U;
  for (std::size_t k = 1; k <= A.dim() + 1; ++k) {
    if (power.dim() == 0) return k;
    Subspace next = subspace_product(A, power, U);
    if (next == power) return std::nullopt;
    power = std::move(next);
  }
  return std::nullopt;
}

namespace {

using ImageFn = std::function<void(const CycVector&, std::vector<CycVector>&)>;

Subspace closure_impl(const Subspace& S, const ImageFn& images) {
  CycEchelon E(S.m(), S.ambient());
  std::vector<CycVector> queue;
  for (const auto& b : S.basis()) {
    if (E.insert(b)) queue.push_back(b);
  }
  std::vector<CycVector> out;
  while (!queue.empty() && !E.full()) {
    CycVector x = std::move(queue.back());
    queue.pop_back();
    out.clear();
    images(x, out);
    for (auto& y : out) {
      CycVector r = E.reduce(std::move(y));
      if (is_zero(r)) continue;
      E.insert(r);
      queue.push_back(std::move(r));
      if (E.full()) break;
    }
  }
  return Subspace::span(S.m(), S.ambient(), E.rows());
}

}  // namespace

Subspace closure_under(const Subspace& S, const std::vector<CycMatrix>& ops) {
  return closure_impl(S, [&](const CycVector& x, std::vector<CycVector>& out) {
    for (const auto& op : ops) out.push_back(mat_apply(op, x));
  });
}

Subspace ideal_generated_by(const FinDimAlgebra& A, const Subspace& S, const std::vector<CycMatrix>& extra_ops) {
  if (S.ambient() != A.dim()) throw ValidationError("ideal_generated_by: ambient dimension mismatch");
  return closure_impl(S, [&](const CycVector& x, std::vector<CycVector>& out) {
    for (std::size_t i = 0; i < A.dim(); ++i) {
      const CycVector ei = A.basis_vector(i);
      out.push_back(A.multiply(ei, x));
      out.push_back(A.multiply(x, ei));
    }
    for (const auto& op : extra_ops) out.push_back(mat_apply(op, x));
  });
}

namespace {

FinDimAlgebra unital_hull(const FinDimAlgebra& A) {
  // index 0 is the adjoined unit, index i+1 is e_i
  const std::size_t d = A.dim() + 1;
  const int m = A.m();
  std::vector<CycVector> mult(d * d, zero_vector(d, m));
  for (std::size_t i = 0; i < d; ++i) {
    mult[i] = unit_vector(d, i, m);
    mult[i * d] = unit_vector(d, i, m);
  }
  for (std::size_t i = 1; i < d; ++i) {
    for (std::size_t j = 1; j < d; ++j) {
      const auto& p = A.product(i - 1, j - 1);
      for (std::size_t l = 0; l < A.dim(); ++l) mult[i * d + j][l + 1] = p[l];
    }
  }
  return FinDimAlgebra(m, d, std::move(mult), unit_vector(d, 0, m));
}

}  // namespace

Subspace jacobson_radical(const FinDimAlgebra& A) {
  const bool hull = !A.is_unital();
  const FinDimAlgebra H = hull ? unital_hull(A) : A;
  const std::size_t d = H.dim();
  const int m = H.m();
  // tr[l] = Tr(L_{e_l})
  CycVector tr = zero_vector(d, m);
  for (std::size_t l = 0; l < d; ++l)
    for (std::size_t j = 0; j < d; ++j) tr[l] += H.product(l, j)[j];
  // G(j, i) = Tr(L_{e_i e_j}); the radical is {x : x^T G^T = 0}
  CycMatrix G = zeros(d, d, m);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const auto& p = H.product(i, j);
      for (std::size_t l = 0; l < d; ++l) {
        if (!p[l].is_zero()) G(j, i).add_scaled(tr[l], p[l]);
      }
    }
  }
  std::vector<CycVector> gens = nullspace(G);
  if (hull) {
    for (auto& v : gens) {
      if (!v[0].is_zero()) throw std::logic_error("radical of the unital hull left the original algebra");
      v.erase(v.begin());
    }
  }
  return Subspace::span(A.m(), A.dim(), gens);
}

GradingDecomposition grading_from_c(const FinDimAlgebra& A, const CycMatrix& c_op, int m) {
  const std::size_t d = A.dim();
  if (c_op.rows() != d || c_op.cols() != d) throw ValidationError("grading: c operator has wrong shape");
  if (m != A.m()) throw ConductorMismatch("grading: m differs from the algebra's conductor");
  const CycMatrix I = identity(d, m);
  std::vector<CycMatrix> powers{I};
  for (int j = 1; j < m; ++j) powers.push_back(powers.back() * c_op);
  if (powers.back() * c_op != I) {
    throw ValidationError("grading: c^m != identity, so c does not split into zeta-eigenspaces");
  }
  GradingDecomposition G;
  G.m = m;
  std::vector<CycVector> cols;
  const Rational inv_m(1, m);
  for (int g = 0; g < m; ++g) {
    const CycNum z = CycNum::zeta_power(m, g);
    G.components.push_back(Subspace::span(m, d, nullspace(c_op - z * I)));
    for (const auto& b : G.components.back().basis()) {
      cols.push_back(b);
      G.eigen_degrees.push_back(g);
    }
    // pi_g = (1/m) sum_j zeta^{-gj} c^j
    CycMatrix pi = zeros(d, d, m);
    for (int j = 0; j < m; ++j) pi = pi + CycNum::zeta_power(m, -static_cast<long>(g) * j).scaled(inv_m) * powers[j];
    G.projections.push_back(std::move(pi));
  }
  if (cols.size() != d) throw ValidationError("grading: eigenspaces of c do not span the algebra");
  G.eigenbasis = from_columns(cols, d, m);
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < m; ++k) {
      const Subspace& target = G.components[static_cast<std::size_t>((i + k) % m)];
      for (const auto& x : G.components[static_cast<std::size_t>(i)].basis()) {
        for (const auto& y : G.components[static_cast<std::size_t>(k)].basis()) {
          if (!target.contains(A.multiply(x, y))) {
            throw ValidationError("grading: A^(" + std::to_string(i) + ") A^(" + std::to_string(k) +
                                  ") is not contained in A^(" + std::to_string((i + k) % m) + ")");
          }
        }
      }
    }
  }
  return G;
}

int homogeneous_degree(const GradingDecomposition& G, std::span<const CycNum> x) {
  for (int g = 0; g < G.m; ++g) {
    if (G.components[static_cast<std::size_t>(g)].contains(x)) return g;
  }
  return -1;
}

QuotientAlgebra quotient_algebra(const FinDimAlgebra& A, const Subspace& I) {
  const std::size_t d = A.dim();
  const int m = A.m();
  for (const auto& b : I.basis()) {
    for (std::size_t i = 0; i < d; ++i) {
      const CycVector ei = A.basis_vector(i);
      if (!I.contains(A.multiply(ei, b)) || !I.contains(A.multiply(b, ei))) {
        throw ValidationError("quotient_algebra: subspace is not a two-sided ideal");
      }
    }
  }
  std::vector<bool> pivot(d, false);
  for (auto p : I.pivots()) pivot[p] = true;
  QuotientAlgebra Q;
  for (std::size_t i = 0; i < d; ++i) {
    if (!pivot[i]) Q.lifts.push_back(i);
  }
  const std::size_t q = Q.lifts.size();
  if (q == 0) throw ValidationError("quotient_algebra: quotient by the whole algebra");
  auto project = [&](std::span<const CycNum> x) {
    CycVector r = I.residual(x);
    CycVector out = zero_vector(q, m);
    for (std::size_t a = 0; a < q; ++a) out[a] = r[Q.lifts[a]];
    return out;
  };
  Q.projection = zeros(q, d, m);
  for (std::size_t j = 0; j < d; ++j) {
    CycVector col = project(A.basis_vector(j));
    for (std::size_t a = 0; a < q; ++a) Q.projection(a, j) = col[a];
  }
  std::vector<CycVector> mult;
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) mult.push_back(project(A.product(Q.lifts[a], Q.lifts[b])));
  std::optional<CycVector> unit;
  if (A.unit()) unit = project(*A.unit());
  Q.algebra = FinDimAlgebra(m, q, std::move(mult), std::move(unit));
  return Q;
}

FinDimAlgebra direct_sum(const FinDimAlgebra& A, const FinDimAlgebra& B) {
  if (A.m() != B.m()) throw ConductorMismatch("direct_sum: conductor mismatch");
  const std::size_t da = A.dim(), db = B.dim(), d = da + db;
  const int m = A.m();
  std::vector<CycVector> mult(d * d, zero_vector(d, m));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t l = 0; l < da; ++l) mult[i * d + j][l] = A.product(i, j)[l];
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t l = 0; l < db; ++l) mult[(da + i) * d + da + j][da + l] = B.product(i, j)[l];
  std::optional<CycVector> unit;
  if (A.unit() && B.unit()) {
    unit = *A.unit();
    unit->insert(unit->end(), B.unit()->begin(), B.unit()->end());
  }
  return FinDimAlgebra(m, d, std::move(mult), std::move(unit));
}

FinDimAlgebra matrix_algebra(int m, std::size_t k) {
  const std::size_t d = k * k;
  std::vector<CycVector> mult(d * d, zero_vector(d, m));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) mult[(i * k + j) * d + j * k + l][i * k + l] = CycNum::one(m);
  CycVector unit = zero_vector(d, m);
  for (std::size_t i = 0; i < k; ++i) unit[i * k + i] = CycNum::one(m);
  return FinDimAlgebra(m, d, std::move(mult), std::move(unit));
}

FinDimAlgebra change_basis(const FinDimAlgebra& A, const CycMatrix& S) {
  const std::size_t d = A.dim();
  auto Sinv = inverse(S);
  if (!Sinv) throw ValidationError("change_basis: matrix is singular");
  std::vector<CycVector> cols;
  for (std::size_t j = 0; j < d; ++j) {
    CycVector c;
    for (std::size_t i = 0; i < d; ++i) c.push_back(S(i, j));
    cols.push_back(std::move(c));
  }
  std::vector<CycVector> mult;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) mult.push_back(mat_apply(*Sinv, A.multiply(cols[i], cols[j])));
  std::optional<CycVector> unit;
  if (A.unit()) unit = mat_apply(*Sinv, *A.unit());
  return FinDimAlgebra(A.m(), d, std::move(mult), std::move(unit));
}

bool is_algebra_homomorphism(const FinDimAlgebra& A, const FinDimAlgebra& B, const CycMatrix& T, std::string* witness) {
  if (T.rows() != B.dim() || T.cols() != A.dim()) {
    if (witness) *witness = "shape mismatch";
    return false;
  }
  std::vector<CycVector> images;
  for (std::size_t i = 0; i < A.dim(); ++i) images.push_back(mat_apply(T, A.basis_vector(i)));
  for (std::size_t i = 0; i < A.dim(); ++i) {
    for (std::size_t j = 0; j < A.dim(); ++j) {
      if (mat_apply(T, A.product(i, j)) != B.multiply(images[i], images[j])) {
        if (witness) *witness = "e" + std::to_string(i + 1) + " * e" + std::to_string(j + 1);
        return false;
      }
    }
  }
  if (A.unit() && B.unit() && mat_apply(T, *A.unit()) != *B.unit()) {
    if (witness) *witness = "unit";
    return false;
  }
  return true;
}

}  // namespace taft
