#include <random>

#include "taft/hmodule.hpp"

namespace taft {

bool is_hma_isomorphism(const HModuleAlgebra& M1, const HModuleAlgebra& M2, const CycMatrix& T, std::string* why) {
  auto fail = [&](const char* s) {
    if (why) *why = s;
    return false;
  };
  if (M1.dim() != M2.dim() || M1.m() != M2.m()) return fail("dimension or conductor mismatch");
  if (T.rows() != M1.dim() || T.cols() != M1.dim()) return fail("map has wrong shape");
  if (!inverse(T)) return fail("map is singular");
  if (T * M1.c_op != M2.c_op * T) return fail("map does not intertwine c");
  if (T * M1.v_op != M2.v_op * T) return fail("map does not intertwine v");
  std::string w;
  if (!is_algebra_homomorphism(M1.A, M2.A, T, &w)) return fail("map is not multiplicative");
  return true;
}

namespace {

// T = base + sum_k mu_k dirs[k], with T flattened row-major.
struct AffineFamily {
  CycVector base;
  std::vector<CycVector> dirs;
};

CycMatrix unflatten(const CycVector& x, std::size_t d, int m) {
  CycMatrix T = zeros(d, d, m);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t s = 0; s < d; ++s) T(r, s) = x[r * d + s];
  return T;
}

std::optional<AffineFamily> intertwiner_family(const HModuleAlgebra& M1, const HModuleAlgebra& M2) {
  const std::size_t d = M1.dim();
  const int m = M1.m();
  const std::size_t n = d * d;
  std::vector<CycVector> rows;
  CycVector rhs;
  auto intertwine = [&](const CycMatrix& X1, const CycMatrix& X2) {
    // (T X1 - X2 T)(r, s) = 0
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t s = 0; s < d; ++s) {
        CycVector row = zero_vector(n, m);
        for (std::size_t q = 0; q < d; ++q) {
          row[r * d + q] += X1(q, s);
          row[q * d + s] -= X2(r, q);
        }
        if (!is_zero(row)) {
          rows.push_back(std::move(row));
          rhs.push_back(CycNum::zero(m));
        }
      }
    }
  };
  intertwine(M1.c_op, M2.c_op);
  intertwine(M1.v_op, M2.v_op);
  if (M1.A.unit() && M2.A.unit()) {
    for (std::size_t r = 0; r < d; ++r) {
      CycVector row = zero_vector(n, m);
      for (std::size_t s = 0; s < d; ++s) row[r * d + s] = (*M1.A.unit())[s];
      rows.push_back(std::move(row));
      rhs.push_back((*M2.A.unit())[r]);
    }
  }
  AffineFamily fam;
  if (rows.empty()) {
    fam.base = zero_vector(n, m);
    for (std::size_t k = 0; k < n; ++k) fam.dirs.push_back(unit_vector(n, k, m));
    return fam;
  }
  const CycMatrix A = from_rows(rows, n, m);
  auto x0 = solve(A, rhs);
  if (!x0) return std::nullopt;
  fam.base = std::move(*x0);
  fam.dirs = nullspace(A);
  return fam;
}

struct Equation {
  CycVector linear;  // constant term first
  bool quadratic = false;
};

// Multiplicativity equations T(e_i e_j) = T(e_i) T(e_j) restricted to the family.
std::vector<Equation> multiplicativity_equations(const HModuleAlgebra& M1, const HModuleAlgebra& M2,
                                                 const AffineFamily& fam) {
  const std::size_t d = M1.dim();
  const int m = M1.m();
  const std::size_t n = fam.dirs.size();
  // affine form of entry (r, s)
  auto form = [&](std::size_t r, std::size_t s) {
    CycVector f(n + 1);
    f[0] = fam.base[r * d + s];
    for (std::size_t k = 0; k < n; ++k) f[k + 1] = fam.dirs[k][r * d + s];
    return f;
  };
  std::vector<CycVector> F(d * d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t s = 0; s < d; ++s) F[r * d + s] = form(r, s);
  std::vector<Equation> eqs;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const CycVector& p1 = M1.A.product(i, j);
      for (std::size_t l = 0; l < d; ++l) {
        Equation e;
        e.linear = zero_vector(n + 1, m);
        CycMatrix quad = zeros(n + 1, n + 1, m);
        for (std::size_t q = 0; q < d; ++q) {
          if (p1[q].is_zero()) continue;
          for (std::size_t k = 0; k <= n; ++k) e.linear[k].add_scaled(F[l * d + q][k], p1[q]);
        }
        for (std::size_t a = 0; a < d; ++a) {
          for (std::size_t b = 0; b < d; ++b) {
            const CycNum& cab = M2.A.product(a, b)[l];
            if (cab.is_zero()) continue;
            const CycVector& fa = F[a * d + i];
            const CycVector& fb = F[b * d + j];
            const CycNum neg = -cab;
            for (std::size_t x = 0; x <= n; ++x) {
              if (fa[x].is_zero()) continue;
              const CycNum s = fa[x] * neg;
              for (std::size_t y = 0; y <= n; ++y) {
                if (!fb[y].is_zero()) quad(x, y).add_scaled(fb[y], s);
              }
            }
          }
        }
        // fold constant-times-variable terms into the linear part
        e.linear[0] += quad(0, 0);
        for (std::size_t k = 1; k <= n; ++k) e.linear[k] += quad(0, k) + quad(k, 0);
        for (std::size_t x = 1; x <= n && !e.quadratic; ++x)
          for (std::size_t y = x; y <= n && !e.quadratic; ++y)
            if (!(x == y ? quad(x, x) : quad(x, y) + quad(y, x)).is_zero()) e.quadratic = true;
        if (e.quadratic || !is_zero(e.linear)) eqs.push_back(std::move(e));
      }
    }
  }
  return eqs;
}

std::optional<CycMatrix> sample_solution(const HModuleAlgebra& M1, const HModuleAlgebra& M2, AffineFamily fam,
                                         std::mt19937_64& rng) {
  const std::size_t d = M1.dim();
  const int m = M1.m();
  std::uniform_int_distribution<int> small(-3, 3);
  for (;;) {
    const std::size_t n = fam.dirs.size();
    if (n == 0) return unflatten(fam.base, d, m);
    std::vector<CycVector> lin_rows;
    CycVector lin_rhs;
    for (auto& e : multiplicativity_equations(M1, M2, fam)) {
      if (e.quadratic) continue;
      lin_rows.emplace_back(e.linear.begin() + 1, e.linear.end());
      lin_rhs.push_back(-e.linear[0]);
    }
    if (!lin_rows.empty()) {
      const CycMatrix A = from_rows(lin_rows, n, m);
      auto mu = solve(A, lin_rhs);
      if (!mu) return std::nullopt;
      auto K = nullspace(A);
      AffineFamily next;
      next.base = fam.base;
      for (std::size_t k = 0; k < n; ++k) {
        if ((*mu)[k].is_zero()) continue;
        for (std::size_t x = 0; x < d * d; ++x) next.base[x].add_scaled(fam.dirs[k][x], (*mu)[k]);
      }
      for (const auto& kv : K) {
        CycVector dir = zero_vector(d * d, m);
        for (std::size_t k = 0; k < n; ++k) {
          if (kv[k].is_zero()) continue;
          for (std::size_t x = 0; x < d * d; ++x) dir[x].add_scaled(fam.dirs[k][x], kv[k]);
        }
        next.dirs.push_back(std::move(dir));
      }
      fam = std::move(next);
      continue;
    }
    // nothing linear left: pin one parameter to a random small value
    std::uniform_int_distribution<std::size_t> which(0, n - 1);
    const std::size_t k = which(rng);
    const CycNum val = CycNum::rational(m, small(rng));
    for (std::size_t x = 0; x < d * d; ++x) fam.base[x].add_scaled(fam.dirs[k][x], val);
    fam.dirs.erase(fam.dirs.begin() + static_cast<std::ptrdiff_t>(k));
  }
}

}  // namespace

std::optional<CycMatrix> hma_isomorphic_generic(const HModuleAlgebra& M1, const HModuleAlgebra& M2,
                                                const IsoSearchOptions& opt) {
  if (M1.m() != M2.m()) throw ValidationError("hma_isomorphic_generic: the module algebras are over different Taft algebras");
  if (M1.dim() != M2.dim()) return std::nullopt;
  if (M1.A.is_unital() != M2.A.is_unital()) return std::nullopt;
  const std::size_t d = M1.dim();
  if (d > opt.max_dim) throw BudgetExceeded("hma_isomorphic_generic: dimension " + std::to_string(d) + " exceeds the search limit");
  const int m = M1.m();
  const CycMatrix I = identity(d, m);
  if (is_hma_isomorphism(M1, M2, I)) return I;
  auto fam = intertwiner_family(M1, M2);
  if (!fam) return std::nullopt;
  const CycMatrix T0 = unflatten(fam->base, d, m);
  if (is_hma_isomorphism(M1, M2, T0)) return T0;
  std::mt19937_64 rng(opt.seed);
  for (std::size_t s = 0; s < opt.samples; ++s) {
    auto T = sample_solution(M1, M2, *fam, rng);
    if (T && is_hma_isomorphism(M1, M2, *T)) return T;
  }
  return std::nullopt;
}

}  // namespace taft
