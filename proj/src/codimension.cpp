#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <set>

#include "taft/error.hpp"
#include "taft/identities.hpp"
#include "taft/modular.hpp"

namespace taft {

const char* to_string(CodimBackend b) {
  switch (b) {
    case CodimBackend::Graded: return "graded";
    case CodimBackend::LiteralModular: return "literal-modp";
    case CodimBackend::DenseExact: return "dense-exact";
  }
  return "?";
}

namespace {

std::optional<std::uint64_t> checked_pow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i)
    if (__builtin_mul_overflow(r, b, &r)) return std::nullopt;
  return r;
}

std::uint64_t require_rows(std::size_t n, int m, std::uint64_t budget) {
  if (n == 0) throw ValidationError("codimension: degree must be at least 1");
  auto rows = monomial_count(n, m);
  if (!rows || *rows > budget) {
    throw BudgetExceeded("codimension: n!*(m^2)^n = " + (rows ? std::to_string(*rows) : std::string("> 2^64")) +
                         " rows exceeds the row budget of " + std::to_string(budget));
  }
  return *rows;
}

std::uint64_t column_count(std::size_t d, std::size_t n) {
  auto c = checked_pow(d, n + 1);
  if (!c) throw BudgetExceeded("codimension: dim(A)^(n+1) overflows");
  return *c;
}

bool advance(std::vector<int>& digits, int base) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < base) return true;
    digits[i] = 0;
  }
  return false;
}

CycVector product_in(const std::vector<CycVector>& mult, std::size_t d, const CycVector& x, const CycVector& y) {
  CycVector out = zero_vector(d, x.front().conductor());
  for (std::size_t a = 0; a < d; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < d; ++b) {
      if (y[b].is_zero()) continue;
      const CycNum s = x[a] * y[b];
      const CycVector& e = mult[a * d + b];
      for (std::size_t r = 0; r < d; ++r)
        if (!e[r].is_zero()) out[r].add_scaled(e[r], s);
    }
  }
  return out;
}

// Exact rows of the evaluation matrix in the literal order, with
// emit(row) called per monomial (sigma lexicographic, then the Hopf indices
// as mixed-radix digits, first position most significant). Columns are the
// argument tuple (first variable most significant) then the output coordinate.
template <class Emit>
void literal_rows_exact(const HModuleAlgebra& M, std::size_t n, Emit&& emit) {
  const int m = M.m();
  const std::size_t d = M.dim();
  const std::size_t m2 = static_cast<std::size_t>(m * m);
  std::vector<std::vector<CycVector>> uvec(m2);
  for (std::size_t h = 0; h < m2; ++h) {
    const CycMatrix U = action_matrix(M, HopfElement::basis(M.H, static_cast<int>(h) / m, static_cast<int>(h) % m));
    for (std::size_t j = 0; j < d; ++j) {
      CycVector col(d);
      for (std::size_t r = 0; r < d; ++r) col[r] = U(r, j);
      uvec[h].push_back(std::move(col));
    }
  }
  const std::size_t cols = static_cast<std::size_t>(column_count(d, n));
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<std::size_t> choice(n);
  do {
    std::vector<int> h(n, 0);
    do {
      CycVector row = zero_vector(cols, m);
      auto dfs = [&](auto&& self, std::size_t pos, const CycVector& acc) -> void {
        const std::size_t var = static_cast<std::size_t>(sigma[pos]);
        for (std::size_t j = 0; j < d; ++j) {
          const CycVector& w = uvec[static_cast<std::size_t>(h[pos])][j];
          if (is_zero(w)) continue;
          CycVector next = pos == 0 ? w : M.A.multiply(acc, w);
          if (is_zero(next)) continue;
          choice[var] = j;
          if (pos + 1 == n) {
            std::size_t idx = 0;
            for (std::size_t v = 0; v < n; ++v) idx = idx * d + choice[v];
            for (std::size_t r = 0; r < d; ++r) row[idx * d + r] = next[r];
          } else {
            self(self, pos + 1, next);
          }
        }
      };
      dfs(dfs, 0, CycVector{});
      if (!emit(row)) return;
    } while (advance(h, static_cast<int>(m2)));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
}

CodimResult codim_literal_modular(const HModuleAlgebra& M, std::size_t n, const CodimOptions& opt) {
  const int m = M.m();
  const std::size_t d = M.dim();
  const std::uint64_t rows = require_rows(n, m, opt.row_budget);
  const std::uint64_t cols = column_count(d, n);
  std::uint64_t cells = 0;
  if (__builtin_mul_overflow(rows, cols, &cells) || cells > opt.literal_cell_budget)
    throw BudgetExceeded("codimension: literal matrix " + std::to_string(rows) + " x " + std::to_string(cols) +
                         " exceeds the cell budget of " + std::to_string(opt.literal_cell_budget));

  const PrimeField F = choose_prime_field(m, opt.seed);
  const std::size_t m2 = static_cast<std::size_t>(m * m);
  std::vector<uint32_t> mult(d * d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t r = 0; r < d; ++r) mult[(a * d + b) * d + r] = reduce(M.A.product(a, b)[r], F);
  std::vector<ModMatrix> U;
  for (std::size_t h = 0; h < m2; ++h)
    U.push_back(reduce(action_matrix(M, HopfElement::basis(M.H, static_cast<int>(h) / m, static_cast<int>(h) % m)), F));

  auto mul = [&](const std::vector<uint32_t>& x, const std::vector<uint32_t>& y) {
    std::vector<uint32_t> out(d, 0);
    for (std::size_t a = 0; a < d; ++a) {
      if (!x[a]) continue;
      for (std::size_t b = 0; b < d; ++b) {
        if (!y[b]) continue;
        const uint32_t s = F.mul(x[a], y[b]);
        for (std::size_t r = 0; r < d; ++r) out[r] = F.add(out[r], F.mul(s, mult[(a * d + b) * d + r]));
      }
    }
    return out;
  };

  ModularEchelon E(F.p, static_cast<std::size_t>(cols));
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<std::size_t> choice(n);
  do {
    std::vector<int> h(n, 0);
    do {
      std::vector<uint32_t> row(static_cast<std::size_t>(cols), 0);
      bool nonzero = false;
      auto dfs = [&](auto&& self, std::size_t pos, const std::vector<uint32_t>& acc) -> void {
        const std::size_t var = static_cast<std::size_t>(sigma[pos]);
        const ModMatrix& u = U[static_cast<std::size_t>(h[pos])];
        for (std::size_t j = 0; j < d; ++j) {
          std::vector<uint32_t> w(d);
          for (std::size_t r = 0; r < d; ++r) w[r] = u(r, j);
          std::vector<uint32_t> next = pos == 0 ? w : mul(acc, w);
          if (std::all_of(next.begin(), next.end(), [](uint32_t x) { return x == 0; })) continue;
          choice[var] = j;
          if (pos + 1 == n) {
            std::size_t idx = 0;
            for (std::size_t v = 0; v < n; ++v) idx = idx * d + choice[v];
            std::copy(next.begin(), next.end(), row.begin() + static_cast<std::ptrdiff_t>(idx * d));
            nonzero = true;
          } else {
            self(self, pos + 1, next);
          }
        }
      };
      dfs(dfs, 0, {});
      if (nonzero) E.insert(std::move(row));
      if (E.full()) break;
    } while (advance(h, static_cast<int>(m2)));
  } while (!E.full() && std::next_permutation(sigma.begin(), sigma.end()));

  CodimResult res{n, E.rank(), rows, cols, "literal matrix, rank mod " + std::to_string(F.p), true};
  res.exact = res.value == std::min<std::uint64_t>(rows, cols);
  return res;
}

CodimResult codim_dense_exact(const HModuleAlgebra& M, std::size_t n, const CodimOptions& opt) {
  const std::uint64_t rows = require_rows(n, M.m(), opt.row_budget);
  const std::uint64_t cols = column_count(M.dim(), n);
  std::uint64_t cells = 0;
  if (__builtin_mul_overflow(rows, cols, &cells) || cells > opt.dense_cell_budget)
    throw BudgetExceeded("codimension: dense exact matrix " + std::to_string(rows) + " x " + std::to_string(cols) +
                         " exceeds the cell budget of " + std::to_string(opt.dense_cell_budget));
  std::vector<CycVector> nz;
  literal_rows_exact(M, n, [&](CycVector& row) {
    if (!is_zero(row)) nz.push_back(std::move(row));
    return true;
  });
  RankOutcome r = certified_rank(nz, static_cast<std::size_t>(cols), M.m(), opt.seed);
  return CodimResult{n, r.rank, rows, cols, "literal matrix, " + r.method, true};
}

CodimResult codim_graded(const HModuleAlgebra& M, std::size_t n, const CodimOptions& opt) {
  const int m = M.m();
  const std::size_t d = M.dim();
  const std::uint64_t rows = require_rows(n, m, opt.row_budget);
  const std::uint64_t cols = column_count(d, n);

  // eigenbasis of c; H is spanned by v^k pi_g, and v^k pi_g acts on a
  // homogeneous a of degree g' as v^k when g = g', as 0 otherwise
  const GradingDecomposition G = grading_from_c(M.A, M.c_op, m);
  const CycMatrix& E = G.eigenbasis;
  const CycMatrix Einv = *inverse(E);
  std::vector<CycVector> basis(d);
  for (std::size_t j = 0; j < d; ++j) {
    basis[j].resize(d);
    for (std::size_t r = 0; r < d; ++r) basis[j][r] = E(r, j);
  }
  std::vector<CycVector> mult(d * d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) mult[a * d + b] = mat_apply(Einv, M.A.multiply(basis[a], basis[b]));
  std::vector<std::vector<CycVector>> vk(static_cast<std::size_t>(m));
  CycMatrix V = identity(d, m);
  const CycMatrix v_eig = Einv * M.v_op * E;
  for (int k = 0; k < m; ++k) {
    for (std::size_t j = 0; j < d; ++j) {
      CycVector col(d);
      for (std::size_t r = 0; r < d; ++r) col[r] = V(r, j);
      vk[static_cast<std::size_t>(k)].push_back(std::move(col));
    }
    V = V * v_eig;
  }
  std::vector<std::vector<std::size_t>> by_deg(static_cast<std::size_t>(m));
  for (std::size_t j = 0; j < d; ++j) by_deg[static_cast<std::size_t>(G.eigen_degrees[j])].push_back(j);

  std::size_t total = 0;
  std::set<std::string> methods;
  std::vector<int> D(n, 0);
  do {
    bool empty = false;
    std::size_t jcount = 1;
    for (int g : D) {
      empty |= by_deg[static_cast<std::size_t>(g)].empty();
      jcount *= by_deg[static_cast<std::size_t>(g)].size();
    }
    if (empty) continue;
    const int dsum = std::accumulate(D.begin(), D.end(), 0);
    std::vector<std::vector<CycVector>> blocks(static_cast<std::size_t>(m));

    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::vector<std::size_t> choice(n);
    do {
      std::vector<int> k(n, 0);
      do {
        const int s = std::accumulate(k.begin(), k.end(), 0);
        const std::size_t o = static_cast<std::size_t>(((dsum - s) % m + m) % m);
        const auto& outs = by_deg[o];
        if (outs.empty()) continue;
        CycVector row = zero_vector(jcount * outs.size(), m);
        bool nonzero = false;
        auto dfs = [&](auto&& self, std::size_t pos, const CycVector& acc) -> void {
          const std::size_t var = static_cast<std::size_t>(sigma[pos]);
          const auto& cand = by_deg[static_cast<std::size_t>(D[var])];
          for (std::size_t t = 0; t < cand.size(); ++t) {
            const CycVector& w = vk[static_cast<std::size_t>(k[pos])][cand[t]];
            if (is_zero(w)) continue;
            CycVector next = pos == 0 ? w : product_in(mult, d, acc, w);
            if (is_zero(next)) continue;
            choice[var] = t;
            if (pos + 1 == n) {
              std::size_t idx = 0;
              for (std::size_t v = 0; v < n; ++v) idx = idx * by_deg[static_cast<std::size_t>(D[v])].size() + choice[v];
              for (std::size_t r = 0; r < outs.size(); ++r) row[idx * outs.size() + r] = next[outs[r]];
              nonzero = true;
            } else {
              self(self, pos + 1, next);
            }
          }
        };
        dfs(dfs, 0, CycVector{});
        if (nonzero && !is_zero(row)) blocks[o].push_back(std::move(row));
      } while (advance(k, m));
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    for (std::size_t o = 0; o < blocks.size(); ++o) {
      if (blocks[o].empty()) continue;
      RankOutcome r = certified_rank(blocks[o], jcount * by_deg[o].size(), m, opt.seed);
      total += r.rank;
      methods.insert(r.method);
    }
  } while (advance(D, m));

  std::string method = "graded blocks";
  for (const auto& s : methods) method += "; " + s;
  return CodimResult{n, total, rows, cols, method, true};
}

}  // namespace

RankOutcome certified_rank(const std::vector<CycVector>& rows, std::size_t cols, int m, std::uint64_t seed) {
  std::vector<std::size_t> nz;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ValidationError("certified_rank: row length mismatch");
    if (!is_zero(rows[i])) nz.push_back(i);
  }
  if (nz.empty() || cols == 0) return {0, "zero matrix"};

  for (std::uint64_t attempt = 0; attempt < 4; ++attempt) {
    const PrimeField F = choose_prime_field(m, seed + attempt);
    ModularEchelon ech(F.p, cols);
    std::vector<std::size_t> prow;
    bool reduced = true;
    for (std::size_t i : nz) {
      std::vector<uint32_t> red(cols);
      for (std::size_t c = 0; c < cols && reduced; ++c) {
        auto x = try_reduce(rows[i][c], F);
        if (!x) reduced = false;
        else red[c] = *x;
      }
      if (!reduced) break;
      if (ech.insert(std::move(red))) prow.push_back(i);
      if (ech.full()) break;
    }
    if (!reduced) continue;
    const std::size_t r = ech.rank();
    if (r == std::min(nz.size(), cols)) return {r, "maximal rank mod p"};

    // The pivot rows restricted to the pivot columns form a matrix that is
    // invertible mod p, hence invertible. Remaining rows must be in their span.
    const auto& piv = ech.pivots();
    CycMatrix sub = zeros(r, r, m);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) sub(a, b) = rows[prow[a]][piv[b]];
    const auto sinv = inverse(sub);
    if (!sinv) break;
    std::vector<bool> is_piv_row(rows.size(), false), is_piv_col(cols, false);
    for (auto i : prow) is_piv_row[i] = true;
    for (auto c : piv) is_piv_col[c] = true;
    bool spans = true;
    for (std::size_t i : nz) {
      if (is_piv_row[i]) continue;
      const CycVector& w = rows[i];
      CycVector x = zero_vector(r, m);
      for (std::size_t a = 0; a < r; ++a) {
        const CycNum& wa = w[piv[a]];
        if (wa.is_zero()) continue;
        for (std::size_t b = 0; b < r; ++b) x[b].add_scaled((*sinv)(a, b), wa);
      }
      for (std::size_t c = 0; c < cols && spans; ++c) {
        if (is_piv_col[c]) continue;
        CycNum acc = w[c];
        for (std::size_t b = 0; b < r; ++b)
          if (!x[b].is_zero()) acc.add_scaled(rows[prow[b]][c], -x[b]);
        spans = acc.is_zero();
      }
      if (!spans) break;
    }
    if (spans) return {r, "rank mod p with exact span certificate"};
    break;
  }
  std::vector<CycVector> kept;
  for (std::size_t i : nz) kept.push_back(rows[i]);
  return {rank_fraction_free(from_rows(kept, cols, m)), "fraction-free elimination"};
}

CodimResult codimension(const HModuleAlgebra& M, std::size_t n, const CodimOptions& opt) {
  switch (opt.backend) {
    case CodimBackend::Graded: return codim_graded(M, n, opt);
    case CodimBackend::LiteralModular: return codim_literal_modular(M, n, opt);
    case CodimBackend::DenseExact: return codim_dense_exact(M, n, opt);
  }
  throw ValidationError("codimension: unknown backend");
}

std::vector<GrowthRow> codim_growth_report(const HModuleAlgebra& M, std::size_t n_max, const CodimOptions& opt) {
  std::vector<GrowthRow> out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto t0 = std::chrono::steady_clock::now();
    GrowthRow row;
    row.result = codimension(M, n, opt);
    row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    row.root = std::pow(static_cast<double>(row.result.value), 1.0 / static_cast<double>(n));
    row.bound_ok = row.result.value <= row.result.cols;  // cols = dim(A)^(n+1)
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace taft
