#include "taft/modular.hpp"

#include <algorithm>

#include "taft/error.hpp"
#include "taft/kernels.hpp"

namespace taft {

uint32_t PrimeField::pow(uint32_t a, uint64_t e) const {
  uint64_t r = 1, b = a % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<uint32_t>(r);
}

uint32_t PrimeField::inv(uint32_t a) const {
  if (a % p == 0) throw DivisionByZero("inverse of zero modulo p");
  return pow(a, p - 2);
}

namespace {

uint64_t powmod64(uint64_t a, uint64_t e, uint64_t n) {
  uint64_t r = 1;
  a %= n;
  while (e) {
    if (e & 1) r = r * a % n;
    a = a * a % n;
    e >>= 1;
  }
  return r;
}

std::vector<int> prime_factors(int n) {
  std::vector<int> f;
  for (int q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      f.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) f.push_back(n);
  return f;
}

uint32_t mod_of_mpz(const mpz_class& z, uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return static_cast<uint32_t>(r.get_ui());
}

}  // namespace

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
    if (n % q == 0) return n == q;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // bases 2, 7, 61 are deterministic below 2^32
  for (uint64_t a : {2ull, 7ull, 61ull}) {
    if (a % n == 0) continue;
    uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField choose_prime_field(int m, uint64_t seed) {
  if (m < 1) throw ValidationError("choose_prime_field: m must be positive");
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + static_cast<uint64_t>(m));
  const uint64_t lo = (1ull << 30) / static_cast<uint64_t>(m) + 1;
  const uint64_t hi = ((1ull << 31) - 1) / static_cast<uint64_t>(m);
  std::uniform_int_distribution<uint64_t> pick(lo, hi);
  PrimeField F;
  F.m = m;
  for (;;) {
    const uint64_t cand = 1 + static_cast<uint64_t>(m) * pick(rng);
    if (cand >= (1ull << 31) || !is_prime_u32(static_cast<uint32_t>(cand))) continue;
    F.p = static_cast<uint32_t>(cand);
    break;
  }
  const auto factors = prime_factors(m);
  std::uniform_int_distribution<uint32_t> gen(2, F.p - 1);
  for (;;) {
    const uint32_t w = F.pow(gen(rng), (F.p - 1) / static_cast<uint32_t>(m));
    bool primitive = (m == 1) ? w == 1 : true;
    for (int q : factors) {
      if (F.pow(w, static_cast<uint64_t>(m / q)) == 1) primitive = false;
    }
    if (primitive) {
      F.omega = w;
      return F;
    }
  }
}

std::optional<uint32_t> try_reduce(const CycNum& x, const PrimeField& F) {
  if (x.conductor() != F.m) throw ConductorMismatch("reduce: conductor differs from the prime field's m");
  uint32_t acc = 0, w = 1;
  for (const auto& c : x.coeffs()) {
    if (c != 0) {
      const uint32_t den = mod_of_mpz(c.get_den(), F.p);
      if (den == 0) return std::nullopt;
      acc = F.add(acc, F.mul(F.mul(mod_of_mpz(c.get_num(), F.p), F.inv(den)), w));
    }
    w = F.mul(w, F.omega);
  }
  return acc;
}

uint32_t reduce(const CycNum& x, const PrimeField& F) {
  auto r = try_reduce(x, F);
  if (!r) throw DivisionByZero("denominator vanishes modulo the chosen prime");
  return *r;
}

ModMatrix reduce(const CycMatrix& a, const PrimeField& F) {
  ModMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j).is_zero() ? 0 : reduce(a(i, j), F);
  }
  return r;
}

ModMatrix mod_identity(std::size_t n) {
  ModMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i) r(i, i) = 1;
  return r;
}

ModMatrix mod_mul(const ModMatrix& a, const ModMatrix& b, uint32_t p) {
  if (a.cols != b.rows) throw ValidationError("mod_mul: shape mismatch");
  ModMatrix r(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      const uint32_t s = a(i, k);
      if (s) kernels::axpy_mod(r.row(i), b.row(k), s, p);
    }
  }
  return r;
}

ModMatrix mod_transpose(const ModMatrix& a) {
  ModMatrix r(a.cols, a.rows);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) r(j, i) = a(i, j);
  }
  return r;
}

std::vector<uint32_t> mod_apply(const ModMatrix& a, std::span<const uint32_t> x, uint32_t p) {
  std::vector<uint32_t> y(a.rows, 0);
  for (std::size_t i = 0; i < a.rows; ++i) {
    uint64_t acc = 0;
    for (std::size_t j = 0; j < a.cols; ++j) acc = (acc + static_cast<uint64_t>(a(i, j)) * x[j]) % p;
    y[i] = static_cast<uint32_t>(acc);
  }
  return y;
}

ModularEchelon::ModularEchelon(uint32_t p, std::size_t cols) : p_(p), cols_(cols) {}

void ModularEchelon::reduce_in_place(std::vector<uint32_t>& x) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t piv = pivots_[r];
    const uint32_t coef = x[piv];
    if (coef == 0) continue;
    std::span<uint32_t> tail(x.data() + piv, cols_ - piv);
    std::span<const uint32_t> src(rows_[r].data() + piv, cols_ - piv);
    kernels::axpy_mod(tail, src, p_ - coef, p_);
  }
}

bool ModularEchelon::insert(std::vector<uint32_t> row) {
  if (row.size() != cols_) throw ValidationError("ModularEchelon: row length mismatch");
  if (full()) return false;
  reduce_in_place(row);
  std::size_t piv = 0;
  while (piv < cols_ && row[piv] == 0) ++piv;
  if (piv == cols_) return false;
  const uint32_t inv = PrimeField{p_, 0, 0}.inv(row[piv]);
  kernels::scale_mod(std::span<uint32_t>(row.data() + piv, cols_ - piv), inv, p_);
  rows_.push_back(std::move(row));
  pivots_.push_back(piv);
  return true;
}

std::vector<uint32_t> ModularEchelon::reduce(std::vector<uint32_t> x) const {
  reduce_in_place(x);
  return x;
}

bool ModularEchelon::contains(std::span<const uint32_t> x) const {
  auto r = reduce(std::vector<uint32_t>(x.begin(), x.end()));
  return std::all_of(r.begin(), r.end(), [](uint32_t v) { return v == 0; });
}

std::size_t mod_rank(const ModMatrix& a, uint32_t p) {
  ModularEchelon e(p, a.cols);
  for (std::size_t i = 0; i < a.rows && !e.full(); ++i) e.insert(std::vector<uint32_t>(a.row(i).begin(), a.row(i).end()));
  return e.rank();
}

std::vector<std::vector<uint32_t>> mod_nullspace(const ModMatrix& a, uint32_t p) {
  const PrimeField F{p, 0, 0};
  ModMatrix r = a;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols && row < r.rows; ++col) {
    std::size_t sel = row;
    while (sel < r.rows && r(sel, col) == 0) ++sel;
    if (sel == r.rows) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < r.cols; ++j) std::swap(r(sel, j), r(row, j));
    }
    kernels::scale_mod(r.row(row), F.inv(r(row, col)), p);
    for (std::size_t i = 0; i < r.rows; ++i) {
      if (i != row && r(i, col) != 0) kernels::axpy_mod(r.row(i), r.row(row), p - r(i, col), p);
    }
    pivots.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(r.cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<uint32_t>> basis;
  for (std::size_t f = 0; f < r.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<uint32_t> x(r.cols, 0);
    x[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = F.neg(r(i, f));
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<uint32_t> mod_charpoly(const ModMatrix& a, uint32_t p) {
  if (a.rows != a.cols) throw ValidationError("mod_charpoly: matrix must be square");
  const PrimeField F{p, 0, 0};
  const std::size_t n = a.rows;
  ModMatrix h = a;
  // similarity reduction to upper Hessenberg form
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t i = j + 1;
    while (i < n && h(i, j) == 0) ++i;
    if (i == n) continue;
    if (i != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(i, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, i), h(r, j + 1));
    }
    const uint32_t pinv = F.inv(h(j + 1, j));
    for (std::size_t r = j + 2; r < n; ++r) {
      const uint32_t u = F.mul(h(r, j), pinv);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h(r, c) = F.sub(h(r, c), F.mul(u, h(j + 1, c)));
      for (std::size_t c = 0; c < n; ++c) h(c, j + 1) = F.add(h(c, j + 1), F.mul(u, h(c, r)));
    }
  }
  // p_k = (x - h_kk) p_{k-1} - sum_i h_{k-i,k} (prod subdiagonal) p_{k-i-1}
  std::vector<std::vector<uint32_t>> polys(n + 1);
  polys[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<uint32_t> pk(k + 1, 0);
    const auto& prev = polys[k - 1];
    for (std::size_t d = 0; d < prev.size(); ++d) {
      pk[d + 1] = F.add(pk[d + 1], prev[d]);
      pk[d] = F.sub(pk[d], F.mul(h(k - 1, k - 1), prev[d]));
    }
    uint32_t prod = 1;
    for (std::size_t i = 1; i < k; ++i) {
      prod = F.mul(prod, h(k - i, k - i - 1));
      const uint32_t coef = F.mul(prod, h(k - i - 1, k - 1));
      if (coef == 0) continue;
      const auto& q = polys[k - i - 1];
      for (std::size_t d = 0; d < q.size(); ++d) pk[d] = F.sub(pk[d], F.mul(coef, q[d]));
    }
    polys[k] = std::move(pk);
  }
  return polys[n];
}

namespace {

using Poly = std::vector<uint32_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly a, const Poly& b, const PrimeField& F) {
  trim(a);
  const uint32_t lead_inv = F.inv(b.back());
  while (a.size() >= b.size()) {
    const uint32_t q = F.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = F.sub(a[i + shift], F.mul(q, b[i]));
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, const PrimeField& F) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  return poly_mod(std::move(r), mod, F);
}

Poly poly_powmod(Poly base, uint64_t e, const Poly& mod, const PrimeField& F) {
  Poly r = poly_mod({1}, mod, F);
  base = poly_mod(std::move(base), mod, F);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, mod, F);
    base = poly_mulmod(base, base, mod, F);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, const PrimeField& F) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const uint32_t inv = F.inv(a.back());
    for (auto& c : a) c = F.mul(c, inv);
  }
  return a;
}

Poly poly_sub(Poly a, const Poly& b, const PrimeField& F) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
  trim(a);
  return a;
}

void split_roots(const Poly& f, const PrimeField& F, std::mt19937_64& rng, std::vector<uint32_t>& out) {
  if (f.size() <= 1) return;
  if (f.size() == 2) {
    out.push_back(F.mul(F.neg(f[0]), F.inv(f[1])));
    return;
  }
  std::uniform_int_distribution<uint32_t> pick(0, F.p - 1);
  for (;;) {
    // gcd(f, (x + d)^((p-1)/2) - 1) separates roots by quadratic character
    Poly g = poly_powmod({pick(rng), 1}, (F.p - 1) / 2, f, F);
    g = poly_sub(std::move(g), {1}, F);
    Poly h = poly_gcd(f, g, F);
    if (h.size() > 1 && h.size() < f.size()) {
      split_roots(h, F, rng, out);
      // f / h
      Poly q(f.size() - h.size() + 1, 0);
      Poly rem = f;
      for (std::size_t i = q.size(); i-- > 0;) {
        q[i] = rem[i + h.size() - 1];
        for (std::size_t j = 0; j < h.size(); ++j) rem[i + j] = F.sub(rem[i + j], F.mul(q[i], h[j]));
      }
      split_roots(q, F, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<uint32_t> mod_poly_roots(std::vector<uint32_t> f, uint32_t p, std::mt19937_64& rng) {
  const PrimeField F{p, 0, 0};
  trim(f);
  if (f.size() <= 1) return {};
  const uint32_t inv = F.inv(f.back());
  for (auto& c : f) c = F.mul(c, inv);
  // product of the distinct linear factors: gcd(f, x^p - x)
  Poly xp = poly_powmod({0, 1}, p, f, F);
  Poly lin = poly_gcd(f, poly_sub(std::move(xp), {0, 1}, F), F);
  std::vector<uint32_t> roots;
  split_roots(lin, F, rng, roots);
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace taft
