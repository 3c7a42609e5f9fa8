#include <functional>
#include <map>
#include <random>

#include "taft/constructions.hpp"
#include "taft/qcombinatorics.hpp"

namespace taft {

std::vector<std::string> semisimple_violations(const SemisimpleSpec& s) {
  std::vector<std::string> out;
  if (s.m < 2) {
    out.push_back("m must be at least 2");
    return out;
  }
  if (s.k == 0) out.push_back("k must be positive");
  if (s.t == 0) out.push_back("t must be positive");
  if (!out.empty()) return out;
  const std::size_t k = s.k;
  if (s.P.rows() != k || s.P.cols() != k) out.push_back("P must be k x k");
  if (s.Q.rows() != k || s.Q.cols() != k) out.push_back("Q must be k x k");
  if (!out.empty()) return out;
  if (conductor_of(s.P) != s.m || conductor_of(s.Q) != s.m) {
    out.push_back("entries of P and Q must lie in Q(zeta_m)");
    return out;
  }
  const bool divides = s.m % static_cast<int>(s.t) == 0;
  if (!divides) out.push_back("t does not divide m");
  auto Qinv = inverse(s.Q);
  if (!Qinv) out.push_back("Q is singular");
  if (divides && matrix_power(s.Q, static_cast<unsigned>(s.m / static_cast<int>(s.t))) != identity(k, s.m)) {
    out.push_back("Q^(m/t) != E");
  }
  if (Qinv && s.Q * s.P * *Qinv != CycNum::zeta_power(s.m, -static_cast<long>(s.t)) * s.P) {
    out.push_back("Q P Q^-1 != zeta^-t P");
  }
  if (!is_scalar_matrix(matrix_power(s.P, static_cast<unsigned>(s.m)))) out.push_back("P^m is not a scalar matrix");
  return out;
}

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string r;
  for (const auto& x : v) r += (r.empty() ? "" : "; ") + x;
  return r;
}

}  // namespace

SemisimpleSpec make_semisimple_spec(int m, std::size_t k, std::size_t t, CycMatrix P, CycMatrix Q) {
  SemisimpleSpec s{m, k, t, std::move(P), std::move(Q), CycNum()};
  auto v = semisimple_violations(s);
  if (!v.empty()) throw ValidationError("invalid semisimple spec: " + join(v));
  s.alpha = matrix_power(s.P, static_cast<unsigned>(m))(0, 0);
  return s;
}

CycVector tuple_to_vector(const MatrixTuple& a) {
  CycVector x;
  for (const auto& M : a) x.insert(x.end(), M.data().begin(), M.data().end());
  return x;
}

MatrixTuple vector_to_tuple(std::span<const CycNum> x, std::size_t k, std::size_t t) {
  if (x.size() != k * k * t) throw ValidationError("vector length is not k^2 t");
  MatrixTuple a;
  for (std::size_t s = 0; s < t; ++s) {
    CycMatrix M(k, k, CycNum());
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) M(i, j) = x[s * k * k + i * k + j];
    a.push_back(std::move(M));
  }
  return a;
}

namespace {

CycMatrix checked_inverse(const CycMatrix& Q) {
  auto inv = inverse(Q);
  if (!inv) throw ValidationError("Q is singular");
  return *inv;
}

}  // namespace

MatrixTuple semisimple_c(const SemisimpleSpec& s, const MatrixTuple& a) {
  const std::size_t t = s.t;
  MatrixTuple r(t);
  r[0] = s.Q * a[t - 1] * checked_inverse(s.Q);
  for (std::size_t j = 1; j < t; ++j) r[j] = a[j - 1];
  return r;
}

MatrixTuple semisimple_v(const SemisimpleSpec& s, const MatrixTuple& a) {
  const std::size_t t = s.t;
  MatrixTuple r(t);
  r[0] = s.P * a[0] - (s.Q * a[t - 1] * checked_inverse(s.Q)) * s.P;
  for (std::size_t j = 1; j < t; ++j) {
    r[j] = CycNum::zeta_power(s.m, static_cast<long>(j)) * (s.P * a[j] - a[j - 1] * s.P);
  }
  return r;
}

namespace {

FinDimAlgebra matrix_power_algebra(int m, std::size_t k, std::size_t t) {
  FinDimAlgebra A = matrix_algebra(m, k);
  FinDimAlgebra out = A;
  for (std::size_t s = 1; s < t; ++s) out = direct_sum(out, A);
  return out;
}

CycMatrix operator_matrix(std::size_t k, std::size_t t, int m,
                          const std::function<MatrixTuple(const MatrixTuple&)>& f) {
  const std::size_t d = k * k * t;
  CycMatrix op = zeros(d, d, m);
  for (std::size_t col = 0; col < d; ++col) {
    CycVector img = tuple_to_vector(f(vector_to_tuple(unit_vector(d, col, m), k, t)));
    for (std::size_t row = 0; row < d; ++row) op(row, col) = std::move(img[row]);
  }
  return op;
}

}  // namespace

HModuleAlgebra build_semisimple_unchecked(const SemisimpleSpec& s) {
  FinDimAlgebra A = matrix_power_algebra(s.m, s.k, s.t);
  CycMatrix c = operator_matrix(s.k, s.t, s.m, [&](const MatrixTuple& a) { return semisimple_c(s, a); });
  CycMatrix v = operator_matrix(s.k, s.t, s.m, [&](const MatrixTuple& a) { return semisimple_v(s, a); });
  return make_hma(std::move(A), std::move(c), std::move(v));
}

HModuleAlgebra build_semisimple(const SemisimpleSpec& s) {
  auto v = semisimple_violations(s);
  if (!v.empty()) throw ValidationError("invalid semisimple spec: " + join(v));
  return build_semisimple_unchecked(s);
}

MatrixTuple v_power_closed_form(const SemisimpleSpec& s, int l, const MatrixTuple& a) {
  if (l < 1 || l > s.m) throw ValidationError("v_power_closed_form: l must lie in 1..m");
  if (a.size() != s.t) throw ValidationError("v_power_closed_form: tuple length differs from t");
  const int m = s.m;
  const long t = static_cast<long>(s.t);
  const CycMatrix Qinv = checked_inverse(s.Q);
  // a_i for i <= 0 is Q a_{i+t} Q^-1
  std::map<long, CycMatrix> ext;
  std::function<const CycMatrix&(long)> at = [&](long i) -> const CycMatrix& {
    if (i >= 1) return a[static_cast<std::size_t>(i - 1)];
    auto it = ext.find(i);
    if (it != ext.end()) return it->second;
    CycMatrix v = s.Q * at(i + t) * Qinv;
    return ext.emplace(i, std::move(v)).first->second;
  };
  const QBinomTable binom(CycNum::zeta_power(m, -1), static_cast<unsigned>(std::max(2 * m, l)));
  std::vector<CycMatrix> Ppow{identity(s.k, m)};
  for (int j = 1; j <= l; ++j) Ppow.push_back(Ppow.back() * s.P);
  MatrixTuple b;
  for (long kk = 1; kk <= t; ++kk) {
    CycMatrix sum = zeros(s.k, s.k, m);
    for (int j = 0; j <= l; ++j) {
      const CycNum& q = binom(static_cast<unsigned>(l), static_cast<unsigned>(j));
      if (q.is_zero()) continue;
      CycNum coef = CycNum::zeta_power(m, -static_cast<long>(j) * (j - 1) / 2) * q;
      if (j % 2) coef = -coef;
      sum = sum + coef * (Ppow[static_cast<std::size_t>(l - j)] * at(kk - j) * Ppow[static_cast<std::size_t>(j)]);
    }
    b.push_back(CycNum::zeta_power(m, static_cast<long>(l) * (kk - 1)) * sum);
  }
  return b;
}

// ------------------------------------------------------------ isomorphisms

std::optional<CycMatrix> invertible_in_span(const std::vector<CycMatrix>& basis, uint64_t seed,
                                            std::size_t grid_budget) {
  if (basis.empty()) return std::nullopt;
  const std::size_t n = basis.size();
  const std::size_t k = basis[0].rows();
  const int m = conductor_of(basis[0]);
  auto combine = [&](const std::vector<long>& x) {
    CycMatrix T = zeros(k, k, m);
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] != 0) T = T + CycNum::rational(m, x[i]) * basis[i];
    }
    return T;
  };
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> pick(-50, 50);
  for (std::size_t s = 0; s < (n + 1) * (n + 1); ++s) {
    std::vector<long> x(n);
    for (auto& e : x) e = pick(rng);
    CycMatrix T = combine(x);
    if (!determinant(T).is_zero()) return T;
  }
  // det(sum x_i B_i) has degree <= k in each x_i; vanishing on {0..k}^n
  // means it is the zero polynomial.
  double points = 1;
  for (std::size_t i = 0; i < n; ++i) points *= static_cast<double>(k + 1);
  if (points > static_cast<double>(grid_budget)) {
    throw BudgetExceeded("invertible_in_span: grid of " + std::to_string(static_cast<long long>(points)) +
                         " points exceeds the budget");
  }
  std::vector<long> x(n, 0);
  for (;;) {
    CycMatrix T = combine(x);
    if (!determinant(T).is_zero()) return T;
    std::size_t i = 0;
    while (i < n && x[i] == static_cast<long>(k)) x[i++] = 0;
    if (i == n) return std::nullopt;
    ++x[i];
  }
}

namespace {

/// Basis of {T : T X1 = s1 X2 T and T Y1 = s2 Y2 T}.
std::vector<CycMatrix> intertwiners(const CycMatrix& X1, const CycMatrix& X2, const CycNum& sx, const CycMatrix& Y1,
                                    const CycMatrix& Y2, const CycNum& sy) {
  const std::size_t k = X1.rows();
  const int m = conductor_of(X1);
  const std::size_t n = k * k;
  std::vector<CycVector> rows;
  auto add = [&](const CycMatrix& A1, const CycMatrix& A2, const CycNum& sc) {
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) {
        CycVector row = zero_vector(n, m);
        for (std::size_t q = 0; q < k; ++q) {
          row[r * k + q] += A1(q, c);
          row[q * k + c] -= sc * A2(r, q);
        }
        rows.push_back(std::move(row));
      }
    }
  };
  add(X1, X2, sx);
  add(Y1, Y2, sy);
  std::vector<CycMatrix> out;
  for (const auto& z : nullspace(from_rows(rows, n, m))) {
    CycMatrix T(k, k, CycNum());
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) T(r, c) = z[r * k + c];
    out.push_back(std::move(T));
  }
  return out;
}

}  // namespace

bool verify_semisimple_iso(const SemisimpleSpec& s1, const SemisimpleSpec& s2, const SemisimpleIso& w) {
  auto Tinv = inverse(w.T);
  if (!Tinv) return false;
  if (w.r >= s1.t) return false;
  const int m = s1.m;
  if (s2.P != CycNum::zeta_power(m, static_cast<long>(w.r)) * (w.T * s1.P * *Tinv)) return false;
  if (s2.Q != w.beta * (w.T * s1.Q * *Tinv)) return false;
  return w.beta.pow(m / static_cast<int>(s1.t)).is_one();
}

std::optional<SemisimpleIso> iso_semisimple(const SemisimpleSpec& s1, const SemisimpleSpec& s2,
                                            const IsoDecisionOptions& opt) {
  if (s1.m != s2.m) throw ValidationError("iso_semisimple: specs have different m");
  for (const auto* s : {&s1, &s2}) {
    auto v = semisimple_violations(*s);
    if (!v.empty()) throw ValidationError("iso_semisimple: invalid spec: " + join(v));
  }
  if (s1.k != s2.k || s1.t != s2.t) return std::nullopt;
  const int m = s1.m;
  const int n = m / static_cast<int>(s1.t);
  for (std::size_t r = 0; r < s1.t; ++r) {
    for (int j = 0; j < n; ++j) {
      const CycNum beta = CycNum::zeta_power(m, static_cast<long>(s1.t) * j);
      auto basis = intertwiners(s1.P, s2.P, CycNum::zeta_power(m, -static_cast<long>(r)), s1.Q, s2.Q, beta.inverse());
      auto T = invertible_in_span(basis, opt.seed + r * 131 + static_cast<uint64_t>(j), opt.grid_budget);
      if (!T) continue;
      SemisimpleIso w{*T, r, beta};
      if (!verify_semisimple_iso(s1, s2, w)) throw std::logic_error("iso_semisimple: witness failed verification");
      return w;
    }
  }
  return std::nullopt;
}

CycMatrix semisimple_iso_map(const SemisimpleSpec& s1, const CycMatrix& T, std::size_t r) {
  const CycMatrix Tinv = [&] {
    auto i = inverse(T);
    if (!i) throw ValidationError("semisimple_iso_map: T is singular");
    return *i;
  }();
  const CycMatrix Qinv = checked_inverse(s1.Q);
  const std::size_t t = s1.t;
  // phi(a)_s = T a_{s+r} T^-1, where a_{i+t} = Q^-1 a_i Q
  return operator_matrix(s1.k, t, s1.m, [&](const MatrixTuple& a) {
    MatrixTuple out(t);
    for (std::size_t s = 0; s < t; ++s) {
      const std::size_t idx = s + r;
      const CycMatrix& src = a[idx % t];
      out[s] = idx < t ? T * src * Tinv : T * Qinv * src * s1.Q * Tinv;
    }
    return out;
  });
}

// ------------------------------------------------------------ automorphisms

CycMatrix normalize_projective(const CycMatrix& T) {
  for (const auto& x : T.data()) {
    if (!x.is_zero()) return x.inverse() * T;
  }
  throw ValidationError("normalize_projective: zero matrix");
}

std::vector<std::string> aut_pair_violations(const SemisimpleSpec& s, const AutPair& a) {
  std::vector<std::string> out;
  if (a.r >= s.t) out.push_back("r must be smaller than t");
  auto Tinv = inverse(a.T);
  if (!Tinv) {
    out.push_back("T is singular");
    return out;
  }
  const CycMatrix Qinv = checked_inverse(s.Q);
  if (!is_scalar_matrix(s.Q * a.T * Qinv * *Tinv)) out.push_back("Q T Q^-1 T^-1 is not scalar");
  if (s.P != CycNum::zeta_power(s.m, static_cast<long>(a.r)) * (a.T * s.P * *Tinv)) out.push_back("P != zeta^r T P T^-1");
  return out;
}

AutPair make_aut_pair(const SemisimpleSpec& s, const CycMatrix& T, std::size_t r) {
  AutPair a{normalize_projective(T), r};
  auto v = aut_pair_violations(s, a);
  if (!v.empty()) throw ValidationError("invalid automorphism pair: " + join(v));
  return a;
}

AutPair aut_identity(const SemisimpleSpec& s) { return AutPair{identity(s.k, s.m), 0}; }

AutPair aut_compose(const AutPair& a1, const AutPair& a2, const SemisimpleSpec& s) {
  for (const auto* a : {&a1, &a2}) {
    auto v = aut_pair_violations(s, *a);
    if (!v.empty()) throw ValidationError("aut_compose: invalid input pair: " + join(v));
  }
  const std::size_t sum = a1.r + a2.r;
  if (sum < s.t) return AutPair{normalize_projective(a1.T * a2.T), sum};
  return AutPair{normalize_projective(a1.T * a2.T * checked_inverse(s.Q)), sum - s.t};
}

AutPair aut_inverse(const AutPair& a, const SemisimpleSpec& s) {
  auto Tinv = inverse(a.T);
  if (!Tinv) throw ValidationError("aut_inverse: T is singular");
  if (a.r == 0) return AutPair{normalize_projective(*Tinv), 0};
  return AutPair{normalize_projective(s.Q * *Tinv), s.t - a.r};
}

std::vector<AutPair> sample_aut_pairs(const SemisimpleSpec& s, std::size_t count, uint64_t seed) {
  std::vector<AutPair> out;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> small(-4, 4);
  const int n = s.m / static_cast<int>(s.t);
  for (std::size_t attempt = 0; attempt < 60 * count && out.size() < count; ++attempt) {
    const std::size_t r = std::uniform_int_distribution<std::size_t>(0, s.t - 1)(rng);
    const int j = std::uniform_int_distribution<int>(0, n - 1)(rng);
    const CycNum beta = CycNum::zeta_power(s.m, static_cast<long>(s.t) * j);
    auto basis = intertwiners(s.P, s.P, CycNum::zeta_power(s.m, -static_cast<long>(r)), s.Q, s.Q, beta.inverse());
    if (basis.empty()) continue;
    CycMatrix T = zeros(s.k, s.k, s.m);
    for (const auto& B : basis) T = T + CycNum::rational(s.m, small(rng)) * B;
    if (determinant(T).is_zero()) continue;
    out.push_back(make_aut_pair(s, T, r));
  }
  return out;
}

// ---------------------------------------------------------- spec generators

namespace {

CycNum random_coeff(int m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> mag(1, 3), sign(0, 1), zp(0, m - 1);
  const int v = sign(rng) ? mag(rng) : -mag(rng);
  return CycNum::rational(m, v) * CycNum::zeta_power(m, zp(rng));
}

/// Q = diag(zeta^{t e_i}); P filled at positions with e_a = e_b - 1 (mod m/t).
SemisimpleSpec patterned_spec(int m, std::size_t k, std::size_t t, const std::vector<int>& e, bool subdiagonal_only,
                              std::mt19937_64& rng) {
  const int n = m / static_cast<int>(t);
  CycMatrix Q = zeros(k, k, m), P = zeros(k, k, m);
  for (std::size_t i = 0; i < k; ++i) Q(i, i) = CycNum::zeta_power(m, static_cast<long>(t) * e[i]);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (((e[a] - e[b] + 1) % n + n) % n != 0) continue;
      if (subdiagonal_only && a != b + 1) continue;
      P(a, b) = random_coeff(m, rng);
    }
  }
  return SemisimpleSpec{m, k, t, std::move(P), std::move(Q), CycNum()};
}

}  // namespace

std::vector<SemisimpleSpec> generate_semisimple_specs(int m, std::size_t k, std::size_t t, uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int n = m / static_cast<int>(t);
  std::vector<SemisimpleSpec> cands;
  cands.push_back(SemisimpleSpec{m, k, t, zeros(k, k, m), identity(k, m), CycNum()});
  std::vector<int> chain(k);
  for (std::size_t i = 0; i < k; ++i) chain[i] = ((-static_cast<int>(i)) % n + n) % n;
  cands.push_back(patterned_spec(m, k, t, chain, true, rng));
  cands.push_back(patterned_spec(m, k, t, chain, false, rng));
  if (n == 1) {
    CycMatrix P = zeros(k, k, m);
    const CycNum alpha = random_coeff(m, rng);
    for (std::size_t i = 0; i < k; ++i) P(i, i) = alpha * CycNum::zeta_power(m, static_cast<long>(i));
    cands.push_back(SemisimpleSpec{m, k, t, std::move(P), identity(k, m), CycNum()});
  }
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int r = 0; r < 3; ++r) {
    std::vector<int> e(k);
    for (auto& x : e) x = pick(rng);
    cands.push_back(patterned_spec(m, k, t, e, false, rng));
  }
  std::vector<SemisimpleSpec> out;
  for (auto& s : cands) {
    if (!semisimple_violations(s).empty()) continue;
    s.alpha = matrix_power(s.P, static_cast<unsigned>(m))(0, 0);
    out.push_back(std::move(s));
  }
  return out;
}

std::optional<SemisimpleSpec> mutate_to_nonscalar(const SemisimpleSpec& s, uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int m = s.m;
  const std::size_t k = s.k;
  const CycNum twist = CycNum::zeta_power(m, -static_cast<long>(s.t));
  auto try_with_q = [&](const CycMatrix& Q) -> std::optional<SemisimpleSpec> {
    // solutions X of Q X = zeta^-t X Q
    std::vector<CycVector> rows;
    const std::size_t nn = k * k;
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) {
        CycVector row = zero_vector(nn, m);
        for (std::size_t q = 0; q < k; ++q) {
          row[q * k + c] += Q(r, q);
          row[r * k + q] -= twist * Q(q, c);
        }
        rows.push_back(std::move(row));
      }
    }
    auto sol = nullspace(from_rows(rows, nn, m));
    if (sol.empty()) return std::nullopt;
    for (int attempt = 0; attempt < 8; ++attempt) {
      CycMatrix P = zeros(k, k, m);
      for (const auto& z : sol) {
        const CycNum c = random_coeff(m, rng);
        for (std::size_t i = 0; i < nn; ++i) P(i / k, i % k) += c * z[i];
      }
      SemisimpleSpec mut{m, k, s.t, P, Q, CycNum()};
      auto v = semisimple_violations(mut);
      if (v.size() == 1 && v[0] == "P^m is not a scalar matrix") return mut;
    }
    return std::nullopt;
  };
  if (auto r = try_with_q(s.Q)) return r;
  const int n = m / static_cast<int>(s.t);
  std::size_t patterns = 1;
  for (std::size_t i = 0; i < k; ++i) patterns *= static_cast<std::size_t>(n);
  for (std::size_t code = 0; code < patterns; ++code) {
    CycMatrix Q = zeros(k, k, m);
    std::size_t c = code;
    for (std::size_t i = 0; i < k; ++i) {
      Q(i, i) = CycNum::zeta_power(m, static_cast<long>(s.t) * static_cast<long>(c % static_cast<std::size_t>(n)));
      c /= static_cast<std::size_t>(n);
    }
    if (auto r = try_with_q(Q)) return r;
  }
  return std::nullopt;
}

}  // namespace taft
