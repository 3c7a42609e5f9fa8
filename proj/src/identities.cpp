#include "taft/identities.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "taft/error.hpp"

namespace taft {

namespace {

std::string hopf_label(int i, int k) {
  std::string s;
  if (i == 1) s += "c";
  if (i > 1) s += "c^" + std::to_string(i);
  if (k == 1) s += "v";
  if (k > 1) s += "v^" + std::to_string(k);
  return s.empty() ? "1" : s;
}

}  // namespace

std::string HMonomial::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (i) os << ' ';
    os << 'x' << sigma[i] + 1 << "^{" << hopf_label(h[i].first, h[i].second) << '}';
  }
  return os.str();
}

void validate_monomial(const HMonomial& mono, int m) {
  const std::size_t n = mono.sigma.size();
  if (n == 0) throw ValidationError("monomial of degree 0");
  if (mono.h.size() != n) throw ValidationError("monomial: " + std::to_string(mono.h.size()) +
                                                " Hopf coefficients for degree " + std::to_string(n));
  std::vector<bool> seen(n, false);
  for (int s : mono.sigma) {
    if (s < 0 || static_cast<std::size_t>(s) >= n || seen[static_cast<std::size_t>(s)])
      throw ValidationError("monomial: variable indices are not a permutation");
    seen[static_cast<std::size_t>(s)] = true;
  }
  for (auto [i, k] : mono.h)
    if (i < 0 || i >= m || k < 0 || k >= m) throw ValidationError("monomial: Hopf basis index out of range");
}

MultilinearHPoly MultilinearHPoly::monomial(int m, HMonomial mono, const CycNum& coeff) {
  MultilinearHPoly p(m, mono.degree());
  p.add(mono, coeff);
  return p;
}

void MultilinearHPoly::add(const HMonomial& mono, const CycNum& coeff) {
  if (mono.degree() != n_) throw ValidationError("polynomial: monomial degree differs from " + std::to_string(n_));
  validate_monomial(mono, m_);
  if (coeff.conductor() != m_) throw ConductorMismatch("polynomial: coefficient from another field");
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    if (!coeff.is_zero()) terms_.emplace(mono, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

MultilinearHPoly operator+(const MultilinearHPoly& a, const MultilinearHPoly& b) {
  if (a.m_ != b.m_ || a.n_ != b.n_) throw ValidationError("polynomial sum: degree or field mismatch");
  MultilinearHPoly r = a;
  for (const auto& [mono, s] : b.terms_) r.add(mono, s);
  return r;
}

MultilinearHPoly operator*(const CycNum& s, const MultilinearHPoly& a) {
  MultilinearHPoly r(a.m_, a.n_);
  for (const auto& [mono, t] : a.terms_) r.add(mono, s * t);
  return r;
}

std::string MultilinearHPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, s] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << s.to_string() << ") " << mono.to_string();
  }
  return os.str();
}

CycVector evaluate(const MultilinearHPoly& p, const HModuleAlgebra& M, const std::vector<CycVector>& args) {
  if (p.m() != M.m()) throw ConductorMismatch("evaluate: polynomial and module algebra over different fields");
  if (args.size() != p.degree())
    throw ValidationError("evaluate: " + std::to_string(args.size()) + " arguments for degree " +
                          std::to_string(p.degree()));
  for (const auto& a : args)
    if (a.size() != M.dim()) throw ValidationError("evaluate: argument length differs from algebra dimension");

  std::map<std::pair<int, int>, CycMatrix> ops;
  auto op = [&](std::pair<int, int> h) -> const CycMatrix& {
    auto it = ops.find(h);
    if (it == ops.end()) it = ops.emplace(h, action_matrix(M, HopfElement::basis(M.H, h.first, h.second))).first;
    return it->second;
  };
  CycVector out = M.A.zero();
  for (const auto& [mono, s] : p.terms()) {
    CycVector acc = mat_apply(op(mono.h[0]), args[static_cast<std::size_t>(mono.sigma[0])]);
    for (std::size_t i = 1; i < mono.degree() && !is_zero(acc); ++i)
      acc = M.A.multiply(acc, mat_apply(op(mono.h[i]), args[static_cast<std::size_t>(mono.sigma[i])]));
    for (std::size_t r = 0; r < out.size(); ++r) out[r].add_scaled(acc[r], s);
  }
  return out;
}

MultilinearHPoly alternate(const MultilinearHPoly& p, const std::vector<int>& vars) {
  std::vector<int> sorted = vars;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ValidationError("alternate: repeated variable");
  for (int x : sorted)
    if (x < 0 || static_cast<std::size_t>(x) >= p.degree()) throw ValidationError("alternate: variable out of range");

  MultilinearHPoly out(p.m(), p.degree());
  std::vector<int> image = sorted;
  do {
    // sign by counting inversions
    int inv = 0;
    for (std::size_t a = 0; a < image.size(); ++a)
      for (std::size_t b = a + 1; b < image.size(); ++b) inv += image[a] > image[b];
    const CycNum sign = CycNum::rational(p.m(), inv % 2 ? -1 : 1);
    std::vector<int> tau(p.degree());
    std::iota(tau.begin(), tau.end(), 0);
    for (std::size_t a = 0; a < sorted.size(); ++a) tau[static_cast<std::size_t>(sorted[a])] = image[a];
    for (const auto& [mono, s] : p.terms()) {
      HMonomial moved = mono;
      for (auto& v : moved.sigma) v = tau[static_cast<std::size_t>(v)];
      out.add(moved, sign * s);
    }
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

std::optional<std::uint64_t> monomial_count(std::size_t n, int m) {
  const std::uint64_t m2 = static_cast<std::uint64_t>(m) * static_cast<std::uint64_t>(m);
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    if (__builtin_mul_overflow(r, static_cast<std::uint64_t>(i), &r)) return std::nullopt;
    if (__builtin_mul_overflow(r, m2, &r)) return std::nullopt;
  }
  return r;
}

}  // namespace taft
