#include "taft/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

#include "taft/error.hpp"

namespace taft {
namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder of a by b over Q; b must be nonzero.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {Poly{}, a};
  Poly q(a.size() - db, Rational(0));
  for (std::size_t i = a.size(); i-- > db;) {
    if (a[i] == 0) continue;
    Rational f = a[i] / b[db];
    q[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= f * b[j];
  }
  a.resize(db);
  trim(a);
  return {q, a};
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

std::vector<long> exact_divide(const std::vector<long>& a, const std::vector<long>& b) {
  // b monic; a divisible by b.
  std::vector<long> rem = a;
  const std::size_t db = b.size() - 1;
  std::vector<long> q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    long f = rem[i];
    q[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= f * b[j];
  }
  return q;
}

}  // namespace

int euler_phi(int m) {
  int result = m;
  int n = m;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<long> cyclotomic_polynomial(int m) {
  if (m < 1) throw ValidationError("cyclotomic polynomial needs m >= 1");
  static std::mutex mu;
  static std::map<int, std::vector<long>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  std::vector<long> p(static_cast<std::size_t>(m) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(m)] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) p = exact_divide(p, cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mu);
  cache.emplace(m, p);
  return p;
}

CyclotomicField::CyclotomicField(int m) : m_(m) {
  for (long c : cyclotomic_polynomial(m)) modulus_.emplace_back(c);
  const int phi = degree();
  const int top = std::max({m - 1, 2 * phi - 2, phi});
  powers_.reserve(static_cast<std::size_t>(top) + 1);
  Poly cur(static_cast<std::size_t>(phi), Rational(0));
  cur[0] = 1;
  powers_.push_back(cur);
  for (int j = 1; j <= top; ++j) {
    // multiply by x, folding x^phi = -(Phi_m - x^phi)
    Rational carry = cur[static_cast<std::size_t>(phi - 1)];
    for (int i = phi - 1; i > 0; --i) cur[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
    cur[0] = 0;
    if (carry != 0) {
      for (int i = 0; i < phi; ++i) cur[static_cast<std::size_t>(i)] -= carry * modulus_[static_cast<std::size_t>(i)];
    }
    powers_.push_back(cur);
  }
}

const CyclotomicField& CyclotomicField::get(int m) {
  if (m < 2) throw ValidationError("conductor m must be at least 2, got " + std::to_string(m));
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CyclotomicField>> registry;
  std::lock_guard lock(mu);
  auto& slot = registry[m];
  if (!slot) slot.reset(new CyclotomicField(m));
  return *slot;
}

std::span<const Rational> CyclotomicField::power(int j) const {
  return powers_.at(static_cast<std::size_t>(j));
}

CycNum CycNum::zero(int m) {
  const auto& f = CyclotomicField::get(m);
  return CycNum(&f, Poly(static_cast<std::size_t>(f.degree()), Rational(0)));
}

CycNum CycNum::one(int m) {
  CycNum r = zero(m);
  r.c_[0] = 1;
  return r;
}

CycNum CycNum::rational(int m, const Rational& value) {
  CycNum r = zero(m);
  r.c_[0] = value;
  return r;
}

CycNum CycNum::from_poly(int m, std::span<const Rational> poly) {
  const auto& f = CyclotomicField::get(m);
  const auto phi = static_cast<std::size_t>(f.degree());
  Poly c(phi, Rational(0));
  Poly rest;
  for (std::size_t j = 0; j < poly.size(); ++j) {
    if (poly[j] == 0) continue;
    if (j < phi) {
      c[j] += poly[j];
    } else if (static_cast<int>(j) <= f.max_power()) {
      auto pw = f.power(static_cast<int>(j));
      for (std::size_t i = 0; i < phi; ++i) c[i] += poly[j] * pw[i];
    } else {
      if (rest.size() <= j) rest.resize(j + 1, Rational(0));
      rest[j] = poly[j];
    }
  }
  if (!rest.empty()) {
    auto [q, r] = divmod(rest, f.modulus());
    for (std::size_t i = 0; i < r.size(); ++i) c[i] += r[i];
  }
  return CycNum(&f, std::move(c));
}

CycNum CycNum::zeta_power(int m, long e) {
  const auto& f = CyclotomicField::get(m);
  long r = e % m;
  if (r < 0) r += m;
  auto pw = f.power(static_cast<int>(r));
  return CycNum(&f, Poly(pw.begin(), pw.end()));
}

int CycNum::conductor() const {
  if (!field_) throw ValidationError("unbound CycNum");
  return field_->conductor();
}

void CycNum::require_same(const CycNum& o) const {
  if (!field_ || !o.field_) throw ValidationError("arithmetic on unbound CycNum");
  if (field_ != o.field_) {
    throw ConductorMismatch("conductor mismatch: " + std::to_string(field_->conductor()) + " vs " +
                            std::to_string(o.field_->conductor()));
  }
}

bool CycNum::is_zero() const {
  for (const auto& x : c_) {
    if (x != 0) return false;
  }
  return true;
}

bool CycNum::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (c_[i] != 0) return false;
  }
  return true;
}

bool CycNum::is_one() const { return !c_.empty() && c_[0] == 1 && is_rational(); }

const Rational& CycNum::rational_part() const { return c_.at(0); }

CycNum& CycNum::operator+=(const CycNum& o) {
  require_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  require_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  a.require_same(b);
  const std::size_t phi = a.c_.size();
  if (phi == 1) return CycNum(a.field_, Poly{a.c_[0] * b.c_[0]});
  Poly prod(2 * phi - 1, Rational(0));
  for (std::size_t i = 0; i < phi; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (b.c_[j] == 0) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  Poly out(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(phi));
  for (std::size_t j = phi; j < prod.size(); ++j) {
    if (prod[j] == 0) continue;
    auto pw = a.field_->power(static_cast<int>(j));
    for (std::size_t i = 0; i < phi; ++i) out[i] += prod[j] * pw[i];
  }
  return CycNum(a.field_, std::move(out));
}

CycNum& CycNum::operator*=(const CycNum& o) { return *this = *this * o; }

CycNum& CycNum::operator/=(const CycNum& o) { return *this = *this * o.inverse(); }

void CycNum::add_scaled(const CycNum& o, const CycNum& s) {
  require_same(o);
  if (o.is_zero() || s.is_zero()) return;
  if (c_.size() == 1) {
    c_[0] += o.c_[0] * s.c_[0];
    return;
  }
  *this += o * s;
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.field_ != b.field_) return false;
  return a.c_ == b.c_;
}

CycNum CycNum::scaled(const Rational& s) const {
  CycNum r = *this;
  for (auto& x : r.c_) x *= s;
  return r;
}

CycNum CycNum::inverse() const {
  if (!field_) throw ValidationError("inverse of unbound CycNum");
  if (is_zero()) throw DivisionByZero("division by zero in Q(zeta_" + std::to_string(field_->conductor()) + ")");
  if (is_rational()) return CycNum::rational(field_->conductor(), 1 / c_[0]);
  // Extended Euclid: s * a == gcd (mod Phi_m), gcd is a nonzero constant.
  Poly r0 = field_->modulus();
  Poly r1 = c_;
  trim(r1);
  Poly s0, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a constant
  Rational g = r0.at(0);
  for (auto& x : s0) x /= g;
  return CycNum::from_poly(field_->conductor(), s0);
}

CycNum CycNum::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycNum result = CycNum::one(conductor());
  CycNum base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string CycNum::to_string() const {
  if (!field_) return "<unbound>";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    const Rational& x = c_[j];
    if (x == 0) continue;
    Rational ax = abs(x);
    if (first) {
      if (x < 0) os << "-";
    } else {
      os << (x < 0 ? " - " : " + ");
    }
    first = false;
    if (j == 0) {
      os << ax.get_str();
      continue;
    }
    if (ax != 1) os << ax.get_str() << "*";
    os << "z";
    if (j > 1) os << "^" << j;
  }
  if (first) os << "0";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CycNum& x) { return os << x.to_string(); }

CycNum cyc_make(int m, std::span<const Rational> poly) { return CycNum::from_poly(m, poly); }

CycNum zeta_power(int m, long e) { return CycNum::zeta_power(m, e); }

CycNum cyc_arith(const CycNum& a, const CycNum& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  return a;
}

}  // namespace taft
