#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace taft {

using Rational = mpq_class;

/// Arithmetic context for Q(zeta_m): the cyclotomic polynomial Phi_m and a
/// table of reduced powers x^j mod Phi_m. Contexts are created once per
/// conductor and never mutated afterwards.
class CyclotomicField {
 public:
  static const CyclotomicField& get(int m);

  int conductor() const { return m_; }
  int degree() const { return static_cast<int>(modulus_.size()) - 1; }

  /// Coefficients of Phi_m, lowest degree first.
  const std::vector<Rational>& modulus() const { return modulus_; }

  /// x^j reduced modulo Phi_m; valid for 0 <= j <= max_power().
  std::span<const Rational> power(int j) const;
  int max_power() const { return static_cast<int>(powers_.size()) - 1; }

 private:
  explicit CyclotomicField(int m);

  int m_;
  std::vector<Rational> modulus_;
  std::vector<std::vector<Rational>> powers_;
};

/// Integer coefficients of the m-th cyclotomic polynomial, lowest degree first.
std::vector<long> cyclotomic_polynomial(int m);

int euler_phi(int m);

/// An element of Q(zeta_m) stored as its unique residue modulo Phi_m.
/// A default-constructed CycNum is unbound and only usable as a placeholder.
class CycNum {
 public:
  CycNum() = default;

  static CycNum zero(int m);
  static CycNum one(int m);
  static CycNum rational(int m, const Rational& value);
  static CycNum from_poly(int m, std::span<const Rational> poly);
  static CycNum zeta_power(int m, long e);

  bool bound() const { return field_ != nullptr; }
  int conductor() const;
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Constant coefficient; only meaningful when is_rational().
  const Rational& rational_part() const;

  CycNum inverse() const;
  CycNum pow(long e) const;
  CycNum scaled(const Rational& s) const;

  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator/=(const CycNum& o);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  CycNum operator-() const;

  friend bool operator==(const CycNum& a, const CycNum& b);
  friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

  /// Human-readable form such as "2 - 1/3*z + z^2" (z = zeta_m).
  std::string to_string() const;

  /// Adds s * o into this (same conductor), avoiding a temporary product.
  void add_scaled(const CycNum& o, const CycNum& s);

 private:
  CycNum(const CyclotomicField* f, std::vector<Rational> c) : field_(f), c_(std::move(c)) {}
  void require_same(const CycNum& o) const;

  const CyclotomicField* field_ = nullptr;
  std::vector<Rational> c_;
};

CycNum cyc_make(int m, std::span<const Rational> poly);
CycNum zeta_power(int m, long e);

enum class ArithOp { Add, Sub, Mul, Div };
CycNum cyc_arith(const CycNum& a, const CycNum& b, ArithOp op);

std::ostream& operator<<(std::ostream& os, const CycNum& x);

}  // namespace taft
