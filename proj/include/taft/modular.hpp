#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "taft/cyclotomic.hpp"
#include "taft/matrix.hpp"

// Reduction of Q(zeta_m) into a prime field F_p with p = 1 (mod m), sending
// zeta to a primitive m-th root of unity omega. Ranks computed after the
// reduction are lower bounds for the exact ranks.
namespace taft {

struct PrimeField {
  uint32_t p = 0;
  int m = 0;
  uint32_t omega = 0;

  uint32_t add(uint32_t a, uint32_t b) const { return static_cast<uint32_t>((static_cast<uint64_t>(a) + b) % p); }
  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p - b; }
  uint32_t mul(uint32_t a, uint32_t b) const { return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p); }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p - a; }
  uint32_t pow(uint32_t a, uint64_t e) const;
  uint32_t inv(uint32_t a) const;  // throws DivisionByZero on 0
};

bool is_prime_u32(uint32_t n);

/// Deterministic in the seed: p in (2^30, 2^31) with p = 1 (mod m) and a
/// primitive m-th root of unity omega.
PrimeField choose_prime_field(int m, uint64_t seed = 1);

/// nullopt when some denominator vanishes modulo p.
std::optional<uint32_t> try_reduce(const CycNum& x, const PrimeField& F);
/// Throws DivisionByZero when a denominator vanishes modulo p.
uint32_t reduce(const CycNum& x, const PrimeField& F);

struct ModMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<uint32_t> data;

  ModMatrix() = default;
  ModMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  uint32_t& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  uint32_t operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
  std::span<uint32_t> row(std::size_t i) { return {data.data() + i * cols, cols}; }
  std::span<const uint32_t> row(std::size_t i) const { return {data.data() + i * cols, cols}; }
  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;
};

ModMatrix reduce(const CycMatrix& a, const PrimeField& F);
ModMatrix mod_identity(std::size_t n);
ModMatrix mod_mul(const ModMatrix& a, const ModMatrix& b, uint32_t p);
ModMatrix mod_transpose(const ModMatrix& a);
std::vector<uint32_t> mod_apply(const ModMatrix& a, std::span<const uint32_t> x, uint32_t p);

/// Row echelon form built one row at a time. Stored rows have pivot 1 and
/// are zero in the pivot columns of earlier rows.
class ModularEchelon {
 public:
  ModularEchelon(uint32_t p, std::size_t cols);

  /// Reduces the row against the stored basis; keeps it if independent.
  bool insert(std::vector<uint32_t> row);
  /// Residual of x after reduction (zero iff x lies in the span).
  std::vector<uint32_t> reduce(std::vector<uint32_t> x) const;
  bool contains(std::span<const uint32_t> x) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool full() const { return rows_.size() == cols_; }
  const std::vector<std::vector<uint32_t>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  void reduce_in_place(std::vector<uint32_t>& x) const;

  uint32_t p_;
  std::size_t cols_;
  std::vector<std::vector<uint32_t>> rows_;
  std::vector<std::size_t> pivots_;
};

std::size_t mod_rank(const ModMatrix& a, uint32_t p);
/// Basis of {x : a x = 0}.
std::vector<std::vector<uint32_t>> mod_nullspace(const ModMatrix& a, uint32_t p);

/// Characteristic polynomial det(xI - a), lowest degree first, monic.
std::vector<uint32_t> mod_charpoly(const ModMatrix& a, uint32_t p);
/// Distinct roots in F_p of a polynomial (lowest degree first).
std::vector<uint32_t> mod_poly_roots(std::vector<uint32_t> f, uint32_t p, std::mt19937_64& rng);

}  // namespace taft
