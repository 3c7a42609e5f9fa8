#pragma once

#include <vector>

#include "taft/cyclotomic.hpp"

namespace taft {

/// 1 + q + ... + q^(n-1); zero for n = 0.
CycNum q_int(unsigned n, const CycNum& q);

/// n!_q as the product of quantum integers (may vanish at roots of unity).
CycNum q_factorial(unsigned n, const CycNum& q);

/// Gaussian binomial evaluated at q through the q-Pascal recursion, which is
/// total even where the factorial quotient is 0/0.
CycNum q_binom(unsigned n, unsigned k, const CycNum& q);

/// Memoized triangle of binom(n, k)_q for n <= bound.
class QBinomTable {
 public:
  /// bound defaults to 2m when zero.
  explicit QBinomTable(const CycNum& q, unsigned bound = 0);

  const CycNum& q() const { return q_; }
  unsigned bound() const { return bound_; }
  const CycNum& operator()(unsigned n, unsigned k) const;

 private:
  CycNum q_;
  unsigned bound_;
  std::vector<std::vector<CycNum>> rows_;
};

}  // namespace taft
