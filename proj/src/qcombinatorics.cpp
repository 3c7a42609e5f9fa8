#include "taft/qcombinatorics.hpp"

#include <string>

#include "taft/error.hpp"

namespace taft {

CycNum q_int(unsigned n, const CycNum& q) {
  const int m = q.conductor();
  CycNum sum = CycNum::zero(m);
  CycNum power = CycNum::one(m);
  for (unsigned i = 0; i < n; ++i) {
    sum += power;
    power *= q;
  }
  return sum;
}

CycNum q_factorial(unsigned n, const CycNum& q) {
  CycNum f = CycNum::one(q.conductor());
  for (unsigned i = 1; i <= n; ++i) f *= q_int(i, q);
  return f;
}

QBinomTable::QBinomTable(const CycNum& q, unsigned bound) : q_(q) {
  const int m = q.conductor();
  bound_ = bound == 0 ? static_cast<unsigned>(2 * m) : bound;
  const CycNum one = CycNum::one(m);
  std::vector<CycNum> qpow{one};
  for (unsigned i = 1; i <= bound_; ++i) qpow.push_back(qpow.back() * q);
  rows_.reserve(bound_ + 1);
  rows_.push_back({one});
  for (unsigned n = 1; n <= bound_; ++n) {
    const auto& prev = rows_.back();
    std::vector<CycNum> row(n + 1, CycNum::zero(m));
    row[0] = one;
    row[n] = one;
    for (unsigned k = 1; k < n; ++k) {
      // binom(n,k) = binom(n-1,k-1) + q^k binom(n-1,k)
      row[k] = prev[k - 1] + qpow[k] * prev[k];
    }
    rows_.push_back(std::move(row));
  }
}

const CycNum& QBinomTable::operator()(unsigned n, unsigned k) const {
  if (k > n) throw ValidationError("q_binom: k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
  if (n > bound_) throw ValidationError("q_binom: n = " + std::to_string(n) + " exceeds table bound " + std::to_string(bound_));
  return rows_[n][k];
}

CycNum q_binom(unsigned n, unsigned k, const CycNum& q) {
  if (k > n) throw ValidationError("q_binom: k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
  return QBinomTable(q, n == 0 ? 1 : n)(n, k);
}

}  // namespace taft
