#pragma once

#include <random>

#include "taft/cyclotomic.hpp"
#include "taft/matrix.hpp"

namespace taft::th {

inline CycNum random_cyc(int m, std::mt19937_64& rng, int range = 5) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 3);
  std::vector<Rational> c;
  for (int i = 0; i < euler_phi(m); ++i) c.emplace_back(num(rng), den(rng));
  for (auto& x : c) x.canonicalize();
  return CycNum::from_poly(m, c);
}

inline CycVector random_vector(int m, std::size_t n, std::mt19937_64& rng) {
  CycVector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_cyc(m, rng));
  return v;
}

inline CycMatrix random_matrix(int m, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  CycMatrix a = zeros(r, c, m);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) a(i, j) = random_cyc(m, rng);
  return a;
}

inline CycMatrix int_matrix(int m, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<CycVector> rs;
  std::size_t cols = 0;
  for (const auto& r : rows) {
    CycVector v;
    for (long x : r) v.push_back(CycNum::rational(m, x));
    cols = v.size();
    rs.push_back(std::move(v));
  }
  return from_rows(rs, cols, m);
}

}  // namespace taft::th
