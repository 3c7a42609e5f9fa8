#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "taft/hmodule.hpp"

// Multilinear H-polynomials and the codimension sequence of an H-module
// algebra.
namespace taft {

/// x^{h_1}_{sigma(1)} ... x^{h_n}_{sigma(n)}. Variables are 0-based here:
/// position i carries variable sigma[i] acted on by c^{h[i].first} v^{h[i].second}.
struct HMonomial {
  std::vector<int> sigma;
  std::vector<std::pair<int, int>> h;

  std::size_t degree() const { return sigma.size(); }
  friend auto operator<=>(const HMonomial&, const HMonomial&) = default;
  friend bool operator==(const HMonomial&, const HMonomial&) = default;
  /// Printed with 1-based variables, e.g. "x1^{cv} x2^{1}".
  std::string to_string() const;
};

/// Throws ValidationError unless sigma is a permutation and every h is in range.
void validate_monomial(const HMonomial& mono, int m);

class MultilinearHPoly {
 public:
  MultilinearHPoly(int m, std::size_t n) : m_(m), n_(n) {}
  static MultilinearHPoly monomial(int m, HMonomial mono, const CycNum& coeff);

  int m() const { return m_; }
  std::size_t degree() const { return n_; }
  const std::map<HMonomial, CycNum>& terms() const { return terms_; }
  void add(const HMonomial& mono, const CycNum& coeff);

  friend MultilinearHPoly operator+(const MultilinearHPoly& a, const MultilinearHPoly& b);
  friend MultilinearHPoly operator*(const CycNum& s, const MultilinearHPoly& a);
  friend bool operator==(const MultilinearHPoly&, const MultilinearHPoly&) = default;
  std::string to_string() const;

 private:
  int m_;
  std::size_t n_;
  std::map<HMonomial, CycNum> terms_;
};

CycVector evaluate(const MultilinearHPoly& p, const HModuleAlgebra& M, const std::vector<CycVector>& args);

/// Sum over permutations tau of the given variables of sign(tau) p^tau.
MultilinearHPoly alternate(const MultilinearHPoly& p, const std::vector<int>& vars);

/// n! (m^2)^n, or nullopt on overflow of 64 bits.
std::optional<std::uint64_t> monomial_count(std::size_t n, int m);

enum class CodimBackend {
  Graded,          // block decomposition by degrees, exact
  LiteralModular,  // the evaluation matrix itself, rank modulo a prime
  DenseExact,      // the evaluation matrix itself, exact
};
const char* to_string(CodimBackend b);

struct CodimOptions {
  std::uint64_t row_budget = 1'000'000;
  /// rows * cols allowed for the literal backends.
  std::uint64_t literal_cell_budget = 20'000'000;
  std::uint64_t dense_cell_budget = 200'000;
  CodimBackend backend = CodimBackend::Graded;
  std::uint64_t seed = 1;
};

struct CodimResult {
  std::size_t n = 0;
  std::size_t value = 0;
  std::uint64_t rows = 0;  // n! (m^2)^n
  std::uint64_t cols = 0;  // dim(A)^(n+1)
  std::string method;
  /// False only for a modular rank that did not reach min(rows, cols): then
  /// value is a certified lower bound.
  bool exact = true;
};

CodimResult codimension(const HModuleAlgebra& M, std::size_t n, const CodimOptions& opt = {});

struct GrowthRow {
  CodimResult result;
  double root = 0;  // c_n^(1/n)
  bool bound_ok = false;  // c_n <= dim(A)^(n+1)
  double wall_ms = 0;
};
std::vector<GrowthRow> codim_growth_report(const HModuleAlgebra& M, std::size_t n_max, const CodimOptions& opt = {});

struct RankOutcome {
  std::size_t rank = 0;
  std::string method;
};
/// Exact rank of the matrix with the given rows. The rank modulo a prime is
/// computed first; if it is not already maximal, the independent rows found
/// there are shown to span every remaining row by exact arithmetic.
RankOutcome certified_rank(const std::vector<CycVector>& rows, std::size_t cols, int m, std::uint64_t seed = 1);

}  // namespace taft
