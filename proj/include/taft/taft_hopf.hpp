#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "taft/cyclotomic.hpp"
#include "taft/matrix.hpp"

namespace taft {

/// Multi-index into H^{(x)n}; entry i is the Hopf basis index of factor i.
using TensorKey = std::vector<int>;
using TensorCoords = std::map<TensorKey, CycNum>;

/// The Taft algebra H_{m^2}(zeta) with basis c^i v^k (c before v), indexed
/// as i*m + k. The generator coproducts are stored explicitly so that a
/// corrupted coalgebra can be built for negative tests; everything else is
/// derived from them.
class TaftAlgebra {
 public:
  static std::shared_ptr<const TaftAlgebra> create(int m);
  /// Same algebra with Delta(c), Delta(v) replaced by the given tensors.
  static std::shared_ptr<const TaftAlgebra> with_coproduct(int m, TensorCoords delta_c, TensorCoords delta_v);

  int m() const { return m_; }
  int dim() const { return m_ * m_; }
  const CycNum& zeta() const { return zeta_; }
  int index(int i, int k) const;
  int c_exponent(int index) const { return index / m_; }
  int v_exponent(int index) const { return index % m_; }
  std::string basis_name(int index) const;

  /// Product of two basis elements as (coefficient, basis index); index -1 means zero.
  std::pair<CycNum, int> basis_product(int a, int b) const;

  const TensorCoords& generator_coproduct_c() const { return delta_c_; }
  const TensorCoords& generator_coproduct_v() const { return delta_v_; }
  const TensorCoords& basis_coproduct(int index) const { return delta_basis_.at(static_cast<std::size_t>(index)); }
  const CycVector& basis_antipode(int index) const { return antipode_basis_.at(static_cast<std::size_t>(index)); }

 private:
  TaftAlgebra(int m, TensorCoords delta_c, TensorCoords delta_v);

  int m_;
  CycNum zeta_;
  TensorCoords delta_c_;
  TensorCoords delta_v_;
  std::vector<TensorCoords> delta_basis_;
  std::vector<CycVector> antipode_basis_;
};

using TaftPtr = std::shared_ptr<const TaftAlgebra>;

class HopfElement {
 public:
  HopfElement(TaftPtr parent, CycVector coords);
  static HopfElement zero(TaftPtr parent);
  static HopfElement basis(TaftPtr parent, int i, int k);
  static HopfElement c(TaftPtr parent) { return basis(std::move(parent), 1, 0); }
  static HopfElement v(TaftPtr parent) { return basis(std::move(parent), 0, 1); }
  static HopfElement unit(TaftPtr parent) { return basis(std::move(parent), 0, 0); }

  const TaftPtr& parent() const { return parent_; }
  const CycVector& coords() const { return coords_; }
  const CycNum& coeff(int i, int k) const;

  HopfElement& operator+=(const HopfElement& o);
  HopfElement& operator-=(const HopfElement& o);
  friend HopfElement operator+(HopfElement a, const HopfElement& b) { return a += b; }
  friend HopfElement operator-(HopfElement a, const HopfElement& b) { return a -= b; }
  friend HopfElement operator*(const CycNum& s, const HopfElement& a);
  friend HopfElement operator*(const HopfElement& a, const HopfElement& b);
  friend bool operator==(const HopfElement& a, const HopfElement& b);

  std::string to_string() const;

 private:
  TaftPtr parent_;
  CycVector coords_;
};

class TensorElement {
 public:
  TensorElement(TaftPtr parent, int degree, TensorCoords coords = {});

  const TaftPtr& parent() const { return parent_; }
  int degree() const { return degree_; }
  const TensorCoords& coords() const { return coords_; }
  /// Adds s * (basis tensor key); zero coefficients are dropped.
  void add(const TensorKey& key, const CycNum& s);

  friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
  friend bool operator==(const TensorElement& a, const TensorElement& b);
  std::string to_string() const;

 private:
  TaftPtr parent_;
  int degree_;
  TensorCoords coords_;
};

HopfElement hopf_product(const HopfElement& a, const HopfElement& b);
TensorElement hopf_coproduct(const HopfElement& a);
CycNum hopf_counit(const HopfElement& a);
HopfElement hopf_antipode(const HopfElement& a);

struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::string witness;  // first failing basis element(s), empty on success
};

struct AxiomReport {
  int m = 0;
  std::vector<AxiomCheck> checks;
  bool all_passed() const;
  const AxiomCheck* find(const std::string& name) const;
};

/// Coassociativity, counit, antipode and bialgebra compatibility, each
/// checked exhaustively over the m^2 basis elements (pairs for the latter).
AxiomReport hopf_verify_axioms(const TaftPtr& H);

}  // namespace taft
