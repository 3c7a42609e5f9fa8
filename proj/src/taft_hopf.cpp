#include "taft/taft_hopf.hpp"

#include <sstream>

#include "taft/error.hpp"

namespace taft {
namespace {

TensorCoords multiply_coords(const TaftAlgebra& H, const TensorCoords& a, const TensorCoords& b) {
  TensorCoords out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      if (ka.size() != kb.size()) throw ValidationError("tensor degree mismatch");
      CycNum coeff = ca * cb;
      TensorKey key(ka.size());
      bool vanished = false;
      for (std::size_t i = 0; i < ka.size(); ++i) {
        auto [s, idx] = H.basis_product(ka[i], kb[i]);
        if (idx < 0) {
          vanished = true;
          break;
        }
        coeff *= s;
        key[i] = idx;
      }
      if (vanished || coeff.is_zero()) continue;
      auto [it, inserted] = out.try_emplace(key, coeff);
      if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

CycVector multiply_vec(const TaftAlgebra& H, const CycVector& a, const CycVector& b) {
  CycVector out = zero_vector(static_cast<std::size_t>(H.dim()), H.m());
  for (int x = 0; x < H.dim(); ++x) {
    if (a[static_cast<std::size_t>(x)].is_zero()) continue;
    for (int y = 0; y < H.dim(); ++y) {
      if (b[static_cast<std::size_t>(y)].is_zero()) continue;
      auto [s, idx] = H.basis_product(x, y);
      if (idx < 0) continue;
      out[static_cast<std::size_t>(idx)] += a[static_cast<std::size_t>(x)] * b[static_cast<std::size_t>(y)] * s;
    }
  }
  return out;
}

TensorCoords default_delta_c(int m) { return {{TensorKey{m, m}, CycNum::one(m)}}; }

TensorCoords default_delta_v(int m) {
  // Delta(v) = c (x) v + v (x) 1
  return {{TensorKey{m, 1}, CycNum::one(m)}, {TensorKey{1, 0}, CycNum::one(m)}};
}

std::string key_name(const TaftAlgebra& H, const TensorKey& k) {
  std::string s;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i) s += " (x) ";
    s += H.basis_name(k[i]);
  }
  return s;
}

}  // namespace

TaftAlgebra::TaftAlgebra(int m, TensorCoords delta_c, TensorCoords delta_v)
    : m_(m), zeta_(CycNum::zeta_power(m, 1)), delta_c_(std::move(delta_c)), delta_v_(std::move(delta_v)) {
  const int d = m * m;
  delta_basis_.resize(static_cast<std::size_t>(d));
  antipode_basis_.resize(static_cast<std::size_t>(d));
  // S(c) = c^{m-1}, S(v) = -c^{m-1} v
  CycVector s_c = zero_vector(static_cast<std::size_t>(d), m);
  s_c[static_cast<std::size_t>(index(m - 1, 0))] = CycNum::one(m);
  CycVector s_v = zero_vector(static_cast<std::size_t>(d), m);
  s_v[static_cast<std::size_t>(index(m - 1, 1))] = -CycNum::one(m);
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < m; ++k) {
      TensorCoords delta{{TensorKey{0, 0}, CycNum::one(m)}};
      for (int r = 0; r < i; ++r) delta = multiply_coords(*this, delta, delta_c_);
      for (int r = 0; r < k; ++r) delta = multiply_coords(*this, delta, delta_v_);
      delta_basis_[static_cast<std::size_t>(index(i, k))] = std::move(delta);

      // anti-multiplicative: S(c^i v^k) = S(v)^k S(c)^i
      CycVector s = unit_vector(static_cast<std::size_t>(d), 0, m);
      for (int r = 0; r < k; ++r) s = multiply_vec(*this, s, s_v);
      for (int r = 0; r < i; ++r) s = multiply_vec(*this, s, s_c);
      antipode_basis_[static_cast<std::size_t>(index(i, k))] = std::move(s);
    }
  }
}

TaftPtr TaftAlgebra::create(int m) {
  CyclotomicField::get(m);  // validates m
  return TaftPtr(new TaftAlgebra(m, default_delta_c(m), default_delta_v(m)));
}

TaftPtr TaftAlgebra::with_coproduct(int m, TensorCoords delta_c, TensorCoords delta_v) {
  CyclotomicField::get(m);
  return TaftPtr(new TaftAlgebra(m, std::move(delta_c), std::move(delta_v)));
}

int TaftAlgebra::index(int i, int k) const {
  if (k < 0 || k >= m_) throw ValidationError("v exponent out of range");
  int r = i % m_;
  if (r < 0) r += m_;
  return r * m_ + k;
}

std::string TaftAlgebra::basis_name(int idx) const {
  const int i = c_exponent(idx);
  const int k = v_exponent(idx);
  if (i == 0 && k == 0) return "1";
  std::string s;
  if (i == 1) s += "c";
  if (i > 1) s += "c^" + std::to_string(i);
  if (k == 1) s += "v";
  if (k > 1) s += "v^" + std::to_string(k);
  return s;
}

std::pair<CycNum, int> TaftAlgebra::basis_product(int a, int b) const {
  // (c^i v^k)(c^j v^l) = zeta^{kj} c^{i+j} v^{k+l}
  const int i = c_exponent(a), k = v_exponent(a);
  const int j = c_exponent(b), l = v_exponent(b);
  if (k + l >= m_) return {CycNum::zero(m_), -1};
  return {CycNum::zeta_power(m_, static_cast<long>(k) * j), index(i + j, k + l)};
}

HopfElement::HopfElement(TaftPtr parent, CycVector coords) : parent_(std::move(parent)), coords_(std::move(coords)) {
  if (!parent_) throw ValidationError("HopfElement without parent algebra");
  if (coords_.size() != static_cast<std::size_t>(parent_->dim())) throw ValidationError("HopfElement coordinate length mismatch");
}

HopfElement HopfElement::zero(TaftPtr parent) {
  const auto d = static_cast<std::size_t>(parent->dim());
  const int m = parent->m();
  return HopfElement(std::move(parent), zero_vector(d, m));
}

HopfElement HopfElement::basis(TaftPtr parent, int i, int k) {
  HopfElement h = zero(parent);
  h.coords_[static_cast<std::size_t>(parent->index(i, k))] = CycNum::one(parent->m());
  return h;
}

const CycNum& HopfElement::coeff(int i, int k) const { return coords_[static_cast<std::size_t>(parent_->index(i, k))]; }

HopfElement& HopfElement::operator+=(const HopfElement& o) {
  if (parent_ != o.parent_) throw ValidationError("HopfElement parent mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

HopfElement& HopfElement::operator-=(const HopfElement& o) {
  if (parent_ != o.parent_) throw ValidationError("HopfElement parent mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

HopfElement operator*(const CycNum& s, const HopfElement& a) {
  HopfElement r = a;
  for (auto& x : r.coords_) x = s * x;
  return r;
}

HopfElement operator*(const HopfElement& a, const HopfElement& b) { return hopf_product(a, b); }

bool operator==(const HopfElement& a, const HopfElement& b) { return a.parent_ == b.parent_ && a.coords_ == b.coords_; }

std::string HopfElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int idx = 0; idx < parent_->dim(); ++idx) {
    const auto& x = coords_[static_cast<std::size_t>(idx)];
    if (x.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << x.to_string() << ")*" << parent_->basis_name(idx);
  }
  if (first) os << "0";
  return os.str();
}

TensorElement::TensorElement(TaftPtr parent, int degree, TensorCoords coords)
    : parent_(std::move(parent)), degree_(degree), coords_(std::move(coords)) {
  if (degree_ < 1) throw ValidationError("tensor degree must be at least 1");
  for (const auto& [k, v] : coords_) {
    if (static_cast<int>(k.size()) != degree_) throw ValidationError("tensor key length does not match degree");
  }
}

void TensorElement::add(const TensorKey& key, const CycNum& s) {
  if (static_cast<int>(key.size()) != degree_) throw ValidationError("tensor key length does not match degree");
  if (s.is_zero()) return;
  auto [it, inserted] = coords_.try_emplace(key, s);
  if (!inserted) {
    it->second += s;
    if (it->second.is_zero()) coords_.erase(it);
  }
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
  if (a.parent_ != b.parent_ || a.degree_ != b.degree_) throw ValidationError("tensor factor mismatch");
  return TensorElement(a.parent_, a.degree_, multiply_coords(*a.parent_, a.coords_, b.coords_));
}

bool operator==(const TensorElement& a, const TensorElement& b) {
  return a.parent_ == b.parent_ && a.degree_ == b.degree_ && a.coords_ == b.coords_;
}

std::string TensorElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, x] : coords_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << x.to_string() << ")*" << key_name(*parent_, k);
  }
  if (first) os << "0";
  return os.str();
}

HopfElement hopf_product(const HopfElement& a, const HopfElement& b) {
  if (a.parent() != b.parent()) throw ValidationError("hopf_product: parent mismatch");
  return HopfElement(a.parent(), multiply_vec(*a.parent(), a.coords(), b.coords()));
}

TensorElement hopf_coproduct(const HopfElement& a) {
  const auto& H = *a.parent();
  TensorElement out(a.parent(), 2);
  for (int idx = 0; idx < H.dim(); ++idx) {
    const auto& x = a.coords()[static_cast<std::size_t>(idx)];
    if (x.is_zero()) continue;
    for (const auto& [k, s] : H.basis_coproduct(idx)) out.add(k, x * s);
  }
  return out;
}

CycNum hopf_counit(const HopfElement& a) {
  const auto& H = *a.parent();
  CycNum r = CycNum::zero(H.m());
  for (int i = 0; i < H.m(); ++i) r += a.coeff(i, 0);
  return r;
}

HopfElement hopf_antipode(const HopfElement& a) {
  const auto& H = *a.parent();
  HopfElement out = HopfElement::zero(a.parent());
  for (int idx = 0; idx < H.dim(); ++idx) {
    const auto& x = a.coords()[static_cast<std::size_t>(idx)];
    if (x.is_zero()) continue;
    out += x * HopfElement(a.parent(), H.basis_antipode(idx));
  }
  return out;
}

bool AxiomReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

const AxiomCheck* AxiomReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

namespace {

// (Delta (x) id) or (id (x) Delta) applied to a degree-2 tensor.
TensorElement expand_factor(const TensorElement& t, int factor) {
  const auto& H = *t.parent();
  TensorElement out(t.parent(), 3);
  for (const auto& [k, s] : t.coords()) {
    for (const auto& [dk, ds] : H.basis_coproduct(k[static_cast<std::size_t>(factor)])) {
      TensorKey key = factor == 0 ? TensorKey{dk[0], dk[1], k[1]} : TensorKey{k[0], dk[0], dk[1]};
      out.add(key, s * ds);
    }
  }
  return out;
}

HopfElement counit_contract(const TensorElement& t, int factor) {
  // (eps (x) id) when factor == 0, (id (x) eps) when factor == 1
  const auto& H = *t.parent();
  HopfElement out = HopfElement::zero(t.parent());
  for (const auto& [k, s] : t.coords()) {
    const int eps_idx = k[static_cast<std::size_t>(factor)];
    if (H.v_exponent(eps_idx) != 0) continue;
    const int keep = k[static_cast<std::size_t>(1 - factor)];
    out += s * HopfElement(t.parent(), unit_vector(static_cast<std::size_t>(H.dim()), static_cast<std::size_t>(keep), H.m()));
  }
  return out;
}

HopfElement antipode_contract(const TensorElement& t, int factor) {
  // mu (S (x) id) when factor == 0, mu (id (x) S) when factor == 1
  const auto& H = *t.parent();
  HopfElement out = HopfElement::zero(t.parent());
  for (const auto& [k, s] : t.coords()) {
    HopfElement x = HopfElement(t.parent(), unit_vector(static_cast<std::size_t>(H.dim()), static_cast<std::size_t>(k[0]), H.m()));
    HopfElement y = HopfElement(t.parent(), unit_vector(static_cast<std::size_t>(H.dim()), static_cast<std::size_t>(k[1]), H.m()));
    if (factor == 0) x = hopf_antipode(x);
    else y = hopf_antipode(y);
    out += s * (x * y);
  }
  return out;
}

}  // namespace

AxiomReport hopf_verify_axioms(const TaftPtr& H) {
  AxiomReport report;
  report.m = H->m();
  AxiomCheck coassoc{"coassociativity", true, {}};
  AxiomCheck counit{"counit", true, {}};
  AxiomCheck antipode{"antipode", true, {}};
  AxiomCheck bialgebra{"bialgebra", true, {}};
  const int d = H->dim();
  const int m = H->m();
  auto fail = [](AxiomCheck& c, const std::string& w) {
    if (c.passed) c.witness = w;
    c.passed = false;
  };
  for (int idx = 0; idx < d; ++idx) {
    HopfElement h(H, unit_vector(static_cast<std::size_t>(d), static_cast<std::size_t>(idx), m));
    TensorElement delta = hopf_coproduct(h);
    if (!(expand_factor(delta, 0) == expand_factor(delta, 1))) fail(coassoc, H->basis_name(idx));
    if (!(counit_contract(delta, 0) == h) || !(counit_contract(delta, 1) == h)) fail(counit, H->basis_name(idx));
    HopfElement eps_unit = hopf_counit(h) * HopfElement::unit(H);
    if (!(antipode_contract(delta, 0) == eps_unit) || !(antipode_contract(delta, 1) == eps_unit)) {
      fail(antipode, H->basis_name(idx));
    }
  }
  for (int a = 0; a < d && bialgebra.passed; ++a) {
    HopfElement ha(H, unit_vector(static_cast<std::size_t>(d), static_cast<std::size_t>(a), m));
    TensorElement da = hopf_coproduct(ha);
    for (int b = 0; b < d; ++b) {
      HopfElement hb(H, unit_vector(static_cast<std::size_t>(d), static_cast<std::size_t>(b), m));
      HopfElement ab = ha * hb;
      const bool delta_ok = hopf_coproduct(ab) == da * hopf_coproduct(hb);
      const bool eps_ok = hopf_counit(ab) == hopf_counit(ha) * hopf_counit(hb);
      if (!delta_ok || !eps_ok) {
        fail(bialgebra, H->basis_name(a) + " * " + H->basis_name(b));
        break;
      }
    }
  }
  report.checks = {coassoc, counit, antipode, bialgebra};
  return report;
}

}  // namespace taft
