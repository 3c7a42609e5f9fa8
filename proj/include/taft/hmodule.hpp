#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "taft/algebra_core.hpp"
#include "taft/taft_hopf.hpp"

namespace taft {

/// An algebra A with operators for c and v; the action of the rest of H is
/// generated from these. For the monomial c^i v^k, v acts first.
struct HModuleAlgebra {
  TaftPtr H;
  FinDimAlgebra A;
  CycMatrix c_op;
  CycMatrix v_op;

  int m() const { return H->m(); }
  std::size_t dim() const { return A.dim(); }
};

/// Shape and conductor checks only; the axioms are checked by hma_verify.
HModuleAlgebra make_hma(FinDimAlgebra A, CycMatrix c_op, CycMatrix v_op);

struct HmaCheck {
  std::string name;
  bool passed = true;
  std::string witness;
};

struct HmaReport {
  std::vector<HmaCheck> checks;
  bool ok() const;
  const HmaCheck* find(const std::string& name) const;
  /// Why generator-level checks are enough.
  static const char* derivation();
};

/// Operator relations of H (c^m = 1, v^m = 0, vc = zeta cv), the
/// module-algebra law for c and v on every basis pair, and c1 = 1, v1 = 0
/// when A is unital.
HmaReport hma_verify(const HModuleAlgebra& M);

/// Matrix of the operator by which h acts on A.
CycMatrix action_matrix(const HModuleAlgebra& M, const HopfElement& h);
CycVector act(const HModuleAlgebra& M, const HopfElement& h, std::span<const CycNum> a);

enum class Simplicity { CertifiedSimple, NotSimple, Inconclusive };
const char* to_string(Simplicity s);

struct SimplicityResult {
  Simplicity verdict = Simplicity::Inconclusive;
  std::optional<Subspace> witness;  // proper nonzero H-invariant ideal for NotSimple
  std::string method;
  std::string detail;
};

struct SimplicityOptions {
  uint64_t seed = 1;
  std::size_t random_candidates = 8;
  std::size_t norton_attempts = 24;
  /// Dimension up to which the operator algebra is spanned directly when
  /// the density argument is unavailable (A without unit).
  std::size_t direct_closure_limit = 16;
};

/// Tier 1: the operator algebra generated by left and right multiplications,
/// c and v has dimension dim(A)^2, certified through a reduction modulo a
/// prime (a lower bound for the exact dimension). Returns the method used,
/// or nullopt when no certificate was obtained.
std::optional<std::string> burnside_certificate(const HModuleAlgebra& M, const SimplicityOptions& opt = {});

/// Tier 2: a proper nonzero H-invariant two-sided ideal, searched among the
/// ideals generated by candidate vectors.
std::optional<Subspace> find_invariant_ideal(const HModuleAlgebra& M, const SimplicityOptions& opt = {});

/// Exact check that I is a proper nonzero two-sided ideal stable under c and v.
bool is_invariant_ideal(const HModuleAlgebra& M, const Subspace& I, std::string* why = nullptr);

SimplicityResult is_h_simple(const HModuleAlgebra& M, const SimplicityOptions& opt = {});

struct IsoSearchOptions {
  std::size_t samples = 64;
  uint64_t seed = 1;
  std::size_t max_dim = 16;
};

/// Invertible T with T c1 = c2 T, T v1 = v2 T and T(xy) = T(x)T(y), if the
/// randomized search finds one. Dimension mismatch gives nullopt at once.
std::optional<CycMatrix> hma_isomorphic_generic(const HModuleAlgebra& M1, const HModuleAlgebra& M2,
                                                const IsoSearchOptions& opt = {});

/// Exact verification of a claimed H-module-algebra isomorphism M1 -> M2.
bool is_hma_isomorphism(const HModuleAlgebra& M1, const HModuleAlgebra& M2, const CycMatrix& T,
                        std::string* why = nullptr);

}  // namespace taft
