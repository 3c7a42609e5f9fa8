#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "taft/algebra_core.hpp"
#include "taft/hmodule.hpp"

namespace taft {

// ---------------------------------------------------------------- semisimple

/// Data (m, k, t, P, Q) of the semisimple family on M_k^t; alpha is the
/// scalar with P^m = alpha E (derived, not supplied).
struct SemisimpleSpec {
  int m = 0;
  std::size_t k = 0;
  std::size_t t = 0;
  CycMatrix P;
  CycMatrix Q;
  CycNum alpha;
};

/// Every violated invariant, one message each; empty when the spec is valid.
std::vector<std::string> semisimple_violations(const SemisimpleSpec& s);
/// Fills in alpha; throws ValidationError listing all violations.
SemisimpleSpec make_semisimple_spec(int m, std::size_t k, std::size_t t, CycMatrix P, CycMatrix Q);

/// A tuple (a_1, ..., a_t) of k x k matrices, i.e. an element of M_k^t.
using MatrixTuple = std::vector<CycMatrix>;

CycVector tuple_to_vector(const MatrixTuple& a);
MatrixTuple vector_to_tuple(std::span<const CycNum> x, std::size_t k, std::size_t t);

/// c(a_1..a_t) = (Q a_t Q^-1, a_1, ..., a_{t-1}).
MatrixTuple semisimple_c(const SemisimpleSpec& s, const MatrixTuple& a);
/// v(a)_1 = P a_1 - (Q a_t Q^-1) P and v(a)_j = zeta^{j-1} (P a_j - a_{j-1} P).
MatrixTuple semisimple_v(const SemisimpleSpec& s, const MatrixTuple& a);

/// The module algebra M_k^t with the operators above; validates the spec.
HModuleAlgebra build_semisimple(const SemisimpleSpec& s);
/// Same operators without validating the spec (for negative tests).
HModuleAlgebra build_semisimple_unchecked(const SemisimpleSpec& s);

/// Closed form of v^l on a tuple, l in 1..m.
MatrixTuple v_power_closed_form(const SemisimpleSpec& s, int l, const MatrixTuple& a);

struct SemisimpleIso {
  CycMatrix T;
  std::size_t r = 0;
  CycNum beta;
};

struct IsoDecisionOptions {
  uint64_t seed = 1;
  /// Largest deterministic grid (points) allowed before giving up.
  std::size_t grid_budget = 2'000'000;
};

/// Decides whether the two specs give isomorphic module algebras by solving
/// T P1 = zeta^-r P2 T, T Q1 = beta^-1 Q2 T for r < t and beta^(m/t) = 1.
std::optional<SemisimpleIso> iso_semisimple(const SemisimpleSpec& s1, const SemisimpleSpec& s2,
                                            const IsoDecisionOptions& opt = {});
/// P2 = zeta^r T P1 T^-1 and Q2 = beta T Q1 T^-1, exactly.
bool verify_semisimple_iso(const SemisimpleSpec& s1, const SemisimpleSpec& s2, const SemisimpleIso& w);
/// The module-algebra isomorphism M_k^t -> M_k^t induced by (T, r).
CycMatrix semisimple_iso_map(const SemisimpleSpec& s1, const CycMatrix& T, std::size_t r);

/// Invertible element in span(basis), if any: random points first, then a
/// grid of (deg+1)^n points, which proves absence when all minors vanish.
std::optional<CycMatrix> invertible_in_span(const std::vector<CycMatrix>& basis, uint64_t seed,
                                            std::size_t grid_budget);

/// Automorphism (T mod scalars, r) of a semisimple module algebra.
struct AutPair {
  CycMatrix T;  // normalized: first nonzero entry (row-major) is 1
  std::size_t r = 0;
  friend bool operator==(const AutPair& a, const AutPair& b) { return a.r == b.r && a.T == b.T; }
};

CycMatrix normalize_projective(const CycMatrix& T);
AutPair make_aut_pair(const SemisimpleSpec& s, const CycMatrix& T, std::size_t r);
std::vector<std::string> aut_pair_violations(const SemisimpleSpec& s, const AutPair& a);
/// (W, s)(T, r) = (WT, r+s) if r+s < t, else (W T Q^-1, r+s-t).
AutPair aut_compose(const AutPair& a1, const AutPair& a2, const SemisimpleSpec& s);
AutPair aut_identity(const SemisimpleSpec& s);
AutPair aut_inverse(const AutPair& a, const SemisimpleSpec& s);
/// Random automorphisms of the spec (solutions of the intertwiner system).
std::vector<AutPair> sample_aut_pairs(const SemisimpleSpec& s, std::size_t count, uint64_t seed);

/// Valid specs for a grid point: zero P, nilpotent chains, cyclic P with a
/// wrap-around entry, and diagonal P when t = m. Random coefficients.
std::vector<SemisimpleSpec> generate_semisimple_specs(int m, std::size_t k, std::size_t t, uint64_t seed);
/// A spec that satisfies every invariant except that P^m is not scalar.
std::optional<SemisimpleSpec> mutate_to_nonscalar(const SemisimpleSpec& s, uint64_t seed);

// ------------------------------------------------------- nilpotent extension

/// A unital algebra B with a Z_m-grading (given by its c operator) that is
/// certified graded-simple.
struct NilpotentExtensionSpec {
  int m = 0;
  FinDimAlgebra B;
  CycMatrix c_B;
  GradingDecomposition grading;
  std::string certificate;
};

NilpotentExtensionSpec make_nilext_spec(int m, FinDimAlgebra B, CycMatrix c_B);

/// A = W_0 + ... + W_{m-1}, W_i = phi^i(B), with basis phi^i(e_j) at index
/// i*dim B + j.
HModuleAlgebra build_nilpotent_extension(const NilpotentExtensionSpec& spec);
/// W_i as a subspace of the extension.
Subspace extension_layer(const NilpotentExtensionSpec& spec, std::size_t i);

struct RecoveredStructure {
  NilpotentExtensionSpec spec;
  std::size_t radical_dim = 0;
  std::size_t nilpotency_index = 0;  // smallest l with J^l = 0
  Subspace top;                      // the graded ideal generating the layers
  std::vector<Subspace> layers;      // v^i of the top ideal
  CycMatrix phi;                     // layer shift with v phi = id on the radical
  CycMatrix iso;                     // build_nilpotent_extension(spec) -> A
  std::vector<std::string> log;
};

/// Rebuilds (m, B) from an H-simple module algebra with nonzero radical and
/// returns an explicit isomorphism from the rebuilt extension.
RecoveredStructure recover_structure(const HModuleAlgebra& M);

/// Whether T: B1 -> B2 is a bijective algebra map with T c1 = c2 T.
bool is_graded_isomorphism(const FinDimAlgebra& B1, const CycMatrix& c1, const FinDimAlgebra& B2, const CycMatrix& c2,
                           const CycMatrix& T, std::string* why = nullptr);

/// Elementary grading on M_k: conjugation by diag(zeta^{g_1}, ..., zeta^{g_k}).
CycMatrix elementary_grading_operator(int m, const std::vector<int>& degrees);

}  // namespace taft
