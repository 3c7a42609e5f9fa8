#include "taft/constructions.hpp"
#include "taft/qcombinatorics.hpp"

namespace taft {

CycMatrix elementary_grading_operator(int m, const std::vector<int>& degrees) {
  const std::size_t k = degrees.size();
  if (k == 0) throw ValidationError("elementary grading needs at least one degree");
  CycMatrix c = zeros(k * k, k * k, m);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) c(i * k + j, i * k + j) = CycNum::zeta_power(m, degrees[i] - degrees[j]);
  return c;
}

bool is_graded_isomorphism(const FinDimAlgebra& B1, const CycMatrix& c1, const FinDimAlgebra& B2, const CycMatrix& c2,
                           const CycMatrix& T, std::string* why) {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  if (B1.dim() != B2.dim()) return fail("dimension mismatch");
  if (T.rows() != B2.dim() || T.cols() != B1.dim()) return fail("map has wrong shape");
  if (!inverse(T)) return fail("map is singular");
  if (T * c1 != c2 * T) return fail("map does not preserve the grading");
  std::string w;
  if (!is_algebra_homomorphism(B1, B2, T, &w)) return fail("map is not multiplicative at " + w);
  return true;
}

NilpotentExtensionSpec make_nilext_spec(int m, FinDimAlgebra B, CycMatrix c_B) {
  if (B.m() != m) throw ConductorMismatch("nilpotent extension: B is over a different cyclotomic field");
  if (!B.is_unital()) throw ValidationError("nilpotent extension: B must be unital");
  GradingDecomposition G = grading_from_c(B, c_B, m);
  // graded ideals of B are the subspaces stable under L, R and c, i.e. the
  // invariant ideals of B with v acting as zero
  HModuleAlgebra probe = make_hma(B, c_B, zeros(B.dim(), B.dim(), m));
  auto cert = burnside_certificate(probe);
  if (!cert) throw ValidationError("nilpotent extension: B is not certified graded-simple");
  return NilpotentExtensionSpec{m, std::move(B), std::move(c_B), std::move(G), *cert};
}

HModuleAlgebra build_nilpotent_extension(const NilpotentExtensionSpec& spec) {
  const int m = spec.m;
  const FinDimAlgebra& B = spec.B;
  const std::size_t e = B.dim();
  const std::size_t d = static_cast<std::size_t>(m) * e;
  const QBinomTable binom(CycNum::zeta_power(m, 1));
  std::vector<CycMatrix> cpow{identity(e, m)};
  for (int j = 1; j < m; ++j) cpow.push_back(cpow.back() * spec.c_B);

  // phi^k(a) phi^l(b) = binom(k+l, k)_zeta phi^{k+l}((c^l a) b)
  std::vector<CycVector> mult(d * d, zero_vector(d, m));
  for (int k = 0; k < m; ++k) {
    for (int l = 0; k + l < m; ++l) {
      const CycNum& q = binom(static_cast<unsigned>(k + l), static_cast<unsigned>(k));
      if (q.is_zero()) continue;
      for (std::size_t a = 0; a < e; ++a) {
        const CycVector ca = mat_apply(cpow[static_cast<std::size_t>(l)], B.basis_vector(a));
        for (std::size_t b = 0; b < e; ++b) {
          const CycVector prod = B.multiply(ca, B.basis_vector(b));
          CycVector& out = mult[(static_cast<std::size_t>(k) * e + a) * d + static_cast<std::size_t>(l) * e + b];
          for (std::size_t r = 0; r < e; ++r) out[static_cast<std::size_t>(k + l) * e + r] = q * prod[r];
        }
      }
    }
  }
  CycVector unit = zero_vector(d, m);
  for (std::size_t r = 0; r < e; ++r) unit[r] = (*B.unit())[r];

  CycMatrix c = zeros(d, d, m), v = zeros(d, d, m);
  for (int i = 0; i < m; ++i) {
    const CycNum z = CycNum::zeta_power(m, i);
    const std::size_t off = static_cast<std::size_t>(i) * e;
    for (std::size_t r = 0; r < e; ++r)
      for (std::size_t j = 0; j < e; ++j) c(off + r, off + j) = z * spec.c_B(r, j);
    if (i > 0) {
      for (std::size_t j = 0; j < e; ++j) v(off - e + j, off + j) = CycNum::one(m);
    }
  }
  return make_hma(FinDimAlgebra(m, d, std::move(mult), std::move(unit)), std::move(c), std::move(v));
}

Subspace extension_layer(const NilpotentExtensionSpec& spec, std::size_t i) {
  const std::size_t e = spec.B.dim();
  const std::size_t d = static_cast<std::size_t>(spec.m) * e;
  std::vector<CycVector> gens;
  for (std::size_t j = 0; j < e; ++j) gens.push_back(unit_vector(d, i * e + j, spec.m));
  return Subspace::span(spec.m, d, gens);
}

RecoveredStructure recover_structure(const HModuleAlgebra& M) {
  const int m = M.m();
  const std::size_t d = M.dim();
  const FinDimAlgebra& A = M.A;
  RecoveredStructure out;
  auto fail = [](const std::string& s) { throw ValidationError("recover_structure: " + s); };

  const Subspace J = jacobson_radical(A);
  out.radical_dim = J.dim();
  if (J.dim() == 0) fail("precondition failed: J(A) = 0, the algebra is semisimple");
  auto cert = burnside_certificate(M);
  if (!cert) fail("precondition failed: the module algebra is not certified H-simple");
  out.log.push_back("H-simple: " + *cert);
  if (!A.is_unital()) fail("the algebra has no unit");

  const Subspace K = Subspace::span(m, d, nullspace(M.v_op));
  if (K.intersect(J).dim() != 0 || K.dim() + J.dim() != d) fail("ker v is not a complement of J(A)");
  for (const auto& x : K.basis())
    for (const auto& y : K.basis())
      if (!K.contains(A.multiply(x, y))) fail("ker v is not a subalgebra");
  if (!K.contains(*A.unit())) fail("ker v does not contain the unit");
  out.log.push_back("ker v complements J(A), dim " + std::to_string(K.dim()));

  std::vector<Subspace> powers{J};
  while (powers.back().dim() > 0) {
    if (powers.size() > d + 1) fail("J(A) is not nilpotent");
    powers.push_back(subspace_product(A, powers.back(), J));
  }
  out.nilpotency_index = powers.size();  // J^l = 0 with l = powers.size()
  const Subspace& top_power = powers[powers.size() - 2];
  out.log.push_back("J^" + std::to_string(out.nilpotency_index) + " = 0");

  const GradingDecomposition G = grading_from_c(A, M.c_op, m);
  out.top = ideal_generated_by(A, Subspace::span(m, d, {top_power.basis().front()}), G.projections);
  const std::size_t e = out.top.dim();

  // basis S: column i*e + j is v^i y_j
  std::vector<CycVector> cols;
  std::vector<CycVector> layer = out.top.basis();
  for (int i = 0; i < m; ++i) {
    out.layers.push_back(Subspace::span(m, d, layer));
    if (out.layers.back().dim() != e) fail("v^" + std::to_string(i) + " is not injective on the top graded ideal");
    cols.insert(cols.end(), layer.begin(), layer.end());
    for (auto& y : layer) y = mat_apply(M.v_op, y);
  }
  if (cols.size() != d) fail("the layers v^i of the top ideal do not fill the algebra");
  const CycMatrix S = from_columns(cols, d, m);
  auto Sinv = inverse(S);
  if (!Sinv) fail("the layers v^i of the top ideal are not a direct sum");
  if (!(out.layers.back() == K)) fail("the last layer differs from ker v");
  out.log.push_back("layers form a direct sum of " + std::to_string(m) + " copies of dim " + std::to_string(e));

  CycMatrix shift = zeros(d, d, m);
  for (std::size_t i = 1; i < static_cast<std::size_t>(m); ++i)
    for (std::size_t j = 0; j < e; ++j) shift((i - 1) * e + j, i * e + j) = CycNum::one(m);
  out.phi = S * shift * *Sinv;

  // b_j = v^{m-1} y_j; phi^i(b_j) is column (m-1-i)*e + j of S
  auto phi_pow = [&](std::size_t i, std::size_t j) { return cols[(static_cast<std::size_t>(m) - 1 - i) * e + j]; };
  auto coords_in_B = [&](const CycVector& x) {
    CycVector s = mat_apply(*Sinv, x);
    for (std::size_t r = 0; r < (static_cast<std::size_t>(m) - 1) * e; ++r) {
      if (!s[r].is_zero()) fail("an element expected in ker v has components outside it");
    }
    return CycVector(s.begin() + static_cast<std::ptrdiff_t>((static_cast<std::size_t>(m) - 1) * e), s.end());
  };
  std::vector<CycVector> bmult;
  for (std::size_t a = 0; a < e; ++a)
    for (std::size_t b = 0; b < e; ++b) bmult.push_back(coords_in_B(A.multiply(phi_pow(0, a), phi_pow(0, b))));
  CycMatrix cB = zeros(e, e, m);
  for (std::size_t a = 0; a < e; ++a) {
    CycVector col = coords_in_B(mat_apply(M.c_op, phi_pow(0, a)));
    for (std::size_t r = 0; r < e; ++r) cB(r, a) = col[r];
  }
  FinDimAlgebra Brec(m, e, std::move(bmult), coords_in_B(*A.unit()));

  // phi^k(a) phi^l(b) = binom(k+l, k)_zeta phi^{k+l}((c^l a) b) on basis pairs
  const QBinomTable binom(CycNum::zeta_power(m, 1));
  std::vector<CycMatrix> phipow{identity(d, m)}, cpow{identity(d, m)};
  for (int i = 1; i < m; ++i) {
    phipow.push_back(phipow.back() * out.phi);
    cpow.push_back(cpow.back() * M.c_op);
  }
  if (!is_zero(phipow.back() * out.phi)) fail("the layer shift is not nilpotent of order m");
  for (std::size_t k = 0; k < static_cast<std::size_t>(m); ++k) {
    for (std::size_t l = 0; l < static_cast<std::size_t>(m); ++l) {
      for (std::size_t a = 0; a < e; ++a) {
        for (std::size_t b = 0; b < e; ++b) {
          const CycVector lhs = A.multiply(phi_pow(k, a), phi_pow(l, b));
          CycVector rhs = zero_vector(d, m);
          if (k + l < static_cast<std::size_t>(m)) {
            const CycVector inner = A.multiply(mat_apply(cpow[l], phi_pow(0, a)), phi_pow(0, b));
            const CycNum q = binom(static_cast<unsigned>(k + l), static_cast<unsigned>(k));
            rhs = mat_apply(q * phipow[k + l], inner);
          }
          if (lhs != rhs) {
            fail("phi-multiplication rule fails for k=" + std::to_string(k) + ", l=" + std::to_string(l));
          }
        }
      }
    }
  }
  out.log.push_back("phi-multiplication rule verified on all basis pairs");

  out.spec = make_nilext_spec(m, std::move(Brec), std::move(cB));
  const HModuleAlgebra N = build_nilpotent_extension(out.spec);
  std::vector<CycVector> iso_cols;
  for (std::size_t i = 0; i < static_cast<std::size_t>(m); ++i)
    for (std::size_t j = 0; j < e; ++j) iso_cols.push_back(phi_pow(i, j));
  out.iso = from_columns(iso_cols, d, m);
  std::string why;
  if (!is_hma_isomorphism(N, M, out.iso, &why)) fail("rebuilt extension is not isomorphic via the layer map: " + why);
  out.log.push_back("explicit isomorphism from the rebuilt extension verified");
  return out;
}

}  // namespace taft
