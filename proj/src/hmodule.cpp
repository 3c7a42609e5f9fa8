#include "taft/hmodule.hpp"

#include <random>

#include "taft/kernels.hpp"
#include "taft/modular.hpp"

namespace taft {

HModuleAlgebra make_hma(FinDimAlgebra A, CycMatrix c_op, CycMatrix v_op) {
  const std::size_t d = A.dim();
  if (c_op.rows() != d || c_op.cols() != d) throw ValidationError("c operator must be dim x dim");
  if (v_op.rows() != d || v_op.cols() != d) throw ValidationError("v operator must be dim x dim");
  if (conductor_of(c_op) != A.m() || conductor_of(v_op) != A.m()) throw ConductorMismatch("operator conductor differs from the algebra's");
  return HModuleAlgebra{TaftAlgebra::create(A.m()), std::move(A), std::move(c_op), std::move(v_op)};
}

bool HmaReport::ok() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

const HmaCheck* HmaReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

const char* HmaReport::derivation() {
  return "c and v generate H as an algebra; if h and g satisfy h(ab) = (h1 a)(h2 b) then so does hg, because "
         "Delta is multiplicative, so the law on generators and basis pairs extends to all of H and all of A by "
         "bilinearity";
}

HmaReport hma_verify(const HModuleAlgebra& M) {
  const std::size_t d = M.dim();
  const int m = M.m();
  const FinDimAlgebra& A = M.A;
  HmaReport rep;
  const CycMatrix I = identity(d, m);
  auto name_pair = [](std::size_t i, std::size_t j) {
    return "e" + std::to_string(i + 1) + ", e" + std::to_string(j + 1);
  };

  HmaCheck cm{"c^m = 1", true, {}};
  if (matrix_power(M.c_op, static_cast<unsigned>(m)) != I) {
    cm.passed = false;
    cm.witness = "c^" + std::to_string(m) + " differs from the identity";
  }
  HmaCheck vm{"v^m = 0", true, {}};
  if (!is_zero(matrix_power(M.v_op, static_cast<unsigned>(m)))) {
    vm.passed = false;
    vm.witness = "v^" + std::to_string(m) + " is nonzero";
  }
  HmaCheck vc{"vc = zeta cv", true, {}};
  if (M.v_op * M.c_op != CycNum::zeta_power(m, 1) * (M.c_op * M.v_op)) {
    vc.passed = false;
    vc.witness = "operator relation fails";
  }

  std::vector<CycVector> ca, va;
  for (std::size_t i = 0; i < d; ++i) {
    ca.push_back(mat_apply(M.c_op, A.basis_vector(i)));
    va.push_back(mat_apply(M.v_op, A.basis_vector(i)));
  }
  HmaCheck cmul{"c(ab) = (ca)(cb)", true, {}};
  HmaCheck vmul{"v(ab) = (ca)(vb) + (va)b", true, {}};
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const CycVector& ab = A.product(i, j);
      if (cmul.passed && mat_apply(M.c_op, ab) != A.multiply(ca[i], ca[j])) {
        cmul.passed = false;
        cmul.witness = name_pair(i, j);
      }
      if (vmul.passed) {
        CycVector rhs = A.multiply(ca[i], va[j]);
        const CycVector t = A.multiply(va[i], A.basis_vector(j));
        for (std::size_t l = 0; l < d; ++l) rhs[l] += t[l];
        if (mat_apply(M.v_op, ab) != rhs) {
          vmul.passed = false;
          vmul.witness = name_pair(i, j);
        }
      }
    }
  }
  rep.checks = {cm, vm, vc, cmul, vmul};
  if (A.unit()) {
    HmaCheck c1{"c(1) = 1", mat_apply(M.c_op, *A.unit()) == *A.unit(), {}};
    HmaCheck v1{"v(1) = 0", is_zero(mat_apply(M.v_op, *A.unit())), {}};
    if (!c1.passed) c1.witness = "c moves the unit";
    if (!v1.passed) v1.witness = "v does not kill the unit";
    rep.checks.push_back(c1);
    rep.checks.push_back(v1);
  }
  return rep;
}

CycMatrix action_matrix(const HModuleAlgebra& M, const HopfElement& h) {
  if (h.parent()->m() != M.m()) throw ConductorMismatch("action: Hopf element from a different Taft algebra");
  const std::size_t d = M.dim();
  const int m = M.m();
  std::vector<CycMatrix> cpow{identity(d, m)}, vpow{identity(d, m)};
  for (int j = 1; j < m; ++j) {
    cpow.push_back(cpow.back() * M.c_op);
    vpow.push_back(vpow.back() * M.v_op);
  }
  CycMatrix out = zeros(d, d, m);
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < m; ++k) {
      const CycNum& s = h.coeff(i, k);
      if (s.is_zero()) continue;
      out = out + s * (cpow[static_cast<std::size_t>(i)] * vpow[static_cast<std::size_t>(k)]);
    }
  }
  return out;
}

CycVector act(const HModuleAlgebra& M, const HopfElement& h, std::span<const CycNum> a) {
  if (a.size() != M.dim()) throw ValidationError("act: vector length differs from algebra dimension");
  const int m = M.m();
  CycVector out = zero_vector(M.dim(), m);
  // v^k a for every k, then c^i on top
  std::vector<CycVector> va{CycVector(a.begin(), a.end())};
  for (int k = 1; k < m; ++k) va.push_back(mat_apply(M.v_op, va.back()));
  for (int k = 0; k < m; ++k) {
    CycVector x = va[static_cast<std::size_t>(k)];
    for (int i = 0; i < m; ++i) {
      if (i > 0) x = mat_apply(M.c_op, x);
      const CycNum& s = h.coeff(i, k);
      if (s.is_zero()) continue;
      for (std::size_t l = 0; l < M.dim(); ++l) out[l].add_scaled(x[l], s);
    }
  }
  return out;
}

const char* to_string(Simplicity s) {
  switch (s) {
    case Simplicity::CertifiedSimple: return "CertifiedSimple";
    case Simplicity::NotSimple: return "NotSimple";
    case Simplicity::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

struct ModHma {
  PrimeField F;
  std::size_t d = 0;
  std::vector<ModMatrix> L, R;
  ModMatrix c, v;
  std::optional<std::vector<uint32_t>> unit;
};

std::optional<ModHma> try_reduce_hma(const HModuleAlgebra& M, const PrimeField& F) {
  try {
    ModHma r;
    r.F = F;
    r.d = M.dim();
    const std::size_t d = r.d;
    r.L.assign(d, ModMatrix(d, d));
    r.R.assign(d, ModMatrix(d, d));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        const auto& p = M.A.product(i, j);
        for (std::size_t l = 0; l < d; ++l) {
          if (p[l].is_zero()) continue;
          const uint32_t x = reduce(p[l], F);
          r.L[i](l, j) = x;
          r.R[j](l, i) = x;
        }
      }
    }
    r.c = reduce(M.c_op, F);
    r.v = reduce(M.v_op, F);
    if (M.A.unit()) {
      std::vector<uint32_t> u;
      for (const auto& x : *M.A.unit()) u.push_back(x.is_zero() ? 0 : reduce(x, F));
      r.unit = std::move(u);
    }
    return r;
  } catch (const DivisionByZero&) {
    return std::nullopt;
  }
}

ModHma reduce_hma(const HModuleAlgebra& M, uint64_t seed) {
  for (uint64_t s = seed;; ++s) {
    if (auto r = try_reduce_hma(M, choose_prime_field(M.m(), s))) return *r;
  }
}

/// Dimension of the span of x under the operators (or their transposes).
std::size_t spin_rank(const ModHma& H, std::vector<uint32_t> x, const std::vector<const ModMatrix*>& ops, bool transposed) {
  const uint32_t p = H.F.p;
  ModularEchelon E(p, H.d);
  std::vector<std::vector<uint32_t>> queue;
  if (E.insert(x)) queue.push_back(std::move(x));
  while (!queue.empty() && !E.full()) {
    std::vector<uint32_t> y = std::move(queue.back());
    queue.pop_back();
    for (const ModMatrix* op : ops) {
      std::vector<uint32_t> z(H.d, 0);
      if (transposed) {
        for (std::size_t l = 0; l < H.d; ++l) {
          if (y[l]) kernels::axpy_mod(z, op->row(l), y[l], p);
        }
      } else {
        z = mod_apply(*op, y, p);
      }
      std::vector<uint32_t> r = E.reduce(std::move(z));
      bool nz = false;
      for (auto e : r) nz |= e != 0;
      if (!nz) continue;
      E.insert(r);
      queue.push_back(std::move(r));
      if (E.full()) break;
    }
  }
  return E.rank();
}

std::vector<const ModMatrix*> generator_ops(const ModHma& H) {
  std::vector<const ModMatrix*> ops;
  for (std::size_t i = 0; i < H.d; ++i) {
    ops.push_back(&H.L[i]);
    ops.push_back(&H.R[i]);
  }
  ops.push_back(&H.c);
  ops.push_back(&H.v);
  return ops;
}

/// dim {z : z central, cz = z, vz = 0} modulo p. For unital A the commutant
/// of the operator algebra is {R_z} for exactly these z.
std::size_t commutant_dim(const ModHma& H) {
  const uint32_t p = H.F.p;
  const std::size_t d = H.d;
  ModularEchelon E(p, d);
  auto add_rows = [&](const ModMatrix& X, const ModMatrix* Y, bool minus_identity) {
    for (std::size_t l = 0; l < d && E.rank() + 1 < d; ++l) {
      std::vector<uint32_t> row(d);
      for (std::size_t j = 0; j < d; ++j) {
        uint32_t x = X(l, j);
        if (Y) x = H.F.sub(x, (*Y)(l, j));
        if (minus_identity && l == j) x = H.F.sub(x, 1);
        row[j] = x;
      }
      E.insert(std::move(row));
    }
  };
  add_rows(H.c, nullptr, true);
  add_rows(H.v, nullptr, false);
  for (std::size_t i = 0; i < d && E.rank() + 1 < d; ++i) add_rows(H.L[i], &H.R[i], false);
  return d - E.rank();
}

ModMatrix random_operator(const ModHma& H, std::mt19937_64& rng) {
  const uint32_t p = H.F.p;
  std::uniform_int_distribution<uint32_t> pick(0, p - 1);
  ModMatrix X(H.d, H.d);
  auto add = [&](const ModMatrix& G) {
    const uint32_t s = pick(rng);
    for (std::size_t l = 0; l < H.d; ++l) kernels::axpy_mod(X.row(l), G.row(l), s, p);
  };
  for (std::size_t i = 0; i < H.d; ++i) {
    add(H.L[i]);
    add(H.R[i]);
  }
  add(H.c);
  add(H.v);
  return X;
}

/// Holt-Rees form of Norton's irreducibility test, run modulo p.
bool norton_irreducible(const ModHma& H, std::size_t attempts, std::mt19937_64& rng, std::string& detail) {
  const uint32_t p = H.F.p;
  const auto ops = generator_ops(H);
  for (std::size_t a = 0; a < attempts; ++a) {
    ModMatrix theta = mod_mul(random_operator(H, rng), random_operator(H, rng), p);
    const ModMatrix extra = random_operator(H, rng);
    for (std::size_t i = 0; i < theta.data.size(); ++i) theta.data[i] = H.F.add(theta.data[i], extra.data[i]);
    for (uint32_t lambda : mod_poly_roots(mod_charpoly(theta, p), p, rng)) {
      ModMatrix shifted = theta;
      for (std::size_t i = 0; i < H.d; ++i) shifted(i, i) = H.F.sub(shifted(i, i), lambda);
      auto ker = mod_nullspace(shifted, p);
      if (ker.size() != 1) continue;
      if (spin_rank(H, ker[0], ops, false) < H.d) {
        detail = "a vector in the kernel of a singular operator spans a proper submodule modulo p";
        return false;
      }
      auto coker = mod_nullspace(mod_transpose(shifted), p);
      if (spin_rank(H, coker[0], ops, true) < H.d) {
        detail = "dual spin is proper modulo p";
        return false;
      }
      return true;
    }
  }
  detail = "no operator with a one-dimensional eigenspace found";
  return false;
}

/// Span of the unital operator algebra, computed directly in End(A) mod p.
std::size_t operator_algebra_dim(const ModHma& H) {
  const uint32_t p = H.F.p;
  const std::size_t d = H.d;
  const auto ops = generator_ops(H);
  ModularEchelon E(p, d * d);
  std::vector<ModMatrix> queue;
  ModMatrix I = mod_identity(d);
  E.insert(I.data);
  queue.push_back(I);
  while (!queue.empty() && !E.full()) {
    ModMatrix X = std::move(queue.back());
    queue.pop_back();
    for (const ModMatrix* G : ops) {
      ModMatrix Y = mod_mul(*G, X, p);
      if (E.insert(Y.data)) queue.push_back(std::move(Y));
      if (E.full()) break;
    }
  }
  return E.rank();
}

bool algebra_square_nonzero(const FinDimAlgebra& A) {
  for (const auto& v : A.structure_constants()) {
    if (!is_zero(v)) return true;
  }
  return false;
}

}  // namespace

std::optional<std::string> burnside_certificate(const HModuleAlgebra& M, const SimplicityOptions& opt) {
  const ModHma H = reduce_hma(M, opt.seed);
  const std::string prime = "p=" + std::to_string(H.F.p);
  if (H.unit) {
    if (commutant_dim(H) != 1) return std::nullopt;
    std::mt19937_64 rng(opt.seed ^ 0x5DEECE66Dull);
    std::string detail;
    if (norton_irreducible(H, opt.norton_attempts, rng, detail)) {
      return "burnside-density mod " + prime + " (Norton irreducibility, scalar commutant)";
    }
  }
  if (M.dim() <= opt.direct_closure_limit && operator_algebra_dim(H) == M.dim() * M.dim()) {
    return "burnside-span mod " + prime + " (operator algebra spans End(A))";
  }
  return std::nullopt;
}

bool is_invariant_ideal(const HModuleAlgebra& M, const Subspace& I, std::string* why) {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  if (I.ambient() != M.dim()) return fail("ambient dimension mismatch");
  if (I.dim() == 0) return fail("ideal is zero");
  if (I.dim() == M.dim()) return fail("ideal is the whole algebra");
  for (const auto& b : I.basis()) {
    if (!I.contains(mat_apply(M.c_op, b))) return fail("not stable under c");
    if (!I.contains(mat_apply(M.v_op, b))) return fail("not stable under v");
    for (std::size_t i = 0; i < M.dim(); ++i) {
      const CycVector ei = M.A.basis_vector(i);
      if (!I.contains(M.A.multiply(ei, b)) || !I.contains(M.A.multiply(b, ei))) return fail("not a two-sided ideal");
    }
  }
  return true;
}

std::optional<Subspace> find_invariant_ideal(const HModuleAlgebra& M, const SimplicityOptions& opt) {
  const std::size_t d = M.dim();
  const int m = M.m();
  std::vector<CycVector> cands;
  for (std::size_t i = 0; i < d; ++i) cands.push_back(M.A.basis_vector(i));
  try {
    const GradingDecomposition G = grading_from_c(M.A, M.c_op, m);
    for (const auto& comp : G.components)
      for (const auto& b : comp.basis()) cands.push_back(b);
  } catch (const ValidationError&) {
  }
  auto add_kernel = [&](const CycMatrix& X) {
    for (auto& z : nullspace(X)) cands.push_back(std::move(z));
  };
  add_kernel(M.v_op);
  for (std::size_t i = 0; i < d; ++i) {
    add_kernel(left_mult_operator(M.A, M.A.basis_vector(i)));
    add_kernel(right_mult_operator(M.A, M.A.basis_vector(i)));
  }
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<int> small(-3, 3);
  for (std::size_t r = 0; r < opt.random_candidates; ++r) {
    CycVector x = zero_vector(d, m);
    for (auto& e : x) e = CycNum::rational(m, small(rng));
    cands.push_back(std::move(x));
  }
  const std::vector<CycMatrix> extra{M.c_op, M.v_op};
  for (const auto& x : cands) {
    if (is_zero(x)) continue;
    Subspace I = ideal_generated_by(M.A, Subspace::span(m, d, {x}), extra);
    if (I.dim() < d) return I;
  }
  return std::nullopt;
}

SimplicityResult is_h_simple(const HModuleAlgebra& M, const SimplicityOptions& opt) {
  SimplicityResult res;
  if (!algebra_square_nonzero(M.A)) {
    res.verdict = Simplicity::NotSimple;
    res.method = "square-zero";
    res.detail = "A^2 = 0";
    return res;
  }
  if (auto method = burnside_certificate(M, opt)) {
    res.verdict = Simplicity::CertifiedSimple;
    res.method = *method;
    return res;
  }
  if (auto I = find_invariant_ideal(M, opt)) {
    std::string why;
    if (!is_invariant_ideal(M, *I, &why)) throw std::logic_error("invariant ideal search returned a bad witness: " + why);
    res.verdict = Simplicity::NotSimple;
    res.method = "ideal-search";
    res.detail = "invariant ideal of dimension " + std::to_string(I->dim());
    res.witness = std::move(I);
    return res;
  }
  res.verdict = Simplicity::Inconclusive;
  res.method = "none";
  res.detail = "no certificate over Q(zeta) and no invariant ideal among the candidates";
  return res;
}

}  // namespace taft
