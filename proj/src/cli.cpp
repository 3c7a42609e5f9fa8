#include "taft/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "taft/constructions.hpp"
#include "taft/error.hpp"
#include "taft/identities.hpp"
#include "taft/json_io.hpp"
#include "taft/qcombinatorics.hpp"

namespace taft::cli {

using io::Json;

namespace {

// A check that ran to completion but failed; reported with exit code 2.
struct CheckFailed {
  Json report;
};

CycMatrix int_matrix(int m, std::initializer_list<std::initializer_list<long>> rows) {
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

Json basis_json(const std::vector<CycVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(io::vector_to_json(v));
  return out;
}

void emit(const Json& doc, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) out << doc.dump(2) << '\n';
  else io::write_json_file(out_path, doc);
}

// Accepts an "algebra" document or the algebra inside an hma or graded_algebra document.
FinDimAlgebra algebra_input(const Json& doc) {
  const std::string kind = io::document_kind(doc);
  if (kind == "hma") return io::hma_from_json(doc).A;
  if (kind == "graded_algebra") return io::graded_algebra_from_json(doc).B;
  io::check_document(doc, "algebra");
  if (!doc.contains("m") || !doc["m"].is_number_integer()) throw ValidationError("schema: algebra: missing field \"m\"");
  return io::algebra_from_json(doc, doc["m"].get<int>());
}

}  // namespace

std::vector<std::string> write_fixtures(const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  std::vector<std::string> names;
  auto put = [&](const std::string& name, const Json& doc) {
    io::write_json_file((fs::path(dir) / name).string(), doc);
    names.push_back(name);
  };
  const int m = 2;
  const CycMatrix E2 = identity(2, m), E1 = identity(1, m);
  const CycMatrix D = int_matrix(m, {{1, 0}, {0, -1}});

  put("m2_trivial.json", io::semisimple_spec_to_json(make_semisimple_spec(m, 2, 1, zeros(2, 2, m), E2)));
  put("m2_graded.json", io::semisimple_spec_to_json(make_semisimple_spec(m, 2, 1, zeros(2, 2, m), D)));
  put("sweedler_p_gamma3.json",
      io::semisimple_spec_to_json(make_semisimple_spec(m, 2, 1, int_matrix(m, {{0, 1}, {3, 0}}), D)));
  for (auto [name, a] : {std::pair{"ff_alpha_1.json", 1L}, {"ff_alpha_minus1.json", -1L}, {"ff_alpha_2.json", 2L}})
    put(name, io::semisimple_spec_to_json(make_semisimple_spec(m, 1, 2, int_matrix(m, {{a}}), E1)));
  put("k2_diag.json", io::semisimple_spec_to_json(make_semisimple_spec(m, 2, 2, D, E2)));
  put("k2_nilpotent.json",
      io::semisimple_spec_to_json(make_semisimple_spec(m, 2, 2, int_matrix(m, {{0, 1}, {0, 0}}), E2)));

  const FinDimAlgebra F = matrix_algebra(m, 1);
  put("b_field_m2.json", io::graded_algebra_to_json({m, F, E1}));
  put("b_m2_elementary.json", io::graded_algebra_to_json({m, matrix_algebra(m, 2), elementary_grading_operator(m, {0, 1})}));
  put("sweedler2dim.json", io::hma_to_json(build_nilpotent_extension(make_nilext_spec(m, F, E1))));
  // reducible negative: F + F with the trivial action
  const FinDimAlgebra FF = direct_sum(F, F);
  put("ff_trivial_sum.json", io::hma_to_json(make_hma(FF, identity(2, m), zeros(2, 2, m))));
  return names;
}

namespace {

Json hopf_check(int m) {
  const AxiomReport rep = hopf_verify_axioms(TaftAlgebra::create(m));
  Json checks = Json::array();
  for (const auto& c : rep.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
  Json doc{{"format", io::kFormat}, {"kind", "hopf_report"}, {"m", m}, {"ok", rep.all_passed()}, {"checks", checks}};
  if (!rep.all_passed()) throw CheckFailed{doc};
  return doc;
}

Json qbinom(int m, unsigned n, long e) {
  const CycNum q = CycNum::zeta_power(m, e);
  if (n == 0) n = static_cast<unsigned>(2 * m);
  const QBinomTable table(q, n);
  Json rows = Json::array();
  for (unsigned i = 0; i <= n; ++i) {
    Json row = Json::array();
    for (unsigned k = 0; k <= i; ++k) row.push_back(io::cyc_to_json(table(i, k)));
    rows.push_back(std::move(row));
  }
  return Json{{"format", io::kFormat}, {"kind", "qbinom_table"}, {"m", m}, {"q", Json{{"zeta", e}}}, {"rows", rows}};
}

Json verify(const HModuleAlgebra& M) {
  const HmaReport rep = hma_verify(M);
  Json checks = Json::array();
  for (const auto& c : rep.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
  Json doc{{"format", io::kFormat}, {"kind", "hma_report"}, {"ok", rep.ok()}, {"checks", checks}};
  if (!rep.ok()) throw CheckFailed{doc};
  return doc;
}

Json simple(const HModuleAlgebra& M) {
  const SimplicityResult r = is_h_simple(M);
  Json doc{{"format", io::kFormat}, {"kind", "simplicity"}, {"verdict", to_string(r.verdict)},
           {"method", r.method}, {"detail", r.detail}};
  doc["witness"] = r.witness ? basis_json(r.witness->basis()) : Json(nullptr);
  return doc;
}

Json iso_ss(const SemisimpleSpec& a, const SemisimpleSpec& b) {
  const auto w = iso_semisimple(a, b);
  Json doc{{"format", io::kFormat}, {"kind", "semisimple_iso"}, {"isomorphic", w.has_value()}};
  if (w) {
    doc["T"] = io::matrix_to_json(w->T);
    doc["r"] = w->r;
    doc["beta"] = io::cyc_to_json(w->beta);
    doc["verified"] = verify_semisimple_iso(a, b, *w);
  }
  return doc;
}

Json iso_generic(const HModuleAlgebra& a, const HModuleAlgebra& b) {
  const auto T = hma_isomorphic_generic(a, b);
  Json doc{{"format", io::kFormat}, {"kind", "hma_iso"}, {"result", T ? "isomorphic" : "none-found"}};
  if (T) {
    doc["T"] = io::matrix_to_json(*T);
    doc["verified"] = is_hma_isomorphism(a, b, *T);
  }
  return doc;
}

Json radical(const FinDimAlgebra& A) {
  const Subspace J = jacobson_radical(A);
  return Json{{"format", io::kFormat}, {"kind", "radical"}, {"dim", J.dim()}, {"basis", basis_json(J.basis())}};
}

Json grading(const FinDimAlgebra& A, const CycMatrix& c, int m) {
  const GradingDecomposition G = grading_from_c(A, c, m);
  Json comps = Json::array();
  for (std::size_t g = 0; g < G.components.size(); ++g)
    comps.push_back(Json{{"degree", g}, {"dim", G.components[g].dim()}, {"basis", basis_json(G.components[g].basis())}});
  return Json{{"format", io::kFormat}, {"kind", "grading"}, {"m", m}, {"components", comps}};
}

Json recover(const HModuleAlgebra& M) {
  const RecoveredStructure r = recover_structure(M);
  return Json{{"format", io::kFormat},
              {"kind", "recovered_structure"},
              {"radical_dim", r.radical_dim},
              {"nilpotency_index", r.nilpotency_index},
              {"B", io::graded_algebra_to_json({r.spec.m, r.spec.B, r.spec.c_B})},
              {"certificate", r.spec.certificate},
              {"iso", io::matrix_to_json(r.iso)},
              {"log", r.log}};
}

CodimBackend parse_backend(const std::string& s) {
  if (s == "graded") return CodimBackend::Graded;
  if (s == "literal") return CodimBackend::LiteralModular;
  if (s == "dense") return CodimBackend::DenseExact;
  throw ValidationError("codim: unknown backend \"" + s + "\" (graded, literal, dense)");
}

void codim(const HModuleAlgebra& M, std::size_t n, const CodimOptions& opt, const std::string& report,
           std::ostream& out) {
  if (report.empty()) {
    const CodimResult r = codimension(M, n, opt);
    out << Json{{"n", r.n}, {"c", r.value}}.dump() << '\n';
    return;
  }
  const auto rows = codim_growth_report(M, n, opt);
  if (report == "csv") {
    out << "n,rows,cols,c_n,bound_ok,wall_ms\n";
    for (const auto& r : rows) {
      out << r.result.n << ',' << r.result.rows << ',' << r.result.cols << ',' << r.result.value << ','
          << (r.bound_ok ? "true" : "false") << ',' << std::fixed << std::setprecision(1) << r.wall_ms << '\n';
    }
  } else {
    Json table = Json::array();
    for (const auto& r : rows) {
      table.push_back(Json{{"n", r.result.n}, {"rows", r.result.rows}, {"cols", r.result.cols}, {"c_n", r.result.value},
                           {"root", r.root}, {"bound_ok", r.bound_ok}, {"exact", r.result.exact},
                           {"method", r.result.method}, {"wall_ms", r.wall_ms}});
    }
    out << Json{{"format", io::kFormat}, {"kind", "codim_report"}, {"rows", table}}.dump(2) << '\n';
  }
  for (const auto& r : rows)
    if (!r.bound_ok) throw ValidationError("codim: bound c_n <= dim(A)^(n+1) violated at n = " + std::to_string(r.result.n));
}

void diagnose(std::ostream& err, const char* kind, const std::string& msg) {
  err << Json{{"error", kind}, {"message", msg}}.dump() << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Taft Hopf algebra module-algebra toolkit", "taft"};
  app.require_subcommand(1);
  std::string in, out_path, a_path, b_path, c_path, report, backend = "graded", out_dir = "fixtures";
  int m = 0;
  unsigned n = 0;
  long qexp = 1;
  std::uint64_t budget = CodimOptions{}.row_budget;

  auto* hc = app.add_subcommand("hopf-check", "verify the Hopf axioms of H_{m^2}(zeta)");
  hc->add_option("--m", m, "order of zeta")->required()->check(CLI::Range(2, 64));
  auto* qb = app.add_subcommand("qbinom", "table of Gaussian binomials at a power of zeta");
  qb->add_option("--m", m)->required()->check(CLI::Range(2, 64));
  qb->add_option("--n", n, "largest n (default 2m)");
  qb->add_option("--q", qexp, "q = zeta^e");
  auto* cons = app.add_subcommand("construct", "build a module algebra");
  cons->require_subcommand(1);
  auto* css = cons->add_subcommand("ss", "semisimple family from (m, k, t, P, Q)");
  css->add_option("--in", in)->required();
  css->add_option("--out", out_path);
  auto* cne = cons->add_subcommand("nilext", "nilpotent extension of a graded-simple algebra");
  cne->add_option("--in", in)->required();
  cne->add_option("--m", m);
  cne->add_option("--out", out_path);
  auto* ver = app.add_subcommand("verify", "check the module-algebra axioms");
  ver->add_option("--in", in)->required();
  auto* sim = app.add_subcommand("simple", "decide H-simplicity");
  sim->add_option("--in", in)->required();
  auto* iss = app.add_subcommand("iso-ss", "isomorphism of two semisimple specs");
  iss->add_option("--a", a_path)->required();
  iss->add_option("--b", b_path)->required();
  auto* iso = app.add_subcommand("iso", "search for an isomorphism of two module algebras");
  iso->add_option("--a", a_path)->required();
  iso->add_option("--b", b_path)->required();
  auto* rad = app.add_subcommand("radical", "Jacobson radical");
  rad->add_option("--in", in)->required();
  auto* gr = app.add_subcommand("grading", "Z_m-grading induced by c");
  gr->add_option("--in", in)->required();
  gr->add_option("--c", c_path)->required();
  gr->add_option("--m", m)->required()->check(CLI::Range(2, 64));
  auto* rec = app.add_subcommand("recover", "recover (m, B) from a non-semisimple H-simple algebra");
  rec->add_option("--in", in)->required();
  rec->add_option("--out", out_path);
  auto* cod = app.add_subcommand("codim", "H-codimension c_n");
  cod->add_option("--in", in)->required();
  cod->add_option("--n", n)->required()->check(CLI::Range(1, 32));
  cod->add_option("--budget", budget, "row budget");
  cod->add_option("--report", report)->check(CLI::IsMember({"csv", "json"}));
  cod->add_option("--backend", backend)->check(CLI::IsMember({"graded", "literal", "dense"}));
  auto* fx = app.add_subcommand("fixtures", "write the fixture corpus");
  fx->add_option("--out-dir", out_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    diagnose(err, "usage", e.what());
    return 2;
  }

  try {
    if (*hc) emit(hopf_check(m), "", out);
    else if (*qb) emit(qbinom(m, n, qexp), "", out);
    else if (*css) emit(io::hma_to_json(build_semisimple(io::semisimple_spec_from_json(io::read_json_file(in)))), out_path, out);
    else if (*cne) {
      const io::GradedAlgebra g = io::graded_algebra_from_json(io::read_json_file(in));
      if (m && m != g.m) throw ValidationError("construct nilext: --m " + std::to_string(m) + " differs from the input m");
      emit(io::hma_to_json(build_nilpotent_extension(make_nilext_spec(g.m, g.B, g.c))), out_path, out);
    } else if (*ver) emit(verify(io::hma_from_json(io::read_json_file(in))), "", out);
    else if (*sim) emit(simple(io::hma_from_json(io::read_json_file(in))), "", out);
    else if (*iss)
      emit(iso_ss(io::semisimple_spec_from_json(io::read_json_file(a_path)),
                  io::semisimple_spec_from_json(io::read_json_file(b_path))), "", out);
    else if (*iso)
      emit(iso_generic(io::hma_from_json(io::read_json_file(a_path)), io::hma_from_json(io::read_json_file(b_path))), "", out);
    else if (*rad) emit(radical(algebra_input(io::read_json_file(in))), "", out);
    else if (*gr) {
      const FinDimAlgebra A = algebra_input(io::read_json_file(in));
      if (A.m() != m) throw ConductorMismatch("grading: --m differs from the algebra's m");
      emit(grading(A, io::matrix_document_from_json(io::read_json_file(c_path), m), m), "", out);
    } else if (*rec) emit(recover(io::hma_from_json(io::read_json_file(in))), out_path, out);
    else if (*cod) {
      CodimOptions opt;
      opt.row_budget = budget;
      opt.backend = parse_backend(backend);
      codim(io::hma_from_json(io::read_json_file(in)), n, opt, report, out);
    } else if (*fx) {
      Json list = Json::array();
      for (const auto& f : write_fixtures(out_dir)) list.push_back(f);
      out << Json{{"written", list}, {"dir", out_dir}}.dump(2) << '\n';
    }
  } catch (const CheckFailed& f) {
    out << f.report.dump(2) << '\n';
    diagnose(err, "check-failed", "one or more checks failed; see the report");
    return 2;
  } catch (const NonAssociative& e) {
    diagnose(err, "non-associative", e.what());
    return 2;
  } catch (const ValidationError& e) {
    diagnose(err, "validation", e.what());
    return 2;
  } catch (const DivisionByZero& e) {
    diagnose(err, "division-by-zero", e.what());
    return 2;
  } catch (const BudgetExceeded& e) {
    diagnose(err, "budget", e.what());
    return 2;
  } catch (const std::exception& e) {
    diagnose(err, "internal", e.what());
    return 1;
  }
  return 0;
}

}  // namespace taft::cli
