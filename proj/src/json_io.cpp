#include "taft/json_io.hpp"

#include <fstream>
#include <sstream>

#include "taft/error.hpp"

namespace taft::io {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw ValidationError("schema: " + where + ": " + what);
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) bad(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad(where, std::string("missing field \"") + key + "\"");
  return *it;
}

long get_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  return j.get<long>();
}

int get_m(const Json& obj, const std::string& where) {
  const long m = get_int(field(obj, "m", where), where + ".m");
  if (m < 2 || m > 64) bad(where + ".m", "m must lie in [2, 64]");
  return static_cast<int>(m);
}

Rational parse_rational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) bad(where, "expected an integer or a rational string");
  const std::string s = j.get<std::string>();
  if (s.empty() || s.find_first_not_of("-+0123456789/ ") != std::string::npos) bad(where, "not a rational: \"" + s + "\"");
  Rational r;
  if (r.set_str(s, 10) != 0) bad(where, "not a rational: \"" + s + "\"");
  if (r.get_den() == 0) bad(where, "zero denominator in \"" + s + "\"");
  r.canonicalize();
  return r;
}

std::string rational_string(const Rational& r) { return r.get_str(10); }

const Json& array_of(const Json& j, std::size_t len, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array");
  if (len && j.size() != len) bad(where, "expected " + std::to_string(len) + " entries, got " + std::to_string(j.size()));
  return j;
}

}  // namespace

Json cyc_to_json(const CycNum& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(rational_string(c));
  return Json{{"m", x.conductor()}, {"coeffs", coeffs}};
}

CycNum cyc_from_json(const Json& j, int m, const std::string& where) {
  if (j.is_number_integer() || j.is_string()) return CycNum::rational(m, parse_rational(j, where));
  if (!j.is_object()) bad(where, "expected a scalar");
  if (j.contains("zeta")) return CycNum::zeta_power(m, get_int(j["zeta"], where + ".zeta"));
  if (j.contains("m") && get_m(j, where) != m) bad(where, "scalar over a different cyclotomic field");
  const Json& cs = field(j, "coeffs", where);
  if (!cs.is_array()) bad(where + ".coeffs", "expected an array");
  std::vector<Rational> poly;
  for (std::size_t i = 0; i < cs.size(); ++i) poly.push_back(parse_rational(cs[i], where + ".coeffs[" + std::to_string(i) + "]"));
  return CycNum::from_poly(m, poly);
}

Json vector_to_json(const CycVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(cyc_to_json(x));
  return out;
}

CycVector vector_from_json(const Json& j, int m, std::size_t len, const std::string& where) {
  array_of(j, len, where);
  CycVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(cyc_from_json(j[i], m, where + "[" + std::to_string(i) + "]"));
  return v;
}

Json matrix_to_json(const CycMatrix& a) {
  Json out = Json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < a.cols(); ++k) row.push_back(cyc_to_json(a(i, k)));
    out.push_back(std::move(row));
  }
  return out;
}

CycMatrix matrix_from_json(const Json& j, int m, std::size_t rows, std::size_t cols, const std::string& where) {
  array_of(j, rows, where);
  if (j.empty()) bad(where, "empty matrix");
  if (!j[0].is_array()) bad(where, "expected an array of rows");
  if (!cols) cols = j[0].size();
  if (!cols) bad(where, "empty matrix row");
  CycMatrix a = zeros(j.size(), cols, m);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const CycVector row = vector_from_json(j[i], m, cols, where + "[" + std::to_string(i) + "]");
    for (std::size_t k = 0; k < cols; ++k) a(i, k) = row[k];
  }
  return a;
}

Json algebra_to_json(const FinDimAlgebra& A) {
  const std::size_t d = A.dim();
  Json mult = Json::array();
  for (std::size_t i = 0; i < d; ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < d; ++k) row.push_back(vector_to_json(A.product(i, k)));
    mult.push_back(std::move(row));
  }
  Json out{{"dim", d}, {"mult", mult}};
  out["unit"] = A.unit() ? vector_to_json(*A.unit()) : Json(nullptr);
  return out;
}

FinDimAlgebra algebra_from_json(const Json& j, int m, const std::string& where) {
  const long dl = get_int(field(j, "dim", where), where + ".dim");
  if (dl < 1 || dl > 4096) bad(where + ".dim", "dimension must lie in [1, 4096]");
  const std::size_t d = static_cast<std::size_t>(dl);
  const Json& mj = array_of(field(j, "mult", where), d, where + ".mult");
  std::vector<CycVector> mult;
  for (std::size_t i = 0; i < d; ++i) {
    const std::string wi = where + ".mult[" + std::to_string(i) + "]";
    array_of(mj[i], d, wi);
    for (std::size_t k = 0; k < d; ++k) mult.push_back(vector_from_json(mj[i][k], m, d, wi + "[" + std::to_string(k) + "]"));
  }
  std::optional<CycVector> unit;
  if (j.contains("unit") && !j["unit"].is_null()) unit = vector_from_json(j["unit"], m, d, where + ".unit");
  return alg_from_structure_constants(m, d, std::move(mult), std::move(unit));
}

void check_document(const Json& doc, const std::string& kind) {
  if (!doc.is_object()) bad("document", "expected a JSON object");
  if (!doc.contains("format")) bad("document", "missing \"format\" (expected \"" + std::string(kFormat) + "\")");
  if (doc["format"] != kFormat) bad("document.format", "unsupported format " + doc["format"].dump());
  if (doc.contains("kind") && doc["kind"] != kind)
    bad("document.kind", "expected \"" + kind + "\", got " + doc["kind"].dump());
}

std::string document_kind(const Json& doc) {
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) bad("document", "missing \"kind\"");
  return doc["kind"].get<std::string>();
}

Json hma_to_json(const HModuleAlgebra& M) {
  return Json{{"format", kFormat},       {"kind", "hma"},
              {"m", M.m()},              {"algebra", algebra_to_json(M.A)},
              {"c", matrix_to_json(M.c_op)}, {"v", matrix_to_json(M.v_op)}};
}

HModuleAlgebra hma_from_json(const Json& doc) {
  check_document(doc, "hma");
  const int m = get_m(doc, "hma");
  FinDimAlgebra A = algebra_from_json(field(doc, "algebra", "hma"), m, "hma.algebra");
  const std::size_t d = A.dim();
  CycMatrix c = matrix_from_json(field(doc, "c", "hma"), m, d, d, "hma.c");
  CycMatrix v = matrix_from_json(field(doc, "v", "hma"), m, d, d, "hma.v");
  return make_hma(std::move(A), std::move(c), std::move(v));
}

Json semisimple_spec_to_json(const SemisimpleSpec& s) {
  return Json{{"format", kFormat}, {"kind", "semisimple_spec"}, {"m", s.m}, {"k", s.k}, {"t", s.t},
              {"P", matrix_to_json(s.P)}, {"Q", matrix_to_json(s.Q)}, {"alpha", cyc_to_json(s.alpha)}};
}

SemisimpleSpec semisimple_spec_from_json(const Json& doc) {
  check_document(doc, "semisimple_spec");
  const int m = get_m(doc, "semisimple_spec");
  const long k = get_int(field(doc, "k", "semisimple_spec"), "semisimple_spec.k");
  const long t = get_int(field(doc, "t", "semisimple_spec"), "semisimple_spec.t");
  if (k < 1 || k > 64) bad("semisimple_spec.k", "k must lie in [1, 64]");
  if (t < 1) bad("semisimple_spec.t", "t must be positive");
  const auto ks = static_cast<std::size_t>(k);
  CycMatrix P = matrix_from_json(field(doc, "P", "semisimple_spec"), m, ks, ks, "semisimple_spec.P");
  CycMatrix Q = matrix_from_json(field(doc, "Q", "semisimple_spec"), m, ks, ks, "semisimple_spec.Q");
  SemisimpleSpec s = make_semisimple_spec(m, ks, static_cast<std::size_t>(t), std::move(P), std::move(Q));
  if (doc.contains("alpha") && cyc_from_json(doc["alpha"], m, "semisimple_spec.alpha") != s.alpha)
    bad("semisimple_spec.alpha", "given alpha differs from the derived P^m = " + s.alpha.to_string() + " E");
  return s;
}

Json graded_algebra_to_json(const GradedAlgebra& g) {
  return Json{{"format", kFormat}, {"kind", "graded_algebra"}, {"m", g.m},
              {"algebra", algebra_to_json(g.B)}, {"c", matrix_to_json(g.c)}};
}

GradedAlgebra graded_algebra_from_json(const Json& doc) {
  check_document(doc, "graded_algebra");
  const int m = get_m(doc, "graded_algebra");
  FinDimAlgebra B = algebra_from_json(field(doc, "algebra", "graded_algebra"), m, "graded_algebra.algebra");
  CycMatrix c = matrix_from_json(field(doc, "c", "graded_algebra"), m, B.dim(), B.dim(), "graded_algebra.c");
  return GradedAlgebra{m, std::move(B), std::move(c)};
}

Json matrix_document(const CycMatrix& a) {
  return Json{{"format", kFormat}, {"kind", "matrix"}, {"m", conductor_of(a)}, {"rows", matrix_to_json(a)}};
}

CycMatrix matrix_document_from_json(const Json& doc, int m) {
  if (doc.is_array()) return matrix_from_json(doc, m, 0, 0, "matrix");
  check_document(doc, "matrix");
  if (doc.contains("m") && get_m(doc, "matrix") != m) bad("matrix.m", "matrix over a different cyclotomic field");
  return matrix_from_json(field(doc, "rows", "matrix"), m, 0, 0, "matrix.rows");
}

Json hopf_to_json(const HopfElement& h) {
  const int m = h.parent()->m();
  Json terms = Json::array();
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < m; ++k)
      if (!h.coeff(i, k).is_zero()) terms.push_back(Json{{"c", i}, {"v", k}, {"coeff", cyc_to_json(h.coeff(i, k))}});
  return Json{{"format", kFormat}, {"kind", "hopf_element"}, {"m", m}, {"terms", terms}};
}

HopfElement hopf_from_json(const Json& doc) {
  check_document(doc, "hopf_element");
  const int m = get_m(doc, "hopf_element");
  TaftPtr H = TaftAlgebra::create(m);
  HopfElement out = HopfElement::zero(H);
  const Json& terms = field(doc, "terms", "hopf_element");
  if (!terms.is_array()) bad("hopf_element.terms", "expected an array");
  for (std::size_t n = 0; n < terms.size(); ++n) {
    const std::string w = "hopf_element.terms[" + std::to_string(n) + "]";
    const long i = get_int(field(terms[n], "c", w), w + ".c");
    const long k = get_int(field(terms[n], "v", w), w + ".v");
    if (i < 0 || i >= m || k < 0 || k >= m) bad(w, "exponent out of range [0, m)");
    out += cyc_from_json(field(terms[n], "coeff", w), m, w + ".coeff") *
           HopfElement::basis(H, static_cast<int>(i), static_cast<int>(k));
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError("malformed JSON in " + path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << doc.dump(2) << '\n';
}

std::string canonical(const Json& doc) { return doc.dump(); }

}  // namespace taft::io
