#pragma once

#include <string>

#include <json.hpp>

#include "taft/constructions.hpp"
#include "taft/hmodule.hpp"
#include "taft/taft_hopf.hpp"

// JSON documents carry "format": "taftlab/1" and a "kind". Scalars are
// written as {"m": m, "coeffs": ["p/q", ...]}; on input a bare integer, a
// rational string "p/q" or {"zeta": e} is accepted as well.
namespace taft::io {

using Json = nlohmann::ordered_json;
inline constexpr const char* kFormat = "taftlab/1";

Json cyc_to_json(const CycNum& x);
CycNum cyc_from_json(const Json& j, int m, const std::string& where = "scalar");

Json vector_to_json(const CycVector& v);
CycVector vector_from_json(const Json& j, int m, std::size_t len, const std::string& where);
Json matrix_to_json(const CycMatrix& a);
/// rows/cols of 0 mean "take from the data" (still rectangular).
CycMatrix matrix_from_json(const Json& j, int m, std::size_t rows, std::size_t cols, const std::string& where);

/// {"dim", "mult", "unit"}; mult[i][j] is the coordinate vector of e_i e_j.
Json algebra_to_json(const FinDimAlgebra& A);
FinDimAlgebra algebra_from_json(const Json& j, int m, const std::string& where = "algebra");

Json hma_to_json(const HModuleAlgebra& M);
HModuleAlgebra hma_from_json(const Json& doc);

Json semisimple_spec_to_json(const SemisimpleSpec& s);
SemisimpleSpec semisimple_spec_from_json(const Json& doc);

struct GradedAlgebra {
  int m = 0;
  FinDimAlgebra B;
  CycMatrix c;
};
Json graded_algebra_to_json(const GradedAlgebra& g);
GradedAlgebra graded_algebra_from_json(const Json& doc);

Json matrix_document(const CycMatrix& a);
CycMatrix matrix_document_from_json(const Json& doc, int m);

Json hopf_to_json(const HopfElement& h);
HopfElement hopf_from_json(const Json& doc);

/// Checks "format" and, when present, "kind".
void check_document(const Json& doc, const std::string& kind);
std::string document_kind(const Json& doc);
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& doc);
std::string canonical(const Json& doc);

}  // namespace taft::io
