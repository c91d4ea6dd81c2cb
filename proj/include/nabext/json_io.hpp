#pragma once

#include "nabext/abelian.hpp"
#include "nabext/cochain.hpp"
#include "nabext/dgla.hpp"
#include "nabext/extensions.hpp"
#include "nabext/lie_algebra.hpp"
#include "nabext/matrix.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace nabext {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

/// Raised on malformed input files; the message names the offending field.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Canonical text form: two-space indent, keys in schema order, multi-index
/// and bracket keys in numeric order, rationals in lowest terms, zero
/// coefficients omitted, trailing newline.
std::string canonical_dump(const ordered_json& j);

json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

// Algebras: { "dim": n, "basis": [...], "brackets": { "i,j": ["p/q", ...] } }
// with 0-based i < j; omitted pairs mean zero; antisymmetry is completed on
// load.
ordered_json algebra_to_json(const LieAlgebra& a);
LieAlgebra algebra_from_json(const json& j);

// Cochains: { "arity": p, "coeffs": { "i1,...,ip": ["p/q", ...] } }.
ordered_json cochain_to_json(const Cochain& c);
Cochain cochain_from_json(const json& j, int source_dim, int target_dim);

// Matrices (gauge parameters, sections, embeddings):
// { "rows": r, "cols": c, "entries": [row-major "p/q" strings] }.
ordered_json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);
std::vector<std::string> matrix_to_flat(const Matrix& m);
Matrix matrix_from_flat(const json& entries, int rows, int cols, const std::string& what);

// Cocycles: { "chi": <cochain>, "psi": [ [q*q row-major strings], ... ] }.
ordered_json cocycle_to_json(const NonAbelianCocycle& c);
NonAbelianCocycle cocycle_from_json(const json& j, int dim_g, int dim_h);

// Modules: { "space_dim": m, "action": [ [m*m row-major strings], ... ] }.
ordered_json module_to_json(const ModuleStructure& m);
ModuleStructure module_from_json(const json& j, const LieAlgebra& algebra);

// Elements of the bigraded complex:
// { "degree": k, "components": { "m,n": <cochain> } }.
ordered_json lelement_to_json(const LElement& x);
LElement lelement_from_json(const json& j, const DgLaContext& ctx);

ordered_json lie_report_to_json(const LieReport& rep, const LieAlgebra& a);
ordered_json cocycle_report_to_json(const CocycleReport& rep);
ordered_json witness_to_json(const WitnessResult& w);
ordered_json cohomology_to_json(const CohomologyResult& r);

}  // namespace nabext
