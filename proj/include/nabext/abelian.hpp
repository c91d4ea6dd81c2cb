#pragma once

#include "nabext/cochain.hpp"
#include "nabext/extensions.hpp"
#include "nabext/lie_algebra.hpp"

#include <string>
#include <vector>

namespace nabext {

/// Chevalley-Eilenberg cohomology in one degree, with canonical
/// representatives: the nullspace basis of the degree-n differential reduced
/// modulo the image of the previous one.
struct CohomologyResult {
    int degree = 0;
    int dim_cocycles = 0;
    int dim_coboundaries = 0;
    int dim_h = 0;
    std::vector<Cochain> representative_basis;
};

CohomologyResult ce_cohomology(const LieAlgebra& l, const ModuleStructure& m, int degree);

/// The matrix of the degree-n differential in the wedge basis. Column order:
/// multi-index (lexicographic) major, target coordinate minor.
Matrix ce_delta_matrix(const LieAlgebra& l, const ModuleStructure& m, int degree);

/// Degree-2 classification: the split (semidirect) extension for the trivial
/// class plus one extension per representative.
struct ClassifyResult {
    CohomologyResult h2;
    LieAlgebra semidirect;
    std::vector<LieAlgebra> representative_extensions;
};

ClassifyResult classify_abelian(const LieAlgebra& g, const ModuleStructure& m);

/// Checks that twisting the differential of C(g (+) H, H) by the module's
/// (1,1) packing reproduces the Chevalley-Eilenberg differential of C(g, H)
/// exactly, arity by arity, and that C(g, H) is abelian under the
/// Nijenhuis-Richardson bracket.
struct TangentReport {
    bool differentials_match = true;
    bool bracket_abelian = true;
    std::string detail;  // first mismatch, when any

    bool ok() const { return differentials_match && bracket_abelian; }
};

TangentReport verify_tangent(const LieAlgebra& g, const ModuleStructure& m);

/// Names h-basis vectors "h0", "h1", ... for extensions built over a module.
LieAlgebra abelian_target_algebra(int dim);

}  // namespace nabext
