#pragma once

#include "nabext/matrix.hpp"

#include <array>
#include <string>
#include <vector>

namespace nabext {

/// Finite-dimensional Lie algebra presented by structure constants.
/// The bracket table is the single source of truth; basis names are labels.
/// A value built through set_bracket is antisymmetric by construction but may
/// still violate the Jacobi identity until validate_lie certifies it.
class LieAlgebra {
public:
    LieAlgebra() = default;
    explicit LieAlgebra(int dim, std::vector<std::string> basis_names = {});

    /// Wraps a full dim x dim table without symmetrizing, so that broken
    /// tables can be loaded for diagnosis.
    static LieAlgebra from_raw_table(int dim, std::vector<std::string> basis_names,
                                     std::vector<std::vector<Vec>> table);

    int dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return names_; }
    const std::string& basis_name(int i) const { return names_[i]; }

    const Vec& bracket(int i, int j) const { return c_[i][j]; }
    /// Bilinear extension of the bracket table.
    Vec bracket_vec(const Vec& u, const Vec& v) const;

    /// Sets [e_i, e_j] = v and [e_j, e_i] = -v. Requires i != j for nonzero v.
    void set_bracket(int i, int j, Vec v);

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b);

private:
    int dim_ = 0;
    std::vector<std::string> names_;
    std::vector<std::vector<Vec>> c_;
};

struct LieViolation {
    enum class Kind { Antisymmetry, Jacobi };
    Kind kind;
    std::array<int, 3> indices;  // (i, j, -1) for antisymmetry, (i, j, k) for Jacobi
    Vec defect;
};

struct LieReport {
    bool valid = true;
    std::vector<LieViolation> violations;
};

/// Checks antisymmetry on all pairs and the Jacobi identity on all basis
/// triples, exactly. The Jacobi defect is the cyclic sum [e_i,[e_j,e_k]] +
/// [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]].
LieReport validate_lie(const LieAlgebra& a);

Vec jacobiator(const LieAlgebra& a, int i, int j, int k);

/// A Lie algebra module: one action matrix per algebra basis vector.
struct ModuleStructure {
    LieAlgebra algebra;
    int space_dim = 0;
    std::vector<Matrix> action;
};

ModuleStructure trivial_module(const LieAlgebra& l, int space_dim);
ModuleStructure adjoint_module(const LieAlgebra& l);
ModuleStructure coadjoint_module(const LieAlgebra& l);

struct ModuleViolation {
    int i, j;
    Matrix defect;  // action([e_i,e_j]) - [action(e_i), action(e_j)]
};

struct ModuleReport {
    bool valid = true;
    std::vector<ModuleViolation> violations;
};

ModuleReport module_check(const ModuleStructure& m);

/// Direct sum with the g-block first; every bigraded computation downstream
/// relies on that order.
struct SplitAlgebra {
    LieAlgebra g;
    LieAlgebra h;
    LieAlgebra sum;

    int dim_g() const { return g.dim(); }
    int dim_h() const { return h.dim(); }
    int dim_sum() const { return sum.dim(); }
};

SplitAlgebra direct_sum(const LieAlgebra& g, const LieAlgebra& h);

/// Basis of { x : [x, e_j] = 0 for all j }, from the nullspace of the stacked
/// adjoint matrices.
std::vector<Vec> center(const LieAlgebra& h);

/// Stacked adjoint: the linear map x -> ad_x, as a dim^2 x dim matrix with
/// rows indexed by (argument j, coordinate k).
Matrix stacked_adjoint(const LieAlgebra& h);

/// Matrix of ad_x on h.
Matrix ad_matrix(const LieAlgebra& h, const Vec& x);

bool is_derivation(const Matrix& d, const LieAlgebra& h);

}  // namespace nabext
