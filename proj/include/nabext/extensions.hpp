#pragma once

#include "nabext/cochain.hpp"
#include "nabext/dgla.hpp"
#include "nabext/lie_algebra.hpp"
#include "nabext/matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nabext {

/// Extension datum on g with values in h: chi takes two g-arguments to h,
/// psi assigns to each g-basis vector an operator on h.
struct NonAbelianCocycle {
    Cochain chi;               // source dim_g, arity 2, target dim_h
    std::vector<Matrix> psi;   // one dim_h x dim_h matrix per g-basis vector

    int dim_g() const { return int(psi.size()); }
    int dim_h() const { return chi.target_dim(); }

    friend bool operator==(const NonAbelianCocycle& a, const NonAbelianCocycle& b) = default;
};

NonAbelianCocycle zero_cocycle(int dim_g, int dim_h);

struct CocycleViolation {
    enum class Kind { Derivation, ActionCompat, CyclicSum };
    Kind kind;
    std::vector<int> indices;  // g-indices involved; Derivation also carries the h-pair
    Vec defect;
};

struct CocycleReport {
    bool valid = true;
    std::vector<CocycleViolation> violations;
};

/// Checks, exactly: every psi(e_i) is a derivation of h; the commutator of
/// actions equals the action of the bracket twisted by ad of chi, on all
/// pairs; and the cyclic sum of psi_a chi(b,c) - chi([a,b],c) vanishes on all
/// triples.
CocycleReport is_nonabelian_cocycle(const LieAlgebra& g, const LieAlgebra& h,
                                    const NonAbelianCocycle& c);

/// Packs (chi, psi) as the degree-1 element with components (2,0) and (1,1);
/// the (1,1) coefficient on (g_i, h_j) is psi_i(e_j), with no extra factor.
LElement cocycle_to_mc(const DgLaContext& ctx, const NonAbelianCocycle& c);
NonAbelianCocycle mc_to_cocycle(const DgLaContext& ctx, const LElement& x);

/// Candidate bracket on g (+) h assembled from blocks; not validated.
struct ExtensionBracket {
    int dim_g = 0;
    int dim_h = 0;
    LieAlgebra total;
};

ExtensionBracket build_extension(const LieAlgebra& g, const LieAlgebra& h,
                                 const NonAbelianCocycle& c);

/// Wraps an existing algebra as an extension candidate with the first dim_g
/// basis vectors as the g-block. Throws if a mixed or h-h bracket has a
/// nonzero g-part.
ExtensionBracket as_extension_bracket(const LieAlgebra& total, int dim_g);

struct ExtractedCocycle {
    LieAlgebra g;  // induced bracket on the quotient, transported along proj/s
    LieAlgebra h;  // induced bracket on the embedded subspace
    NonAbelianCocycle cocycle;
};

/// Reads the cocycle of an extension through an explicit splitting:
/// psi_a = [s(a), -] and chi(a,b) = [s(a), s(b)] - s([a,b]), both expressed in
/// the embedded h. Throws when s is not a section of proj, the embedding does
/// not match the kernel of proj, or a bracket escapes the embedded subspace.
ExtractedCocycle extension_to_cocycle(const LieAlgebra& e, const Matrix& h_embed,
                                      const Matrix& proj, const Matrix& s);

/// The eight source/target components of the Jacobiator of an extension
/// bracket. The three with target g and at least one h-argument vanish for
/// every shape-conforming bracket; computing them certifies that.
struct JacobiatorReport {
    Cochain jg_ggg, jg_ggh, jg_ghh, jg_hhh;  // target in the g-block
    Cochain jh_ggg, jh_ggh, jh_ghh, jh_hhh;  // target in the h-block

    bool g_components_zero() const {
        return jg_ggg.is_zero() && jg_ggh.is_zero() && jg_ghh.is_zero() && jg_hhh.is_zero();
    }
    bool h_components_zero() const {
        return jh_ggg.is_zero() && jh_ggh.is_zero() && jh_ghh.is_zero() && jh_hhh.is_zero();
    }
    bool structural_zeros_hold() const {
        return jg_ggh.is_zero() && jg_ghh.is_zero() && jg_hhh.is_zero();
    }
};

JacobiatorReport jacobiator_components(const ExtensionBracket& rho);

/// Transforms a cocycle by a gauge parameter beta: g -> h:
///   psi'_a = psi_a + ad_{beta(a)}
///   chi'(a,b) = chi(a,b) + psi_a beta(b) - psi_b beta(a) - beta([a,b])
///               + [beta(a), beta(b)].
NonAbelianCocycle cocycle_equiv_apply(const LieAlgebra& g, const LieAlgebra& h,
                                      const NonAbelianCocycle& c, const Matrix& beta);

bool check_equivalent_with_witness(const LieAlgebra& g, const LieAlgebra& h,
                                   const NonAbelianCocycle& c, const NonAbelianCocycle& c2,
                                   const Matrix& beta);

/// Polynomial over named parameters, used for witness-search residuals.
/// Monomials are sorted lists of parameter ids; the empty list is the
/// constant term.
struct Polynomial {
    std::map<std::vector<int>, Rational> terms;

    static Polynomial constant(const Rational& r);
    static Polynomial variable(int id);
    bool is_zero() const { return terms.empty(); }
    int degree() const;
    Rational constant_term() const;

    Polynomial& operator+=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& s, const Polynomial& a);
    Polynomial operator-() const;
};

struct ResidualSystem {
    std::vector<std::string> parameter_names;
    std::vector<Polynomial> constraints;  // each must vanish
};

struct WitnessResult {
    enum class Kind { Found, NotEquivalent, Unknown };
    Kind kind = Kind::Unknown;
    std::optional<Matrix> beta;  // present for Found
    int failing_stage = 0;       // 1 or 2 for NotEquivalent
    ResidualSystem residual;     // present for Unknown
};

/// Decides equivalence of two valid cocycles. Stage 1 solves, per g-basis
/// vector, ad_h(x) = psi'_a - psi_a over the stacked adjoint; the solution
/// freedom is valued in the center of h, which makes the stage-2 substitution
/// into the chi-equation affine whenever center brackets vanish (always, by
/// definition of the center). Unknown, carrying the residual system, is
/// returned only if a genuinely quadratic residual ever survived.
WitnessResult find_witness(const LieAlgebra& g, const LieAlgebra& h, const NonAbelianCocycle& c,
                           const NonAbelianCocycle& c2);

}  // namespace nabext
