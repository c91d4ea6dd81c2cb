#pragma once

#include "nabext/cochain.hpp"
#include "nabext/lie_algebra.hpp"

namespace nabext {

/// The differential graded Lie algebra of h-valued cochains on g (+) h with
/// at least one g-argument. The differential is the graded commutator with
/// the sum bracket, and every degree-0 element is ad-nilpotent because its
/// adjoint action strictly lowers the h-count of every bigrade.
struct DgLaContext {
    SplitAlgebra split;
    Cochain rho;  // bracket of the direct sum, as an arity-2 cochain on it

    int dim_g() const { return split.dim_g(); }
    int dim_h() const { return split.dim_h(); }
    int dim_sum() const { return split.dim_sum(); }
};

DgLaContext build_context(const LieAlgebra& g, const LieAlgebra& h);

/// Homogeneous element of the complex: components of one arity (= degree + 1),
/// each with at least one g-argument, valued in h.
struct LElement {
    int degree = 0;
    BigradedCochain value;

    bool is_zero() const { return value.is_zero(); }
    friend bool operator==(const LElement& a, const LElement& b) = default;
};

LElement zero_element(const DgLaContext& ctx, int degree);
LElement make_element(const DgLaContext& ctx, int degree, BigradedCochain value);
LElement add_elements(const LElement& a, const LElement& b);

/// Degree-0 gauge parameter: a linear map g -> h (dim_h x dim_g matrix,
/// columns are images of g-basis vectors).
struct GaugeElement {
    Matrix beta;
};

/// Flattens an element to a single sum-valued cochain; inverse of decompose.
Cochain element_to_cochain(const DgLaContext& ctx, const LElement& x);
LElement element_from_cochain(const DgLaContext& ctx, const Cochain& full);
Cochain gauge_to_cochain(const DgLaContext& ctx, const GaugeElement& beta);
LElement gauge_to_element(const DgLaContext& ctx, const GaugeElement& beta);

LElement differential(const DgLaContext& ctx, const LElement& x);

/// dα + (1/2)[α, α] for a degree-1 element; zero exactly when α is
/// Maurer-Cartan.
LElement mc_defect(const DgLaContext& ctx, const LElement& alpha);

/// e^{ad_β} x as a finite sum; terminates because each application of ad_β
/// lowers the h-count by one. Exceeding the structural bound is an internal
/// error.
LElement exp_ad(const DgLaContext& ctx, const GaugeElement& beta, const LElement& x);

/// The inhomogeneous gauge term -dβ - (1/2)[β, dβ]; all higher terms of the
/// series vanish identically here.
LElement gauge_g(const DgLaContext& ctx, const GaugeElement& beta);

/// Gauge action on degree-1 elements: e^{ad_β} α + g_β. Maps Maurer-Cartan
/// elements to Maurer-Cartan elements.
LElement gauge_act(const DgLaContext& ctx, const GaugeElement& beta, const LElement& alpha);

/// Differential twisted by a Maurer-Cartan element: d_α = d + [α, -].
/// Refuses α with nonzero Maurer-Cartan defect.
class TwistedDifferential {
public:
    TwistedDifferential(const DgLaContext& ctx, const LElement& alpha);

    LElement apply(const LElement& x) const;
    /// Same operator on a raw sum-valued h-supported cochain; this also covers
    /// cochains with no g-argument, which sit outside the complex proper.
    Cochain apply_raw(const Cochain& c) const;

    const DgLaContext& context() const { return ctx_; }

private:
    DgLaContext ctx_;
    Cochain alpha_full_;
};

TwistedDifferential twist(const DgLaContext& ctx, const LElement& alpha);

}  // namespace nabext
