#include "nabext/dgla.hpp"

#include <stdexcept>

namespace nabext {

namespace {

void check_member(const DgLaContext& ctx, const LElement& x) {
    if (x.value.dim_g != ctx.dim_g() || x.value.dim_h != ctx.dim_h())
        throw std::invalid_argument("dgla: element belongs to a different context");
    for (const auto& [b, comp] : x.value.components) {
        if (b.m < 1)
            throw std::invalid_argument("dgla: component with no g-argument");
        if (b.m + b.n != x.degree + 1 || comp.arity() != x.degree + 1)
            throw std::invalid_argument("dgla: component arity does not match degree");
        if (comp.source_dim() != x.value.dim_g + x.value.dim_h ||
            comp.target_dim() != x.value.dim_h)
            throw std::invalid_argument("dgla: component shape does not match the split");
        for (const auto& [mi, v] : comp.coeffs())
            if (!(bigrade_of(mi, x.value.dim_g) == b))
                throw std::invalid_argument("dgla: coefficient outside the component bigrade");
    }
}

void check_gauge(const DgLaContext& ctx, const GaugeElement& beta) {
    if (beta.beta.rows() != ctx.dim_h() || beta.beta.cols() != ctx.dim_g())
        throw std::invalid_argument("dgla: gauge matrix shape does not match context");
}

int max_h_count(const LElement& x) {
    int n = 0;
    for (const auto& [b, comp] : x.value.components)
        n = std::max(n, b.n);
    return n;
}

}  // namespace

DgLaContext build_context(const LieAlgebra& g, const LieAlgebra& h) {
    SplitAlgebra split = direct_sum(g, h);  // validates both inputs
    Cochain rho = bracket_cochain(split.sum);
    return {std::move(split), std::move(rho)};
}

LElement zero_element(const DgLaContext& ctx, int degree) {
    LElement x;
    x.degree = degree;
    x.value.dim_g = ctx.dim_g();
    x.value.dim_h = ctx.dim_h();
    return x;
}

LElement make_element(const DgLaContext& ctx, int degree, BigradedCochain value) {
    LElement x{degree, std::move(value)};
    x.value.dim_g = ctx.dim_g();
    x.value.dim_h = ctx.dim_h();
    check_member(ctx, x);
    return x;
}

LElement add_elements(const LElement& a, const LElement& b) {
    if (a.degree != b.degree || a.value.dim_g != b.value.dim_g || a.value.dim_h != b.value.dim_h)
        throw std::invalid_argument("add_elements: degree or context mismatch");
    LElement r = a;
    for (const auto& [bg, comp] : b.value.components) {
        auto it = r.value.components.find(bg);
        if (it == r.value.components.end()) {
            r.value.components.emplace(bg, comp);
            continue;
        }
        it->second += comp;
        if (it->second.is_zero())
            r.value.components.erase(it);
    }
    return r;
}

Cochain element_to_cochain(const DgLaContext& ctx, const LElement& x) {
    check_member(ctx, x);
    Cochain full(ctx.dim_sum(), x.degree + 1, ctx.dim_sum());
    for (const auto& [b, comp] : x.value.components)
        full += embed_h_valued(comp, ctx.dim_g());
    return full;
}

LElement element_from_cochain(const DgLaContext& ctx, const Cochain& full) {
    BigradeDecomposition dec = bigrade_decompose(full, ctx.dim_g());
    if (!dec.zero_column.empty())
        throw std::logic_error("dgla: operation left the complex (m = 0 component appeared)");
    LElement x{full.arity() - 1, std::move(dec.positive)};
    check_member(ctx, x);
    return x;
}

Cochain gauge_to_cochain(const DgLaContext& ctx, const GaugeElement& beta) {
    check_gauge(ctx, beta);
    Cochain c(ctx.dim_sum(), 1, ctx.dim_sum());
    for (int i = 0; i < ctx.dim_g(); ++i) {
        Vec col = beta.beta.col(i);
        Vec full = vec_zero(ctx.dim_sum());
        for (int k = 0; k < ctx.dim_h(); ++k)
            full[ctx.dim_g() + k] = col[k];
        c.set_coeff(MultiIndex({i}), std::move(full));
    }
    return c;
}

LElement gauge_to_element(const DgLaContext& ctx, const GaugeElement& beta) {
    return element_from_cochain(ctx, gauge_to_cochain(ctx, beta));
}

LElement differential(const DgLaContext& ctx, const LElement& x) {
    Cochain full = element_to_cochain(ctx, x);
    return element_from_cochain(ctx, nr_bracket(ctx.rho, full));
}

LElement mc_defect(const DgLaContext& ctx, const LElement& alpha) {
    if (alpha.degree != 1)
        throw std::invalid_argument("mc_defect: element must have degree 1");
    Cochain a = element_to_cochain(ctx, alpha);
    Cochain d = nr_bracket(ctx.rho, a);
    Cochain sq = nr_bracket(a, a);
    return element_from_cochain(ctx, d + Rational(1, 2) * sq);
}

LElement exp_ad(const DgLaContext& ctx, const GaugeElement& beta, const LElement& x) {
    check_gauge(ctx, beta);
    const Cochain b = gauge_to_cochain(ctx, beta);
    Cochain term = element_to_cochain(ctx, x);
    Cochain acc = term;
    const int cap = max_h_count(x) + 1;
    for (int k = 1; !term.is_zero(); ++k) {
        if (k > cap)
            throw std::logic_error("exp_ad: series exceeded the structural nilpotency bound");
        term = Rational(1, k) * nr_bracket(b, term);
        acc += term;
    }
    return element_from_cochain(ctx, acc);
}

LElement gauge_g(const DgLaContext& ctx, const GaugeElement& beta) {
    check_gauge(ctx, beta);
    const Cochain b = gauge_to_cochain(ctx, beta);
    const Cochain db = nr_bracket(ctx.rho, b);
    const Cochain adb = nr_bracket(b, db);
    if (!nr_bracket(b, adb).is_zero())
        throw std::logic_error("gauge_g: ad_beta^2(d beta) must vanish");
    return element_from_cochain(ctx, -db - Rational(1, 2) * adb);
}

LElement gauge_act(const DgLaContext& ctx, const GaugeElement& beta, const LElement& alpha) {
    if (alpha.degree != 1)
        throw std::invalid_argument("gauge_act: element must have degree 1");
    return add_elements(exp_ad(ctx, beta, alpha), gauge_g(ctx, beta));
}

TwistedDifferential::TwistedDifferential(const DgLaContext& ctx, const LElement& alpha)
    : ctx_(ctx) {
    if (!mc_defect(ctx, alpha).is_zero())
        throw std::invalid_argument("twist: element is not Maurer-Cartan");
    alpha_full_ = element_to_cochain(ctx, alpha);
}

LElement TwistedDifferential::apply(const LElement& x) const {
    return element_from_cochain(ctx_, apply_raw(element_to_cochain(ctx_, x)));
}

Cochain TwistedDifferential::apply_raw(const Cochain& c) const {
    return nr_bracket(ctx_.rho, c) + nr_bracket(alpha_full_, c);
}

TwistedDifferential twist(const DgLaContext& ctx, const LElement& alpha) {
    return TwistedDifferential(ctx, alpha);
}

}  // namespace nabext
