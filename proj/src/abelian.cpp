#include "nabext/abelian.hpp"

#include "nabext/dgla.hpp"

#include <stdexcept>

namespace nabext {

namespace {

long binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    long v = 1;
    for (int i = 0; i < k; ++i)
        v = v * (n - i) / (i + 1);
    return v;
}

/// Incremental row reduction used to pick representatives modulo a subspace.
class RowSpace {
public:
    /// Reduces v against the stored rows; the result is zero iff v lies in
    /// the span.
    Vec residue(Vec v) const {
        for (const auto& [pivot, row] : rows_) {
            if (v[pivot].is_zero())
                continue;
            const Rational f = v[pivot];
            for (std::size_t i = 0; i < v.size(); ++i)
                v[i] -= f * row[i];
        }
        return v;
    }

    /// Adds a (nonzero) vector, normalized at its pivot.
    void add(Vec v) {
        int pivot = -1;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) {
                pivot = int(i);
                break;
            }
        if (pivot < 0)
            throw std::logic_error("RowSpace: cannot add the zero vector");
        const Rational inv = Rational(1) / v[pivot];
        for (auto& x : v)
            x *= inv;
        rows_.emplace_back(pivot, std::move(v));
    }

private:
    std::vector<std::pair<int, Vec>> rows_;
};

void require_valid_module(const ModuleStructure& m, const char* who) {
    if (!validate_lie(m.algebra).valid || !module_check(m).valid)
        throw std::invalid_argument(std::string(who) + ": module does not validate");
}

Cochain coords_to_cochain(const LieAlgebra& l, int space_dim, int degree,
                          const std::vector<MultiIndex>& basis, const Vec& coords) {
    Cochain c(l.dim(), degree, space_dim);
    for (std::size_t b = 0; b < basis.size(); ++b) {
        Vec v(coords.begin() + long(b) * space_dim, coords.begin() + long(b + 1) * space_dim);
        c.set_coeff(basis[b], std::move(v));
    }
    return c;
}

Vec cochain_to_coords(const Cochain& c, const std::vector<MultiIndex>& basis, int space_dim) {
    Vec coords(basis.size() * std::size_t(space_dim));
    for (std::size_t b = 0; b < basis.size(); ++b) {
        Vec v = c.coeff(basis[b]);
        for (int t = 0; t < space_dim; ++t)
            coords[b * space_dim + t] = v[t];
    }
    return coords;
}

}  // namespace

Matrix ce_delta_matrix(const LieAlgebra& l, const ModuleStructure& m, int degree) {
    const int dim_src = int(binomial(l.dim(), degree)) * m.space_dim;
    const int dim_dst = int(binomial(l.dim(), degree + 1)) * m.space_dim;
    const auto src_basis = all_multi_indices(l.dim(), degree);
    const auto dst_basis = all_multi_indices(l.dim(), degree + 1);
    Matrix d(dim_dst, dim_src);
    int col = 0;
    for (const auto& mi : src_basis)
        for (int t = 0; t < m.space_dim; ++t, ++col) {
            Cochain c(l.dim(), degree, m.space_dim);
            Vec e = vec_zero(m.space_dim);
            e[t] = 1;
            c.set_coeff(mi, std::move(e));
            const Vec coords = cochain_to_coords(ce_differential(c, m), dst_basis, m.space_dim);
            for (int r = 0; r < dim_dst; ++r)
                d.at(r, col) = coords[r];
        }
    return d;
}

CohomologyResult ce_cohomology(const LieAlgebra& l, const ModuleStructure& m, int degree) {
    require_valid_module(m, "ce_cohomology");
    if (degree < 0)
        throw std::invalid_argument("ce_cohomology: negative degree");
    CohomologyResult res;
    res.degree = degree;

    const Matrix d_n = ce_delta_matrix(l, m, degree);
    const int dim_cn = d_n.cols();
    res.dim_cocycles = dim_cn - mat_rank(d_n);

    Matrix d_prev(dim_cn, 0);
    if (degree >= 1)
        d_prev = ce_delta_matrix(l, m, degree - 1);
    res.dim_coboundaries = mat_rank(d_prev);
    res.dim_h = res.dim_cocycles - res.dim_coboundaries;

    // canonical representatives: kernel basis reduced modulo the image
    RowSpace span;
    for (int c = 0; c < d_prev.cols(); ++c) {
        Vec img = span.residue(d_prev.col(c));
        if (!vec_is_zero(img))
            span.add(std::move(img));
    }
    const auto basis = all_multi_indices(l.dim(), degree);
    for (const Vec& z : mat_nullspace(d_n)) {
        Vec r = span.residue(z);
        if (vec_is_zero(r))
            continue;
        span.add(r);
        res.representative_basis.push_back(
            coords_to_cochain(l, m.space_dim, degree, basis, r));
    }
    if (int(res.representative_basis.size()) != res.dim_h)
        throw std::logic_error("ce_cohomology: representative count mismatch");
    return res;
}

LieAlgebra abelian_target_algebra(int dim) {
    std::vector<std::string> names;
    for (int i = 0; i < dim; ++i)
        names.push_back("h" + std::to_string(i));
    return LieAlgebra(dim, std::move(names));
}

ClassifyResult classify_abelian(const LieAlgebra& g, const ModuleStructure& m) {
    require_valid_module(m, "classify_abelian");
    ClassifyResult out;
    out.h2 = ce_cohomology(g, m, 2);
    const LieAlgebra h = abelian_target_algebra(m.space_dim);

    NonAbelianCocycle base = zero_cocycle(g.dim(), m.space_dim);
    base.psi = m.action;
    out.semidirect = build_extension(g, h, base).total;
    if (!validate_lie(out.semidirect).valid)
        throw std::logic_error("classify_abelian: semidirect product failed validation");

    for (const Cochain& rep : out.h2.representative_basis) {
        NonAbelianCocycle c = base;
        c.chi = rep;
        LieAlgebra ext = build_extension(g, h, c).total;
        if (!validate_lie(ext).valid)
            throw std::logic_error("classify_abelian: representative extension failed validation");
        out.representative_extensions.push_back(std::move(ext));
    }
    return out;
}

TangentReport verify_tangent(const LieAlgebra& g, const ModuleStructure& m) {
    require_valid_module(m, "verify_tangent");
    TangentReport rep;
    const LieAlgebra h = abelian_target_algebra(m.space_dim);
    const DgLaContext ctx = build_context(g, h);

    NonAbelianCocycle datum = zero_cocycle(g.dim(), m.space_dim);
    datum.psi = m.action;
    const TwistedDifferential d_alpha = twist(ctx, cocycle_to_mc(ctx, datum));

    const int p = g.dim(), q = m.space_dim;
    std::vector<Cochain> embedded;  // all basis cochains of C(g, H), sum-embedded
    for (int arity = 0; arity <= p; ++arity) {
        for (const MultiIndex& mi : all_multi_indices(p, arity))
            for (int t = 0; t < q; ++t) {
                Cochain c(p, arity, q);
                Vec e = vec_zero(q);
                e[t] = 1;
                c.set_coeff(mi, e);

                Cochain on_sum(ctx.dim_sum(), arity, q);
                on_sum.set_coeff(mi, e);
                const Cochain full = embed_h_valued(on_sum, p);
                embedded.push_back(full);

                // twisted differential vs the Chevalley-Eilenberg route
                const Cochain lhs = d_alpha.apply_raw(full);
                Cochain delta = ce_differential(c, m);
                Cochain rhs(ctx.dim_sum(), arity + 1, q);
                for (const auto& [k, v] : delta.coeffs())
                    rhs.set_coeff(k, v);
                if (lhs != embed_h_valued(rhs, p)) {
                    rep.differentials_match = false;
                    if (rep.detail.empty())
                        rep.detail = "differential mismatch at arity " + std::to_string(arity);
                }
            }
    }
    for (std::size_t i = 0; i < embedded.size() && rep.bracket_abelian; ++i)
        for (std::size_t j = i; j < embedded.size(); ++j) {
            if (!nr_bracket(embedded[i], embedded[j]).is_zero()) {
                rep.bracket_abelian = false;
                rep.detail += (rep.detail.empty() ? "" : "; ");
                rep.detail += "nonzero bracket among module cochains";
                break;
            }
        }
    return rep;
}

}  // namespace nabext
