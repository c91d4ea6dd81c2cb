#include "nabext/extensions.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace nabext {

namespace {

void check_shapes(const LieAlgebra& g, const LieAlgebra& h, const NonAbelianCocycle& c) {
    if (c.chi.source_dim() != g.dim() || c.chi.arity() != 2 || c.chi.target_dim() != h.dim())
        throw std::invalid_argument("cocycle: chi shape does not match (g, h)");
    if (int(c.psi.size()) != g.dim())
        throw std::invalid_argument("cocycle: one psi operator per g-basis vector required");
    for (const auto& m : c.psi)
        if (m.rows() != h.dim() || m.cols() != h.dim())
            throw std::invalid_argument("cocycle: psi operator shape does not match h");
}

Vec basis_vec(int dim, int i) {
    Vec v = vec_zero(dim);
    v[i] = 1;
    return v;
}

/// psi applied to a general g-vector: sum_i w_i psi_i.
Matrix psi_of(const NonAbelianCocycle& c, const Vec& w) {
    Matrix m(c.dim_h(), c.dim_h());
    for (int i = 0; i < c.dim_g(); ++i)
        if (!w[i].is_zero())
            m = m + w[i] * c.psi[i];
    return m;
}

}  // namespace

NonAbelianCocycle zero_cocycle(int dim_g, int dim_h) {
    NonAbelianCocycle c;
    c.chi = Cochain(dim_g, 2, dim_h);
    c.psi.assign(dim_g, Matrix(dim_h, dim_h));
    return c;
}

CocycleReport is_nonabelian_cocycle(const LieAlgebra& g, const LieAlgebra& h,
                                    const NonAbelianCocycle& c) {
    check_shapes(g, h, c);
    CocycleReport rep;
    const int p = g.dim(), q = h.dim();

    for (int i = 0; i < p; ++i)
        for (int r = 0; r < q; ++r)
            for (int s = r + 1; s < q; ++s) {
                Vec lhs = c.psi[i].apply(h.bracket(r, s));
                Vec rhs = vec_add(h.bracket_vec(c.psi[i].col(r), basis_vec(q, s)),
                                  h.bracket_vec(basis_vec(q, r), c.psi[i].col(s)));
                Vec d = vec_sub(lhs, rhs);
                if (!vec_is_zero(d)) {
                    rep.valid = false;
                    rep.violations.push_back(
                        {CocycleViolation::Kind::Derivation, {i, r, s}, std::move(d)});
                }
            }

    for (int a = 0; a < p; ++a)
        for (int b = a + 1; b < p; ++b) {
            Matrix lhs = c.psi[a] * c.psi[b] - c.psi[b] * c.psi[a];
            Matrix rhs = psi_of(c, g.bracket(a, b)) +
                         ad_matrix(h, c.chi.coeff(MultiIndex({a, b})));
            Matrix defect = lhs - rhs;
            if (!defect.is_zero()) {
                rep.valid = false;
                Vec flat;
                for (int r = 0; r < q; ++r)
                    for (int s = 0; s < q; ++s)
                        flat.push_back(defect.at(r, s));
                rep.violations.push_back(
                    {CocycleViolation::Kind::ActionCompat, {a, b}, std::move(flat)});
            }
        }

    for (int a = 0; a < p; ++a)
        for (int b = a + 1; b < p; ++b)
            for (int k = b + 1; k < p; ++k) {
                Vec total = vec_zero(q);
                const int cyc[3][3] = {{a, b, k}, {b, k, a}, {k, a, b}};
                for (const auto& t : cyc) {
                    vec_add_to(total, c.psi[t[0]].apply(c.chi.value_on({t[1], t[2]})));
                    Vec chib = c.chi.value_with_first(g.bracket(t[0], t[1]), {t[2]});
                    vec_add_to(total, vec_neg(chib));
                }
                if (!vec_is_zero(total)) {
                    rep.valid = false;
                    rep.violations.push_back(
                        {CocycleViolation::Kind::CyclicSum, {a, b, k}, std::move(total)});
                }
            }
    return rep;
}

LElement cocycle_to_mc(const DgLaContext& ctx, const NonAbelianCocycle& c) {
    const int p = ctx.dim_g(), q = ctx.dim_h();
    if (c.dim_g() != p || c.dim_h() != q)
        throw std::invalid_argument("cocycle_to_mc: cocycle shape does not match context");
    BigradedCochain bc{p, q, {}};
    if (!c.chi.is_zero()) {
        Cochain comp(p + q, 2, q);
        for (const auto& [mi, v] : c.chi.coeffs())
            comp.set_coeff(mi, v);  // g-indices agree because the g-block is first
        bc.components.emplace(Bigrade{2, 0}, std::move(comp));
    }
    Cochain mixed(p + q, 2, q);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j)
            mixed.set_coeff(MultiIndex({i, p + j}), c.psi[i].col(j));
    if (!mixed.is_zero())
        bc.components.emplace(Bigrade{1, 1}, std::move(mixed));
    return make_element(ctx, 1, std::move(bc));
}

NonAbelianCocycle mc_to_cocycle(const DgLaContext& ctx, const LElement& x) {
    if (x.degree != 1)
        throw std::invalid_argument("mc_to_cocycle: element must have degree 1");
    if (x.value.dim_g != ctx.dim_g() || x.value.dim_h != ctx.dim_h())
        throw std::invalid_argument("mc_to_cocycle: element belongs to a different context");
    const int p = ctx.dim_g(), q = ctx.dim_h();
    NonAbelianCocycle c = zero_cocycle(p, q);
    for (const auto& [b, comp] : x.value.components) {
        if (b == Bigrade{2, 0}) {
            for (const auto& [mi, v] : comp.coeffs())
                c.chi.set_coeff(mi, v);
        } else if (b == Bigrade{1, 1}) {
            for (const auto& [mi, v] : comp.coeffs()) {
                const int i = mi.indices[0];
                const int j = mi.indices[1] - p;
                for (int k = 0; k < q; ++k)
                    c.psi[i].at(k, j) = v[k];
            }
        } else {
            throw std::invalid_argument("mc_to_cocycle: component outside (2,0) and (1,1)");
        }
    }
    return c;
}

ExtensionBracket build_extension(const LieAlgebra& g, const LieAlgebra& h,
                                 const NonAbelianCocycle& c) {
    check_shapes(g, h, c);
    const int p = g.dim(), q = h.dim();
    std::vector<std::string> names = g.basis_names();
    names.insert(names.end(), h.basis_names().begin(), h.basis_names().end());
    LieAlgebra total(p + q, std::move(names));
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) {
            Vec v = vec_zero(p + q);
            const Vec& gg = g.bracket(i, j);
            const Vec hh = c.chi.coeff(MultiIndex({i, j}));
            for (int k = 0; k < p; ++k)
                v[k] = gg[k];
            for (int k = 0; k < q; ++k)
                v[p + k] = hh[k];
            total.set_bracket(i, j, std::move(v));
        }
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < q; ++j) {
            Vec v = vec_zero(p + q);
            const Vec img = c.psi[i].col(j);
            for (int k = 0; k < q; ++k)
                v[p + k] = img[k];
            total.set_bracket(i, p + j, std::move(v));
        }
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j) {
            Vec v = vec_zero(p + q);
            const Vec& hh = h.bracket(i, j);
            for (int k = 0; k < q; ++k)
                v[p + k] = hh[k];
            total.set_bracket(p + i, p + j, std::move(v));
        }
    return {p, q, std::move(total)};
}

ExtensionBracket as_extension_bracket(const LieAlgebra& total, int dim_g) {
    if (dim_g < 0 || dim_g > total.dim())
        throw std::invalid_argument("as_extension_bracket: g-block exceeds the algebra");
    const int n = total.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i < dim_g && j < dim_g)
                continue;
            for (int k = 0; k < dim_g; ++k)
                if (!total.bracket(i, j)[k].is_zero())
                    throw std::invalid_argument(
                        "as_extension_bracket: bracket has a g-component outside the g-g block");
        }
    return {dim_g, n - dim_g, total};
}

JacobiatorReport jacobiator_components(const ExtensionBracket& rho) {
    as_extension_bracket(rho.total, rho.dim_g);  // shape invariant
    const int p = rho.dim_g, q = rho.dim_h, n = p + q;
    JacobiatorReport rep;
    Cochain* jg[4] = {&rep.jg_ggg, &rep.jg_ggh, &rep.jg_ghh, &rep.jg_hhh};
    Cochain* jh[4] = {&rep.jh_ggg, &rep.jh_ggh, &rep.jh_ghh, &rep.jh_hhh};
    for (int t = 0; t < 4; ++t) {
        *jg[t] = Cochain(n, 3, p);
        *jh[t] = Cochain(n, 3, q);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Vec d = jacobiator(rho.total, i, j, k);
                if (vec_is_zero(d))
                    continue;
                const int h_args = (i >= p) + (j >= p) + (k >= p);
                Vec gpart(d.begin(), d.begin() + p);
                Vec hpart(d.begin() + p, d.end());
                const MultiIndex mi({i, j, k});
                if (!vec_is_zero(gpart))
                    jg[h_args]->set_coeff(mi, std::move(gpart));
                if (!vec_is_zero(hpart))
                    jh[h_args]->set_coeff(mi, std::move(hpart));
            }
    return rep;
}

ExtractedCocycle extension_to_cocycle(const LieAlgebra& e, const Matrix& h_embed,
                                      const Matrix& proj, const Matrix& s) {
    const int n = e.dim();
    const int p = proj.rows();
    const int q = h_embed.cols();
    if (proj.cols() != n || h_embed.rows() != n || s.rows() != n || s.cols() != p)
        throw std::invalid_argument("extension_to_cocycle: map shapes do not match the algebra");
    if (p + q != n)
        throw std::invalid_argument("extension_to_cocycle: kernel mismatch (dim g + dim h != dim e)");

    Matrix ps = proj * s;
    if (!(ps == Matrix::identity(p))) {
        std::string msg = "extension_to_cocycle: s is not a section; (proj . s - id) =";
        Matrix defect = ps - Matrix::identity(p);
        for (int r = 0; r < p; ++r)
            for (int cidx = 0; cidx < p; ++cidx)
                if (!defect.at(r, cidx).is_zero())
                    msg += " [" + std::to_string(r) + "," + std::to_string(cidx) + "]=" +
                           defect.at(r, cidx).str();
        throw std::invalid_argument(msg);
    }
    if (mat_rank(proj) != p)
        throw std::invalid_argument("extension_to_cocycle: proj is not surjective");
    if (mat_rank(h_embed) != q)
        throw std::invalid_argument("extension_to_cocycle: h embedding is not injective");
    if (!(proj * h_embed).is_zero())
        throw std::invalid_argument(
            "extension_to_cocycle: embedded h is not contained in the kernel of proj");

    // expresses v in the embedded h, or reports the escape
    const auto in_h = [&](const Vec& v, const char* what) {
        AffineSolution sol = solve_affine(h_embed, v);
        if (!sol.consistent())
            throw std::invalid_argument(std::string("extension_to_cocycle: ") + what +
                                        " escapes the embedded subalgebra");
        return *sol.particular;
    };

    // induced bracket on the embedded h
    LieAlgebra h(q);
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j)
            h.set_bracket(i, j,
                          in_h(e.bracket_vec(h_embed.col(i), h_embed.col(j)), "an h-h bracket"));

    // induced bracket on g, transported along the section
    LieAlgebra g(p);
    for (int a = 0; a < p; ++a)
        for (int b = a + 1; b < p; ++b)
            g.set_bracket(a, b, proj.apply(e.bracket_vec(s.col(a), s.col(b))));

    NonAbelianCocycle c = zero_cocycle(p, q);
    for (int a = 0; a < p; ++a) {
        std::vector<Vec> cols;
        for (int v = 0; v < q; ++v)
            cols.push_back(in_h(e.bracket_vec(s.col(a), h_embed.col(v)), "[s(g), h]"));
        c.psi[a] = Matrix::from_columns(q, cols);
    }
    for (int a = 0; a < p; ++a)
        for (int b = a + 1; b < p; ++b) {
            Vec w = vec_sub(e.bracket_vec(s.col(a), s.col(b)), s.apply(g.bracket(a, b)));
            c.chi.set_coeff(MultiIndex({a, b}), in_h(w, "chi"));
        }
    return {std::move(g), std::move(h), std::move(c)};
}

NonAbelianCocycle cocycle_equiv_apply(const LieAlgebra& g, const LieAlgebra& h,
                                      const NonAbelianCocycle& c, const Matrix& beta) {
    check_shapes(g, h, c);
    if (beta.rows() != h.dim() || beta.cols() != g.dim())
        throw std::invalid_argument("cocycle_equiv_apply: beta shape does not match (g, h)");
    const int p = g.dim();
    NonAbelianCocycle out = c;
    for (int a = 0; a < p; ++a)
        out.psi[a] = c.psi[a] + ad_matrix(h, beta.col(a));
    for (int a = 0; a < p; ++a)
        for (int b = a + 1; b < p; ++b) {
            Vec v = c.chi.coeff(MultiIndex({a, b}));
            vec_add_to(v, c.psi[a].apply(beta.col(b)));
            vec_add_to(v, vec_neg(c.psi[b].apply(beta.col(a))));
            vec_add_to(v, vec_neg(beta.apply(g.bracket(a, b))));
            vec_add_to(v, h.bracket_vec(beta.col(a), beta.col(b)));
            out.chi.set_coeff(MultiIndex({a, b}), std::move(v));
        }
    return out;
}

bool check_equivalent_with_witness(const LieAlgebra& g, const LieAlgebra& h,
                                   const NonAbelianCocycle& c, const NonAbelianCocycle& c2,
                                   const Matrix& beta) {
    check_shapes(g, h, c2);
    return cocycle_equiv_apply(g, h, c, beta) == c2;
}

Polynomial Polynomial::constant(const Rational& r) {
    Polynomial p;
    if (!r.is_zero())
        p.terms[{}] = r;
    return p;
}

Polynomial Polynomial::variable(int id) {
    Polynomial p;
    p.terms[{id}] = Rational(1);
    return p;
}

int Polynomial::degree() const {
    int d = 0;
    for (const auto& [mono, coef] : terms)
        d = std::max(d, int(mono.size()));
    return d;
}

Rational Polynomial::constant_term() const {
    auto it = terms.find({});
    return it == terms.end() ? Rational(0) : it->second;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [mono, coef] : o.terms) {
        auto it = terms.find(mono);
        if (it == terms.end()) {
            terms.emplace(mono, coef);
            continue;
        }
        it->second += coef;
        if (it->second.is_zero())
            terms.erase(it);
    }
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            std::vector<int> mono = ma;
            mono.insert(mono.end(), mb.begin(), mb.end());
            std::sort(mono.begin(), mono.end());
            Polynomial t;
            t.terms[std::move(mono)] = ca * cb;
            r += t;
        }
    return r;
}

Polynomial operator*(const Rational& s, const Polynomial& a) {
    Polynomial r;
    if (s.is_zero())
        return r;
    for (const auto& [mono, coef] : a.terms)
        r.terms[mono] = s * coef;
    return r;
}

Polynomial Polynomial::operator-() const { return Rational(-1) * *this; }

namespace {

using PolyVec = std::vector<Polynomial>;

PolyVec poly_vec_zero(int n) { return PolyVec(std::size_t(n)); }

void poly_vec_add(PolyVec& acc, const PolyVec& v) {
    for (std::size_t i = 0; i < acc.size(); ++i)
        acc[i] += v[i];
}

PolyVec poly_vec_neg(const PolyVec& v) {
    PolyVec r = v;
    for (auto& x : r)
        x = -x;
    return r;
}

PolyVec apply_matrix(const Matrix& m, const PolyVec& v) {
    PolyVec r = poly_vec_zero(m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero())
                r[i] += m.at(i, j) * v[j];
    return r;
}

PolyVec bracket_poly(const LieAlgebra& h, const PolyVec& u, const PolyVec& v) {
    PolyVec r = poly_vec_zero(h.dim());
    for (int i = 0; i < h.dim(); ++i) {
        if (u[i].is_zero())
            continue;
        for (int j = 0; j < h.dim(); ++j) {
            if (v[j].is_zero())
                continue;
            const Polynomial f = u[i] * v[j];
            const Vec& c = h.bracket(i, j);
            for (int k = 0; k < h.dim(); ++k)
                if (!c[k].is_zero())
                    r[k] += c[k] * f;
        }
    }
    return r;
}

}  // namespace

WitnessResult find_witness(const LieAlgebra& g, const LieAlgebra& h, const NonAbelianCocycle& c,
                           const NonAbelianCocycle& c2) {
    if (!is_nonabelian_cocycle(g, h, c).valid || !is_nonabelian_cocycle(g, h, c2).valid)
        throw std::invalid_argument("find_witness: inputs must be valid cocycles");
    const int p = g.dim(), q = h.dim();

    // Stage 1: per g-basis vector, beta(a) must satisfy ad(beta(a)) = psi2_a - psi_a.
    const Matrix stacked = stacked_adjoint(h);
    const std::vector<Vec> kernel = mat_nullspace(stacked);  // = center of h
    const int z = int(kernel.size());
    std::vector<Vec> particular(p);
    for (int a = 0; a < p; ++a) {
        Vec rhs(std::size_t(q) * q);
        const Matrix delta = c2.psi[a] - c.psi[a];
        for (int j = 0; j < q; ++j)
            for (int k = 0; k < q; ++k)
                rhs[std::size_t(j) * q + k] = delta.at(k, j);
        AffineSolution sol = solve_affine(stacked, rhs);
        if (!sol.consistent()) {
            WitnessResult r;
            r.kind = WitnessResult::Kind::NotEquivalent;
            r.failing_stage = 1;
            return r;
        }
        particular[a] = *sol.particular;
    }

    // Stage 2: beta(a) = particular[a] + sum_k t_{a,k} kernel[k]; substitute
    // into the chi-equation and collect one polynomial per (pair, coordinate).
    const auto param = [&](int a, int k) { return a * z + k; };
    std::vector<PolyVec> beta(p);
    for (int a = 0; a < p; ++a) {
        beta[a] = poly_vec_zero(q);
        for (int r = 0; r < q; ++r)
            beta[a][r] = Polynomial::constant(particular[a][r]);
        for (int k = 0; k < z; ++k)
            for (int r = 0; r < q; ++r)
                beta[a][r] += kernel[k][r] * Polynomial::variable(param(a, k));
    }

    std::vector<Polynomial> constraints;
    for (int a = 0; a < p; ++a)
        for (int b = a + 1; b < p; ++b) {
            PolyVec resid = poly_vec_zero(q);
            const Vec delta_chi =
                vec_sub(c2.chi.coeff(MultiIndex({a, b})), c.chi.coeff(MultiIndex({a, b})));
            for (int r = 0; r < q; ++r)
                resid[r] += Polynomial::constant(-delta_chi[r]);
            poly_vec_add(resid, apply_matrix(c.psi[a], beta[b]));
            poly_vec_add(resid, poly_vec_neg(apply_matrix(c.psi[b], beta[a])));
            {  // -beta([a, b])
                const Vec& br = g.bracket(a, b);
                PolyVec t = poly_vec_zero(q);
                for (int m = 0; m < p; ++m)
                    if (!br[m].is_zero())
                        for (int r = 0; r < q; ++r)
                            t[r] += br[m] * beta[m][r];
                poly_vec_add(resid, poly_vec_neg(t));
            }
            poly_vec_add(resid, bracket_poly(h, beta[a], beta[b]));
            for (int r = 0; r < q; ++r)
                if (!resid[r].is_zero())
                    constraints.push_back(std::move(resid[r]));
        }

    int max_degree = 0;
    for (const auto& cst : constraints)
        max_degree = std::max(max_degree, cst.degree());
    if (max_degree > 1) {
        WitnessResult r;
        r.kind = WitnessResult::Kind::Unknown;
        for (int a = 0; a < p; ++a)
            for (int k = 0; k < z; ++k)
                r.residual.parameter_names.push_back("t_" + std::to_string(a) + "_" +
                                                     std::to_string(k));
        r.residual.constraints = std::move(constraints);
        return r;
    }

    // Affine solve over the free parameters.
    const int unknowns = p * z;
    Matrix sys(int(constraints.size()), unknowns);
    Vec rhs(constraints.size());
    for (int row = 0; row < int(constraints.size()); ++row) {
        for (const auto& [mono, coef] : constraints[row].terms) {
            if (mono.empty())
                rhs[row] = -coef;
            else
                sys.at(row, mono[0]) += coef;
        }
    }
    AffineSolution sol = solve_affine(sys, rhs);
    if (!sol.consistent()) {
        WitnessResult r;
        r.kind = WitnessResult::Kind::NotEquivalent;
        r.failing_stage = 2;
        return r;
    }

    Matrix beta_mat(q, p);
    for (int a = 0; a < p; ++a) {
        Vec col = particular[a];
        for (int k = 0; k < z; ++k)
            if (!(*sol.particular)[param(a, k)].is_zero())
                vec_add_to(col, vec_scale((*sol.particular)[param(a, k)], kernel[k]));
        for (int r = 0; r < q; ++r)
            beta_mat.at(r, a) = col[r];
    }
    if (!check_equivalent_with_witness(g, h, c, c2, beta_mat))
        throw std::logic_error("find_witness: candidate witness failed the exact check");
    WitnessResult r;
    r.kind = WitnessResult::Kind::Found;
    r.beta = std::move(beta_mat);
    return r;
}

}  // namespace nabext
