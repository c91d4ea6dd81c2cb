#include "nabext/lie_algebra.hpp"

#include <stdexcept>
#include <utility>

namespace nabext {

LieAlgebra::LieAlgebra(int dim, std::vector<std::string> basis_names)
    : dim_(dim), names_(std::move(basis_names)) {
    if (dim < 0)
        throw std::invalid_argument("LieAlgebra: negative dimension");
    if (names_.empty())
        for (int i = 0; i < dim; ++i)
            names_.push_back("e" + std::to_string(i));
    if (int(names_.size()) != dim)
        throw std::invalid_argument("LieAlgebra: basis name count does not match dim");
    c_.assign(dim, std::vector<Vec>(dim, vec_zero(dim)));
}

LieAlgebra LieAlgebra::from_raw_table(int dim, std::vector<std::string> basis_names,
                                      std::vector<std::vector<Vec>> table) {
    LieAlgebra a(dim, std::move(basis_names));
    if (int(table.size()) != dim)
        throw std::invalid_argument("LieAlgebra: table row count does not match dim");
    for (const auto& row : table) {
        if (int(row.size()) != dim)
            throw std::invalid_argument("LieAlgebra: table column count does not match dim");
        for (const auto& v : row)
            if (int(v.size()) != dim)
                throw std::invalid_argument("LieAlgebra: bracket vector length does not match dim");
    }
    a.c_ = std::move(table);
    return a;
}

Vec LieAlgebra::bracket_vec(const Vec& u, const Vec& v) const {
    if (int(u.size()) != dim_ || int(v.size()) != dim_)
        throw std::invalid_argument("bracket_vec: vector length does not match dim");
    Vec r = vec_zero(dim_);
    for (int i = 0; i < dim_; ++i) {
        if (u[i].is_zero())
            continue;
        for (int j = 0; j < dim_; ++j) {
            if (v[j].is_zero())
                continue;
            const Rational f = u[i] * v[j];
            for (int k = 0; k < dim_; ++k)
                r[k] += f * c_[i][j][k];
        }
    }
    return r;
}

void LieAlgebra::set_bracket(int i, int j, Vec v) {
    if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
        throw std::invalid_argument("set_bracket: index out of range");
    if (int(v.size()) != dim_)
        throw std::invalid_argument("set_bracket: vector length does not match dim");
    if (i == j) {
        if (!vec_is_zero(v))
            throw std::invalid_argument("set_bracket: [e_i, e_i] must vanish");
        return;
    }
    c_[j][i] = vec_neg(v);
    c_[i][j] = std::move(v);
}

bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.dim_ == b.dim_ && a.c_ == b.c_;
}

Vec jacobiator(const LieAlgebra& a, int i, int j, int k) {
    Vec ei = vec_zero(a.dim()), ej = vec_zero(a.dim()), ek = vec_zero(a.dim());
    ei[i] = 1;
    ej[j] = 1;
    ek[k] = 1;
    Vec r = a.bracket_vec(ei, a.bracket(j, k));
    vec_add_to(r, a.bracket_vec(ej, a.bracket(k, i)));
    vec_add_to(r, a.bracket_vec(ek, a.bracket(i, j)));
    return r;
}

LieReport validate_lie(const LieAlgebra& a) {
    LieReport rep;
    const int n = a.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Vec d = vec_add(a.bracket(i, j), a.bracket(j, i));
            if (!vec_is_zero(d)) {
                rep.valid = false;
                rep.violations.push_back(
                    {LieViolation::Kind::Antisymmetry, {i, j, -1}, std::move(d)});
            }
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Vec d = jacobiator(a, i, j, k);
                if (!vec_is_zero(d)) {
                    rep.valid = false;
                    rep.violations.push_back({LieViolation::Kind::Jacobi, {i, j, k}, std::move(d)});
                }
            }
    return rep;
}

ModuleStructure trivial_module(const LieAlgebra& l, int space_dim) {
    ModuleStructure m{l, space_dim, {}};
    m.action.assign(l.dim(), Matrix(space_dim, space_dim));
    return m;
}

ModuleStructure adjoint_module(const LieAlgebra& l) {
    if (!validate_lie(l).valid)
        throw std::invalid_argument("adjoint_module: input algebra is not a Lie algebra");
    ModuleStructure m{l, l.dim(), {}};
    for (int i = 0; i < l.dim(); ++i) {
        std::vector<Vec> cols;
        for (int j = 0; j < l.dim(); ++j)
            cols.push_back(l.bracket(i, j));
        m.action.push_back(Matrix::from_columns(l.dim(), cols));
    }
    return m;
}

ModuleStructure coadjoint_module(const LieAlgebra& l) {
    ModuleStructure m = adjoint_module(l);
    for (auto& a : m.action)
        a = -a.transpose();
    return m;
}

ModuleReport module_check(const ModuleStructure& m) {
    const int n = m.algebra.dim();
    if (int(m.action.size()) != n)
        throw std::invalid_argument("module_check: one action matrix per basis vector required");
    for (const auto& a : m.action)
        if (a.rows() != m.space_dim || a.cols() != m.space_dim)
            throw std::invalid_argument("module_check: action matrix shape mismatch");
    ModuleReport rep;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Matrix lhs(m.space_dim, m.space_dim);
            const Vec& cij = m.algebra.bracket(i, j);
            for (int k = 0; k < n; ++k)
                if (!cij[k].is_zero())
                    lhs = lhs + cij[k] * m.action[k];
            Matrix defect = lhs - (m.action[i] * m.action[j] - m.action[j] * m.action[i]);
            if (!defect.is_zero()) {
                rep.valid = false;
                rep.violations.push_back({i, j, std::move(defect)});
            }
        }
    return rep;
}

SplitAlgebra direct_sum(const LieAlgebra& g, const LieAlgebra& h) {
    if (!validate_lie(g).valid || !validate_lie(h).valid)
        throw std::invalid_argument("direct_sum: input algebra is not a Lie algebra");
    const int p = g.dim(), q = h.dim();
    std::vector<std::string> names = g.basis_names();
    names.insert(names.end(), h.basis_names().begin(), h.basis_names().end());
    LieAlgebra sum(p + q, std::move(names));
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) {
            Vec v = vec_zero(p + q);
            for (int k = 0; k < p; ++k)
                v[k] = g.bracket(i, j)[k];
            sum.set_bracket(i, j, std::move(v));
        }
    for (int i = 0; i < q; ++i)
        for (int j = i + 1; j < q; ++j) {
            Vec v = vec_zero(p + q);
            for (int k = 0; k < q; ++k)
                v[p + k] = h.bracket(i, j)[k];
            sum.set_bracket(p + i, p + j, std::move(v));
        }
    return {g, h, std::move(sum)};
}

Matrix stacked_adjoint(const LieAlgebra& h) {
    const int q = h.dim();
    Matrix a(q * q, q);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j)
            for (int k = 0; k < q; ++k)
                a.at(j * q + k, i) = h.bracket(i, j)[k];
    return a;
}

std::vector<Vec> center(const LieAlgebra& h) {
    if (!validate_lie(h).valid)
        throw std::invalid_argument("center: input algebra is not a Lie algebra");
    return mat_nullspace(stacked_adjoint(h));
}

Matrix ad_matrix(const LieAlgebra& h, const Vec& x) {
    std::vector<Vec> cols;
    for (int j = 0; j < h.dim(); ++j) {
        Vec ej = vec_zero(h.dim());
        ej[j] = 1;
        cols.push_back(h.bracket_vec(x, ej));
    }
    return Matrix::from_columns(h.dim(), cols);
}

bool is_derivation(const Matrix& d, const LieAlgebra& h) {
    if (d.rows() != h.dim() || d.cols() != h.dim())
        throw std::invalid_argument("is_derivation: matrix shape does not match algebra");
    for (int i = 0; i < h.dim(); ++i)
        for (int j = i + 1; j < h.dim(); ++j) {
            Vec lhs = d.apply(h.bracket(i, j));
            Vec ei = vec_zero(h.dim()), ej = vec_zero(h.dim());
            ei[i] = 1;
            ej[j] = 1;
            Vec rhs = vec_add(h.bracket_vec(d.apply(ei), ej), h.bracket_vec(ei, d.apply(ej)));
            if (lhs != rhs)
                return false;
        }
    return true;
}

}  // namespace nabext
