#include "nabext/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace nabext {

Vec vec_zero(int n) { return Vec(std::size_t(n)); }

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("vec_add: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("vec_sub: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] - b[i];
    return r;
}

Vec vec_neg(const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = -a[i];
    return r;
}

Vec vec_scale(const Rational& s, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = s * a[i];
    return r;
}

void vec_add_to(Vec& acc, const Vec& a) {
    if (acc.size() != a.size())
        throw std::invalid_argument("vec_add_to: size mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        acc[i] += a[i];
}

Matrix::Matrix(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != std::size_t(rows) * cols)
        throw std::invalid_argument("Matrix: entry count does not match shape");
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(int rows, const std::vector<Vec>& cols) {
    Matrix m(rows, int(cols.size()));
    for (int c = 0; c < int(cols.size()); ++c) {
        if (int(cols[c].size()) != rows)
            throw std::invalid_argument("Matrix::from_columns: column length mismatch");
        for (int r = 0; r < rows; ++r)
            m.at(r, c) = cols[c][r];
    }
    return m;
}

Vec Matrix::col(int c) const {
    Vec v(rows_);
    for (int r = 0; r < rows_; ++r)
        v[r] = at(r, c);
    return v;
}

Vec Matrix::row(int r) const {
    Vec v(cols_);
    for (int c = 0; c < cols_; ++c)
        v[c] = at(r, c);
    return v;
}

Vec Matrix::apply(const Vec& x) const {
    if (int(x.size()) != cols_)
        throw std::invalid_argument("Matrix::apply: dimension mismatch");
    Vec y(rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            y[r] += at(r, c) * x[c];
    return y;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            t.at(c, r) = at(r, c);
    return t;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero())
            return false;
    return true;
}

Matrix Matrix::operator-() const {
    Matrix m(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i)
        m.e_[i] = -e_[i];
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("Matrix +: shape mismatch");
    Matrix m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < m.e_.size(); ++i)
        m.e_[i] = a.e_[i] + b.e_[i];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("Matrix -: shape mismatch");
    Matrix m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < m.e_.size(); ++i)
        m.e_[i] = a.e_[i] - b.e_[i];
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("Matrix *: shape mismatch");
    Matrix m(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r)
        for (int k = 0; k < a.cols_; ++k) {
            const Rational& ark = a.at(r, k);
            if (ark.is_zero())
                continue;
            for (int c = 0; c < b.cols_; ++c)
                m.at(r, c) += ark * b.at(k, c);
        }
    return m;
}

Matrix operator*(const Rational& s, const Matrix& a) {
    Matrix m(a.rows_, a.cols_);
    for (std::size_t i = 0; i < m.e_.size(); ++i)
        m.e_[i] = s * a.e_[i];
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

RowEchelon reduced_row_echelon(Matrix m) {
    std::vector<int> pivots;
    int lead = 0;
    for (int c = 0; c < m.cols() && lead < m.rows(); ++c) {
        int p = -1;
        for (int r = lead; r < m.rows(); ++r)
            if (!m.at(r, c).is_zero()) {
                p = r;
                break;
            }
        if (p < 0)
            continue;
        if (p != lead)
            for (int k = 0; k < m.cols(); ++k)
                std::swap(m.at(p, k), m.at(lead, k));
        const Rational inv = Rational(1) / m.at(lead, c);
        for (int k = 0; k < m.cols(); ++k)
            m.at(lead, k) *= inv;
        for (int r = 0; r < m.rows(); ++r) {
            if (r == lead || m.at(r, c).is_zero())
                continue;
            const Rational f = m.at(r, c);
            for (int k = 0; k < m.cols(); ++k)
                m.at(r, k) -= f * m.at(lead, k);
        }
        pivots.push_back(c);
        ++lead;
    }
    return {std::move(m), std::move(pivots)};
}

int mat_rank(const Matrix& m) { return reduced_row_echelon(m).rank(); }

static std::vector<Vec> nullspace_from_echelon(const RowEchelon& e, int cols) {
    std::vector<bool> is_pivot(cols, false);
    for (int c : e.pivot_cols)
        is_pivot[c] = true;
    std::vector<Vec> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        Vec v = vec_zero(cols);
        v[f] = 1;
        for (int r = 0; r < e.rank(); ++r)
            v[e.pivot_cols[r]] = -e.reduced.at(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Vec> mat_nullspace(const Matrix& m) {
    return nullspace_from_echelon(reduced_row_echelon(m), m.cols());
}

AffineSolution solve_affine(const Matrix& m, const Vec& b) {
    if (int(b.size()) != m.rows())
        throw std::invalid_argument("solve_affine: right-hand side length mismatch");
    Matrix aug(m.rows(), m.cols() + 1);
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c)
            aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols()) = b[r];
    }
    const RowEchelon e = reduced_row_echelon(std::move(aug));

    AffineSolution sol;
    bool inconsistent = false;
    for (int c : e.pivot_cols)
        if (c == m.cols())
            inconsistent = true;

    RowEchelon hom;  // echelon of the left block, for the kernel
    hom.reduced = Matrix(e.reduced.rows(), m.cols());
    for (int r = 0; r < e.reduced.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            hom.reduced.at(r, c) = e.reduced.at(r, c);
    for (int c : e.pivot_cols)
        if (c < m.cols())
            hom.pivot_cols.push_back(c);
    sol.kernel_basis = nullspace_from_echelon(hom, m.cols());

    if (!inconsistent) {
        Vec x = vec_zero(m.cols());
        for (int r = 0; r < hom.rank(); ++r)
            x[hom.pivot_cols[r]] = e.reduced.at(r, m.cols());
        sol.particular = std::move(x);
    }
    return sol;
}

Rational determinant(Matrix m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant: matrix not square");
    const int n = m.rows();
    Rational det(1);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (!m.at(r, c).is_zero()) {
                p = r;
                break;
            }
        if (p < 0)
            return Rational(0);
        if (p != c) {
            for (int k = 0; k < n; ++k)
                std::swap(m.at(p, k), m.at(c, k));
            det = -det;
        }
        det *= m.at(c, c);
        const Rational inv = Rational(1) / m.at(c, c);
        for (int r = c + 1; r < n; ++r) {
            if (m.at(r, c).is_zero())
                continue;
            const Rational f = m.at(r, c) * inv;
            for (int k = c; k < n; ++k)
                m.at(r, k) -= f * m.at(c, k);
        }
    }
    return det;
}

std::optional<Matrix> mat_inverse(const Matrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("mat_inverse: matrix not square");
    const int n = m.rows();
    Matrix aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c)
            aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = 1;
    }
    const RowEchelon e = reduced_row_echelon(std::move(aug));
    if (e.rank() < n || e.pivot_cols[n - 1] != n - 1)
        return std::nullopt;
    Matrix inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            inv.at(r, c) = e.reduced.at(r, n + c);
    return inv;
}

}  // namespace nabext
