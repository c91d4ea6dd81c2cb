#pragma once

#include "nabext/rational.hpp"

#include <optional>
#include <vector>

namespace nabext {

using Vec = std::vector<Rational>;

Vec vec_zero(int n);
bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);
Vec vec_scale(const Rational& s, const Vec& a);
void vec_add_to(Vec& acc, const Vec& a);

/// Dense matrix of rationals, row-major. Zero rows or columns are allowed.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(std::size_t(rows) * cols) {}
    Matrix(int rows, int cols, std::vector<Rational> entries);

    static Matrix identity(int n);
    static Matrix from_columns(int rows, const std::vector<Vec>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return e_[std::size_t(r) * cols_ + c]; }
    const Rational& at(int r, int c) const { return e_[std::size_t(r) * cols_ + c]; }

    Vec col(int c) const;
    Vec row(int r) const;
    Vec apply(const Vec& x) const;
    Matrix transpose() const;
    bool is_zero() const;

    Matrix operator-() const;
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> e_;
};

struct RowEchelon {
    Matrix reduced;
    std::vector<int> pivot_cols;
    int rank() const { return int(pivot_cols.size()); }
};

/// Reduced row echelon form. Pivots are chosen as the first nonzero entry
/// scanning columns left to right; exact arithmetic needs no magnitude pivoting.
RowEchelon reduced_row_echelon(Matrix m);

int mat_rank(const Matrix& m);

/// Canonical basis of { x : m x = 0 }: one vector per free column, with that
/// free variable set to 1 and all other free variables to 0, in column order.
std::vector<Vec> mat_nullspace(const Matrix& m);

struct AffineSolution {
    std::optional<Vec> particular;  // absent when the system is inconsistent
    std::vector<Vec> kernel_basis;
    bool consistent() const { return particular.has_value(); }
};

/// Solves m x = b. The particular solution sets every free variable to 0.
AffineSolution solve_affine(const Matrix& m, const Vec& b);

Rational determinant(Matrix m);
std::optional<Matrix> mat_inverse(const Matrix& m);

}  // namespace nabext
