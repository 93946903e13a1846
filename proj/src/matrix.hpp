#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace homjj {

// Coordinate vectors are plain Scalar sequences over a single domain.
using Vec = std::vector<Scalar>;

Vec vec_zero(std::size_t n, FieldTag tag);
Vec vec_basis(std::size_t n, std::size_t index, FieldTag tag);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_neg(const Vec& a);
Vec vec_scale(const Scalar& c, const Vec& a);
bool vec_is_zero(const Vec& a);
std::string vec_str(const Vec& a);

// Dense exact matrix over Q or F_p, row-major.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0), tag_(FieldTag::rationals()) {}
    Matrix(std::size_t rows, std::size_t cols, FieldTag tag);

    static Matrix identity(std::size_t n, FieldTag tag);
    static Matrix from_rows(const std::vector<Vec>& rows, FieldTag tag);
    static Matrix from_columns(const std::vector<Vec>& cols, FieldTag tag);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    FieldTag tag() const { return tag_; }

    const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
    Scalar& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec column(std::size_t j) const;

    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator-() const;
    Vec operator*(const Vec& v) const;
    Matrix scaled(const Scalar& c) const;
    Matrix transpose() const;
    Matrix pow(unsigned n) const;

    bool operator==(const Matrix& rhs) const;
    bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    // Exact inverse via fraction-free (Bareiss) Gauss-Jordan elimination.
    // Throws SingularMatrixError carrying the rank when not invertible.
    Matrix inverse() const;
    bool is_invertible() const;

    std::size_t rank() const;
    // Indices (0-based) of a column basis of the column space.
    std::vector<std::size_t> pivot_columns() const;
    // Basis of { x : Ax = 0 }.
    std::vector<Vec> null_space() const;
    // One solution of Ax = b; throws when the system is inconsistent.
    Vec solve(const Vec& b) const;

    std::string str() const;

private:
    void require_same_domain(const Matrix& rhs) const;

    std::size_t rows_;
    std::size_t cols_;
    FieldTag tag_;
    std::vector<Scalar> entries_;
};

}  // namespace homjj
