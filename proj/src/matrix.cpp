#include "matrix.hpp"

#include <utility>

namespace homjj {

Vec vec_zero(std::size_t n, FieldTag tag) {
    return Vec(n, Scalar::zero(tag));
}

Vec vec_basis(std::size_t n, std::size_t index, FieldTag tag) {
    Vec v = vec_zero(n, tag);
    v[index] = Scalar::one(tag);
    return v;
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::shape, "vector length mismatch");
    }
    Vec out = a;
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) {
        throw Error(ErrorCode::shape, "vector length mismatch");
    }
    Vec out = a;
    for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    return out;
}

Vec vec_neg(const Vec& a) {
    Vec out;
    out.reserve(a.size());
    for (const auto& x : a) out.push_back(-x);
    return out;
}

Vec vec_scale(const Scalar& c, const Vec& a) {
    Vec out;
    out.reserve(a.size());
    for (const auto& x : a) out.push_back(c * x);
    return out;
}

bool vec_is_zero(const Vec& a) {
    for (const auto& x : a) {
        if (!x.is_zero()) return false;
    }
    return true;
}

std::string vec_str(const Vec& a) {
    std::string s = "[";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ", ";
        s += a[i].str();
    }
    return s + "]";
}

Matrix::Matrix(std::size_t rows, std::size_t cols, FieldTag tag)
    : rows_(rows), cols_(cols), tag_(tag), entries_(rows * cols, Scalar::zero(tag)) {}

Matrix Matrix::identity(std::size_t n, FieldTag tag) {
    Matrix m(n, n, tag);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(tag);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, FieldTag tag) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    Matrix m(r, c, tag);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) {
            throw Error(ErrorCode::shape, "ragged rows in matrix literal");
        }
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, FieldTag tag) {
    std::size_t c = cols.size();
    std::size_t r = c == 0 ? 0 : cols[0].size();
    Matrix m(r, c, tag);
    for (std::size_t j = 0; j < c; ++j) {
        if (cols[j].size() != r) {
            throw Error(ErrorCode::shape, "ragged columns in matrix literal");
        }
        for (std::size_t i = 0; i < r; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Vec Matrix::row(std::size_t i) const {
    Vec v;
    v.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v.push_back(at(i, j));
    return v;
}

Vec Matrix::column(std::size_t j) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
    return v;
}

void Matrix::require_same_domain(const Matrix& rhs) const {
    if (tag_ != rhs.tag_) {
        throw Error(ErrorCode::domain,
                    "matrix domain mismatch: " + tag_.name() + " vs " + rhs.tag_.name());
    }
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    require_same_domain(rhs);
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw Error(ErrorCode::shape, "matrix shape mismatch in addition");
    }
    Matrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += rhs.entries_[i];
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    require_same_domain(rhs);
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw Error(ErrorCode::shape, "matrix shape mismatch in subtraction");
    }
    Matrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= rhs.entries_[i];
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out = *this;
    for (auto& e : out.entries_) e = -e;
    return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    require_same_domain(rhs);
    if (cols_ != rhs.rows_) {
        throw Error(ErrorCode::shape,
                    "matrix shape mismatch in product: " + std::to_string(rows_) + "x" +
                        std::to_string(cols_) + " times " + std::to_string(rhs.rows_) + "x" +
                        std::to_string(rhs.cols_));
    }
    Matrix out(rows_, rhs.cols_, tag_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                out.at(i, j) += a * rhs.at(k, j);
            }
        }
    }
    return out;
}

Vec Matrix::operator*(const Vec& v) const {
    if (v.size() != cols_) {
        throw Error(ErrorCode::shape, "matrix-vector shape mismatch");
    }
    Vec out = vec_zero(rows_, tag_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero() || v[j].is_zero()) continue;
            out[i] += at(i, j) * v[j];
        }
    }
    return out;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix out = *this;
    for (auto& e : out.entries_) e *= c;
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_, tag_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    }
    return out;
}

Matrix Matrix::pow(unsigned n) const {
    if (!is_square()) {
        throw Error(ErrorCode::shape, "matrix power requires a square matrix");
    }
    Matrix out = identity(rows_, tag_);
    for (unsigned k = 0; k < n; ++k) out = out * (*this);
    return out;
}

bool Matrix::operator==(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || tag_ != rhs.tag_) return false;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] != rhs.entries_[i]) return false;
    }
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

namespace {

// Row echelon form by exact field elimination. Returns pivot column indices;
// `m` is reduced in place (fully reduced when `reduce` is set).
std::vector<std::size_t> echelon(Matrix& m, bool reduce) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot_row = r;
        while (pivot_row < m.rows() && m.at(pivot_row, c).is_zero()) ++pivot_row;
        if (pivot_row == m.rows()) continue;
        if (pivot_row != r) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                std::swap(m.at(pivot_row, j), m.at(r, j));
            }
        }
        Scalar inv = m.at(r, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
        std::size_t start = reduce ? 0 : r + 1;
        for (std::size_t i = start; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Scalar factor = m.at(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) {
                m.at(i, j) -= factor * m.at(r, j);
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t Matrix::rank() const {
    Matrix work = *this;
    return echelon(work, false).size();
}

std::vector<std::size_t> Matrix::pivot_columns() const {
    Matrix work = *this;
    return echelon(work, false);
}

std::vector<Vec> Matrix::null_space() const {
    Matrix work = *this;
    std::vector<std::size_t> pivots = echelon(work, true);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v = vec_zero(cols_, tag_);
        v[free_col] = Scalar::one(tag_);
        for (std::size_t k = 0; k < pivots.size(); ++k) {
            v[pivots[k]] = -work.at(k, free_col);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Vec Matrix::solve(const Vec& b) const {
    if (b.size() != rows_) {
        throw Error(ErrorCode::shape, "right-hand side length mismatch in solve");
    }
    Matrix aug(rows_, cols_ + 1, tag_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    std::vector<std::size_t> pivots = echelon(aug, true);
    if (!pivots.empty() && pivots.back() == cols_) {
        throw Error(ErrorCode::precondition, "inconsistent linear system in solve");
    }
    Vec x = vec_zero(cols_, tag_);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        x[pivots[k]] = aug.at(k, cols_);
    }
    return x;
}

bool Matrix::is_invertible() const {
    return is_square() && rank() == rows_;
}

Matrix Matrix::inverse() const {
    if (!is_square()) {
        throw Error(ErrorCode::shape, "matrix inverse requires a square matrix");
    }
    std::size_t n = rows_;
    if (n == 0) return *this;

    // Scale rows to clear denominators so the Bareiss recurrence stays
    // integral over Q; over F_p the scaling is trivial.
    Vec row_scale(n, Scalar::one(tag_));
    Matrix work(n, 2 * n, tag_);
    for (std::size_t i = 0; i < n; ++i) {
        if (tag_.kind == FieldKind::Q) {
            mpz_class l(1);
            for (std::size_t j = 0; j < n; ++j) {
                mpz_class den = at(i, j).rat().get_den();
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
                l = l / g * den;
            }
            row_scale[i] = Scalar::rational(mpq_class(l));
        }
        for (std::size_t j = 0; j < n; ++j) work.at(i, j) = row_scale[i] * at(i, j);
        work.at(i, n + i) = row_scale[i];
    }

    // Fraction-free Gauss-Jordan: every division by the previous pivot is
    // exact. Left block ends as diag(d) with the right block d * inverse.
    Scalar prev = Scalar::one(tag_);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot_row = k;
        while (pivot_row < n && work.at(pivot_row, k).is_zero()) ++pivot_row;
        if (pivot_row == n) {
            throw SingularMatrixError("matrix is singular", rank());
        }
        if (pivot_row != k) {
            for (std::size_t j = 0; j < 2 * n; ++j) {
                std::swap(work.at(pivot_row, j), work.at(k, j));
            }
        }
        Scalar pivot = work.at(k, k);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            Scalar factor = work.at(i, k);
            for (std::size_t j = 0; j < 2 * n; ++j) {
                if (j == k) continue;
                work.at(i, j) = (pivot * work.at(i, j) - factor * work.at(k, j)) / prev;
            }
            work.at(i, k) = Scalar::zero(tag_);
        }
        prev = pivot;
    }

    Matrix inv(n, n, tag_);
    for (std::size_t i = 0; i < n; ++i) {
        Scalar d = work.at(i, i).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            inv.at(i, j) = work.at(i, n + j) * d * row_scale[j];
        }
    }
    return inv;
}

std::string Matrix::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) s += ", ";
        s += vec_str(row(i));
    }
    return s + "]";
}

}  // namespace homjj
