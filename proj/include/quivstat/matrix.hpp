#pragma once

// Dense matrices over an exact field and the elimination routines every other
// layer is built on. Pivoting always takes the first nonzero entry in column
// order, so every basis produced here is deterministic.

#include "field.hpp"

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace quivstat {

template <class K>
class Matrix {
public:
    using Scalar = K;

    Matrix() = default;
    Matrix(Field<K> field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

    static Matrix identity(Field<K> field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
        return m;
    }

    /// Row-major integer literal, reduced into the field.
    static Matrix from_ints(Field<K> field, std::size_t rows, std::size_t cols,
                            std::initializer_list<long long> entries) {
        if (entries.size() != rows * cols) throw UsageError("Matrix::from_ints: entry count mismatch");
        Matrix m(field, rows, cols);
        std::size_t k = 0;
        for (long long e : entries) m.data_[k++] = field.from_int(e);
        return m;
    }

    static Matrix column(Field<K> field, const std::vector<K>& v) {
        Matrix m(field, v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
        return m;
    }

    const Field<K>& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    K& operator()(std::size_t r, std::size_t c) {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }
    const K& operator()(std::size_t r, std::size_t c) const {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }
    const std::vector<K>& data() const { return data_; }

    std::vector<K> col(std::size_t c) const {
        std::vector<K> v;
        v.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
        return v;
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const K& x) { return Field<K>::is_zero(x); });
    }

    Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw UsageError("matrix product: inner dimensions differ");
        Matrix out(a.field_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const K& aik = a(i, k);
                if (Field<K>::is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw UsageError("matrix sum: shapes differ");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw UsageError("matrix difference: shapes differ");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }
    Matrix operator-() const {
        Matrix m = *this;
        for (auto& x : m.data_) x = -x;
        return m;
    }
    friend Matrix operator*(const K& s, Matrix a) {
        for (auto& x : a.data_) x *= s;
        return a;
    }
    Matrix& operator+=(const Matrix& b) { return *this = *this + b; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// Columns `cols` of this matrix, in the given order.
    Matrix select_cols(const std::vector<std::size_t>& cols) const {
        Matrix m(field_, rows_, cols.size());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t j = 0; j < cols.size(); ++j) m(r, j) = (*this)(r, cols[j]);
        return m;
    }
    Matrix select_rows(const std::vector<std::size_t>& rows) const {
        Matrix m(field_, rows.size(), cols_);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t c = 0; c < cols_; ++c) m(i, c) = (*this)(rows[i], c);
        return m;
    }
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        Matrix m(field_, nr, nc);
        for (std::size_t r = 0; r < nr; ++r)
            for (std::size_t c = 0; c < nc; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
        return m;
    }
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
        for (std::size_t r = 0; r < b.rows_; ++r)
            for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
    }

    std::string to_string() const {
        std::ostringstream os;
        os << '[';
        for (std::size_t r = 0; r < rows_; ++r) {
            os << (r ? "; " : "");
            for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << Field<K>::to_string((*this)(r, c));
        }
        os << ']';
        return os.str();
    }

private:
    Field<K> field_{};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<K> data_;
};

template <class K>
std::ostream& operator<<(std::ostream& os, const Matrix<K>& m) {
    return os << m.to_string();
}

template <class K>
Matrix<K> hstack(const Matrix<K>& a, const Matrix<K>& b) {
    if (a.rows() != b.rows()) throw UsageError("hstack: row counts differ");
    Matrix<K> m(a.field(), a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

template <class K>
Matrix<K> vstack(const Matrix<K>& a, const Matrix<K>& b) {
    if (a.cols() != b.cols()) throw UsageError("vstack: column counts differ");
    Matrix<K> m(a.field(), a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

template <class K>
Matrix<K> kron(const Matrix<K>& a, const Matrix<K>& b) {
    Matrix<K> m(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (Field<K>::is_zero(a(i, j))) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return m;
}

template <class K>
Matrix<K> block_diagonal(const Field<K>& field, const std::vector<Matrix<K>>& blocks) {
    std::size_t r = 0, c = 0;
    for (const auto& b : blocks) r += b.rows(), c += b.cols();
    Matrix<K> m(field, r, c);
    r = c = 0;
    for (const auto& b : blocks) {
        m.set_block(r, c, b);
        r += b.rows();
        c += b.cols();
    }
    return m;
}

template <class K>
struct Echelon {
    Matrix<K> reduced;                 // reduced row echelon form
    std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

/// Reduced row echelon form by Gauss-Jordan elimination.
template <class K>
Echelon<K> rref(Matrix<K> a) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && Field<K>::is_zero(a(p, col))) ++p;
        if (p == a.rows()) continue;
        if (p != row)
            for (std::size_t c = col; c < a.cols(); ++c) std::swap(a(p, c), a(row, c));
        const K inv = Field<K>::inv(a(row, col));
        for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || Field<K>::is_zero(a(r, col))) continue;
            const K factor = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= factor * a(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(a), std::move(pivots)};
}

template <class K>
std::size_t rank(const Matrix<K>& a) {
    if (a.empty()) return 0;
    return rref(a).pivots.size();
}

template <class K>
struct RankKernelImage {
    std::size_t rank = 0;
    Matrix<K> kernel;  // cols(A) x (cols(A) - rank), columns form a basis of ker A
    Matrix<K> image;   // rows(A) x rank, the pivot columns of A
};

template <class K>
Matrix<K> kernel_from_echelon(const Echelon<K>& e, std::size_t cols) {
    const Field<K>& f = e.reduced.field();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    Matrix<K> ker(f, cols, cols - e.pivots.size());
    std::size_t k = 0;
    for (std::size_t j = 0; j < cols; ++j) {
        if (is_pivot[j]) continue;
        ker(j, k) = f.one();
        for (std::size_t r = 0; r < e.pivots.size(); ++r) ker(e.pivots[r], k) = -e.reduced(r, j);
        ++k;
    }
    return ker;
}

template <class K>
RankKernelImage<K> rank_kernel_image(const Matrix<K>& a) {
    auto e = rref(a);
    RankKernelImage<K> out;
    out.rank = e.pivots.size();
    out.kernel = kernel_from_echelon(e, a.cols());
    out.image = a.select_cols(e.pivots);
    return out;
}

template <class K>
Matrix<K> kernel(const Matrix<K>& a) {
    return kernel_from_echelon(rref(a), a.cols());
}

/// Basis (as columns) of the column space, chosen among the columns of `a`.
template <class K>
Matrix<K> column_space(const Matrix<K>& a) {
    return a.select_cols(rref(a).pivots);
}

/// Solves A X = B. Returns nullopt when inconsistent; free variables are set to zero.
template <class K>
std::optional<Matrix<K>> solve(const Matrix<K>& a, const Matrix<K>& b) {
    if (a.rows() != b.rows()) throw UsageError("solve: A and b have different row counts");
    auto e = rref(hstack(a, b));
    Matrix<K> x(a.field(), a.cols(), b.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] >= a.cols()) return std::nullopt;
        for (std::size_t c = 0; c < b.cols(); ++c) x(e.pivots[r], c) = e.reduced(r, a.cols() + c);
    }
    return x;
}

template <class K>
std::optional<Matrix<K>> inverse(const Matrix<K>& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    auto x = solve(a, Matrix<K>::identity(a.field(), a.rows()));
    if (!x || !(a * *x == Matrix<K>::identity(a.field(), a.rows()))) return std::nullopt;
    return x;
}

template <class K>
bool is_invertible(const Matrix<K>& a) {
    return a.rows() == a.cols() && rank(a) == a.rows();
}

/// L with L * a = I for `a` of full column rank.
template <class K>
Matrix<K> left_inverse(const Matrix<K>& a) {
    const std::size_t n = a.rows(), k = a.cols();
    auto e = rref(hstack(a, Matrix<K>::identity(a.field(), n)));
    for (std::size_t i = 0; i < k; ++i)
        if (i >= e.pivots.size() || e.pivots[i] != i) throw UsageError("left_inverse: columns are dependent");
    return e.reduced.block(0, k, k, n);
}

/// R with a * R = I for `a` of full row rank.
template <class K>
Matrix<K> right_inverse(const Matrix<K>& a) {
    return left_inverse(a.transpose()).transpose();
}

/// Standard basis vectors completing the column space of `u` to the whole space.
template <class K>
Matrix<K> complement_basis(const Matrix<K>& u) {
    const std::size_t n = u.rows();
    std::vector<bool> taken(n, false);
    if (!u.empty())
        for (auto p : rref(u.transpose()).pivots) taken[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < n; ++i)
        if (!taken[i]) free.push_back(i);
    return Matrix<K>::identity(u.field(), n).select_cols(free);
}

/// Rows spanning the annihilator: a full-row-rank Q with ker Q = column space of `u`.
template <class K>
Matrix<K> annihilator(const Matrix<K>& u, std::size_t ambient) {
    if (u.cols() == 0) return Matrix<K>::identity(u.field(), ambient);
    return kernel(u.transpose()).transpose();
}

template <class K>
Matrix<K> power(const Matrix<K>& a, std::size_t e) {
    Matrix<K> result = Matrix<K>::identity(a.field(), a.rows());
    Matrix<K> base = a;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

template <class K>
bool is_nilpotent(const Matrix<K>& a) {
    if (a.rows() != a.cols()) throw UsageError("is_nilpotent: matrix is not square");
    return power(a, a.rows()).is_zero();
}

/// Characteristic polynomial det(xI - A), coefficients from the leading one down
/// to the constant term. Berkowitz's division-free recursion, valid in any
/// characteristic.
template <class K>
std::vector<K> char_poly(const Matrix<K>& a) {
    if (a.rows() != a.cols()) throw UsageError("char_poly: matrix is not square");
    const Field<K>& f = a.field();
    const std::size_t n = a.rows();
    if (n == 0) return {f.one()};
    std::vector<K> v{f.one(), -a(n - 1, n - 1)};
    for (std::size_t size = 2; size <= n; ++size) {
        const std::size_t top = n - size;  // leading row/col of the current principal block
        const std::size_t r = size - 1;    // order of the trailing block
        const K alpha = a(top, top);
        Matrix<K> row(f, 1, r), column(f, r, 1), trailing = a.block(top + 1, top + 1, r, r);
        for (std::size_t j = 0; j < r; ++j) {
            row(0, j) = a(top, top + 1 + j);
            column(j, 0) = a(top + 1 + j, top);
        }
        // Toeplitz column: 1, -alpha, -R C, -R A C, ..., -R A^{r-1} C
        std::vector<K> t{f.one(), -alpha};
        Matrix<K> w = column;
        for (std::size_t k = 0; k < r; ++k) {
            t.push_back(-(row * w)(0, 0));
            w = trailing * w;
        }
        std::vector<K> next(size + 1, f.zero());
        for (std::size_t i = 0; i <= size; ++i)
            for (std::size_t j = 0; j <= std::min(i, r); ++j) next[i] += t[i - j] * v[j];
        v = std::move(next);
    }
    return v;
}

enum class Definiteness { positive_definite, positive_semidefinite_with_radical, indefinite };

inline std::string to_string(Definiteness d) {
    switch (d) {
        case Definiteness::positive_definite: return "positive_definite";
        case Definiteness::positive_semidefinite_with_radical: return "positive_semidefinite_with_radical";
        case Definiteness::indefinite: return "indefinite";
    }
    return "?";
}

struct PsdResult {
    Definiteness verdict;
    Matrix<Rational> radical;  // columns span ker S when semidefinite
};

/// Exact definiteness of a symmetric rational matrix. All eigenvalues of a
/// real symmetric matrix are >= 0 iff the coefficients of det(xI - S)
/// weakly alternate in sign.
inline PsdResult psd_verdict(const Matrix<Rational>& s) {
    if (s.rows() != s.cols() || !(s == s.transpose())) throw UsageError("psd_verdict: matrix is not symmetric");
    const auto c = char_poly(s);
    bool alternating = true;
    for (std::size_t k = 0; k < c.size(); ++k) {
        const Rational signed_coeff = (k % 2 == 0) ? c[k] : Rational(-c[k]);
        if (signed_coeff < 0) alternating = false;
    }
    if (!alternating) return {Definiteness::indefinite, Matrix<Rational>(s.field(), s.rows(), 0)};
    if (c.back() != 0) return {Definiteness::positive_definite, Matrix<Rational>(s.field(), s.rows(), 0)};
    return {Definiteness::positive_semidefinite_with_radical, kernel(s)};
}

/// Maps an integer matrix into the given field.
template <class K>
Matrix<K> lift(const Field<K>& field, const std::vector<std::vector<long long>>& rows) {
    const std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
    Matrix<K> m(field, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = field.from_int(rows[i][j]);
    return m;
}

}  // namespace quivstat
