#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ginv/rational.hpp"

namespace ginv {

/// Dense matrix over Rational with value semantics. The involution used
/// throughout the library is the transpose; over the rationals it is
/// proper: transpose(M)*M = 0 forces M = 0 because the diagonal of
/// M^T*M sums squares.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}

    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        entries_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) {
                throw std::invalid_argument("ragged matrix initializer");
            }
            for (const auto& value : row) {
                entries_.push_back(value);
            }
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = Rational(1);
        }
        return m;
    }

    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    bool is_zero() const {
        for (const auto& e : entries_) {
            if (!e.is_zero()) return false;
        }
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                t(j, i) = (*this)(i, j);
            }
        }
        return t;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        require_same_shape(a, b, "matrix addition");
        Matrix out(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.entries_.size(); ++i) {
            out.entries_[i] = a.entries_[i] + b.entries_[i];
        }
        return out;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        require_same_shape(a, b, "matrix subtraction");
        Matrix out(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.entries_.size(); ++i) {
            out.entries_[i] = a.entries_[i] - b.entries_[i];
        }
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) {
            throw std::invalid_argument("matrix product dimension mismatch");
        }
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    if (b(k, j).is_zero()) continue;
                    out(i, j) += aik * b(k, j);
                }
            }
        }
        return out;
    }

    friend Matrix operator*(const Rational& s, const Matrix& a) {
        Matrix out(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.entries_.size(); ++i) {
            out.entries_[i] = s * a.entries_[i];
        }
        return out;
    }

    /// Compact single-line form, e.g. [[0,1/6],[1,2]].
    std::string str() const {
        std::string out = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            out += (i == 0) ? "[" : ",[";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j > 0) out += ',';
                out += (*this)(i, j).str();
            }
            out += ']';
        }
        out += ']';
        return out;
    }

  private:
    static void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
            throw std::invalid_argument(std::string(what) + ": dimension mismatch");
        }
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> entries_;  // row-major, size rows_*cols_
};

inline Matrix power(const Matrix& a, std::size_t n) {
    if (!a.is_square()) {
        throw std::invalid_argument("matrix power requires a square matrix");
    }
    Matrix result = Matrix::identity(a.rows());
    Matrix base = a;
    while (n > 0) {
        if (n & 1u) result = result * base;
        n >>= 1u;
        if (n > 0) base = base * base;
    }
    return result;
}

/// Horizontal concatenation [A | B].
inline Matrix hcat(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) {
        throw std::invalid_argument("hcat: row count mismatch");
    }
    Matrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
    }
    return out;
}

/// Places A and B as diagonal blocks, zero elsewhere.
inline Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
    return out;
}

struct RrefResult {
    Matrix rref;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
    Matrix transform;  // transform * input == rref
};

/// Reduced row echelon form by exact Gauss-Jordan elimination. Entries
/// stay rational throughout; intermediate growth is bounded by gcd
/// reduction at every step but can still be large for ill-conditioned
/// integer input.
inline RrefResult rref_rank(const Matrix& a) {
    RrefResult res;
    res.rref = a;
    res.transform = Matrix::identity(a.rows());
    Matrix& r = res.rref;
    Matrix& t = res.transform;

    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
        std::size_t found = a.rows();
        for (std::size_t i = pivot_row; i < a.rows(); ++i) {
            if (!r(i, col).is_zero()) {
                found = i;
                break;
            }
        }
        if (found == a.rows()) continue;

        if (found != pivot_row) {
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(r(found, j), r(pivot_row, j));
            for (std::size_t j = 0; j < a.rows(); ++j) std::swap(t(found, j), t(pivot_row, j));
        }

        Rational inv = r(pivot_row, col).reciprocal();
        for (std::size_t j = 0; j < a.cols(); ++j) r(pivot_row, j) *= inv;
        for (std::size_t j = 0; j < a.rows(); ++j) t(pivot_row, j) *= inv;

        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == pivot_row || r(i, col).is_zero()) continue;
            Rational factor = r(i, col);
            for (std::size_t j = 0; j < a.cols(); ++j) {
                r(i, j) -= factor * r(pivot_row, j);
            }
            for (std::size_t j = 0; j < a.rows(); ++j) {
                t(i, j) -= factor * t(pivot_row, j);
            }
        }

        res.pivot_cols.push_back(col);
        ++pivot_row;
    }
    res.rank = pivot_row;
    return res;
}

inline std::size_t rank(const Matrix& a) { return rref_rank(a).rank; }

/// Exact inverse, or nullopt when singular.
inline std::optional<Matrix> inverse(const Matrix& a) {
    if (!a.is_square()) {
        throw std::invalid_argument("inverse requires a square matrix");
    }
    RrefResult res = rref_rank(a);
    if (res.rank != a.rows()) return std::nullopt;
    return res.transform;  // rref == I, so transform * a == I
}

/// A = F*G with F the pivot columns of A (full column rank r) and G the
/// nonzero rows of rref(A) (full row rank r), r = rank(A).
inline std::pair<Matrix, Matrix> full_rank_factorization(const Matrix& a) {
    if (a.is_zero()) {
        throw std::invalid_argument("full rank factorization of the zero matrix");
    }
    RrefResult res = rref_rank(a);
    Matrix f(a.rows(), res.rank);
    for (std::size_t k = 0; k < res.rank; ++k) {
        for (std::size_t i = 0; i < a.rows(); ++i) {
            f(i, k) = a(i, res.pivot_cols[k]);
        }
    }
    Matrix g(res.rank, a.cols());
    for (std::size_t i = 0; i < res.rank; ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            g(i, j) = res.rref(i, j);
        }
    }
    return {std::move(f), std::move(g)};
}

/// col(b) subset of col(a), decided by rank([a|b]) == rank(a).
inline bool column_space_contains(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) {
        throw std::invalid_argument("column space comparison: row count mismatch");
    }
    return rank(hcat(a, b)) == rank(a);
}

inline bool column_space_equal(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) {
        throw std::invalid_argument("column space comparison: row count mismatch");
    }
    std::size_t ra = rank(a);
    std::size_t rb = rank(b);
    return ra == rb && rank(hcat(a, b)) == ra;
}

inline bool row_space_equal(const Matrix& a, const Matrix& b) {
    return column_space_equal(a.transpose(), b.transpose());
}

/// Decides whether the left annihilator of c is contained in the left
/// annihilator of b. Ring-theoretic statements about annihilators
/// translate to subspace containments here: every Z with Zc = 0 also
/// kills b exactly when col(b) is contained in col(c).
inline bool annihilator_containment_left(const Matrix& b, const Matrix& c) {
    if (!b.is_square() || !c.is_square() || b.rows() != c.rows()) {
        throw std::invalid_argument("annihilator containment: need square matrices of equal size");
    }
    return column_space_contains(c, b);
}

}  // namespace ginv
