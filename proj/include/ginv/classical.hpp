#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>

#include "ginv/errors.hpp"
#include "ginv/matrix.hpp"

namespace ginv {

/// Rank stabilization point of a square matrix.
///
/// drazin_index is the smallest k >= 0 with rank(A^k) = rank(A^{k+1});
/// invertible matrices get 0. Every formula below that quantifies over a
/// positive index consumes paper_index = max(drazin_index, 1) instead,
/// since the defining equation systems start at k = 1.
struct IndexResult {
    std::size_t drazin_index = 0;
    std::size_t paper_index = 1;
};

inline IndexResult drazin_index(const Matrix& a) {
    if (!a.is_square()) {
        throw std::invalid_argument("drazin index requires a square matrix");
    }
    std::size_t prev = a.rows();  // rank(A^0) = n
    Matrix p = a;
    std::size_t k = 0;
    while (true) {
        std::size_t cur = rank(p);
        if (cur == prev) break;
        prev = cur;
        ++k;
        p = p * a;
    }
    return {k, std::max<std::size_t>(k, 1)};
}

/// Moore-Penrose inverse, always defined over the rationals. Computed
/// from a full rank factorization A = FG as
///   A^+ = G^T (G G^T)^{-1} (F^T F)^{-1} F^T,
/// where both r x r Gram matrices are invertible because F has full
/// column rank and G full row rank.
inline Matrix moore_penrose(const Matrix& a) {
    if (a.is_zero()) {
        return Matrix::zero(a.cols(), a.rows());
    }
    auto [f, g] = full_rank_factorization(a);
    Matrix ft = f.transpose();
    Matrix gt = g.transpose();
    std::optional<Matrix> ggt_inv = inverse(g * gt);
    std::optional<Matrix> ftf_inv = inverse(ft * f);
    if (!ggt_inv || !ftf_inv) {
        throw ConsistencyError("Gram matrix of a full rank factor was singular");
    }
    return gt * (*ggt_inv) * (*ftf_inv) * ft;
}

/// One member of the {1,3}-inverse family of A, parametrized by W:
///   X = A^+ + (I - A^+ A) W.
/// Every such X satisfies AXA = A and (AX)^T = AX, with AX = AA^+
/// independent of W. W must have the shape of A^+ (cols x rows).
inline Matrix one_three_inverse(const Matrix& a, const Matrix& w) {
    if (w.rows() != a.cols() || w.cols() != a.rows()) {
        throw std::invalid_argument("one_three_inverse: W must have the shape of A^+");
    }
    Matrix pinv = moore_penrose(a);
    Matrix residual = Matrix::identity(a.cols()) - pinv * a;
    return pinv + residual * w;
}

namespace detail {

// Defining equations of the Drazin inverse at index k:
// zaz = z, az = za, z a^{k+1} = a^k.
inline bool drazin_equations_hold(const Matrix& a, const Matrix& z, std::size_t k) {
    if (z * a * z != z) return false;
    if (a * z != z * a) return false;
    return z * power(a, k + 1) == power(a, k);
}

}  // namespace detail

/// Drazin inverse via Cline's formula A^D = A^l (A^{2l+1})^+ A^l with
/// l = paper_index. The result is post-verified against the defining
/// equations before being returned.
inline Matrix drazin(const Matrix& a) {
    IndexResult idx = drazin_index(a);
    std::size_t l = idx.paper_index;
    Matrix al = power(a, l);
    Matrix d = al * moore_penrose(power(a, 2 * l + 1)) * al;
    if (!detail::drazin_equations_hold(a, d, idx.paper_index)) {
        throw ConsistencyError("Drazin inverse failed its defining equations");
    }
    return d;
}

/// Group inverse: the Drazin inverse when the index is at most 1,
/// absent otherwise.
inline std::optional<Matrix> group_inverse(const Matrix& a) {
    if (drazin_index(a).drazin_index > 1) return std::nullopt;
    return drazin(a);
}

}  // namespace ginv
