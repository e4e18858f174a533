#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "ginv/classical.hpp"
#include "ginv/errors.hpp"
#include "ginv/matrix.hpp"
#include "ginv/verify.hpp"

namespace ginv {

/// Core inverse a^(c) = a^# a a^+, defined when the Drazin index is at
/// most 1. Post-verified against aza = a, az^2 = z, (az)* = az.
inline std::optional<Matrix> core_inverse(const Matrix& a) {
    std::optional<Matrix> g = group_inverse(a);
    if (!g) return std::nullopt;
    Matrix z = (*g) * a * moore_penrose(a);
    if (!check_axioms(a, z, InverseKind::Core).overall) {
        throw ConsistencyError("core inverse failed its defining equations");
    }
    return z;
}

/// Core-EP inverse a^D a^k (a^k)^+ with k = paper_index; the index-k
/// extension of the core inverse, always defined here.
inline Matrix core_ep(const Matrix& a) {
    IndexResult idx = drazin_index(a);
    Matrix ak = power(a, idx.paper_index);
    Matrix z = drazin(a) * ak * moore_penrose(ak);
    if (!check_axioms(a, z, InverseKind::CoreEp, idx.paper_index).overall) {
        throw ConsistencyError("core-EP inverse failed its defining equations");
    }
    return z;
}

/// Weak group inverse, computed as (a^core-EP)^2 a and post-verified
/// against za^{k+1} = a^k, az^2 = z, (a^k)* a^2 z = (a^k)* a.
inline Matrix weak_group(const Matrix& a) {
    Matrix cep = core_ep(a);
    Matrix x = cep * cep * a;
    if (!check_axioms(a, x, InverseKind::WeakGroup, drazin_index(a).paper_index).overall) {
        throw ConsistencyError("weak group inverse failed its defining equations");
    }
    return x;
}

struct WeakCoreResult {
    Matrix inverse;
    std::size_t index = 1;   // smallest k validating all three equations
    Matrix projector;        // a * inverse, a symmetric idempotent
};

/// Weak core inverse a^D a^k (a^k)^+ with k = paper_index. All three
/// defining equations are verified exactly, and the reported index is
/// the smallest positive k for which they hold jointly (the set of
/// valid k is upward closed, so the first hit of an upward scan is the
/// minimum).
inline WeakCoreResult weak_core(const Matrix& a) {
    IndexResult idx = drazin_index(a);
    Matrix ak = power(a, idx.paper_index);
    Matrix y = drazin(a) * ak * moore_penrose(ak);

    std::size_t smallest = 0;
    for (std::size_t k = 1; k <= idx.paper_index; ++k) {
        if (check_axioms(a, y, InverseKind::WeakCore, k).overall) {
            smallest = k;
            break;
        }
    }
    if (smallest == 0) {
        throw ConsistencyError("weak core inverse failed its defining equations");
    }
    return {y, smallest, a * y};
}

/// Weak core inverse of the weak core inverse: a^2 * a^wc. Checked
/// against the recomputed value and against the triple-application
/// identity wc(wc(wc(a))) = wc(a) before returning.
inline Matrix weak_core_double(const Matrix& a) {
    Matrix y = weak_core(a).inverse;
    Matrix expected = a * a * y;
    Matrix recomputed = weak_core(y).inverse;
    if (recomputed != expected) {
        throw TheoremError("wc(wc(a)) != a^2 wc(a)");
    }
    if (weak_core(recomputed).inverse != y) {
        throw TheoremError("wc(wc(wc(a))) != wc(a)");
    }
    return expected;
}

/// Weak core inverse through the core inverse of a power:
/// a^{k-1} (a^k)^core with k = paper_index. A^k always has index <= 1
/// because the rank sequence has stabilized at k.
inline Matrix wc_via_core(const Matrix& a) {
    std::size_t k = drazin_index(a).paper_index;
    Matrix ak = power(a, k);
    std::optional<Matrix> core_ak = core_inverse(ak);
    if (!core_ak) {
        throw ConsistencyError("a^k lost group invertibility past the stabilization index");
    }
    Matrix x = power(a, k - 1) * (*core_ak);
    if (x != weak_core(a).inverse) {
        throw TheoremError("a^{k-1} (a^k)^core disagrees with the weak core inverse");
    }
    return x;
}

/// Weak core inverse of a^n. Asserts both route identities
/// (wc(a))^n = wc(a^n) and wc(a) = a^{n-1} wc(a^n) exactly.
inline Matrix wc_power(const Matrix& a, std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("wc_power: exponent must be positive");
    }
    Matrix y = weak_core(a).inverse;
    Matrix yn = weak_core(power(a, n)).inverse;
    if (power(y, n) != yn) {
        throw TheoremError("(wc(a))^n != wc(a^n)");
    }
    if (power(a, n - 1) * yn != y) {
        throw TheoremError("a^{n-1} wc(a^n) != wc(a)");
    }
    return yn;
}

/// Outcome of an additive law; absent carries the first failed
/// hypothesis by name. Non-qualifying inputs are a reported value, not
/// an error.
struct AdditiveResult {
    std::optional<Matrix> value;
    std::string obstruction;

    bool applied() const { return value.has_value(); }
};

/// Additive law for the weak core inverse. When ab = 0 = ba and
/// a^T b = 0 hold exactly, wc(a+b) = wc(a) + wc(b); the sum is checked
/// against the directly computed wc(a+b) before being returned.
inline AdditiveResult wc_sum(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("wc_sum: dimension mismatch");
    }
    if (!(a * b).is_zero()) return {std::nullopt, "ab != 0"};
    if (!(b * a).is_zero()) return {std::nullopt, "ba != 0"};
    if (!(a.transpose() * b).is_zero()) return {std::nullopt, "a*b != 0"};
    Matrix sum = weak_core(a).inverse + weak_core(b).inverse;
    if (sum != weak_core(a + b).inverse) {
        throw TheoremError("wc(a+b) != wc(a) + wc(b) under orthogonality hypotheses");
    }
    return {sum, ""};
}

/// Weak core inverse from an arbitrary {1}-inverse of a^{m+1}:
/// a^m (a^{m+1})^(1) p with p = a * wc(a). The result does not depend
/// on the choice of {1}-inverse; W parametrizes that choice through the
/// {1,3} family (every member of which is a {1}-inverse).
inline Matrix idempotent_construction(const Matrix& a, std::size_t m, const Matrix& w) {
    IndexResult idx = drazin_index(a);
    if (m < idx.paper_index) {
        throw std::invalid_argument("idempotent_construction: m must be at least the index");
    }
    WeakCoreResult wc = weak_core(a);
    Matrix g = one_three_inverse(power(a, m + 1), w);
    Matrix y = power(a, m) * g * wc.projector;
    if (y != wc.inverse) {
        throw TheoremError("a^m (a^{m+1})^(1) p disagrees with the weak core inverse");
    }
    return y;
}

}  // namespace ginv
