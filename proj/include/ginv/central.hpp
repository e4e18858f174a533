#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "ginv/core_family.hpp"

namespace ginv {

/// Existence-with-witness result for the central inverse family. In a
/// full matrix ring the product a*x is an idempotent, and the only
/// central idempotents are 0 and I, so non-existence is the common case
/// and is reported as a value with the failed check named.
struct CentralInverseResult {
    std::optional<Matrix> inverse;
    bool exists = false;
    std::string obstruction;
    std::size_t index = 0;  // smallest k validating the defining equations; 0 when absent

    const Matrix& value() const {
        if (!inverse) {
            throw std::invalid_argument("central inverse absent: " + obstruction);
        }
        return *inverse;
    }
};

namespace detail {

inline std::size_t smallest_valid_index(const Matrix& a, const Matrix& x, InverseKind kind,
                                        std::size_t upper) {
    for (std::size_t k = 1; k <= upper; ++k) {
        if (check_axioms(a, x, kind, k).overall) return k;
    }
    return 0;
}

}  // namespace detail

/// Central Drazin inverse: the Drazin inverse when a a^D is central,
/// absent otherwise. Over the rationals a a^D is a projector, so this
/// exists exactly for nilpotent and invertible matrices.
inline CentralInverseResult central_drazin(const Matrix& a) {
    Matrix d = drazin(a);
    if (!is_central(a * d)) {
        return {std::nullopt, false, "a a^D is not central", 0};
    }
    std::size_t k =
        detail::smallest_valid_index(a, d, InverseKind::CentralDrazin,
                                     drazin_index(a).paper_index);
    if (k == 0) {
        throw ConsistencyError("central Drazin inverse failed its defining equations");
    }
    return {d, true, "", k};
}

/// Central weak core inverse: equals the core-EP inverse and exists
/// exactly when a * core_ep(a) is central. When it exists, the four
/// defining equations plus the derived identities ax^2 = x, ax = xa,
/// x^2 a = x and x a^2 x = ax are all verified exactly.
inline CentralInverseResult central_weak_core(const Matrix& a) {
    Matrix x = core_ep(a);
    if (!is_central(a * x)) {
        return {std::nullopt, false, "a a^core-EP is not central", 0};
    }
    std::size_t k =
        detail::smallest_valid_index(a, x, InverseKind::CentralWeakCore,
                                     drazin_index(a).paper_index);
    if (k == 0) {
        throw ConsistencyError("central weak core inverse failed its defining equations");
    }
    Matrix ax = a * x;
    bool derived = (a * x * x == x) && (ax == x * a) && (x * x * a == x) && (x * a * a * x == ax);
    if (!derived) {
        throw ConsistencyError("central weak core inverse failed a derived identity");
    }
    return {x, true, "", k};
}

/// Central weak core inverse of the central weak core inverse:
/// a^2 * a^cwc. Also asserts the power identity (a^n)^cwc = (a^cwc)^n
/// for n = 2, 3.
inline Matrix central_double(const Matrix& a) {
    CentralInverseResult res = central_weak_core(a);
    if (!res.exists) {
        throw std::invalid_argument("central_double requires a central weak core invertible input");
    }
    const Matrix& x = *res.inverse;
    Matrix expected = a * a * x;
    if (central_weak_core(x).value() != expected) {
        throw TheoremError("cwc(cwc(a)) != a^2 cwc(a)");
    }
    for (std::size_t n = 2; n <= 3; ++n) {
        if (central_weak_core(power(a, n)).value() != power(x, n)) {
            throw TheoremError("cwc(a^n) != (cwc(a))^n");
        }
    }
    return expected;
}

/// Central weak core inverse through a {1,3}-inverse of a^k:
/// a^cD a^k (a^k)^(1,3), invariant in W. Also checks the projector
/// identity a * a^cwc = a^k (a^k)^(1,3).
inline Matrix central_via_13(const Matrix& a, const Matrix& w) {
    CentralInverseResult target = central_weak_core(a);
    if (!target.exists) {
        throw std::invalid_argument("central_via_13 requires a central weak core invertible input");
    }
    CentralInverseResult cd = central_drazin(a);
    if (!cd.exists) {
        throw ConsistencyError("central weak core invertible input lacks a central Drazin inverse");
    }
    std::size_t k = drazin_index(a).paper_index;
    Matrix ak = power(a, k);
    Matrix g = one_three_inverse(ak, w);
    Matrix x = (*cd.inverse) * ak * g;
    if (x != *target.inverse) {
        throw TheoremError("a^cD a^k (a^k)^(1,3) disagrees with the central weak core inverse");
    }
    if (a * x != ak * g) {
        throw TheoremError("a a^cwc != a^k (a^k)^(1,3)");
    }
    return x;
}

/// Additive law for the central Drazin inverse: when both inputs are
/// central Drazin invertible and ab = 0 = ba, (a+b)^cD = a^cD + b^cD.
inline AdditiveResult central_drazin_sum(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("central_drazin_sum: dimension mismatch");
    }
    CentralInverseResult ca = central_drazin(a);
    if (!ca.exists) return {std::nullopt, "a is not central Drazin invertible"};
    CentralInverseResult cb = central_drazin(b);
    if (!cb.exists) return {std::nullopt, "b is not central Drazin invertible"};
    if (!(a * b).is_zero()) return {std::nullopt, "ab != 0"};
    if (!(b * a).is_zero()) return {std::nullopt, "ba != 0"};
    Matrix sum = *ca.inverse + *cb.inverse;
    CentralInverseResult whole = central_drazin(a + b);
    if (!whole.exists || *whole.inverse != sum) {
        throw TheoremError("(a+b)^cD != a^cD + b^cD under orthogonality hypotheses");
    }
    return {sum, ""};
}

/// Additive law for the central weak core inverse: requires both
/// summands invertible in that sense plus ab = 0 = ba and a^T b = 0.
inline AdditiveResult central_wc_sum(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("central_wc_sum: dimension mismatch");
    }
    CentralInverseResult ca = central_weak_core(a);
    if (!ca.exists) return {std::nullopt, "a is not central weak core invertible"};
    CentralInverseResult cb = central_weak_core(b);
    if (!cb.exists) return {std::nullopt, "b is not central weak core invertible"};
    if (!(a * b).is_zero()) return {std::nullopt, "ab != 0"};
    if (!(b * a).is_zero()) return {std::nullopt, "ba != 0"};
    if (!(a.transpose() * b).is_zero()) return {std::nullopt, "a*b != 0"};
    Matrix sum = *ca.inverse + *cb.inverse;
    CentralInverseResult whole = central_weak_core(a + b);
    if (!whole.exists || *whole.inverse != sum) {
        throw TheoremError("(a+b)^cwc != a^cwc + b^cwc under orthogonality hypotheses");
    }
    return {sum, ""};
}

/// EP elements: group invertible with a^# = a^+.
inline bool is_ep(const Matrix& a) {
    std::optional<Matrix> g = group_inverse(a);
    return g && *g == moore_penrose(a);
}

}  // namespace ginv
