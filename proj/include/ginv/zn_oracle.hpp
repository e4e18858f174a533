#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "ginv/errors.hpp"
#include "ginv/verify.hpp"

namespace ginv {

/// The ring Z_n with the identity involution, the brute-force ground
/// truth the matrix formulas are validated against. The ring
/// automorphism group of Z_n is trivial, so the identity map is the
/// only involution available; properness (x*x = 0 forces x = 0) then
/// holds exactly for squarefree moduli.
struct ZnRing {
    std::uint64_t modulus = 0;
    bool proper = false;
};

inline ZnRing build_ring(std::uint64_t n) {
    if (n < 2) {
        throw std::invalid_argument("ring modulus must be at least 2");
    }
    if (n > (std::uint64_t(1) << 31)) {
        throw std::invalid_argument("ring modulus too large for exhaustive search");
    }
    ZnRing ring;
    ring.modulus = n;
    ring.proper = true;
    for (std::uint64_t x = 1; x < n; ++x) {
        if ((x * x) % n == 0) {
            ring.proper = false;
            break;
        }
    }
    return ring;
}

namespace zn_detail {

inline std::uint64_t mul(const ZnRing& ring, std::uint64_t x, std::uint64_t y) {
    return (x * y) % ring.modulus;
}

inline std::uint64_t pow(const ZnRing& ring, std::uint64_t a, std::size_t e) {
    std::uint64_t result = 1 % ring.modulus;
    std::uint64_t base = a % ring.modulus;
    while (e > 0) {
        if (e & 1u) result = mul(ring, result, base);
        e >>= 1u;
        base = mul(ring, base, base);
    }
    return result;
}

// Scalar semantics for the shared equation lists. The involution is the
// identity and the ring is commutative, so the hermitian, commutation
// and centrality atoms are identically true; the star equations reduce
// to their starless forms but are evaluated as written.
inline bool equation_holds(const ZnRing& ring, std::uint64_t a, std::uint64_t y, Equation eq,
                           std::size_t k) {
    switch (eq) {
        case Equation::Inner: return mul(ring, mul(ring, a, y), a) == a % ring.modulus;
        case Equation::Outer: return mul(ring, mul(ring, y, a), y) == y % ring.modulus;
        case Equation::AzHermitian:
        case Equation::ZaHermitian:
        case Equation::Commute:
        case Equation::AzCentral:
        case Equation::ZaCentral:
            return true;
        case Equation::PowerLeft: return mul(ring, y, pow(ring, a, k + 1)) == pow(ring, a, k);
        case Equation::PowerRight: return mul(ring, pow(ring, a, k + 1), y) == pow(ring, a, k);
        case Equation::SquareAbsorb: return mul(ring, a, mul(ring, y, y)) == y % ring.modulus;
        case Equation::StarPower:
            return mul(ring, pow(ring, a, k), mul(ring, a, y)) == pow(ring, a, k);
        case Equation::WeakGroupStar:
            return mul(ring, pow(ring, a, k + 1), mul(ring, a, y)) ==
                   mul(ring, pow(ring, a, k), a);
    }
    return false;
}

inline bool kind_holds(const ZnRing& ring, std::uint64_t a, std::uint64_t y, InverseKind kind,
                       std::size_t k) {
    for (Equation eq : equations_of(kind)) {
        if (!equation_holds(ring, a, y, eq, k)) return false;
    }
    return true;
}

}  // namespace zn_detail

/// Nilpotency degrees in Z_n are bounded by the largest prime-power
/// exponent, so 1 + ceil(log2 n) indices always suffice.
inline std::size_t default_kmax(const ZnRing& ring) {
    std::size_t bits = 0;
    std::uint64_t v = ring.modulus - 1;
    while (v > 0) {
        ++bits;
        v >>= 1u;
    }
    return 1 + bits;
}

struct OracleSolution {
    std::uint64_t inverse = 0;
    std::size_t k = 1;  // smallest index at which every equation holds
};

struct OracleResult {
    std::uint64_t element = 0;
    InverseKind kind = InverseKind::MoorePenrose;
    std::vector<OracleSolution> solutions;  // ordered by residue
    bool unique = false;                    // at most one distinct residue

    std::optional<OracleSolution> only() const {
        if (solutions.size() == 1) return solutions.front();
        return std::nullopt;
    }
};

/// Exhaustive search over all candidates y in Z_n and indices
/// 1 <= k <= k_max, evaluating the kind's defining equations literally.
inline OracleResult brute_force(const ZnRing& ring, std::uint64_t a, InverseKind kind,
                                std::size_t k_max) {
    OracleResult result;
    result.element = a % ring.modulus;
    result.kind = kind;
    const std::size_t upper = kind_uses_index(kind) ? k_max : 1;
    for (std::uint64_t y = 0; y < ring.modulus; ++y) {
        for (std::size_t k = 1; k <= upper; ++k) {
            if (zn_detail::kind_holds(ring, result.element, y, kind, k)) {
                result.solutions.push_back({y, k});
                break;  // record the smallest valid k for this residue
            }
        }
    }
    result.unique = result.solutions.size() <= 1;
    return result;
}

/// Smallest k >= 1 at which z a^{k+1} = a^k becomes solvable; the
/// stabilization point the defining equations quantify over.
inline std::optional<std::size_t> zn_stabilization_index(const ZnRing& ring, std::uint64_t a,
                                                         std::size_t k_max) {
    a %= ring.modulus;
    for (std::size_t k = 1; k <= k_max; ++k) {
        for (std::uint64_t y = 0; y < ring.modulus; ++y) {
            if (zn_detail::equation_holds(ring, a, y, Equation::PowerLeft, k)) return k;
        }
    }
    return std::nullopt;
}

/// In a commutative ring every core-EP invertible element must also be
/// central weak core invertible; confirms that by exhaustive search.
inline bool abelian_cross_check(const ZnRing& ring) {
    const std::size_t k_max = default_kmax(ring);
    for (std::uint64_t a = 0; a < ring.modulus; ++a) {
        bool has_core_ep = !brute_force(ring, a, InverseKind::CoreEp, k_max).solutions.empty();
        bool has_cwc =
            !brute_force(ring, a, InverseKind::CentralWeakCore, k_max).solutions.empty();
        if (has_core_ep && !has_cwc) return false;
    }
    return true;
}

struct AdditiveTriple {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    InverseKind kind = InverseKind::WeakCore;
    std::uint64_t sum_inverse = 0;
};

struct AdditiveScanResult {
    std::vector<AdditiveTriple> verified;
    std::vector<AdditiveTriple> counterexamples;
};

/// Scans every pair with ab = 0 (which, with the identity involution,
/// is all three orthogonality hypotheses at once) and confirms the
/// additive law for the weak core and central weak core inverses
/// whenever all three inverses exist.
inline AdditiveScanResult additive_law_scan(const ZnRing& ring) {
    const std::size_t k_max = default_kmax(ring);
    const InverseKind kinds[] = {InverseKind::WeakCore, InverseKind::CentralWeakCore};

    AdditiveScanResult result;
    for (InverseKind kind : kinds) {
        std::vector<std::optional<std::uint64_t>> value(ring.modulus);
        for (std::uint64_t a = 0; a < ring.modulus; ++a) {
            OracleResult res = brute_force(ring, a, kind, k_max);
            if (auto sol = res.only()) value[a] = sol->inverse;
        }
        for (std::uint64_t a = 0; a < ring.modulus; ++a) {
            for (std::uint64_t b = 0; b < ring.modulus; ++b) {
                if (zn_detail::mul(ring, a, b) != 0) continue;
                std::uint64_t s = (a + b) % ring.modulus;
                if (!value[a] || !value[b] || !value[s]) continue;
                AdditiveTriple triple{a, b, kind, *value[s]};
                if ((*value[a] + *value[b]) % ring.modulus == *value[s]) {
                    result.verified.push_back(triple);
                } else {
                    result.counterexamples.push_back(triple);
                }
            }
        }
    }
    return result;
}

}  // namespace ginv
