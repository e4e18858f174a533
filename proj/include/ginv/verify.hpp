#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ginv/matrix.hpp"

namespace ginv {

/// Atomic equations the inverse definitions are assembled from. `a` is
/// the element, `z` the candidate inverse, `*` the involution
/// (transpose), `k` the index parameter where one appears.
enum class Equation {
    Inner,          // a z a = a
    Outer,          // z a z = z
    AzHermitian,    // (a z)* = a z
    ZaHermitian,    // (z a)* = z a
    Commute,        // a z = z a
    PowerLeft,      // z a^{k+1} = a^k
    PowerRight,     // a^{k+1} z = a^k
    SquareAbsorb,   // a z^2 = z
    StarPower,      // (a^k)* a z = (a^k)*
    WeakGroupStar,  // (a^k)* a^2 z = (a^k)* a
    AzCentral,      // a z commutes with every ring element
    ZaCentral,      // z a commutes with every ring element
};

inline const char* equation_name(Equation eq) {
    switch (eq) {
        case Equation::Inner: return "aza=a";
        case Equation::Outer: return "zaz=z";
        case Equation::AzHermitian: return "(az)*=az";
        case Equation::ZaHermitian: return "(za)*=za";
        case Equation::Commute: return "az=za";
        case Equation::PowerLeft: return "za^{k+1}=a^k";
        case Equation::PowerRight: return "a^{k+1}z=a^k";
        case Equation::SquareAbsorb: return "az^2=z";
        case Equation::StarPower: return "(a^k)*az=(a^k)*";
        case Equation::WeakGroupStar: return "(a^k)*a^2z=(a^k)*a";
        case Equation::AzCentral: return "az central";
        case Equation::ZaCentral: return "za central";
    }
    return "?";
}

/// The axiom systems this library computes and verifies. Group and core
/// are the k = 1 specializations of Drazin and core-EP; callers pass
/// k = 1 for them.
enum class InverseKind {
    Inner,
    OneThree,
    MoorePenrose,
    Group,
    Drazin,
    Core,
    CoreEp,
    WeakGroup,
    WeakCore,
    CentralDrazin,
    CentralWeakCore,
};

inline constexpr std::size_t kInverseKindCount = 11;

/// Equation list defining each kind. One evaluator walks these lists;
/// the finite-ring oracle interprets the same data with scalar
/// semantics, so the definition-to-equations mapping lives in exactly
/// one place.
inline std::span<const Equation> equations_of(InverseKind kind) {
    static const std::vector<Equation> inner = {Equation::Inner};
    static const std::vector<Equation> one_three = {Equation::Inner, Equation::AzHermitian};
    static const std::vector<Equation> mp = {Equation::Inner, Equation::Outer,
                                             Equation::AzHermitian, Equation::ZaHermitian};
    static const std::vector<Equation> group_eqs = {Equation::Outer, Equation::Commute,
                                                    Equation::PowerLeft};
    static const std::vector<Equation> drazin_eqs = {Equation::Outer, Equation::Commute,
                                                     Equation::PowerLeft};
    static const std::vector<Equation> core = {Equation::Inner, Equation::SquareAbsorb,
                                               Equation::AzHermitian};
    static const std::vector<Equation> core_ep = {Equation::AzHermitian, Equation::PowerLeft,
                                                  Equation::SquareAbsorb};
    static const std::vector<Equation> weak_group = {Equation::PowerLeft, Equation::SquareAbsorb,
                                                     Equation::WeakGroupStar};
    static const std::vector<Equation> weak_core = {Equation::PowerLeft, Equation::SquareAbsorb,
                                                    Equation::StarPower};
    static const std::vector<Equation> central_drazin = {Equation::ZaCentral, Equation::Outer,
                                                         Equation::PowerRight};
    static const std::vector<Equation> central_weak_core = {
        Equation::AzCentral, Equation::PowerLeft, Equation::Outer, Equation::AzHermitian};
    switch (kind) {
        case InverseKind::Inner: return inner;
        case InverseKind::OneThree: return one_three;
        case InverseKind::MoorePenrose: return mp;
        case InverseKind::Group: return group_eqs;
        case InverseKind::Drazin: return drazin_eqs;
        case InverseKind::Core: return core;
        case InverseKind::CoreEp: return core_ep;
        case InverseKind::WeakGroup: return weak_group;
        case InverseKind::WeakCore: return weak_core;
        case InverseKind::CentralDrazin: return central_drazin;
        case InverseKind::CentralWeakCore: return central_weak_core;
    }
    return inner;
}

inline bool kind_uses_index(InverseKind kind) {
    for (Equation eq : equations_of(kind)) {
        switch (eq) {
            case Equation::PowerLeft:
            case Equation::PowerRight:
            case Equation::StarPower:
            case Equation::WeakGroupStar:
                return true;
            default:
                break;
        }
    }
    return false;
}

inline const char* kind_name(InverseKind kind) {
    switch (kind) {
        case InverseKind::Inner: return "inner";
        case InverseKind::OneThree: return "one-three";
        case InverseKind::MoorePenrose: return "mp";
        case InverseKind::Group: return "group";
        case InverseKind::Drazin: return "drazin";
        case InverseKind::Core: return "core";
        case InverseKind::CoreEp: return "core-ep";
        case InverseKind::WeakGroup: return "weak-group";
        case InverseKind::WeakCore: return "weak-core";
        case InverseKind::CentralDrazin: return "central-drazin";
        case InverseKind::CentralWeakCore: return "central-weak-core";
    }
    return "?";
}

/// Central elements of a full matrix ring are the scalar matrices;
/// commuting with the n^2 matrix units is a sufficient test and is the
/// direct translation of "commutes with every ring element".
inline bool is_central(const Matrix& x) {
    if (!x.is_square()) {
        throw std::invalid_argument("centrality test requires a square matrix");
    }
    const std::size_t n = x.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Matrix unit(n, n);
            unit(i, j) = Rational(1);
            if (unit * x != x * unit) return false;
        }
    }
    return true;
}

struct EquationVerdict {
    Equation equation;
    std::string name;
    bool holds = false;
};

struct InverseReport {
    InverseKind kind = InverseKind::Inner;
    Matrix candidate;
    std::size_t index_used = 1;
    std::vector<EquationVerdict> verdicts;
    bool overall = false;
};

namespace detail {

inline bool equation_holds(const Matrix& a, const Matrix& z, Equation eq, std::size_t k) {
    switch (eq) {
        case Equation::Inner: return a * z * a == a;
        case Equation::Outer: return z * a * z == z;
        case Equation::AzHermitian: {
            Matrix az = a * z;
            return az.transpose() == az;
        }
        case Equation::ZaHermitian: {
            Matrix za = z * a;
            return za.transpose() == za;
        }
        case Equation::Commute: return a * z == z * a;
        case Equation::PowerLeft: return z * power(a, k + 1) == power(a, k);
        case Equation::PowerRight: return power(a, k + 1) * z == power(a, k);
        case Equation::SquareAbsorb: return a * z * z == z;
        case Equation::StarPower: {
            Matrix ak_star = power(a, k).transpose();
            return ak_star * a * z == ak_star;
        }
        case Equation::WeakGroupStar: {
            Matrix ak_star = power(a, k).transpose();
            return ak_star * a * a * z == ak_star * a;
        }
        case Equation::AzCentral: return is_central(a * z);
        case Equation::ZaCentral: return is_central(z * a);
    }
    return false;
}

}  // namespace detail

/// Evaluates every defining equation of `kind` for the candidate X, all
/// in exact arithmetic. k must be >= 1 when the kind's equations use an
/// index (it is ignored otherwise).
inline InverseReport check_axioms(const Matrix& a, const Matrix& x, InverseKind kind,
                                  std::size_t k = 1) {
    if (!a.is_square() || !x.is_square() || a.rows() != x.rows()) {
        throw std::invalid_argument("check_axioms: need square matrices of equal size");
    }
    if (kind_uses_index(kind) && k == 0) {
        throw std::invalid_argument("check_axioms: index must be positive");
    }
    InverseReport report;
    report.kind = kind;
    report.candidate = x;
    report.index_used = k;
    report.overall = true;
    for (Equation eq : equations_of(kind)) {
        bool holds = detail::equation_holds(a, x, eq, k);
        report.verdicts.push_back({eq, equation_name(eq), holds});
        report.overall = report.overall && holds;
    }
    return report;
}

/// Range-style characterization of the weak core inverse, equivalent to
/// its three defining equations: Y = YAY, col(Y) = col(A^k) =
/// col(A^{k+1}), and col(A^k) contained in col(Y^T).
inline bool characterize_weak_core(const Matrix& a, const Matrix& y, std::size_t k) {
    if (!a.is_square() || !y.is_square() || a.rows() != y.rows()) {
        throw std::invalid_argument("characterize_weak_core: need square matrices of equal size");
    }
    if (k == 0) {
        throw std::invalid_argument("characterize_weak_core: index must be positive");
    }
    if (y * a * y != y) return false;
    Matrix ak = power(a, k);
    Matrix ak1 = power(a, k + 1);
    if (!column_space_equal(y, ak)) return false;
    if (!column_space_equal(ak, ak1)) return false;
    return column_space_contains(y.transpose(), ak);
}

}  // namespace ginv
