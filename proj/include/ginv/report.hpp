#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ginv/central.hpp"
#include "ginv/core_family.hpp"

namespace ginv {

struct IdentityVerdict {
    std::string name;
    bool holds = false;
};

/// Every inverse this library computes for one matrix, together with
/// the cross-formula identities tying them to each other. Used by the
/// CLI and by the acceptance suite; each identity is evaluated directly
/// in exact arithmetic.
struct ConsistencyReport {
    std::size_t drazin_index = 0;
    std::size_t paper_index = 1;

    Matrix mp;
    Matrix drazin_inv;
    std::optional<Matrix> group_inv;
    std::optional<Matrix> core_inv;
    Matrix core_ep_inv;
    Matrix weak_group_inv;
    WeakCoreResult wc;
    CentralInverseResult central_drazin_res;
    CentralInverseResult central_wc_res;

    std::vector<IdentityVerdict> identities;
    bool all_pass = true;

    void add(std::string name, bool holds) {
        all_pass = all_pass && holds;
        identities.push_back({std::move(name), holds});
    }
};

inline ConsistencyReport consistency_report(const Matrix& a) {
    if (!a.is_square()) {
        throw std::invalid_argument("consistency report requires a square matrix");
    }
    ConsistencyReport rep;
    IndexResult idx = drazin_index(a);
    rep.drazin_index = idx.drazin_index;
    rep.paper_index = idx.paper_index;
    const std::size_t k = idx.paper_index;

    rep.mp = moore_penrose(a);
    rep.drazin_inv = drazin(a);
    rep.group_inv = group_inverse(a);
    rep.core_inv = core_inverse(a);
    rep.core_ep_inv = core_ep(a);
    rep.weak_group_inv = weak_group(a);
    rep.wc = weak_core(a);
    rep.central_drazin_res = central_drazin(a);
    rep.central_wc_res = central_weak_core(a);

    const Matrix& y = rep.wc.inverse;
    Matrix ak = power(a, k);
    Matrix core_ak = core_inverse(ak).value();  // index of a^k is <= 1 past stabilization

    rep.add("mp axioms", check_axioms(a, rep.mp, InverseKind::MoorePenrose).overall);
    rep.add("drazin axioms", check_axioms(a, rep.drazin_inv, InverseKind::Drazin, k).overall);
    rep.add("core-ep axioms", check_axioms(a, rep.core_ep_inv, InverseKind::CoreEp, k).overall);
    rep.add("weak-group axioms",
            check_axioms(a, rep.weak_group_inv, InverseKind::WeakGroup, k).overall);
    rep.add("weak-core axioms", check_axioms(a, y, InverseKind::WeakCore, k).overall);
    rep.add("group exists iff index <= 1",
            rep.group_inv.has_value() == (idx.drazin_index <= 1));

    rep.add("wc(wc(a)) = a^2 wc(a)", weak_core(y).inverse == a * a * y);
    rep.add("wc(wc(wc(a))) = wc(a)", weak_core(weak_core(y).inverse).inverse == y);
    rep.add("wc(a) = a^{k-1} (a^k)^core", power(a, k - 1) * core_ak == y);
    rep.add("wc(a^2) = (wc(a))^2", weak_core(power(a, 2)).inverse == power(y, 2));
    rep.add("wc(a^3) = (wc(a))^3", weak_core(power(a, 3)).inverse == power(y, 3));
    rep.add("(wc(a))^k = (a^k)^core", power(y, k) == core_ak);
    rep.add("wc(a) = a^D a^k (a^k)^core", rep.drazin_inv * ak * core_ak == y);
    rep.add("a wc(a) = a^k (a^k)^+", rep.wc.projector == ak * moore_penrose(ak));
    rep.add("a^D = (wc(a))^{k+1} a^k", power(y, k + 1) * ak == rep.drazin_inv);
    rep.add("(a^k)^# = (a^D)^k", group_inverse(ak).value() == power(rep.drazin_inv, k));
    rep.add("wc(a) = core-ep(a)", y == rep.core_ep_inv);
    rep.add("ind_wc = max(drazin index, 1)", rep.wc.index == k);
    rep.add("weak-core range characterization", characterize_weak_core(a, y, k));

    // Invariance of a^m (a^{m+1})^(1) p under the {1}-inverse choice,
    // probed with two fixed non-trivial parameter matrices.
    {
        const std::size_t n = a.rows();
        Matrix w1(n, n), w2(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                w1(i, j) = Rational(static_cast<long long>((i + 2 * j) % 5) - 2);
                w2(i, j) = Rational(static_cast<long long>((3 * i + j * j + 1) % 7) - 3);
            }
        }
        bool invariant = true;
        for (const Matrix& w : {Matrix::zero(n, n), w1, w2}) {
            Matrix g = one_three_inverse(power(a, k + 1), w);
            invariant = invariant && power(a, k) * g * rep.wc.projector == y;
        }
        rep.add("a^m (a^{m+1})^(1) p invariant in the {1}-inverse", invariant);
    }

    bool special = a.is_zero() || idx.drazin_index == 0 ||
                   power(a, idx.paper_index).is_zero();
    rep.add("cwc exists iff nilpotent or invertible", rep.central_wc_res.exists == special);
    if (rep.central_wc_res.exists) {
        rep.add("cwc = core-ep = drazin = central drazin",
                *rep.central_wc_res.inverse == rep.core_ep_inv &&
                    rep.core_ep_inv == rep.drazin_inv && rep.central_drazin_res.exists &&
                    *rep.central_drazin_res.inverse == rep.drazin_inv);
    }

    return rep;
}

}  // namespace ginv
