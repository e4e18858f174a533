// Acceptance suite. Every check below is exact rational equality; the
// only tolerances are the wall-clock budgets, which are pinned here.
// Prints one line per criterion and exits nonzero if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ginv/ginv.hpp"
#include "support.hpp"

using namespace ginv;
using ginv::testsupport::ints;
using ginv::testsupport::random_entries;
using ginv::testsupport::random_mixed;
using ginv::testsupport::random_nilpotent;
using ginv::testsupport::rats;

namespace {

struct Check {
    bool pass = true;
    std::ostringstream detail;

    void require(bool condition, const std::string& what) {
        if (!condition) {
            pass = false;
            detail << (detail.str().empty() ? "" : "; ") << what;
        }
    }
};

// Weak-core definition/characterization pairs accumulated while the
// earlier criteria run; criterion 8 replays them.
struct Triple {
    Matrix a;
    Matrix y;
    std::size_t k;
};
std::vector<Triple> g_triples;

void collect_triples(const Matrix& a) {
    std::size_t top = drazin_index(a).paper_index;
    Matrix wc = weak_core(a).inverse;
    Matrix dz = drazin(a);
    Matrix zero = Matrix::zero(a.rows(), a.cols());
    for (std::size_t k = 1; k <= top + 1; ++k) {
        g_triples.push_back({a, wc, k});
        g_triples.push_back({a, dz, k});
        g_triples.push_back({a, zero, k});
    }
}

const Matrix kExampleOne = ints({{0, 8, -8}, {8, -5, 8}, {8, -5, 8}});
const Matrix kPairA = ints({{-3, -3, -1}, {1, 1, 1}, {0, 0, 0}});
const Matrix kPairB = ints({{3, 1, 0}, {-3, -1, 0}, {2, -2, 0}});

Check criterion1() {
    Check c;
    Matrix expected_wc = rats({{"0", "0", "0"}, {"0", "1/6", "1/6"}, {"0", "1/6", "1/6"}});
    Matrix expected_wc2 = rats({{"0", "0", "0"}, {"0", "3/2", "3/2"}, {"0", "3/2", "3/2"}});

    // The published values must themselves satisfy the defining
    // equations before they are accepted as fixtures.
    c.require(check_axioms(kExampleOne, expected_wc, InverseKind::WeakCore, 2).overall,
              "published value fails the weak-core equations");

    Matrix wc1 = weak_core(kExampleOne).inverse;
    c.require(wc1 == expected_wc, "weak core mismatch");
    Matrix wc2 = weak_core(wc1).inverse;
    c.require(wc2 == expected_wc2, "double weak core mismatch");
    c.require(weak_core(wc2).inverse == expected_wc, "triple application mismatch");
    c.require(wc2 != kExampleOne, "double application must not recover the input");
    collect_triples(kExampleOne);
    collect_triples(wc1);
    return c;
}

Check criterion2() {
    Check c;
    Matrix a_wc = weak_core(kPairA).inverse;
    Matrix b_wc = weak_core(kPairB).inverse;
    Matrix ab_wc = weak_core(kPairA * kPairB).inverse;
    c.require(a_wc == rats({{"-9/20", "3/20", "0"}, {"3/20", "-1/20", "0"}, {"0", "0", "0"}}),
              "wc(A) mismatch");
    c.require(b_wc == rats({{"1/12", "-1/12", "1/6"},
                            {"-1/12", "1/12", "-1/6"},
                            {"1/6", "-1/6", "1/3"}}),
              "wc(B) mismatch");
    c.require(ab_wc == rats({{"-1/8", "1/8", "0"}, {"1/8", "-1/8", "0"}, {"0", "0", "0"}}),
              "wc(AB) mismatch");
    c.require(a_wc * b_wc == rats({{"-1/20", "1/20", "-1/10"},
                                   {"1/60", "-1/60", "1/30"},
                                   {"0", "0", "0"}}),
              "wc(A)wc(B) mismatch");
    c.require(ab_wc != a_wc * b_wc, "reverse order law unexpectedly holds");
    collect_triples(kPairA);
    collect_triples(kPairB);
    collect_triples(kPairA * kPairB);
    return c;
}

Check criterion3() {
    Check c;
    Matrix sum_wc = weak_core(kPairA + kPairB).inverse;
    Matrix wc_sum_val = weak_core(kPairA).inverse + weak_core(kPairB).inverse;
    c.require(sum_wc == rats({{"-1/4", "-1/4", "1/4"},
                              {"-1/4", "-1/4", "-1/4"},
                              {"-1/2", "1/2", "1/2"}}),
              "wc(A+B) mismatch");
    c.require(wc_sum_val == rats({{"-11/30", "1/15", "1/6"},
                                  {"1/15", "1/30", "-1/6"},
                                  {"1/6", "-1/6", "1/3"}}),
              "wc(A)+wc(B) mismatch");
    c.require(sum_wc != wc_sum_val, "additive law unexpectedly holds");
    collect_triples(kPairA + kPairB);
    return c;
}

Check criterion4() {
    Check c;
    std::mt19937_64 rng(20240817);
    const int kMatrices = 200;
    int failures = 0;
    for (int trial = 0; trial < kMatrices; ++trial) {
        std::size_t n = 2 + trial % 4;  // sizes 2..5
        Matrix a = random_mixed(rng, n);
        try {
            IndexResult idx = drazin_index(a);
            std::size_t k = idx.paper_index;
            WeakCoreResult wc = weak_core(a);
            Matrix ak = power(a, k);
            Matrix core_ak = core_inverse(ak).value();

            bool ok = true;
            ok = ok && weak_core_double(a) == a * a * wc.inverse;      // double application
            ok = ok && wc_via_core(a) == wc.inverse;                   // via (a^k)^core
            ok = ok && wc_power(a, 2) == power(wc.inverse, 2);         // powers, n = 2
            ok = ok && wc_power(a, 3) == power(wc.inverse, 3);         // powers, n = 3
            ok = ok && power(wc.inverse, k) == core_ak;                // k-th power is a core inverse
            ok = ok && drazin(a) * ak * core_ak == wc.inverse;         // Drazin + core route
            for (int i = 0; i < 3 && ok; ++i) {                        // {1}-choice invariance
                Matrix w = random_entries(rng, n, n);
                ok = idempotent_construction(a, k, w) == wc.inverse;
            }
            if (!ok) ++failures;
            collect_triples(a);
        } catch (const std::logic_error& err) {
            ++failures;
            c.detail << " [" << err.what() << "]";
        }
    }
    c.require(failures == 0,
              "identity suite failures: " + std::to_string(failures) + "/" +
                  std::to_string(kMatrices));
    return c;
}

Check criterion5() {
    Check c;
    std::mt19937_64 rng(20240818);
    int applied = 0;
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t na = 1 + rng() % 3;
        std::size_t nb = 1 + rng() % 3;
        Matrix a = block_diag(random_mixed(rng, na), Matrix::zero(nb, nb));
        Matrix b = block_diag(Matrix::zero(na, na), random_mixed(rng, nb));
        AdditiveResult res = wc_sum(a, b);  // throws if the law breaks
        if (!res.applied()) {
            c.require(false, "block-orthogonal pair rejected: " + res.obstruction);
            continue;
        }
        c.require(*res.value == weak_core(a).inverse + weak_core(b).inverse,
                  "sum law value mismatch");
        ++applied;
    }
    c.require(applied >= 50, "fewer than 50 qualifying pairs");

    // Central analogue on pairs that are central weak core invertible:
    // an invertible summand paired with zero, and disjoint nilpotent
    // blocks.
    int central_applied = 0;
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t n = 2 + rng() % 3;
        Matrix m = random_entries(rng, n, n);
        while (rank(m) != n) m = random_entries(rng, n, n);
        AdditiveResult res = central_wc_sum(m, Matrix::zero(n, n));
        c.require(res.applied() && *res.value == inverse(m).value(),
                  "invertible + zero central sum failed");
        ++central_applied;

        std::size_t na = 1 + rng() % 3;
        std::size_t nb = 1 + rng() % 3;
        Matrix x = block_diag(random_nilpotent(rng, na), Matrix::zero(nb, nb));
        Matrix y = block_diag(Matrix::zero(na, na), random_nilpotent(rng, nb));
        AdditiveResult nil_res = central_wc_sum(x, y);
        c.require(nil_res.applied() && nil_res.value->is_zero(),
                  "nilpotent block central sum failed");
        ++central_applied;
    }
    c.require(central_applied >= 50, "fewer than 50 central pairs");
    return c;
}

Check criterion6() {
    Check c;
    auto squarefree = [](std::uint64_t n) {
        for (std::uint64_t d = 2; d * d <= n; ++d) {
            if (n % (d * d) == 0) return false;
        }
        return true;
    };
    int rings = 0;
    for (std::uint64_t n = 2; n <= 210; ++n) {
        if (!squarefree(n)) continue;
        ++rings;
        ZnRing ring = build_ring(n);
        c.require(ring.proper, "squarefree modulus reported non-proper: " + std::to_string(n));
        std::size_t k_max = default_kmax(ring);
        for (std::uint64_t a = 0; a < n; ++a) {
            OracleResult wc = brute_force(ring, a, InverseKind::WeakCore, k_max);
            OracleResult cwc = brute_force(ring, a, InverseKind::CentralWeakCore, k_max);
            if (!wc.unique || !cwc.unique) {
                c.require(false, "uniqueness violated at n=" + std::to_string(n) +
                                     " a=" + std::to_string(a));
                continue;
            }
            auto stab = zn_stabilization_index(ring, a, k_max);
            if (auto sol = wc.only()) {
                c.require(stab.has_value() && sol->k == *stab,
                          "index disagreement at n=" + std::to_string(n) +
                              " a=" + std::to_string(a));
            } else {
                c.require(false, "weak core missing at n=" + std::to_string(n) +
                                     " a=" + std::to_string(a));
            }
        }
        c.require(abelian_cross_check(ring),
                  "abelian cross-check failed at n=" + std::to_string(n));
    }
    c.require(rings == 128, "expected 128 squarefree moduli up to 210");
    for (std::uint64_t n : {6u, 30u, 42u}) {
        AdditiveScanResult scan = additive_law_scan(build_ring(n));
        c.require(scan.counterexamples.empty(),
                  "additive counterexample in Z_" + std::to_string(n));
        c.require(!scan.verified.empty(), "no verified additive triples in Z_" +
                                              std::to_string(n));
    }
    return c;
}

Check criterion7() {
    Check c;
    std::mt19937_64 rng(20240819);
    int checked = 0;
    auto run_case = [&](const Matrix& a) {
        std::size_t n = a.rows();
        bool nilpotent = power(a, n).is_zero();
        bool invertible = rank(a) == n;
        CentralInverseResult res = central_weak_core(a);
        c.require(res.exists == (nilpotent || invertible),
                  "existence mismatch on " + a.str());
        if (res.exists) {
            c.require(*res.inverse == core_ep(a) && *res.inverse == drazin(a),
                      "cwc disagrees with core-EP/Drazin on " + a.str());
        }
        ++checked;
    };
    for (int trial = 0; trial < 100; ++trial) {
        run_case(random_mixed(rng, 1 + trial % 5));
    }
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t n = 2 + rng() % 4;
        run_case(random_nilpotent(rng, n));
        Matrix m = random_entries(rng, n, n);
        while (rank(m) != n) m = random_entries(rng, n, n);
        run_case(m);
    }
    c.require(checked >= 120, "too few cases");
    return c;
}

Check criterion8() {
    Check c;
    int disagreements = 0;
    for (const Triple& t : g_triples) {
        bool by_axioms = check_axioms(t.a, t.y, InverseKind::WeakCore, t.k).overall;
        bool by_ranges = characterize_weak_core(t.a, t.y, t.k);
        if (by_axioms != by_ranges) ++disagreements;
    }
    c.require(!g_triples.empty(), "no triples were collected");
    c.require(disagreements == 0,
              std::to_string(disagreements) + " disagreements over " +
                  std::to_string(g_triples.size()) + " triples");
    c.detail << g_triples.size() << " triples";
    return c;
}

}  // namespace

int main() {
    struct Entry {
        std::string name;
        std::function<Check()> run;
        double budget_seconds;  // 0 = no budget
    };
    const std::vector<Entry> criteria = {
        {"criterion 1: worked example, double and triple application", criterion1, 1.0},
        {"criterion 2: worked pair and reverse order failure", criterion2, 0.0},
        {"criterion 3: additive counterexample", criterion3, 0.0},
        {"criterion 4: identity suite on 200 random matrices", criterion4, 60.0},
        {"criterion 5: additive law on block-orthogonal pairs", criterion5, 0.0},
        {"criterion 6: exhaustive oracle over squarefree moduli <= 210", criterion6, 120.0},
        {"criterion 7: central existence over random matrices", criterion7, 0.0},
        {"criterion 8: definition matches range characterization", criterion8, 0.0},
    };

    int failures = 0;
    for (const Entry& entry : criteria) {
        auto start = std::chrono::steady_clock::now();
        Check check;
        try {
            check = entry.run();
        } catch (const std::exception& err) {
            check.pass = false;
            check.detail << "exception: " << err.what();
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (entry.budget_seconds > 0 && seconds > entry.budget_seconds) {
            check.pass = false;
            check.detail << (check.detail.str().empty() ? "" : "; ") << "over budget "
                         << entry.budget_seconds << "s";
        }
        if (!check.pass) ++failures;
        std::ostringstream line;
        line << entry.name << ": " << (check.pass ? "PASS" : "FAIL");
        line.setf(std::ios::fixed);
        line.precision(2);
        line << " (" << seconds << "s";
        if (!check.detail.str().empty()) line << "; " << check.detail.str();
        line << ")";
        std::cout << line.str() << std::endl;
    }
    if (failures == 0) {
        std::cout << "acceptance: all " << criteria.size() << " criteria passed" << std::endl;
        return 0;
    }
    std::cout << "acceptance: " << failures << " criteria FAILED" << std::endl;
    return 1;
}
