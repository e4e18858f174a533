// Command line front door: parse a matrix file, compute the requested
// generalized inverse, optionally verify the defining equations, and
// run the built-in example and finite-ring oracle suites.
//
// Exit codes: 0 success; 1 input error; 2 requested inverse does not
// exist; 3 a checked identity or uniqueness claim was violated.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ginv/ginv.hpp"
#include "ginv/io.hpp"

namespace {

using namespace ginv;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitAbsent = 2;
constexpr int kExitViolation = 3;

Matrix ints(std::initializer_list<std::initializer_list<long long>> rows) {
    Matrix m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (long long v : row) m(i, j++) = Rational(v);
        ++i;
    }
    return m;
}

Matrix rats(std::initializer_list<std::initializer_list<const char*>> rows) {
    Matrix m(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (const char* v : row) m(i, j++) = Rational::parse(v);
        ++i;
    }
    return m;
}

const std::map<std::string, InverseKind> kComputeKinds = {
    {"mp", InverseKind::MoorePenrose},
    {"drazin", InverseKind::Drazin},
    {"group", InverseKind::Group},
    {"core", InverseKind::Core},
    {"core-ep", InverseKind::CoreEp},
    {"weak-group", InverseKind::WeakGroup},
    {"weak-core", InverseKind::WeakCore},
    {"central-drazin", InverseKind::CentralDrazin},
    {"central-weak-core", InverseKind::CentralWeakCore},
};

struct Computed {
    std::optional<Matrix> inverse;
    std::size_t index = 1;
    std::string absent_reason;
    std::vector<IdentityVerdict> identities;
};

Computed compute_kind(const Matrix& a, InverseKind kind, bool with_identities) {
    Computed out;
    if (kind == InverseKind::MoorePenrose) {
        out.inverse = moore_penrose(a);
        out.index = a.is_square() ? drazin_index(a).paper_index : 0;
        return out;
    }
    IndexResult idx = drazin_index(a);
    switch (kind) {
        case InverseKind::Drazin:
            out.inverse = drazin(a);
            out.index = idx.paper_index;
            break;
        case InverseKind::Group: {
            auto g = group_inverse(a);
            if (!g) {
                out.absent_reason = "no group inverse (index " +
                                    std::to_string(idx.drazin_index) + ")";
            } else {
                out.inverse = *g;
                out.index = 1;
            }
            break;
        }
        case InverseKind::Core: {
            auto c = core_inverse(a);
            if (!c) {
                out.absent_reason = "no core inverse (index " +
                                    std::to_string(idx.drazin_index) + ")";
            } else {
                out.inverse = *c;
                out.index = 1;
            }
            break;
        }
        case InverseKind::CoreEp:
            out.inverse = core_ep(a);
            out.index = idx.paper_index;
            break;
        case InverseKind::WeakGroup:
            out.inverse = weak_group(a);
            out.index = idx.paper_index;
            break;
        case InverseKind::WeakCore: {
            WeakCoreResult wc = weak_core(a);
            out.inverse = wc.inverse;
            out.index = wc.index;
            if (with_identities) {
                Matrix ak = power(a, idx.paper_index);
                Matrix core_ak = core_inverse(ak).value();
                out.identities.push_back({"wc(a) = a^{k-1} (a^k)^core",
                                          power(a, idx.paper_index - 1) * core_ak == wc.inverse});
                out.identities.push_back({"wc(a) = core-ep(a)", wc.inverse == core_ep(a)});
                out.identities.push_back(
                    {"a wc(a) = a^k (a^k)^+", wc.projector == ak * moore_penrose(ak)});
            }
            break;
        }
        case InverseKind::CentralDrazin: {
            CentralInverseResult res = central_drazin(a);
            if (!res.exists) {
                out.absent_reason = "no central-drazin inverse (" + res.obstruction + ")";
            } else {
                out.inverse = *res.inverse;
                out.index = res.index;
            }
            break;
        }
        case InverseKind::CentralWeakCore: {
            CentralInverseResult res = central_weak_core(a);
            if (!res.exists) {
                out.absent_reason = "no central-weak-core inverse (" + res.obstruction + ")";
            } else {
                out.inverse = *res.inverse;
                out.index = res.index;
                if (with_identities) {
                    out.identities.push_back(
                        {"cwc(a) = core-ep(a) = a^D",
                         *res.inverse == core_ep(a) && core_ep(a) == drazin(a)});
                }
            }
            break;
        }
        default:
            throw std::invalid_argument("unsupported kind");
    }
    return out;
}

// The Penrose equations make sense for rectangular inputs, which the
// square-only axiom checker does not cover.
std::vector<EquationVerdict> rectangular_mp_verdicts(const Matrix& a, const Matrix& x) {
    Matrix ax = a * x;
    Matrix xa = x * a;
    return {
        {Equation::Inner, equation_name(Equation::Inner), a * x * a == a},
        {Equation::Outer, equation_name(Equation::Outer), x * a * x == x},
        {Equation::AzHermitian, equation_name(Equation::AzHermitian), ax.transpose() == ax},
        {Equation::ZaHermitian, equation_name(Equation::ZaHermitian), xa.transpose() == xa},
    };
}

int run_compute(const std::string& kind_name_str, const std::string& input, bool verify_flag,
                bool json_flag) {
    Matrix a;
    try {
        std::ifstream in(input);
        if (!in) {
            std::cerr << "error: cannot open " << input << "\n";
            return kExitInput;
        }
        a = io::read_matrix(in);
    } catch (const ParseError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInput;
    }

    const bool square_only = kind_name_str != "mp";
    if ((square_only || kind_name_str == "all") && !a.is_square()) {
        std::cerr << "error: kind '" << kind_name_str << "' requires a square matrix\n";
        return kExitInput;
    }

    if (kind_name_str == "all") {
        ConsistencyReport rep = consistency_report(a);
        struct Row {
            const char* name;
            std::optional<Matrix> value;
            std::string reason;
            std::size_t index;
        };
        std::vector<Row> rows;
        rows.push_back({"mp", rep.mp, "", rep.paper_index});
        rows.push_back({"drazin", rep.drazin_inv, "", rep.paper_index});
        rows.push_back({"group", rep.group_inv,
                        "no group inverse (index " + std::to_string(rep.drazin_index) + ")", 1});
        rows.push_back({"core", rep.core_inv,
                        "no core inverse (index " + std::to_string(rep.drazin_index) + ")", 1});
        rows.push_back({"core-ep", rep.core_ep_inv, "", rep.paper_index});
        rows.push_back({"weak-group", rep.weak_group_inv, "", rep.paper_index});
        rows.push_back({"weak-core", rep.wc.inverse, "", rep.wc.index});
        rows.push_back({"central-drazin", rep.central_drazin_res.inverse,
                        "no central-drazin inverse (" + rep.central_drazin_res.obstruction + ")",
                        rep.central_drazin_res.index});
        rows.push_back({"central-weak-core", rep.central_wc_res.inverse,
                        "no central-weak-core inverse (" + rep.central_wc_res.obstruction + ")",
                        rep.central_wc_res.index});

        if (json_flag) {
            json doc;
            doc["index"] = rep.paper_index;
            doc["drazin_index"] = rep.drazin_index;
            json kinds = json::array();
            for (const Row& row : rows) {
                json entry;
                entry["kind"] = row.name;
                if (row.value) {
                    entry["inverse"] = io::matrix_to_json(*row.value);
                    entry["index"] = row.index;
                } else {
                    entry["inverse"] = nullptr;
                    entry["error"] = row.reason;
                }
                kinds.push_back(entry);
            }
            doc["kinds"] = kinds;
            doc["identities"] =
                verify_flag ? io::identities_to_json(rep.identities) : json::array();
            std::cout << doc.dump() << "\n";
        } else {
            std::cout << "index: " << rep.paper_index << " (rank stabilizes at "
                      << rep.drazin_index << ")\n";
            for (const Row& row : rows) {
                if (row.value) {
                    std::cout << row.name << ": " << row.value->str() << "\n";
                } else {
                    std::cout << row.name << ": " << row.reason << "\n";
                }
            }
            if (verify_flag) {
                for (const IdentityVerdict& id : rep.identities) {
                    std::cout << "identity " << id.name << ": " << (id.holds ? "ok" : "FAIL")
                              << "\n";
                }
            }
        }
        return rep.all_pass ? kExitOk : kExitViolation;
    }

    InverseKind kind = kComputeKinds.at(kind_name_str);
    Computed res = compute_kind(a, kind, verify_flag);

    if (!res.inverse) {
        if (json_flag) {
            json doc = {{"kind", kind_name_str}, {"inverse", nullptr},
                        {"error", res.absent_reason}};
            std::cout << doc.dump() << "\n";
        } else {
            std::cout << res.absent_reason << "\n";
        }
        return kExitAbsent;
    }

    std::vector<EquationVerdict> verdicts;
    if (verify_flag) {
        if (!a.is_square()) {
            verdicts = rectangular_mp_verdicts(a, *res.inverse);
        } else {
            std::size_t k = res.index > 0 ? res.index : 1;
            verdicts = check_axioms(a, *res.inverse, kind, k).verdicts;
        }
    }

    if (json_flag) {
        json axioms = json::array();
        for (const EquationVerdict& v : verdicts) {
            axioms.push_back({{"name", v.name}, {"holds", v.holds}});
        }
        std::cout << io::report_to_json(kind_name_str, *res.inverse, res.index, axioms,
                                        io::identities_to_json(res.identities))
                         .dump()
                  << "\n";
    } else {
        std::cout << res.inverse->str() << "\n";
        if (verify_flag) {
            std::cout << "index: " << res.index << "\n";
            for (const EquationVerdict& v : verdicts) {
                std::cout << "axiom " << v.name << ": " << (v.holds ? "ok" : "FAIL") << "\n";
            }
            for (const IdentityVerdict& id : res.identities) {
                std::cout << "identity " << id.name << ": " << (id.holds ? "ok" : "FAIL") << "\n";
            }
        }
    }
    return kExitOk;
}

struct ExampleCheck {
    std::string name;
    bool pass = false;
    Matrix computed;
    Matrix expected;  // meaningful for equality rows
};

// Recomputes the built-in worked examples and compares them against
// their published values. A mismatch that survives the axiom checker is
// reported as a discrepancy rather than aborting the run.
int run_paper_examples(bool json_flag) {
    std::vector<ExampleCheck> checks;
    auto check_equal = [&](const std::string& name, const Matrix& computed,
                           const Matrix& expected) {
        checks.push_back({name, computed == expected, computed, expected});
    };
    auto check_true = [&](const std::string& name, bool ok) {
        checks.push_back({name, ok, Matrix(), Matrix()});
    };

    Matrix e1 = ints({{0, 8, -8}, {8, -5, 8}, {8, -5, 8}});
    Matrix e1_wc = rats({{"0", "0", "0"}, {"0", "1/6", "1/6"}, {"0", "1/6", "1/6"}});
    Matrix e1_wc2 = rats({{"0", "0", "0"}, {"0", "3/2", "3/2"}, {"0", "3/2", "3/2"}});

    Matrix wc1 = weak_core(e1).inverse;
    check_equal("example-1 weak core", wc1, e1_wc);
    Matrix wc2 = weak_core(wc1).inverse;
    check_equal("example-1 double weak core", wc2, e1_wc2);
    check_equal("example-1 triple weak core returns the first", weak_core(wc2).inverse, e1_wc);

    Matrix a = ints({{-3, -3, -1}, {1, 1, 1}, {0, 0, 0}});
    Matrix b = ints({{3, 1, 0}, {-3, -1, 0}, {2, -2, 0}});
    Matrix a_wc_expected =
        rats({{"-9/20", "3/20", "0"}, {"3/20", "-1/20", "0"}, {"0", "0", "0"}});
    Matrix b_wc_expected =
        rats({{"1/12", "-1/12", "1/6"}, {"-1/12", "1/12", "-1/6"}, {"1/6", "-1/6", "1/3"}});
    Matrix ab_wc_expected =
        rats({{"-1/8", "1/8", "0"}, {"1/8", "-1/8", "0"}, {"0", "0", "0"}});
    Matrix awc_bwc_expected =
        rats({{"-1/20", "1/20", "-1/10"}, {"1/60", "-1/60", "1/30"}, {"0", "0", "0"}});
    Matrix sum_wc_expected =
        rats({{"-1/4", "-1/4", "1/4"}, {"-1/4", "-1/4", "-1/4"}, {"-1/2", "1/2", "1/2"}});
    Matrix wc_sum_expected =
        rats({{"-11/30", "1/15", "1/6"}, {"1/15", "1/30", "-1/6"}, {"1/6", "-1/6", "1/3"}});

    Matrix a_wc = weak_core(a).inverse;
    Matrix b_wc = weak_core(b).inverse;
    check_equal("example-2 weak core of A", a_wc, a_wc_expected);
    check_equal("example-2 weak core of B", b_wc, b_wc_expected);
    Matrix ab_wc = weak_core(a * b).inverse;
    check_equal("example-2 weak core of AB", ab_wc, ab_wc_expected);
    check_equal("example-2 product of weak cores", a_wc * b_wc, awc_bwc_expected);
    check_true("example-2 reverse order law fails as published", ab_wc != a_wc * b_wc);
    Matrix sum_wc = weak_core(a + b).inverse;
    check_equal("example-3 weak core of A+B", sum_wc, sum_wc_expected);
    check_equal("example-3 sum of weak cores", a_wc + b_wc, wc_sum_expected);
    check_true("example-3 additive law fails as published", sum_wc != a_wc + b_wc);

    bool all_pass = true;
    if (json_flag) {
        json rows = json::array();
        for (const ExampleCheck& c : checks) {
            all_pass = all_pass && c.pass;
            rows.push_back({{"name", c.name}, {"pass", c.pass}});
        }
        std::cout << json{{"results", rows}}.dump() << "\n";
    } else {
        for (const ExampleCheck& c : checks) {
            all_pass = all_pass && c.pass;
            if (c.pass) {
                std::cout << c.name << ": pass\n";
            } else {
                std::cout << c.name << ": DISCREPANCY computed=" << c.computed.str()
                          << " expected=" << c.expected.str() << "\n";
            }
        }
    }
    return all_pass ? kExitOk : kExitViolation;
}

int run_oracle(std::uint64_t modulus, const std::string& kind_name_str, std::size_t kmax_flag,
               bool json_flag) {
    ZnRing ring;
    try {
        ring = build_ring(modulus);
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInput;
    }
    std::size_t k_max = kmax_flag > 0 ? kmax_flag : default_kmax(ring);

    std::vector<InverseKind> kinds;
    if (kind_name_str == "all") {
        for (const auto& [name, kind] : kComputeKinds) kinds.push_back(kind);
    } else {
        kinds.push_back(kComputeKinds.at(kind_name_str));
    }

    bool uniqueness_violation = false;
    json rows = json::array();
    std::ostringstream table;
    for (std::uint64_t a = 0; a < ring.modulus; ++a) {
        for (InverseKind kind : kinds) {
            OracleResult res = brute_force(ring, a, kind, k_max);
            if (ring.proper && !res.unique) uniqueness_violation = true;
            if (json_flag) {
                json row;
                row["element"] = a;
                row["kind"] = kind_name(kind);
                if (auto sol = res.only()) {
                    row["inverse"] = sol->inverse;
                    row["k"] = sol->k;
                } else {
                    row["inverse"] = nullptr;
                    row["solutions"] = res.solutions.size();
                }
                row["unique"] = res.unique;
                rows.push_back(row);
            } else {
                table << a << ',' << kind_name(kind) << ',';
                if (auto sol = res.only()) {
                    table << sol->inverse << ',' << sol->k;
                } else if (res.solutions.empty()) {
                    table << "-,-";
                } else {
                    table << "multiple(" << res.solutions.size() << "),-";
                }
                table << ',' << (res.unique ? "true" : "false") << "\n";
            }
        }
    }

    if (json_flag) {
        json doc = {{"modulus", ring.modulus},
                    {"proper", ring.proper},
                    {"k_max", k_max},
                    {"rows", rows}};
        std::cout << doc.dump() << "\n";
    } else {
        if (!ring.proper) {
            std::cout << "# Z_" << ring.modulus
                      << " is not proper; uniqueness assertions suppressed\n";
        } else {
            std::cout << "# Z_" << ring.modulus << " proper\n";
        }
        std::cout << "element,kind,inverse,k,unique\n" << table.str();
    }
    if (ring.proper && uniqueness_violation) {
        std::cerr << "error: uniqueness violated in a proper ring\n";
        return kExitViolation;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact generalized inverses of rational matrices"};
    app.require_subcommand(1);

    std::string kind = "weak-core";
    std::string input;
    bool verify_flag = false;
    bool json_flag = false;
    auto* compute = app.add_subcommand("compute", "Compute one inverse of a matrix file");
    std::vector<std::string> kind_choices;
    for (const auto& [name, _] : kComputeKinds) kind_choices.push_back(name);
    kind_choices.push_back("all");
    compute->add_option("--kind", kind, "Inverse to compute")
        ->check(CLI::IsMember(kind_choices))
        ->required();
    compute->add_option("--input", input, "Matrix JSON file")->required();
    compute->add_flag("--verify", verify_flag, "Check the defining equations of the result");
    compute->add_flag("--json", json_flag, "Emit a JSON report");

    bool ex_json = false;
    auto* examples = app.add_subcommand(
        "paper-examples", "Recompute the built-in worked examples against published values");
    examples->add_flag("--json", ex_json, "Emit JSON results");

    std::uint64_t modulus = 0;
    std::string oracle_kind = "all";
    std::size_t kmax_flag = 0;
    bool oracle_json = false;
    auto* oracle = app.add_subcommand("oracle", "Brute-force existence table over Z_n");
    oracle->add_option("--modulus", modulus, "Ring modulus n >= 2")->required();
    std::vector<std::string> oracle_choices;
    for (const auto& [name, _] : kComputeKinds) oracle_choices.push_back(name);
    oracle_choices.push_back("all");
    oracle->add_option("--kind", oracle_kind, "Inverse kind to scan")
        ->check(CLI::IsMember(oracle_choices));
    oracle->add_option("--kmax", kmax_flag, "Largest index to scan (default 1+ceil(log2 n))");
    oracle->add_flag("--json", oracle_json, "Emit JSON results");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int rc = app.exit(err);
        return rc == 0 ? kExitOk : kExitInput;
    }

    try {
        if (compute->parsed()) return run_compute(kind, input, verify_flag, json_flag);
        if (examples->parsed()) return run_paper_examples(ex_json);
        if (oracle->parsed()) return run_oracle(modulus, oracle_kind, kmax_flag, oracle_json);
    } catch (const ParseError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInput;
    } catch (const std::logic_error& err) {
        std::cerr << "error: internal check failed: " << err.what() << "\n";
        return kExitViolation;
    }
    return kExitOk;
}
