#pragma once

#include <istream>
#include <string>

#include <json.hpp>

#include "ginv/matrix.hpp"
#include "ginv/report.hpp"
#include "ginv/verify.hpp"

namespace ginv::io {

/// Matrix file format: {"matrix": [["0","8","-8"], ...]} with every
/// entry a rational string. Rationals only; floats are rejected so that
/// results stay bit-exact end to end.
inline Matrix matrix_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("matrix")) {
        throw ParseError("expected an object with a \"matrix\" key", 0);
    }
    const nlohmann::json& rows = doc["matrix"];
    if (!rows.is_array() || rows.empty()) {
        throw ParseError("\"matrix\" must be a non-empty array of rows", 0);
    }
    const std::size_t n_rows = rows.size();
    const std::size_t n_cols = rows[0].is_array() ? rows[0].size() : 0;
    if (n_cols == 0) {
        throw ParseError("matrix rows must be non-empty arrays", 0);
    }
    Matrix m(n_rows, n_cols);
    for (std::size_t i = 0; i < n_rows; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n_cols) {
            throw ParseError("matrix is ragged at row " + std::to_string(i + 1), i);
        }
        for (std::size_t j = 0; j < n_cols; ++j) {
            if (!rows[i][j].is_string()) {
                throw ParseError("entry at row " + std::to_string(i + 1) + ", column " +
                                     std::to_string(j + 1) + " must be a rational string",
                                 j);
            }
            try {
                m(i, j) = Rational::parse(rows[i][j].get<std::string>());
            } catch (const ParseError& err) {
                throw ParseError("entry at row " + std::to_string(i + 1) + ", column " +
                                     std::to_string(j + 1) + ": " + err.what(),
                                 err.position());
            }
        }
    }
    return m;
}

inline Matrix read_matrix(std::istream& in) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& err) {
        throw ParseError(std::string("invalid JSON: ") + err.what(), 0);
    }
    return matrix_from_json(doc);
}

inline nlohmann::json matrix_to_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row.push_back(m(i, j).str());
        }
        rows.push_back(row);
    }
    return rows;
}

inline nlohmann::json axioms_to_json(const InverseReport& report) {
    nlohmann::json axioms = nlohmann::json::array();
    for (const EquationVerdict& verdict : report.verdicts) {
        axioms.push_back({{"name", verdict.name}, {"holds", verdict.holds}});
    }
    return axioms;
}

inline nlohmann::json identities_to_json(const std::vector<IdentityVerdict>& identities) {
    nlohmann::json out = nlohmann::json::array();
    for (const IdentityVerdict& verdict : identities) {
        out.push_back({{"name", verdict.name}, {"holds", verdict.holds}});
    }
    return out;
}

/// Report schema shared by the CLI: {kind, inverse, index, axioms,
/// identities}.
inline nlohmann::json report_to_json(const std::string& kind, const Matrix& inverse,
                                     std::size_t index, const nlohmann::json& axioms,
                                     const nlohmann::json& identities) {
    return {{"kind", kind},
            {"inverse", matrix_to_json(inverse)},
            {"index", index},
            {"axioms", axioms},
            {"identities", identities}};
}

}  // namespace ginv::io
