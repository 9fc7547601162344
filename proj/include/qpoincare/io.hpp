#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qpoincare/matrix.hpp"
#include "qpoincare/partition.hpp"
#include "qpoincare/rational.hpp"
#include "qpoincare/series.hpp"
#include "qpoincare/verify.hpp"

namespace qpoincare {

using nlohmann::json;

struct RMatrixData {
    int d = 0;
    Rat q;
    MatQ r;
};

inline Rat rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long>());
    throw std::invalid_argument("rational entries must be strings like \"3/2\" or integers");
}

/*
 * R-matrix file: {"d": int, "q": "p/r", "entries": [[...], ...]} with a
 * d^2 x d^2 row-major array, row index (k-1)*d + l, column index
 * (i-1)*d + j, entry R^{kl}_{ij}, rationals as lowest-terms strings.
 */
inline RMatrixData rmatrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("d") || !j.contains("q") || !j.contains("entries"))
        throw std::invalid_argument("R-matrix file needs fields d, q, entries");
    RMatrixData data;
    data.d = j.at("d").get<int>();
    if (data.d < 1) throw std::invalid_argument("d must be positive");
    data.q = rational_from_json(j.at("q"));
    std::size_t n = static_cast<std::size_t>(data.d) * static_cast<std::size_t>(data.d);
    const json& rows = j.at("entries");
    if (!rows.is_array() || rows.size() != n)
        throw std::invalid_argument("entries must be a d^2 x d^2 array");
    data.r = MatQ(n, n);
    for (std::size_t row = 0; row < n; ++row) {
        const json& cols = rows[row];
        if (!cols.is_array() || cols.size() != n)
            throw std::invalid_argument("entries must be a d^2 x d^2 array");
        for (std::size_t col = 0; col < n; ++col)
            data.r(row, col) = rational_from_json(cols[col]);
    }
    return data;
}

inline RMatrixData load_rmatrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open R-matrix file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("bad JSON in " + path + ": " + e.what());
    }
    return rmatrix_from_json(j);
}

inline json rmatrix_to_json(const HeckeSymmetry& sym) {
    json rows = json::array();
    std::size_t n = static_cast<std::size_t>(sym.dim()) * static_cast<std::size_t>(sym.dim());
    for (std::size_t row = 0; row < n; ++row) {
        json cols = json::array();
        for (std::size_t col = 0; col < n; ++col)
            cols.push_back(rat_to_string(sym.matrix()(row, col)));
        rows.push_back(std::move(cols));
    }
    return json{{"d", sym.dim()}, {"q", rat_to_string(sym.q())}, {"entries", std::move(rows)}};
}

inline json partition_to_json(const Partition& p) {
    json out = json::array();
    for (int v : p.parts()) out.push_back(v);
    return out;
}

inline json polynomial_to_json(const Polynomial& p) {
    json out = json::array();
    for (int i = 0; i <= std::max(0, p.degree()); ++i) out.push_back(rat_to_string(p.at(i)));
    return out;
}

inline json report_to_json(const IdentityReport& rep) {
    return json{{"identity", rep.identity},
                {"params", rep.params},
                {"lhs", rep.lhs},
                {"rhs", rep.rhs},
                {"pass", rep.pass}};
}

}  // namespace qpoincare
