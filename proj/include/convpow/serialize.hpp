#pragma once

// Text, CSV and JSON forms of coefficient matrices and piecewise
// polynomials. Rationals are always written as "p/q" strings.

#include "convpow/kernel.hpp"
#include "convpow/piecewise.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace convpow {

inline nlohmann::json to_json(const CoeffMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : m.rows()) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& v : r) row.push_back(v.to_string());
        rows.push_back(std::move(row));
    }
    return {{"n", m.n()}, {"rows", std::move(rows)}};
}

inline CoeffMatrix coeff_matrix_from_json(const nlohmann::json& j) {
    const int n = j.at("n").get<int>();
    std::vector<std::vector<Rational>> rows;
    for (const auto& r : j.at("rows")) {
        std::vector<Rational> row;
        for (const auto& v : r) row.push_back(Rational::parse(v.get<std::string>()));
        rows.push_back(std::move(row));
    }
    return CoeffMatrix(n, std::move(rows));
}

/// One row per line, comma-separated, trailing newline.
inline std::string to_csv(const CoeffMatrix& m) {
    std::ostringstream os;
    for (const auto& r : m.rows()) {
        for (std::size_t j = 0; j < r.size(); ++j) os << (j ? "," : "") << r[j];
        os << '\n';
    }
    return os.str();
}

/// Right-aligned columns separated by two spaces.
inline std::string to_pretty(const CoeffMatrix& m) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> width(static_cast<std::size_t>(m.n()), 0);
    for (const auto& r : m.rows()) {
        std::vector<std::string> row;
        for (std::size_t j = 0; j < r.size(); ++j) {
            row.push_back(r[j].to_string());
            width[j] = std::max(width[j], row.back().size());
        }
        cells.push_back(std::move(row));
    }
    std::ostringstream os;
    for (const auto& row : cells) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) os << "  ";
            os << std::string(width[j] - row[j].size(), ' ') << row[j];
        }
        os << '\n';
    }
    return os.str();
}

inline nlohmann::json to_json(const PiecewisePoly& f) {
    nlohmann::json bps = nlohmann::json::array();
    for (const auto& b : f.breakpoints()) bps.push_back(b.to_string());
    nlohmann::json pieces = nlohmann::json::array();
    for (const auto& p : f.pieces()) {
        nlohmann::json cs = nlohmann::json::array();
        for (const auto& c : p.coefficients()) cs.push_back(c.to_string());
        pieces.push_back(std::move(cs));
    }
    return {{"breakpoints", std::move(bps)}, {"pieces", std::move(pieces)}};
}

inline PiecewisePoly piecewise_from_json(const nlohmann::json& j) {
    std::vector<Rational> bps;
    for (const auto& b : j.at("breakpoints")) bps.push_back(Rational::parse(b.get<std::string>()));
    std::vector<Poly> pieces;
    for (const auto& p : j.at("pieces")) {
        std::vector<Rational> cs;
        for (const auto& c : p) cs.push_back(Rational::parse(c.get<std::string>()));
        pieces.emplace_back(std::move(cs));
    }
    return {std::move(bps), std::move(pieces)};
}

/// "[lo, hi]: <poly in t>" per piece, then "0 elsewhere".
inline std::string piece_listing(const PiecewisePoly& f) {
    std::ostringstream os;
    for (std::size_t i = 0; i < f.piece_count(); ++i)
        os << '[' << f.breakpoints()[i] << ", " << f.breakpoints()[i + 1] << "]: " << to_string(f.piece(i)) << '\n';
    os << "0 elsewhere\n";
    return os.str();
}

}  // namespace convpow
