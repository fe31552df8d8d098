#pragma once

/**
 * @file splinespace.hpp
 * @brief Spline spaces generated by convolving a compactly supported
 * kernel with the indicators of the intervals of a partition, plus the
 * integer-translate partition of unity.
 *
 * Only finite partitions are supported.
 */

#include "convpow/calculus.hpp"
#include "convpow/kernel.hpp"
#include "convpow/serialize.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace convpow {

class Partition {
public:
    explicit Partition(std::vector<Rational> knots) : knots_(std::move(knots)) {
        if (knots_.size() < 2) throw std::invalid_argument("partition needs at least one interval");
        for (std::size_t i = 1; i < knots_.size(); ++i)
            if (!(knots_[i - 1] < knots_[i])) throw std::invalid_argument("partition knots must be strictly increasing");
    }

    /// {first, first+1, ..., first+count}
    static Partition uniform(long first, long count) {
        std::vector<Rational> k;
        for (long i = 0; i <= count; ++i) k.emplace_back(first + i);
        return Partition(std::move(k));
    }

    const std::vector<Rational>& knots() const { return knots_; }
    std::size_t interval_count() const { return knots_.size() - 1; }

private:
    std::vector<Rational> knots_;
};

struct SplineBasis {
    int kernel_n = 0;
    Partition partition;
    std::vector<PiecewisePoly> elements;

    /// Elements are C^(kernel_n - 1); a power-1 kernel gives only C^0.
    int smoothness() const { return kernel_n - 1; }
    bool low_smoothness() const { return kernel_n < 2; }
    std::size_t size() const { return elements.size(); }
};

inline SplineBasis build_basis(const Partition& p, const SplineKernel& kern) {
    const auto f = kern.to_piecewise(0);
    std::vector<PiecewisePoly> elements;
    elements.reserve(p.interval_count());
    const auto& k = p.knots();
    for (std::size_t i = 0; i + 1 < k.size(); ++i) elements.push_back(convolve_with_box(f, k[i], k[i + 1]));
    return SplineBasis{kern.n(), p, std::move(elements)};
}

using RationalMatrix = std::vector<std::vector<Rational>>;

/// G[i][j] = integral of element_i * element_j.
inline RationalMatrix gram_matrix(const SplineBasis& b) {
    const std::size_t m = b.size();
    RationalMatrix g(m, std::vector<Rational>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            g[i][j] = total_integral(b.elements[i] * b.elements[j]);
            g[j][i] = g[i][j];
        }
    return g;
}

/// Exact determinant by fraction-field Gaussian elimination.
inline Rational determinant(RationalMatrix a) {
    const std::size_t m = a.size();
    Rational det(1);
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t pivot = col;
        while (pivot < m && a[pivot][col].is_zero()) ++pivot;
        if (pivot == m) return Rational{};
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < m; ++r) {
            if (a[r][col].is_zero()) continue;
            const Rational factor = a[r][col] / a[col][col];
            for (std::size_t c = col; c < m; ++c) a[r][c] -= factor * a[col][c];
        }
    }
    return det;
}

struct IndependenceReport {
    bool independent = false;
    Rational gram_determinant;
};

inline constexpr std::size_t kMaxExactIndependenceSize = 12;

inline IndependenceReport check_independence(const SplineBasis& b) {
    if (b.size() > kMaxExactIndependenceSize) throw std::length_error("use sampled rank check");
    const Rational det = determinant(gram_matrix(b));
    return {!det.is_zero(), det};
}

/**
 * sum_{k=0}^{count-1} f(x - k) for f = chi^n. Equal to the constant 1 on
 * the plateau [n-1, count].
 */
inline PiecewisePoly partition_of_unity(const SplineKernel& kern, int count) {
    const int n = kern.n();
    if (count < n) throw std::invalid_argument("no interior plateau");
    const int pieces_total = count + n - 1;
    std::vector<Poly> kernel_pieces;
    for (int m = 0; m < n; ++m) kernel_pieces.push_back(kern.piece(m, 0));

    std::vector<Rational> bps;
    std::vector<Poly> pieces;
    for (int j = 0; j <= pieces_total; ++j) bps.emplace_back(j);
    for (int j = 0; j < pieces_total; ++j) {
        // translates k with piece index j - k in [0, n-1]
        Poly sum;
        for (int k = std::max(0, j - n + 1); k <= std::min(j, count - 1); ++k) sum += kernel_pieces[j - k];
        pieces.push_back(std::move(sum));
    }
    return {std::move(bps), std::move(pieces)};
}

/// JSON list with one {"breakpoints", "pieces"} object per element.
inline nlohmann::json to_json(const SplineBasis& b) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : b.elements) out.push_back(to_json(e));
    return out;
}

}  // namespace convpow
