#pragma once

/**
 * @file piecewise.hpp
 * @brief Piecewise polynomials on a finite sorted breakpoint list.
 *
 * Piece i lives on [breakpoints[i], breakpoints[i+1]] and is expressed in
 * the local variable t = x - breakpoints[i]. The function is zero outside
 * [breakpoints.front(), breakpoints.back()]. The zero function has no
 * breakpoints and no pieces.
 */

#include "convpow/poly.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace convpow {

template <class Field>
class PiecewisePolynomial {
public:
    using poly_type = Polynomial<Field>;

    PiecewisePolynomial() = default;

    PiecewisePolynomial(std::vector<Field> breakpoints, std::vector<poly_type> pieces)
        : breaks_(std::move(breakpoints)), pieces_(std::move(pieces)) {
        if (breaks_.empty() && pieces_.empty()) return;
        if (breaks_.size() != pieces_.size() + 1 || pieces_.empty())
            throw std::invalid_argument("piece count must be breakpoint count minus one");
        for (std::size_t i = 1; i < breaks_.size(); ++i)
            if (!(breaks_[i - 1] < breaks_[i]))
                throw std::invalid_argument("breakpoints must be strictly increasing");
    }

    bool empty() const { return pieces_.empty(); }
    std::size_t piece_count() const { return pieces_.size(); }

    const std::vector<Field>& breakpoints() const { return breaks_; }
    const std::vector<poly_type>& pieces() const { return pieces_; }
    const poly_type& piece(std::size_t i) const { return pieces_.at(i); }

    const Field& support_begin() const { return breaks_.front(); }
    const Field& support_end() const { return breaks_.back(); }

    /// Width of piece i.
    Field width(std::size_t i) const { return breaks_[i + 1] - breaks_[i]; }

    /// Index of the piece whose half-open interval [b_i, b_{i+1}) holds x;
    /// the right end of the support maps to the last piece. Requires x
    /// inside the closed support.
    std::size_t locate(const Field& x) const {
        auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
        auto idx = static_cast<std::size_t>(it - breaks_.begin());
        if (idx == 0) return 0;
        return std::min(idx - 1, pieces_.size() - 1);
    }

    bool contains(const Field& x) const {
        return !empty() && !(x < breaks_.front()) && !(breaks_.back() < x);
    }

    /// Zero outside the support, right-continuous at interior breakpoints.
    Field operator()(const Field& x) const {
        if (!contains(x)) return Field{0};
        const std::size_t i = locate(x);
        return pieces_[i](x - breaks_[i]);
    }

    friend bool operator==(const PiecewisePolynomial&, const PiecewisePolynomial&) = default;

private:
    std::vector<Field> breaks_;
    std::vector<poly_type> pieces_;
};

using PiecewisePoly = PiecewisePolynomial<Rational>;

template <class Field>
Field eval(const PiecewisePolynomial<Field>& f, const Field& x) {
    return f(x);
}

namespace detail {

template <class Field>
std::vector<Field> merge_breakpoints(std::vector<Field> a, const std::vector<Field>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
}

/// f restricted to [lo, hi], re-expressed in t = x - lo. [lo, hi] must not
/// straddle a breakpoint of f.
template <class Field>
Polynomial<Field> local_piece(const PiecewisePolynomial<Field>& f, const Field& lo, const Field& hi) {
    if (f.empty() || !(lo < f.support_end()) || !(f.support_begin() < hi)) return {};
    const std::size_t i = f.locate(lo);
    return translate(f.piece(i), f.breakpoints()[i] - lo);
}

template <class Field, class Op>
PiecewisePolynomial<Field> combine(const PiecewisePolynomial<Field>& f, const PiecewisePolynomial<Field>& g, Op op) {
    if (f.empty() && g.empty()) return {};
    auto bps = merge_breakpoints(f.breakpoints(), g.breakpoints());
    std::vector<Polynomial<Field>> pieces;
    pieces.reserve(bps.size() - 1);
    for (std::size_t i = 0; i + 1 < bps.size(); ++i)
        pieces.push_back(op(local_piece(f, bps[i], bps[i + 1]), local_piece(g, bps[i], bps[i + 1])));
    return {std::move(bps), std::move(pieces)};
}

}  // namespace detail

template <class Field>
PiecewisePolynomial<Field> operator+(const PiecewisePolynomial<Field>& f, const PiecewisePolynomial<Field>& g) {
    return detail::combine(f, g, [](const auto& p, const auto& q) { return p + q; });
}

template <class Field>
PiecewisePolynomial<Field> operator-(const PiecewisePolynomial<Field>& f, const PiecewisePolynomial<Field>& g) {
    return detail::combine(f, g, [](const auto& p, const auto& q) { return p - q; });
}

/// Pointwise product, restricted to the overlap of the two supports.
template <class Field>
PiecewisePolynomial<Field> operator*(const PiecewisePolynomial<Field>& f, const PiecewisePolynomial<Field>& g) {
    if (f.empty() || g.empty()) return {};
    const Field lo = std::max(f.support_begin(), g.support_begin());
    const Field hi = std::min(f.support_end(), g.support_end());
    if (!(lo < hi)) return {};
    std::vector<Field> bps{lo, hi};
    for (const auto* h : {&f, &g})
        for (const auto& b : h->breakpoints())
            if (lo < b && b < hi) bps.push_back(b);
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());
    std::vector<Polynomial<Field>> pieces;
    for (std::size_t i = 0; i + 1 < bps.size(); ++i)
        pieces.push_back(detail::local_piece(f, bps[i], bps[i + 1]) * detail::local_piece(g, bps[i], bps[i + 1]));
    return {std::move(bps), std::move(pieces)};
}

template <class Field>
PiecewisePolynomial<Field> operator*(const Field& s, const PiecewisePolynomial<Field>& f) {
    std::vector<Polynomial<Field>> pieces;
    pieces.reserve(f.piece_count());
    for (const auto& p : f.pieces()) pieces.push_back(s * p);
    return {f.breakpoints(), std::move(pieces)};
}

}  // namespace convpow
