#pragma once

/**
 * @file calculus.hpp
 * @brief Exact calculus on piecewise polynomials: antiderivatives,
 * definite integrals, translation, mass-preserving dilation and
 * convolution with the indicator of an interval.
 */

#include "convpow/piecewise.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace convpow {

/// Piece-by-piece derivative on the same breakpoints.
template <class Field>
PiecewisePolynomial<Field> derivative(const PiecewisePolynomial<Field>& f) {
    std::vector<Polynomial<Field>> pieces;
    pieces.reserve(f.piece_count());
    for (const auto& p : f.pieces()) pieces.push_back(derivative(p));
    return {f.breakpoints(), std::move(pieces)};
}

/**
 * Continuous antiderivative F with F(support_begin) = 0.
 *
 * Each piece carries as its constant term the accumulated mass of all
 * pieces to its left. The returned object is zero outside the support like
 * any PiecewisePolynomial; to the right of the support the true
 * antiderivative is the constant F(support_end), which callers that need it
 * read off the last piece.
 */
template <class Field>
PiecewisePolynomial<Field> antiderivative(const PiecewisePolynomial<Field>& f) {
    std::vector<Polynomial<Field>> pieces;
    pieces.reserve(f.piece_count());
    Field running{0};
    for (std::size_t i = 0; i < f.piece_count(); ++i) {
        auto prim = antiderivative(f.piece(i)) + Polynomial<Field>::constant(running);
        running = prim(f.width(i));
        pieces.push_back(std::move(prim));
    }
    return {f.breakpoints(), std::move(pieces)};
}

namespace detail {

/// Value of the antiderivative F at x, extended by 0 on the left and by its
/// final value on the right.
template <class Field>
Field extended_value(const PiecewisePolynomial<Field>& prim, const Field& x) {
    if (prim.empty() || !(prim.support_begin() < x)) return Field{0};
    if (!(x < prim.support_end())) {
        const std::size_t last = prim.piece_count() - 1;
        return prim.piece(last)(prim.width(last));
    }
    return prim(x);
}

/// Local polynomial (in t = x - lo) of x -> F(x - shift) on [lo, hi], with
/// F extended as above.
template <class Field>
Polynomial<Field> shifted_extended_piece(const PiecewisePolynomial<Field>& prim, const Field& shift,
                                         const Field& lo, const Field& hi) {
    const Field ylo = lo - shift;
    const Field yhi = hi - shift;
    if (prim.empty() || !(prim.support_begin() < yhi)) return {};
    if (!(ylo < prim.support_end())) return Polynomial<Field>::constant(extended_value(prim, ylo));
    return local_piece(prim, ylo, yhi);
}

}  // namespace detail

/// Exact integral of f over [a, b]; requires a <= b.
template <class Field>
Field integral(const PiecewisePolynomial<Field>& f, const Field& a, const Field& b) {
    if (b < a) throw std::invalid_argument("empty interval");
    const auto prim = antiderivative(f);
    return detail::extended_value(prim, b) - detail::extended_value(prim, a);
}

/// Integral over the whole support.
template <class Field>
Field total_integral(const PiecewisePolynomial<Field>& f) {
    if (f.empty()) return Field{0};
    return integral(f, f.support_begin(), f.support_end());
}

/// x -> f(x - a)
template <class Field>
PiecewisePolynomial<Field> translate(const PiecewisePolynomial<Field>& f, const Field& a) {
    std::vector<Field> bps = f.breakpoints();
    for (auto& b : bps) b += a;
    return {std::move(bps), f.pieces()};
}

/// x -> lambda * f(lambda * x), which keeps the integral unchanged.
template <class Field>
PiecewisePolynomial<Field> scale_argument(const PiecewisePolynomial<Field>& f, const Field& lambda) {
    if (!(Field{0} < lambda)) throw std::invalid_argument("scale factor must be positive");
    std::vector<Field> bps = f.breakpoints();
    for (auto& b : bps) b /= lambda;
    std::vector<Polynomial<Field>> pieces;
    pieces.reserve(f.piece_count());
    for (const auto& p : f.pieces()) pieces.push_back(lambda * scale_variable(p, lambda));
    return {std::move(bps), std::move(pieces)};
}

/// x -> f(c - x)
template <class Field>
PiecewisePolynomial<Field> reflect(const PiecewisePolynomial<Field>& f, const Field& c) {
    const std::size_t m = f.piece_count();
    std::vector<Field> bps;
    std::vector<Polynomial<Field>> pieces;
    bps.reserve(f.breakpoints().size());
    pieces.reserve(m);
    for (auto it = f.breakpoints().rbegin(); it != f.breakpoints().rend(); ++it) bps.push_back(c - *it);
    // New local s on [c - b_{i+1}, c - b_i] maps to old local t = width - s.
    for (std::size_t k = 0; k < m; ++k) {
        const std::size_t i = m - 1 - k;
        pieces.push_back(translate(reflect(f.piece(i)), f.width(i)));
    }
    return {std::move(bps), std::move(pieces)};
}

/**
 * Convolution with the indicator of [a, b]:
 *   (f * chi_[a,b])(x) = F(x - a) - F(x - b),  F = antiderivative(f).
 *
 * Output breakpoints are {beta + a} u {beta + b} over the breakpoints beta
 * of f. The result is continuous with support
 * [support_begin + a, support_end + b].
 */
template <class Field>
PiecewisePolynomial<Field> convolve_with_box(const PiecewisePolynomial<Field>& f, const Field& a, const Field& b) {
    if (!(a < b)) throw std::invalid_argument("empty interval");
    if (f.empty()) return {};
    const auto prim = antiderivative(f);

    std::vector<Field> lower = f.breakpoints();
    std::vector<Field> upper = f.breakpoints();
    for (auto& x : lower) x += a;
    for (auto& x : upper) x += b;
    auto bps = detail::merge_breakpoints(std::move(lower), upper);

    std::vector<Polynomial<Field>> pieces;
    pieces.reserve(bps.size() - 1);
    for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
        const Field& lo = bps[i];
        const Field& hi = bps[i + 1];
        pieces.push_back(detail::shifted_extended_piece(prim, a, lo, hi) -
                         detail::shifted_extended_piece(prim, b, lo, hi));
    }
    return {std::move(bps), std::move(pieces)};
}

/**
 * True when derivatives 0..max_order agree on both sides of every interior
 * breakpoint. With @p include_ends the derivatives must also vanish at the
 * two ends of the support, i.e. match the zero extension.
 */
template <class Field>
bool matches_derivatives(const PiecewisePolynomial<Field>& f, int max_order, bool include_ends = true) {
    if (f.empty()) return true;
    PiecewisePolynomial<Field> g = f;
    for (int d = 0; d <= max_order; ++d) {
        const std::size_t m = g.piece_count();
        for (std::size_t i = 0; i + 1 < m; ++i)
            if (g.piece(i)(g.width(i)) != g.piece(i + 1)(Field{0})) return false;
        if (include_ends) {
            if (g.piece(0)(Field{0}) != Field{0}) return false;
            if (g.piece(m - 1)(g.width(m - 1)) != Field{0}) return false;
        }
        g = derivative(g);
    }
    return true;
}

}  // namespace convpow
