#pragma once

/**
 * @file kernel.hpp
 * @brief The n-th convolution power of the indicator of [0,1] (the cardinal
 * B-spline of degree n-1) and its function-derivatives, built from a
 * triangular recursion on an n x n rational coefficient matrix.
 *
 * Row i of the matrix describes f^(n-1-i), the function obtained after i
 * integrations of the alternating-sign Pascal row. Column j describes the
 * piece on [j, j+1]. In the local variable t = x - j:
 *
 *   f^(d) on [0,1]:    a[r][0] * P_r(t)               r = n-1-d
 *   f^(d) on [j,j+1]:  sum_{k=0..r} a[r-k][j] * P_k(t)
 *
 * with P_k(t) = t^k / k!. Entries a[i][j], i >= 1, j >= 1, are the values of
 * the level-i piece j-1 at its right end, which is what makes consecutive
 * pieces glue together continuously.
 */

#include "convpow/calculus.hpp"
#include "convpow/piecewise.hpp"
#include "convpow/poly.hpp"
#include "convpow/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace convpow {

/// (-1)^k * C(m, k)
inline Rational bin_alt(long m, long k) {
    if (m < 0 || k < 0 || k > m) throw std::out_of_range("index out of binomial range");
    mpz_class b = binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(k));
    if (k % 2 == 1) b = -b;
    return Rational(b, mpz_class(1));
}

class CoeffMatrix {
public:
    CoeffMatrix() = default;

    /// Takes ownership of a square row-major table; used by parsers.
    CoeffMatrix(int n, std::vector<std::vector<Rational>> rows) : n_(n), rows_(std::move(rows)) {
        if (n_ < 1) throw std::invalid_argument("power must be positive");
        if (rows_.size() != static_cast<std::size_t>(n_))
            throw std::invalid_argument("coefficient matrix must have n rows");
        for (const auto& r : rows_)
            if (r.size() != static_cast<std::size_t>(n_))
                throw std::invalid_argument("coefficient matrix must have n columns");
    }

    int n() const { return n_; }
    const Rational& operator()(int i, int j) const { return rows_.at(i).at(j); }
    const std::vector<Rational>& row(int i) const { return rows_.at(i); }
    const std::vector<std::vector<Rational>>& rows() const { return rows_; }

    friend bool operator==(const CoeffMatrix&, const CoeffMatrix&) = default;

private:
    int n_ = 0;
    std::vector<std::vector<Rational>> rows_;
};

inline CoeffMatrix build_coeff_matrix(int n) {
    if (n < 1) throw std::invalid_argument("power must be positive");
    const auto size = static_cast<std::size_t>(n);

    std::vector<Rational> p_at_one;  // P_k(1) = 1/k!
    p_at_one.reserve(size);
    for (std::size_t k = 0; k < size; ++k) p_at_one.push_back(inverse_factorial(k));

    std::vector<std::vector<Rational>> a(size, std::vector<Rational>(size));
    for (int k = 0; k < n; ++k) a[0][k] = bin_alt(n - 1, k);

    for (std::size_t i = 1; i < size; ++i) {
        a[i][0] = a[0][0];
        a[i][1] = a[i][0] * p_at_one[i];
        for (std::size_t j = 2; j < size; ++j) {
            // right-end value of level-i piece j-1
            Rational s;
            for (std::size_t k = 0; k <= i; ++k) s += a[i - k][j - 1] * p_at_one[k];
            a[i][j] = std::move(s);
        }
    }
    return CoeffMatrix(n, std::move(a));
}

class SplineKernel {
public:
    explicit SplineKernel(int n) : matrix_(build_coeff_matrix(n)) { init_factorials(); }
    explicit SplineKernel(CoeffMatrix m) : matrix_(std::move(m)) { init_factorials(); }

    int n() const { return matrix_.n(); }
    const CoeffMatrix& matrix() const { return matrix_; }

    /// f^(d) on [m, m+1] in the local variable t = x - m.
    Poly piece(int m, int d) const {
        const int n = this->n();
        if (m < 0 || m >= n) throw std::out_of_range("piece index out of range");
        if (d < 0 || d >= n) throw std::out_of_range("derivative order out of range");
        const int r = n - 1 - d;
        if (m == 0) return Poly::monomial(matrix_(r, 0) * inv_fact_[r], static_cast<std::size_t>(r));
        std::vector<Rational> cs(static_cast<std::size_t>(r) + 1);
        for (int k = 0; k <= r; ++k) cs[k] = matrix_(r - k, m) * inv_fact_[k];
        return Poly(std::move(cs));
    }

    /// f^(d) on breakpoints 0, 1, ..., n.
    PiecewisePoly to_piecewise(int d = 0) const {
        const int n = this->n();
        if (d < 0 || d >= n) throw std::out_of_range("derivative order out of range");
        std::vector<Rational> bps;
        std::vector<Poly> pieces;
        bps.reserve(static_cast<std::size_t>(n) + 1);
        pieces.reserve(static_cast<std::size_t>(n));
        for (int m = 0; m <= n; ++m) bps.emplace_back(m);
        for (int m = 0; m < n; ++m) pieces.push_back(piece(m, d));
        return {std::move(bps), std::move(pieces)};
    }

    /// Exact f^(d)(x). Right-continuous at interior knots; x = n is taken
    /// from the last piece.
    Rational eval(const Rational& x, int d = 0) const {
        const int n = this->n();
        if (d < 0 || d >= n) throw std::out_of_range("derivative order out of range");
        if (x.sign() < 0 || Rational(n) < x) return Rational{};
        long m = x.floor().get_si();
        if (m > n - 1) m = n - 1;
        return piece(static_cast<int>(m), d)(x - Rational(m));
    }

private:
    void init_factorials() {
        inv_fact_.reserve(static_cast<std::size_t>(n()));
        for (int k = 0; k < n(); ++k) inv_fact_.push_back(inverse_factorial(static_cast<unsigned long>(k)));
    }

    CoeffMatrix matrix_;
    std::vector<Rational> inv_fact_;
};

/// The indicator of [0, 1] as a piecewise polynomial.
inline PiecewisePoly unit_box() { return PiecewisePoly({Rational(0), Rational(1)}, {Poly{Rational(1)}}); }

}  // namespace convpow
