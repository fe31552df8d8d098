#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force floating-point convolution powers on a uniform grid.
 *
 * This is a verification harness. It deliberately shares nothing with the
 * coefficient-matrix construction: it samples the indicator of [0,1] and
 * convolves numerically, one trapezoid window at a time.
 */

#include "convpow/piecewise.hpp"
#include "convpow/rational.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace convpow::oracle {

inline constexpr int kMaxStepExponent = 12;
inline constexpr std::size_t kMaxSamples = std::size_t{1} << 22;

struct SampledFunction {
    int power = 0;             // support is [0, power]
    int step_exponent = 0;     // step = 2^-step_exponent
    std::vector<double> samples;

    long per_unit() const { return 1L << step_exponent; }
    double step() const { return std::ldexp(1.0, -step_exponent); }
    Rational step_exact() const { return Rational(1, per_unit()); }
    double x(std::size_t i) const { return static_cast<double>(i) * step(); }
};

/// Accepts exactly h = 1/2^k with 0 <= k <= 12 and returns k.
inline int step_exponent_of(const Rational& h) {
    if (h.numerator() != 1) throw std::invalid_argument("grid step must be 1/2^k");
    const mpz_class den = h.denominator();
    const auto bits = mpz_sizeinbase(den.get_mpz_t(), 2) - 1;
    if (den != mpz_class(1) << bits || bits > kMaxStepExponent)
        throw std::invalid_argument("grid step must be 1/2^k with k <= 12");
    return static_cast<int>(bits);
}

/**
 * chi^n sampled at x_i = i*h on [0, n].
 *
 * chi is sampled as 1 on (0,1) and 1/2 at both endpoints. Each further
 * power is g_next(x_i) = trapezoid of g over [x_i - 1, x_i].
 */
inline SampledFunction numeric_convolution_power(int n, const Rational& h) {
    if (n < 1) throw std::invalid_argument("power must be positive");
    const int k = step_exponent_of(h);
    const std::size_t per_unit = std::size_t{1} << k;
    const std::size_t count = static_cast<std::size_t>(n) * per_unit + 1;
    if (count > kMaxSamples) throw std::length_error("grid too fine");
    const double step = std::ldexp(1.0, -k);

    std::vector<double> g(count, 0.0);
    for (std::size_t i = 0; i <= per_unit; ++i) g[i] = 1.0;
    g[0] = 0.5;
    g[per_unit] = 0.5;

    std::vector<double> prefix(count + 1);
    std::vector<double> next(count);
    for (int p = 2; p <= n; ++p) {
        prefix[0] = 0.0;
        for (std::size_t i = 0; i < count; ++i) prefix[i + 1] = prefix[i] + g[i];
        for (std::size_t i = 0; i < count; ++i) {
            const bool full = i >= per_unit;
            const std::size_t lo = full ? i - per_unit : 0;
            const double window = prefix[i + 1] - prefix[lo];
            const double ends = g[i] + (full ? g[lo] : 0.0);
            next[i] = step * (window - 0.5 * ends);
        }
        g.swap(next);
    }
    return {n, k, std::move(g)};
}

/// Composite trapezoid integral of the samples.
inline double trapezoid_mass(const SampledFunction& s) {
    double sum = 0.0;
    for (double v : s.samples) sum += v;
    sum -= 0.5 * (s.samples.front() + s.samples.back());
    return sum * s.step();
}

/// max_i |exact(x_i) - samples[i]|
inline double compare(const PiecewisePoly& exact, const SampledFunction& approx) {
    if (exact.empty() || exact.support_begin() != Rational(0) || exact.support_end() != Rational(approx.power))
        throw std::invalid_argument("support mismatch");
    double worst = 0.0;
    const long per_unit = approx.per_unit();
    for (std::size_t i = 0; i < approx.samples.size(); ++i) {
        const Rational x(static_cast<long>(i), per_unit);
        worst = std::max(worst, std::abs(exact(x).to_double() - approx.samples[i]));
    }
    return worst;
}

}  // namespace convpow::oracle
