#pragma once

// Named self-checks over the exact kernel representation. Backs the CLI
// `check` command.

#include "convpow/calculus.hpp"
#include "convpow/kernel.hpp"
#include "convpow/oracle.hpp"
#include "convpow/splinespace.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace convpow {

struct CheckResult {
    std::string name;
    bool passed = false;
    bool skipped = false;
    std::string detail;
};

inline constexpr int kOracleMaxPower = 8;
inline constexpr double kOracleTolerance = 1e-2;

inline std::vector<CheckResult> run_invariant_checks(int n) {
    const SplineKernel kern(n);
    const auto f = kern.to_piecewise(0);
    const Rational rn(n);
    std::vector<CheckResult> out;
    auto add = [&](std::string name, bool ok, std::string detail = {}) {
        out.push_back({std::move(name), ok, false, std::move(detail)});
    };
    auto skip = [&](std::string name, std::string why) { out.push_back({std::move(name), true, true, std::move(why)}); };

    add("support", f.support_begin() == Rational(0) && f.support_end() == rn && kern.eval(Rational(-1)).is_zero() &&
                       kern.eval(rn + Rational(1, 2)).is_zero());

    const Rational mass = total_integral(f);
    add("integral_is_one", mass == Rational(1), "integral = " + mass.to_string());

    bool positive = true;
    for (long j = 0; j <= 16L * n && positive; ++j) positive = kern.eval(Rational(j, 16)).sign() >= 0;
    add("nonnegative_on_sixteenths", positive);

    add("symmetry", reflect(f, rn) == f);

    if (n >= 2) {
        add("continuity_c" + std::to_string(n - 2), matches_derivatives(f, n - 2));
        const auto prev = SplineKernel(n - 1).to_piecewise(0);
        add("derivative_is_difference_of_translates", kern.to_piecewise(1) == prev - translate(prev, Rational(1)));
    } else {
        skip("continuity", "power 1 has no continuous derivatives");
        skip("derivative_is_difference_of_translates", "power 1 has no function-derivative");
    }

    const auto top = kern.to_piecewise(n - 1);
    bool pascal = true;
    for (int k = 0; k < n; ++k) pascal = pascal && top.piece(k) == Poly::constant(bin_alt(n - 1, k));
    add("last_derivative_alternating_pascal", pascal);

    bool chained = true;
    for (int d = 0; d + 1 < n && chained; ++d)
        for (int m = 0; m < n && chained; ++m) chained = derivative(kern.piece(m, d)) == kern.piece(m, d + 1);
    add("rows_are_successive_derivatives", chained);

    const auto unity = partition_of_unity(kern, n);
    add("partition_of_unity", unity.piece(n - 1) == Poly{Rational(1)});

    if (n >= 2 && n <= kOracleMaxPower) {
        const auto sampled = oracle::numeric_convolution_power(n, Rational(1, 256));
        const double dev = oracle::compare(f, sampled);
        std::ostringstream os;
        os << "max deviation " << dev << " at h=1/256";
        add("numeric_oracle", dev <= kOracleTolerance, os.str());
    } else {
        skip("numeric_oracle", n < 2 ? "boxcar has jumps at both ends" : "oracle runs for n <= 8 only");
    }
    return out;
}

}  // namespace convpow
