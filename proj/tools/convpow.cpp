// convpow: command-line front end for the convolution-power library.
//
// Exit codes: 0 success, 1 usage error, 2 computation or I/O error.

#include "convpow/convpow.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitFailure = 2;
constexpr int kDefaultMaxN = 200;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int max_power() {
    if (const char* env = std::getenv("CONVPOW_MAX_N")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw UsageError("CONVPOW_MAX_N is not an integer");
        }
    }
    return kDefaultMaxN;
}

void check_power(int n) {
    if (n < 1) throw UsageError("power must be positive");
    if (n > max_power()) throw UsageError("power " + std::to_string(n) + " exceeds CONVPOW_MAX_N");
}

void check_order(int n, int d) {
    if (d < 0 || d >= n) throw UsageError("derivative order must be in [0, n-1]");
}

convpow::Rational parse_point(const std::string& text) {
    try {
        return convpow::Rational::parse(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact convolution powers of the indicator of [0,1]"};
    app.require_subcommand(1);

    int n = 0;
    int order = 0;
    std::string format = "pretty";
    std::string point;
    std::vector<int> orders;
    int samples = 64;
    std::string outdir = ".";

    auto* matrix = app.add_subcommand("matrix", "print the coefficient matrix");
    matrix->add_option("-n", n, "convolution power")->required();
    matrix->add_option("--format", format, "json, csv or pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));

    auto* eval = app.add_subcommand("eval", "evaluate f^(d)(x) exactly");
    eval->add_option("-n", n, "convolution power")->required();
    eval->add_option("-x", point, "point, as p/q or integer")->required();
    eval->add_option("-d", order, "derivative order");

    auto* pieces = app.add_subcommand("pieces", "list the polynomial pieces of f^(d)");
    pieces->add_option("-n", n, "convolution power")->required();
    pieces->add_option("-d", order, "derivative order");

    auto* plot = app.add_subcommand("plot", "write gnuplot data files and script");
    plot->add_option("-n", n, "convolution power")->required();
    plot->add_option("-d", orders, "derivative orders, comma separated")->delimiter(',');
    plot->add_option("--samples", samples, "samples per unit interval");
    plot->add_option("-o", outdir, "output directory");

    auto* check = app.add_subcommand("check", "run the invariant self-check");
    check->add_option("-n", n, "convolution power")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        check_power(n);
        if (*matrix) {
            const auto m = convpow::build_coeff_matrix(n);
            if (format == "json")
                std::cout << convpow::to_json(m).dump() << '\n';
            else if (format == "csv")
                std::cout << convpow::to_csv(m);
            else
                std::cout << convpow::to_pretty(m);
        } else if (*eval) {
            check_order(n, order);
            const auto x = parse_point(point);
            std::cout << convpow::SplineKernel(n).eval(x, order) << '\n';
        } else if (*pieces) {
            check_order(n, order);
            std::cout << convpow::piece_listing(convpow::SplineKernel(n).to_piecewise(order));
        } else if (*plot) {
            convpow::PlotJob job;
            job.n = n;
            job.samples_per_unit = samples;
            job.output_dir = outdir;
            if (orders.empty()) {
                job.orders.clear();
                for (int d = 0; d <= 2 && d < n; ++d) job.orders.push_back(d);
            } else {
                for (int d : orders) check_order(n, d);
                job.orders = orders;
            }
            if (samples < 2) throw UsageError("need at least 2 samples per unit");
            const auto files = convpow::write_plot(job);
            for (const auto& p : files.data) std::cout << p.string() << '\n';
            std::cout << files.script.string() << '\n';
        } else if (*check) {
            bool ok = true;
            for (const auto& r : convpow::run_invariant_checks(n)) {
                const char* tag = r.skipped ? "SKIP" : (r.passed ? "PASS" : "FAIL");
                std::cout << tag << "  " << r.name;
                if (!r.detail.empty()) std::cout << "  (" << r.detail << ')';
                std::cout << '\n';
                ok = ok && r.passed;
            }
            return ok ? 0 : kExitFailure;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return 0;
}
