#pragma once

// Sampled data files and a gnuplot script for f = chi^n and selected
// derivatives.

#include "convpow/kernel.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace convpow {

struct PlotJob {
    int n = 0;
    std::vector<int> orders{0, 1, 2};
    int samples_per_unit = 64;
    std::filesystem::path output_dir = ".";

    void validate() const {
        if (n < 1) throw std::invalid_argument("power must be positive");
        if (samples_per_unit < 2) throw std::invalid_argument("need at least 2 samples per unit");
        if (orders.empty()) throw std::invalid_argument("no derivative orders requested");
        for (int d : orders)
            if (d < 0 || d >= n) throw std::invalid_argument("derivative order out of range");
    }
};

struct PlotFiles {
    std::vector<std::filesystem::path> data;
    std::filesystem::path script;
};

inline std::string format_decimal(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

inline std::string data_file_name(int n, int d) { return "chi" + std::to_string(n) + "_d" + std::to_string(d) + ".dat"; }

inline std::string derivative_label(int d) {
    if (d <= 3) return "f" + std::string(static_cast<std::size_t>(d), '\'');
    return "f^(" + std::to_string(d) + ")";
}

/// Writes n*samples + 1 rows "x value" per order, plus chi<n>.gp.
/// Throws std::runtime_error on I/O failure.
inline PlotFiles write_plot(const PlotJob& job) {
    job.validate();
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(job.output_dir, ec);
    if (ec) throw std::runtime_error("cannot create " + job.output_dir.string() + ": " + ec.message());

    const SplineKernel kern(job.n);
    const long rows = static_cast<long>(job.n) * job.samples_per_unit;
    PlotFiles files;
    for (int d : job.orders) {
        const auto f = kern.to_piecewise(d);
        const fs::path path = job.output_dir / data_file_name(job.n, d);
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write " + path.string());
        for (long k = 0; k <= rows; ++k) {
            const Rational x(k, job.samples_per_unit);
            out << format_decimal(x.to_double()) << ' ' << format_decimal(f(x).to_double()) << '\n';
        }
        if (!out) throw std::runtime_error("write failed: " + path.string());
        files.data.push_back(path);
    }

    files.script = job.output_dir / ("chi" + std::to_string(job.n) + ".gp");
    std::ofstream gp(files.script);
    if (!gp) throw std::runtime_error("cannot write " + files.script.string());
    gp << "# convolution power " << job.n << " of the indicator of [0,1]\n";
    gp << "set title \"chi^" << job.n << "\"\n";
    gp << "set xlabel \"x\"\n";
    gp << "set xrange [0:" << job.n << "]\n";
    gp << "set grid\n";
    gp << "plot ";
    for (std::size_t i = 0; i < job.orders.size(); ++i) {
        const int d = job.orders[i];
        if (i) gp << ", \\\n     ";
        gp << '"' << data_file_name(job.n, d) << "\" using 1:2 with lines title \"" << derivative_label(d) << '"';
    }
    gp << '\n';
    if (!gp) throw std::runtime_error("write failed: " + files.script.string());
    return files;
}

}  // namespace convpow
