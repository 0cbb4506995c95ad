#include "hardy/fit.hpp"

#include <cmath>
#include <stdexcept>

namespace hardy {

namespace {

InverseSquareFit solve_linear(std::span<const double> x, std::span<const double> y, double b) {
    // Normal equations for y = C + K u, u = 1/(x+b)^2.
    double n = 0, su = 0, suu = 0, sy = 0, suy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double u = 1.0 / ((x[i] + b) * (x[i] + b));
        n += 1;
        su += u;
        suu += u * u;
        sy += y[i];
        suy += u * y[i];
    }
    const double det = n * suu - su * su;
    InverseSquareFit f;
    f.b = b;
    f.K = (n * suy - su * sy) / det;
    f.C = (sy - f.K * su) / n;
    double ss = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = f.C + f.K / ((x[i] + b) * (x[i] + b)) - y[i];
        ss += r * r;
    }
    f.rms_residual = std::sqrt(ss / n);
    return f;
}

}  // namespace

InverseSquareFit fit_inverse_square(std::span<const double> x, std::span<const double> y, double b_lo, double b_hi) {
    if (x.size() != y.size() || x.size() < 3) throw std::invalid_argument("fit_inverse_square: need >= 3 points");
    for (double xi : x)
        if (xi + b_lo <= 0) throw std::invalid_argument("fit_inverse_square: x + b must stay positive");
    constexpr int scan = 400;
    InverseSquareFit best = solve_linear(x, y, b_lo);
    int best_i = 0;
    for (int i = 1; i <= scan; ++i) {
        const double b = b_lo + (b_hi - b_lo) * i / scan;
        auto f = solve_linear(x, y, b);
        if (f.rms_residual < best.rms_residual) {
            best = f;
            best_i = i;
        }
    }
    double lo = b_lo + (b_hi - b_lo) * std::max(0, best_i - 1) / scan;
    double hi = b_lo + (b_hi - b_lo) * std::min(scan, best_i + 1) / scan;
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int it = 0; it < 80; ++it) {
        const double c = hi - g * (hi - lo), d = lo + g * (hi - lo);
        if (solve_linear(x, y, c).rms_residual < solve_linear(x, y, d).rms_residual)
            hi = d;
        else
            lo = c;
    }
    auto refined = solve_linear(x, y, 0.5 * (lo + hi));
    return refined.rms_residual <= best.rms_residual ? refined : best;
}

}  // namespace hardy
