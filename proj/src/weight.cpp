#include "hardy/weight.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hardy/error.hpp"

namespace hardy {

void WeightParams::validate() const {
    if (!(R > 0.0) || !std::isfinite(R)) throw DomainRangeError("WeightParams: R must be positive");
    if (N < 2) throw DomainRangeError("WeightParams: N must be >= 2");
}

double weight_base(double R, double x_norm) {
    // log(R/x) = -log1p((x - R)/R) keeps full precision as x -> R.
    return x_norm * -std::log1p((x_norm - R) / R);
}

double weight_eval(const WeightParams& p, double x_norm) {
    p.validate();
    if (!(x_norm > 0.0 && x_norm < p.R))
        throw DomainRangeError("weight_eval: |x| = " + std::to_string(x_norm) + " outside (0, R)");
    return std::pow(weight_base(p.R, x_norm), -p.N);
}

double boundary_taylor_gap(const WeightParams& p, double x_norm) {
    p.validate();
    if (!(x_norm > 0.0 && x_norm < p.R))
        throw DomainRangeError("boundary_taylor_gap: |x| outside (0, R)");
    const double ratio = weight_base(p.R, x_norm) / (p.R - x_norm);
    // ratio^N - 1 via expm1 so tiny gaps survive.
    return std::expm1(p.N * std::log(ratio));
}

double cusp_h(double r, double theta) {
    if (!(r > 0.0 && r < 1.0)) throw DomainRangeError("cusp_h: r outside (0, 1)");
    if (!(theta > 0.0 && theta < std::numbers::pi)) throw DomainRangeError("cusp_h: theta outside (0, pi)");
    return r * r - 2.0 * r * std::sin(theta) + 1.0;
}

double cusp_R_over_y2sq(double r, double theta) {
    const double h = cusp_h(r, theta);
    const double log_h = std::log1p(r * r - 2.0 * r * std::sin(theta));
    const double y2 = r * std::sin(theta);
    return 0.25 * h * log_h * log_h / (y2 * y2);
}

CuspGResult cusp_g(double r, double a) {
    if (!(a > std::numbers::pi / 4 && a < std::numbers::pi / 2))
        throw DomainRangeError("cusp_g: a outside (pi/4, pi/2)");
    const double lo = a, hi = std::numbers::pi - a;
    constexpr int samples = 2048;
    int best = 0;
    double best_val = INFINITY;
    for (int i = 0; i <= samples; ++i) {
        const double th = lo + (hi - lo) * i / samples;
        const double v = cusp_R_over_y2sq(r, th);
        if (!std::isfinite(v)) throw NumericalError("cusp_g: non-finite sample");
        if (v < best_val) {
            best_val = v;
            best = i;
        }
    }
    double x0 = lo + (hi - lo) * std::max(0, best - 1) / samples;
    double x1 = lo + (hi - lo) * std::min(samples, best + 1) / samples;
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = x1 - invphi * (x1 - x0), d = x0 + invphi * (x1 - x0);
    double fc = cusp_R_over_y2sq(r, c), fd = cusp_R_over_y2sq(r, d);
    while (x1 - x0 > 1e-12) {
        if (fc < fd) {
            x1 = d;
            d = c;
            fd = fc;
            c = x1 - invphi * (x1 - x0);
            fc = cusp_R_over_y2sq(r, c);
        } else {
            x0 = c;
            c = d;
            fc = fd;
            d = x0 + invphi * (x1 - x0);
            fd = cusp_R_over_y2sq(r, d);
        }
    }
    const double th = 0.5 * (x0 + x1);
    const double v = cusp_R_over_y2sq(r, th);
    if (v < best_val) return {v, th};
    return {best_val, lo + (hi - lo) * best / samples};
}

double cusp_r0(double a, double step) {
    double r0 = 0.0;
    for (int i = 1;; ++i) {
        const double r = i * step;
        if (r >= 0.5) break;
        if (cusp_g(r, a).value >= 1.0) break;
        r0 = r;
    }
    if (r0 <= 0.0) throw NumericalError("cusp_r0: g >= 1 already at the first grid point");
    return r0;
}

}  // namespace hardy
