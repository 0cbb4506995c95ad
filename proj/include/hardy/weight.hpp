#pragma once

// Singular weight of the critical Hardy inequality and the functions describing
// the shifted polar frame about the boundary point (0, 1) of the cusp domain.

namespace hardy {

struct WeightParams {
    double R = 1.0;  // sup of |x| over the domain
    int N = 2;       // space dimension

    void validate() const;
};

/// W_R(|x|) = 1 / (|x|^N log(R/|x|)^N), for 0 < |x| < R.
double weight_eval(const WeightParams& p, double x_norm);

/// |x| log(R/|x|), evaluated with log1p near |x| = R.
double weight_base(double R, double x_norm);

/// (|x| log(R/|x|))^N / (R - |x|)^N - 1, which tends to 0 as |x| -> R.
double boundary_taylor_gap(const WeightParams& p, double x_norm);

/// h(r, theta) = r^2 - 2 r sin(theta) + 1: squared distance of (r cos, 1 - r sin) from the origin.
double cusp_h(double r, double theta);

/// R(y1, y2) / y2^2 with R = h (log h)^2 / 4 and y2 = r sin(theta).
double cusp_R_over_y2sq(double r, double theta);

struct CuspGResult {
    double value;      // g(r)
    double theta_min;  // minimiser in [a, pi - a]
};

/// g(r) = inf over theta in [a, pi - a] of R/y2^2 (2048 samples, golden-section polish).
CuspGResult cusp_g(double r, double a);

/// Largest r0 <= 1/2 on a 1e-3 grid such that g < 1 on every grid point of (0, r0].
double cusp_r0(double a, double step = 1e-3);

}  // namespace hardy
