#pragma once

#include <span>

namespace hardy {

/// Least-squares fit y = C + K / (x + b)^2 over (C, K, b), b restricted to [b_lo, b_hi].
///
/// For fixed b the model is linear in (C, K); b is chosen by a scan followed by
/// golden-section refinement of the residual norm.
struct InverseSquareFit {
    double C = 0.0;
    double K = 0.0;
    double b = 0.0;
    double rms_residual = 0.0;
};

InverseSquareFit fit_inverse_square(std::span<const double> x, std::span<const double> y, double b_lo, double b_hi);

}  // namespace hardy
