#pragma once

#include <vector>

#include "hardy/domain.hpp"
#include "hardy/weight.hpp"

namespace hardy {

/// Radial function u(|x|), piecewise linear between samples.
struct RadialFunction {
    std::vector<double> grid;    // strictly increasing, inside (0, R)
    std::vector<double> values;
    bool boundary_zero = true;   // values vanish at both grid ends
    int N = 2;

    void validate(double R) const;
};

/// Scalar field on a tensor (r, theta) grid, stored row-major by radius:
/// value(i, j) = values[i * theta.size() + j]. Columns in theta are periodic when the
/// grid covers the full circle ([0, 2 pi) with the wrap cell implied).
struct PolarGridFunction {
    std::vector<double> r;
    std::vector<double> theta;
    std::vector<double> values;
    bool periodic = false;

    /// Builds the function and zeroes every sample outside the domain slices.
    static PolarGridFunction on_domain(std::vector<double> r, std::vector<double> theta, std::vector<double> values,
                                       const DomainSpec& dom, bool periodic);

    double operator()(std::size_t i, std::size_t j) const { return values[i * theta.size() + j]; }
    double& operator()(std::size_t i, std::size_t j) { return values[i * theta.size() + j]; }
    std::size_t rows() const { return r.size(); }
    std::size_t cols() const { return theta.size(); }

    void validate() const;
};

struct QuotientReport {
    double dirichlet_energy = 0.0;
    double weighted_mass = 0.0;
    double ratio = 0.0;
    double quad_error_estimate = 0.0;  // ratio * |Simpson - trapezoid| / mass on the mass integrand
    double radial_energy = 0.0;        // polar inputs only
    double angular_energy = 0.0;       // polar inputs only
};

/// Surface measure of the unit sphere in R^N.
double sphere_area(int N);

/// omega int |u'|^N r^{N-1} over omega int |u|^N W_R r^{N-1}. Energy exact per cell,
/// mass by 10-point Gauss per cell.
QuotientReport quotient_radial(const RadialFunction& u, const WeightParams& p);

/// int int (u_r^2 + u_theta^2 / r^2) r over int int u^2 W_R r for N = 2.
/// Columns are processed in parallel; the reduction order is fixed.
QuotientReport quotient_polar(const PolarGridFunction& u, const WeightParams& p);
/// Single-threaded reference with identical arithmetic.
QuotientReport quotient_polar_serial(const PolarGridFunction& u, const WeightParams& p);

struct ScaledRadialFunction {
    RadialFunction u;
    bool support_warning = false;  // some transformed node left (0, R) numerically
};

/// u_lambda(r) = lambda^{-(N-1)/N} u(R (r/R)^{1/lambda}); in t = log(R/r) this is
/// t -> lambda^{-(N-1)/N} u(lambda t). Grid nodes are mapped exactly.
ScaledRadialFunction hardy_scale(const RadialFunction& u, double lambda, double R);

/// Samples in t = log(R/r), increasing in t.
struct LogCoordinateFunction {
    std::vector<double> t;
    std::vector<double> v;
    int p = 2;
};

/// v(t) = u(R e^{-t}); its 1-D Hardy quotient with p = N matches quotient_radial.
LogCoordinateFunction log_coordinate_transport(const RadialFunction& u, double R);

}  // namespace hardy
