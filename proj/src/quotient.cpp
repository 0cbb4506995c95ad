#include "hardy/quotient.hpp"

#include <cmath>
#include <numbers>

#include "hardy/error.hpp"
#include "hardy/quadrature.hpp"

namespace hardy {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

struct CellIntegrals {
    double gauss = 0.0;
    double trapezoid = 0.0;
    double simpson = 0.0;
};

// int_{r0}^{r1} |u|^N W r^{N-1} for u linear from u0 to u1.
CellIntegrals mass_cell(double r0, double r1, double u0, double u1, const WeightParams& p) {
    CellIntegrals c;
    if (u0 == 0.0 && u1 == 0.0) return c;
    const auto& rule = quad::gauss_legendre(10);
    const double mid = 0.5 * (r0 + r1), half = 0.5 * (r1 - r0);
    auto f = [&](double r, double u) { return std::pow(std::abs(u), p.N) * weight_eval(p, r) * std::pow(r, p.N - 1); };
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        const double r = mid + half * rule.nodes[k];
        const double u = u0 + (u1 - u0) * (r - r0) / (r1 - r0);
        c.gauss += rule.weights[k] * f(r, u);
    }
    c.gauss *= half;
    const double f0 = f(r0, u0), f1 = f(r1, u1), fm = f(mid, 0.5 * (u0 + u1));
    c.trapezoid = half * (f0 + f1);
    c.simpson = (r1 - r0) / 6.0 * (f0 + 4.0 * fm + f1);
    return c;
}

QuotientReport finish(double energy, double mass, double quad_gap) {
    if (!(mass > 0.0)) throw DegenerateInputError("quotient: zero weighted mass");
    QuotientReport q;
    q.dirichlet_energy = energy;
    q.weighted_mass = mass;
    q.ratio = energy / mass;
    q.quad_error_estimate = q.ratio * quad_gap / mass;
    return q;
}

// Per-column contributions of a polar grid function.
struct ColumnTerms {
    double radial = 0.0;   // int u_r^2 r dr
    double angular = 0.0;  // int (u_theta)^2 / r dr over the cell [theta_j, theta_{j+1}], times dtheta
    double mass = 0.0;     // int u^2 W r dr
    double gap = 0.0;      // |Simpson - trapezoid| of the mass integrand
};

ColumnTerms column_terms(const PolarGridFunction& u, const WeightParams& p, std::size_t j) {
    ColumnTerms c;
    const std::size_t nr = u.rows(), nt = u.cols();
    const bool has_cell = u.periodic || j + 1 < nt;
    const std::size_t jn = (j + 1) % nt;
    const double dth = has_cell ? (j + 1 < nt ? u.theta[j + 1] - u.theta[j] : u.theta[0] + two_pi - u.theta[j]) : 0.0;
    for (std::size_t i = 0; i + 1 < nr; ++i) {
        const double r0 = u.r[i], r1 = u.r[i + 1];
        const double u0 = u(i, j), u1 = u(i + 1, j);
        const double s = (u1 - u0) / (r1 - r0);
        c.radial += s * s * 0.5 * (r1 * r1 - r0 * r0);
        const auto m = mass_cell(r0, r1, u0, u1, p);
        c.mass += m.gauss;
        c.gap += m.simpson - m.trapezoid;
        if (has_cell) {
            const double d0 = u(i, jn) - u0, d1 = u(i + 1, jn) - u1;
            c.angular += 0.5 * (d0 * d0 / r0 + d1 * d1 / r1) * (r1 - r0) / dth;
        }
    }
    return c;
}

// Trapezoid weight of column j in theta.
double column_weight(const PolarGridFunction& u, std::size_t j) {
    const std::size_t nt = u.cols();
    if (u.periodic) {
        const double prev = j == 0 ? u.theta[0] + two_pi - u.theta[nt - 1] : u.theta[j] - u.theta[j - 1];
        const double next = j + 1 < nt ? u.theta[j + 1] - u.theta[j] : u.theta[0] + two_pi - u.theta[j];
        return 0.5 * (prev + next);
    }
    double w = 0.0;
    if (j > 0) w += 0.5 * (u.theta[j] - u.theta[j - 1]);
    if (j + 1 < nt) w += 0.5 * (u.theta[j + 1] - u.theta[j]);
    return w;
}

QuotientReport combine(const PolarGridFunction& u, const std::vector<ColumnTerms>& cols) {
    double radial = 0.0, angular = 0.0, mass = 0.0, gap = 0.0;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        const double w = column_weight(u, j);
        radial += w * cols[j].radial;
        angular += cols[j].angular;
        mass += w * cols[j].mass;
        gap += w * cols[j].gap;
    }
    auto q = finish(radial + angular, mass, std::abs(gap));
    q.radial_energy = radial;
    q.angular_energy = angular;
    return q;
}

}  // namespace

double sphere_area(int N) {
    if (N < 1) throw DomainRangeError("sphere_area: N must be >= 1");
    return 2.0 * std::pow(std::numbers::pi, 0.5 * N) / std::tgamma(0.5 * N);
}

void RadialFunction::validate(double R) const {
    if (grid.size() != values.size() || grid.size() < 3) throw DegenerateInputError("RadialFunction: need >= 3 samples");
    if (N < 2) throw DomainRangeError("RadialFunction: N must be >= 2");
    if (!(grid.front() > 0.0 && grid.back() < R)) throw DomainRangeError("RadialFunction: grid must lie inside (0, R)");
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        if (!(grid[i + 1] > grid[i])) throw DomainRangeError("RadialFunction: grid must be strictly increasing");
    for (double v : values)
        if (!std::isfinite(v)) throw DegenerateInputError("RadialFunction: non-finite value");
    if (boundary_zero && (values.front() != 0.0 || values.back() != 0.0))
        throw DegenerateInputError("RadialFunction: boundary_zero set but end values are nonzero");
}

QuotientReport quotient_radial(const RadialFunction& u, const WeightParams& p) {
    p.validate();
    u.validate(p.R);
    if (!u.boundary_zero) throw DegenerateInputError("quotient_radial: function must vanish at both grid ends");
    if (u.N != p.N) throw DomainRangeError("quotient_radial: dimension mismatch");
    double energy = 0.0, mass = 0.0, gap = 0.0;
    for (std::size_t i = 0; i + 1 < u.grid.size(); ++i) {
        const double r0 = u.grid[i], r1 = u.grid[i + 1];
        const double s = (u.values[i + 1] - u.values[i]) / (r1 - r0);
        energy += std::pow(std::abs(s), p.N) * (std::pow(r1, p.N) - std::pow(r0, p.N)) / p.N;
        const auto m = mass_cell(r0, r1, u.values[i], u.values[i + 1], p);
        mass += m.gauss;
        gap += m.simpson - m.trapezoid;
    }
    const double omega = sphere_area(p.N);
    return finish(omega * energy, omega * mass, omega * std::abs(gap));
}

PolarGridFunction PolarGridFunction::on_domain(std::vector<double> r, std::vector<double> theta,
                                               std::vector<double> values, const DomainSpec& dom, bool periodic) {
    PolarGridFunction u{std::move(r), std::move(theta), std::move(values), periodic};
    u.validate();
    for (std::size_t i = 0; i < u.rows(); ++i) {
        const ArcSet s = dom.slice(u.r[i]);
        for (std::size_t j = 0; j < u.cols(); ++j)
            if (!s.contains(u.theta[j])) u(i, j) = 0.0;
    }
    return u;
}

void PolarGridFunction::validate() const {
    if (r.size() < 3 || theta.size() < 3) throw DegenerateInputError("PolarGridFunction: need >= 3 nodes per direction");
    if (values.size() != r.size() * theta.size()) throw ContractViolation("PolarGridFunction: value matrix size mismatch");
    if (!(r.front() > 0.0)) throw DomainRangeError("PolarGridFunction: radii must be positive");
    for (std::size_t i = 0; i + 1 < r.size(); ++i)
        if (!(r[i + 1] > r[i])) throw DomainRangeError("PolarGridFunction: r grid must increase strictly");
    for (std::size_t j = 0; j + 1 < theta.size(); ++j)
        if (!(theta[j + 1] > theta[j])) throw DomainRangeError("PolarGridFunction: theta grid must increase strictly");
    if (periodic && !(theta.back() - theta.front() < two_pi))
        throw DomainRangeError("PolarGridFunction: periodic grid must span less than 2 pi");
}

QuotientReport quotient_polar(const PolarGridFunction& u, const WeightParams& p) {
    p.validate();
    u.validate();
    if (p.N != 2) throw DomainRangeError("quotient_polar: N must be 2");
    if (!(u.r.back() < p.R)) throw DomainRangeError("quotient_polar: r grid must lie inside (0, R)");
    std::vector<ColumnTerms> cols(u.cols());
    const long nt = static_cast<long>(u.cols());
#pragma omp parallel for schedule(static)
    for (long j = 0; j < nt; ++j) cols[static_cast<std::size_t>(j)] = column_terms(u, p, static_cast<std::size_t>(j));
    return combine(u, cols);
}

QuotientReport quotient_polar_serial(const PolarGridFunction& u, const WeightParams& p) {
    p.validate();
    u.validate();
    if (p.N != 2) throw DomainRangeError("quotient_polar: N must be 2");
    if (!(u.r.back() < p.R)) throw DomainRangeError("quotient_polar: r grid must lie inside (0, R)");
    std::vector<ColumnTerms> cols(u.cols());
    for (std::size_t j = 0; j < u.cols(); ++j) cols[j] = column_terms(u, p, j);
    return combine(u, cols);
}

ScaledRadialFunction hardy_scale(const RadialFunction& u, double lambda, double R) {
    if (!(lambda > 0.0)) throw DomainRangeError("hardy_scale: lambda must be positive");
    u.validate(R);
    ScaledRadialFunction out;
    out.u = u;
    if (lambda == 1.0) return out;
    const double amp = std::pow(lambda, -(u.N - 1.0) / u.N);
    for (std::size_t i = 0; i < u.grid.size(); ++i) {
        // t' = t / lambda, r' = R exp(-t').
        const double t = -std::log(u.grid[i] / R);
        out.u.grid[i] = R * std::exp(-t / lambda);
        out.u.values[i] = amp * u.values[i];
    }
    bool ok = out.u.grid.front() > 0.0 && out.u.grid.back() < R;
    for (std::size_t i = 0; ok && i + 1 < out.u.grid.size(); ++i) ok = out.u.grid[i + 1] > out.u.grid[i];
    out.support_warning = !ok;
    return out;
}

LogCoordinateFunction log_coordinate_transport(const RadialFunction& u, double R) {
    u.validate(R);
    LogCoordinateFunction out;
    out.p = u.N;
    const std::size_t n = u.grid.size();
    out.t.resize(n);
    out.v.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.t[i] = -std::log(u.grid[n - 1 - i] / R);
        out.v[i] = u.values[n - 1 - i];
    }
    return out;
}

}  // namespace hardy
