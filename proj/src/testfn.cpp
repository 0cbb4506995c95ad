#include "hardy/testfn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hardy/error.hpp"
#include "hardy/oned.hpp"
#include "hardy/quadrature.hpp"
#include "hardy/weight.hpp"

namespace hardy {

namespace {

constexpr double pi = std::numbers::pi;

QuotientReport make_report(double energy, double mass, double error) {
    if (!(mass > 0.0)) throw DegenerateInputError("test function: zero weighted mass");
    QuotientReport q;
    q.dirichlet_energy = energy;
    q.weighted_mass = mass;
    q.ratio = energy / mass;
    q.quad_error_estimate = error;
    return q;
}

}  // namespace

// ---- phi_alpha ------------------------------------------------------------------

PhiAlphaReport phi_alpha_quotient(const PhiAlphaParams& p) {
    const WeightParams w{p.R, p.N};
    w.validate();
    const double crit = (p.N - 1.0) / p.N;
    if (!(p.alpha > 0.0 && p.alpha < crit)) throw DomainRangeError("phi_alpha: alpha outside (0, (N-1)/N)");
    if (!(p.c > 0.0 && p.c < 1.0)) throw DomainRangeError("phi_alpha: c outside (0, 1)");
    const double omega = sphere_area(p.N);
    const double kappa = p.N * (p.alpha - 1.0) + 1.0;
    const double tc = std::log(2.0 / p.c);

    // |x| <= cR/2 in t = log(R/r): energy alpha^N t^{kappa-1}, mass t^{kappa-1} on [t_c, inf).
    const double tail = quad::power_weighted([](double) { return 1.0; }, kappa - 1.0, tc, 1, 4);
    PhiAlphaReport out;
    out.leading_ratio = std::pow(p.alpha, p.N);
    out.main_energy = omega * out.leading_ratio * tail;
    out.main_mass = omega * tail;

    // Bridge on [cR/2, cR], linear in |x|.
    const double r0 = 0.5 * p.c * p.R, r1 = p.c * p.R;
    const double height = std::pow(tc, p.alpha);
    const double slope = 2.0 * height / (p.c * p.R);
    const double bridge_energy = omega * std::pow(slope, p.N) * (std::pow(r1, p.N) - std::pow(r0, p.N)) / p.N;
    auto f = [&](double r) {
        const double v = height * (2.0 - 2.0 * r / (p.c * p.R));
        return std::pow(v, p.N) * weight_eval(w, r) * std::pow(r, p.N - 1);
    };
    const double bridge_mass = omega * quad::gauss(f, r0, r1, 32, 10);
    const double coarse_mass = omega * quad::gauss(f, r0, r1, 4, 5);

    const double energy = out.main_energy + bridge_energy;
    const double mass = out.main_mass + bridge_mass;
    const double err = energy / mass * std::abs(bridge_mass - coarse_mass) / mass;
    out.q = make_report(energy, mass, err);
    return out;
}

// ---- psi_beta ---------------------------------------------------------------------

QuotientReport psi_beta_quotient(const PsiBetaParams& p) {
    const WeightParams w{p.R, p.N};
    w.validate();
    if (!(p.beta > (p.N - 1.0) / p.N)) throw DomainRangeError("psi_beta: beta must exceed (N-1)/N");
    const double omega = sphere_area(p.N);
    const double kappa = p.N * (p.beta - 1.0) + 1.0;
    auto one = [](double) { return 1.0; };
    // t = log(R/r): t^beta on [0, 1], 1 on [1, inf).
    const double energy = omega * std::pow(p.beta, p.N) * quad::power_weighted(one, kappa - 1.0, 1.0, 1, 4);
    const double mass = omega * (quad::power_weighted(one, kappa - 1.0, 1.0, 1, 4) +
                                 quad::power_weighted(one, -static_cast<double>(p.N), 1.0, 1, 4));
    return make_report(energy, mass, 0.0);
}

double psi_beta_closed_form(double beta, int N) {
    const double kappa = N * (beta - 1.0) + 1.0;
    return std::pow(beta, N) / (1.0 + kappa / (N - 1.0));
}

// ---- half-space family ------------------------------------------------------------

HalfSpaceReport halfspace_quotient(const HalfSpaceFamilyParams& p, const DomainSpec& dom) {
    if (p.l < 1) throw DomainRangeError("halfspace: l must be positive");
    if (!(p.A > 0.0 && p.B > 0.0)) throw DomainRangeError("halfspace: A and B must be positive");
    if (!(p.gamma > 0.5)) throw DomainRangeError("halfspace: gamma must exceed 1/2");
    if (std::abs(dom.R - p.R) > 1e-14 * p.R) throw ConstructionError("halfspace: R does not match the domain");
    const double R = p.R, l = p.l;

    // Support containment: sample the boundary of {x'^2 < (A/l) s, s < B/l}, s = x_2 + R.
    for (int k = 1; k <= 400; ++k) {
        const double s = (p.B / l) * k / 400.0;
        const double half = std::sqrt(p.A * s / l);
        for (double x1 : {-half, 0.0, half}) {
            const double x2 = s - R;
            const double rad = std::hypot(x1, x2);
            if (!(rad < R) || !dom.slice(rad).contains(std::atan2(x2, x1)))
                throw ConstructionError("halfspace: support of u leaves the domain; increase l");
        }
    }

    // Quadrature: z' = sqrt(A z_N) xi, z_N = B x^q with q chosen to flatten the power at 0.
    const double q = 1.0 / (2.0 * p.gamma - 0.5);
    struct Sums {
        double energy = 0.0, hs_mass = 0.0, mass = 0.0;
    };
    auto integrate = [&](int cells, int px, int pxi) {
        const auto& rx = quad::gauss_legendre(px);
        const auto& rxi = quad::gauss_legendre(pxi);
        Sums S;
        for (int c = 0; c < cells; ++c) {
            const double x0 = static_cast<double>(c) / cells, hx = 0.5 / cells;
            for (std::size_t a = 0; a < rx.nodes.size(); ++a) {
                const double x = x0 + hx * (1.0 + rx.nodes[a]);
                const double zN = p.B * std::pow(x, q);
                const double jac_x = hx * rx.weights[a] * p.B * q * std::pow(x, q - 1.0);
                const double P = std::pow(zN, p.gamma) * (1.0 - zN / p.B);
                const double dP =
                    p.gamma * std::pow(zN, p.gamma - 1.0) * (1.0 - zN / p.B) - std::pow(zN, p.gamma) / p.B;
                const double sq = std::sqrt(p.A * zN);
                for (std::size_t b = 0; b < rxi.nodes.size(); ++b) {
                    const double xi = rxi.nodes[b];
                    const double jac = jac_x * rxi.weights[b] * sq;
                    const double v = P * (1.0 - xi * xi);
                    const double v1 = -2.0 * P * xi / sq;
                    const double vN = dP * (1.0 - xi * xi) + P * xi * xi / zN;
                    S.energy += jac * (v1 * v1 + vN * vN);
                    S.hs_mass += jac * v * v / (zN * zN);
                    // Physical point x = z / l - R e_2, with R - |x| computed without cancellation.
                    const double x1 = xi * sq / l, s = zN / l;
                    const double rad = std::hypot(x1, s - R);
                    const double d = (2.0 * R * s - s * s - x1 * x1) / (R + rad);
                    const double lg = -std::log1p(-d / R);
                    S.mass += jac * v * v / (rad * rad * lg * lg * l * l);
                }
            }
        }
        return S;
    };
    const Sums fine = integrate(48, 16, 24);
    const Sums coarse = integrate(24, 8, 12);
    const double energy = fine.energy, mass = fine.mass;
    HalfSpaceReport out;
    const double ratio = energy / mass;
    out.q = make_report(energy, mass, std::abs(ratio - coarse.energy / coarse.mass));
    out.half_space_quotient = energy / fine.hs_mass;
    out.epsilon = out.half_space_quotient - 0.25;
    out.l = p.l;
    out.support_top = p.B / l;
    return out;
}

// ---- cusp family --------------------------------------------------------------------

CuspBoundReport cusp_upper_bound(const CuspFamilyParams& p, const DomainSpec& dom) {
    if (!dom.tip_frame()) throw ConstructionError("cusp_upper_bound: domain is not the calibrated cusp");
    const CuspProfile& prof = *dom.cusp;
    if (!(p.a_prime > prof.a && p.a_prime < pi / 2)) throw DomainRangeError("cusp_upper_bound: a' outside (a, pi/2)");

    CuspBoundReport out;
    out.E_a_prime = Ea_value(p.a_prime, p.M);
    const double level = prof.E_a / out.E_a_prime;

    // delta': first rho where g drops to E(a)/E(a'), capped by r0.
    double lo = 0.0, hi = prof.r0;
    const int scan = 400;
    for (int k = 1; k <= scan; ++k) {
        const double rho = prof.r0 * k / scan;
        if (cusp_g(std::min(rho, 0.999999 * prof.r0), prof.a).value < level) {
            hi = rho;
            break;
        }
        lo = rho;
    }
    if (hi < prof.r0) {
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (lo + hi);
            (cusp_g(mid, prof.a).value >= level ? lo : hi) = mid;
        }
    }
    out.delta_prime = lo;
    out.delta = p.delta > 0.0 ? p.delta : 0.5 * out.delta_prime;
    out.epsilon = p.epsilon > 0.0 ? p.epsilon : std::ldexp(out.delta, -8);
    const double eps = out.epsilon, delta = out.delta;
    if (!(delta < out.delta_prime)) throw ConstructionError("cusp_upper_bound: delta must be below delta'");
    if (!(4.0 * eps < delta)) throw ConstructionError("cusp_upper_bound: need 4 eps < delta");

    // The a'-cone of radius delta must sit inside the domain.
    out.min_g = 1.0;
    for (int k = 1; k <= 400; ++k) {
        const double rho = delta * k / 400.0;
        if (prof.angle_at(rho) > p.a_prime) throw ConstructionError("cusp_upper_bound: a'-cone leaves the domain");
        out.min_g = std::min(out.min_g, cusp_g(rho, prof.a).value);
    }
    out.bound = out.E_a_prime / out.min_g;

    // Angular factor: positive eigenfunction of E(a'), piecewise linear.
    const auto eig = solve_Ea({p.a_prime, p.M});
    const auto& th = eig.theta;
    const auto& ph = eig.phi;
    double phi_sq = 0.0, dphi_sq = 0.0;
    for (std::size_t j = 0; j + 1 < th.size(); ++j) {
        const double h = th[j + 1] - th[j];
        phi_sq += h * (ph[j] * ph[j] + ph[j] * ph[j + 1] + ph[j + 1] * ph[j + 1]) / 3.0;
        dphi_sq += (ph[j + 1] - ph[j]) * (ph[j + 1] - ph[j]) / h;
    }

    // Radial cut-off psi: ramps on (eps, 2 eps) and (delta/2, delta), plateau between.
    auto psi = [&](double r) {
        if (r <= eps || r >= delta) return 0.0;
        if (r < 2.0 * eps) return (r - eps) / eps;
        if (r > 0.5 * delta) return 2.0 * (delta - r) / delta;
        return 1.0;
    };
    std::vector<double> breaks;
    for (int k = 0; k <= 4; ++k) breaks.push_back(eps * (1.0 + 0.25 * k));
    const int plateau_cells = std::max(4, static_cast<int>(std::ceil(std::log(delta / (4.0 * eps)) / std::log(1.25))));
    for (int k = 1; k <= plateau_cells; ++k) breaks.push_back(2.0 * eps * std::pow(delta / (4.0 * eps), static_cast<double>(k) / plateau_cells));
    for (int k = 1; k <= 4; ++k) breaks.push_back(0.5 * delta * (1.0 + 0.25 * k));
    out.radial_energy_factor = (1.0 / (eps * eps)) * 0.5 * (4.0 * eps * eps - eps * eps) +
                               (4.0 / (delta * delta)) * 0.5 * (delta * delta - 0.25 * delta * delta);
    out.psi_log_integral = quad::gauss([&](double r) { return psi(r) * psi(r) / r; }, breaks, 8);
    out.plateau_log = std::log(delta / (4.0 * eps));

    // Mass: int int psi^2 phi^2 rho / R(rho, theta) d theta d rho, with 1/R = 1/(y2^2 * (R/y2^2)).
    const auto& gth = quad::gauss_legendre(3);
    auto angular_mass = [&](double rho) {
        double s = 0.0;
        for (std::size_t j = 0; j + 1 < th.size(); ++j) {
            const double mid = 0.5 * (th[j] + th[j + 1]), half = 0.5 * (th[j + 1] - th[j]);
            for (std::size_t k = 0; k < 3; ++k) {
                const double t = mid + half * gth.nodes[k];
                const double f = ph[j] + (ph[j + 1] - ph[j]) * (t - th[j]) / (th[j + 1] - th[j]);
                const double y2 = rho * std::sin(t);
                s += half * gth.weights[k] * f * f / (y2 * y2 * cusp_R_over_y2sq(rho, t));
            }
        }
        return s;
    };
    const double mass = quad::gauss([&](double r) { const double v = psi(r); return v * v * r * angular_mass(r); }, breaks, 8);
    const double mass_coarse = quad::gauss([&](double r) { const double v = psi(r); return v * v * r * angular_mass(r); }, breaks, 4);
    const double energy = out.radial_energy_factor * phi_sq + out.psi_log_integral * dphi_sq;
    out.q = make_report(energy, mass, energy / mass * std::abs(mass - mass_coarse) / mass);
    return out;
}

}  // namespace hardy
