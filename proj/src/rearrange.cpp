#include "hardy/rearrange.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "hardy/error.hpp"
#include "hardy/quadrature.hpp"

namespace hardy {

namespace {

constexpr double pi = std::numbers::pi;

// Grid index of theta = pi/2 and the placement order of ranks 0, 1, 2, ...
std::vector<std::size_t> placement_order(const PolarGridFunction& u) {
    const std::size_t n = u.cols();
    const double h = u.periodic ? 2.0 * pi / n : (u.theta.back() - u.theta.front()) / (n - 1);
    for (std::size_t j = 0; j + 1 < n; ++j)
        if (std::abs(u.theta[j + 1] - u.theta[j] - h) > 1e-9 * h)
            throw ContractViolation("rearrange: theta grid must be uniform");
    std::size_t c = 0;
    if (u.periodic) {
        if (n % 4 != 0 || std::abs(u.theta[0]) > 1e-12)
            throw ContractViolation("rearrange: periodic grid must start at 0 with a multiple of 4 points");
        c = n / 4;
    } else {
        if (n % 2 == 0 || std::abs(u.theta[(n - 1) / 2] - pi / 2) > 1e-9)
            throw ContractViolation("rearrange: open grid must be symmetric about pi/2 with an odd point count");
        c = (n - 1) / 2;
    }
    std::vector<std::size_t> order{c};
    for (std::size_t k = 1; order.size() < n; ++k) {
        if (u.periodic) {
            order.push_back((c + k) % n);
            if (order.size() < n) order.push_back((c + n - k) % n);
        } else {
            if (c + k < n) order.push_back(c + k);
            if (k <= c) order.push_back(c - k);
        }
    }
    return order;
}

void rearrange_row(const PolarGridFunction& u, PolarGridFunction& out, std::size_t i,
                   const std::vector<std::size_t>& order) {
    const std::size_t n = u.cols();
    std::vector<double> row(u.values.begin() + static_cast<std::ptrdiff_t>(i * n),
                            u.values.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
    std::sort(row.begin(), row.end(), std::greater<>());
    for (std::size_t k = 0; k < n; ++k) out(i, order[k]) = row[k];
}

void check_nonnegative(const PolarGridFunction& u) {
    u.validate();
    for (double v : u.values)
        if (v < 0.0 || !std::isfinite(v)) throw ContractViolation("rearrange: input must be finite and nonnegative");
}

// int hat_i * f(r) r dr for each node of the r grid (piecewise-linear hats, Gauss per cell).
std::vector<double> hat_integrals(const std::vector<double>& r, const std::function<double(double)>& f) {
    const auto& rule = quad::gauss_legendre(10);
    std::vector<double> c(r.size(), 0.0);
    for (std::size_t i = 0; i + 1 < r.size(); ++i) {
        const double mid = 0.5 * (r[i] + r[i + 1]), half = 0.5 * (r[i + 1] - r[i]);
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
            const double x = mid + half * rule.nodes[k];
            const double s = (x - r[i]) / (r[i + 1] - r[i]);
            const double w = half * rule.weights[k] * f(x) * x;
            c[i] += (1.0 - s) * w;
            c[i + 1] += s * w;
        }
    }
    return c;
}

// Equal weight per column, so that row permutations leave the lumped sums unchanged.
std::vector<double> theta_weights(const PolarGridFunction& u) {
    const std::size_t n = u.cols();
    const double h = u.periodic ? 2.0 * pi / n : (u.theta.back() - u.theta.front()) / (n - 1);
    return std::vector<double>(n, h);
}

}  // namespace

RearrangedDomain rearrange_domain(const DomainSpec& dom, const std::vector<double>& r_grid) {
    RearrangedDomain out;
    out.source = dom;
    for (double r : r_grid) {
        out.r.push_back(r);
        out.half_width.push_back(0.5 * dom.slice(r).measure());
    }
    return out;
}

PolarGridFunction rearrange_function(const PolarGridFunction& u) {
    check_nonnegative(u);
    const auto order = placement_order(u);
    PolarGridFunction out = u;
    const long rows = static_cast<long>(u.rows());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < rows; ++i) rearrange_row(u, out, static_cast<std::size_t>(i), order);
    return out;
}

PolarGridFunction rearrange_function_serial(const PolarGridFunction& u) {
    check_nonnegative(u);
    const auto order = placement_order(u);
    PolarGridFunction out = u;
    for (std::size_t i = 0; i < u.rows(); ++i) rearrange_row(u, out, i, order);
    return out;
}

double lumped_weighted_mass(const PolarGridFunction& u, const WeightParams& p) {
    p.validate();
    u.validate();
    const auto c = hat_integrals(u.r, [&](double r) { return weight_eval(p, r); });
    const auto w = theta_weights(u);
    double total = 0.0;
    for (std::size_t i = 0; i < u.rows(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < u.cols(); ++j) row += w[j] * u(i, j) * u(i, j);
        total += c[i] * row;
    }
    return total;
}

PolyaSzegoReport polya_szego_check(const PolarGridFunction& u, const WeightParams& p) {
    const auto star = rearrange_function(u);
    const auto q = quotient_polar(u, p);
    const auto qs = quotient_polar(star, p);
    PolyaSzegoReport out;
    out.energy = q.dirichlet_energy;
    out.energy_star = qs.dirichlet_energy;
    out.margin = out.energy - out.energy_star;
    out.ratio = q.ratio;
    out.ratio_star = qs.ratio;
    out.lumped_mass = lumped_weighted_mass(u, p);
    out.lumped_mass_star = lumped_weighted_mass(star, p);
    return out;
}

HardyLittlewoodReport hardy_littlewood_check(const PolarGridFunction& u, const PolarGridFunction& v) {
    if (u.r != v.r || u.theta != v.theta || u.periodic != v.periodic)
        throw ContractViolation("hardy_littlewood_check: grid mismatch");
    const auto us = rearrange_function(u);
    const auto vs = rearrange_function(v);
    const auto c = hat_integrals(u.r, [](double) { return 1.0; });
    const auto w = theta_weights(u);
    HardyLittlewoodReport out;
    for (std::size_t i = 0; i < u.rows(); ++i) {
        double a = 0.0, b = 0.0;
        for (std::size_t j = 0; j < u.cols(); ++j) {
            a += w[j] * u(i, j) * v(i, j);
            b += w[j] * us(i, j) * vs(i, j);
        }
        out.lhs += c[i] * a;
        out.rhs += c[i] * b;
    }
    return out;
}

}  // namespace hardy
