#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "hardy/error.hpp"
#include "hardy/oned.hpp"
#include "hardy/quadrature.hpp"
#include "hardy/quotient.hpp"

using namespace hardy;
using std::numbers::pi;

namespace {

// Smooth bump in t = log(R/r) centred at c with half-width w, sampled uniformly in t.
RadialFunction log_bump(double c, double w, int n, int N = 2, double R = 1.0) {
    RadialFunction u;
    u.N = N;
    for (int i = n; i >= 0; --i) {
        const double t = c - w + 2.0 * w * i / n;
        const double x = (t - c) / w;
        u.grid.push_back(R * std::exp(-t));
        u.values.push_back(i == 0 || i == n ? 0.0 : std::exp(-1.0 / (1.0 - x * x)));
    }
    return u;
}

RadialFunction tent() {
    RadialFunction u;
    for (int i = 0; i <= 100; ++i) {
        const double r = 0.25 + 0.005 * i;
        u.grid.push_back(r);
        u.values.push_back(1.0 - std::abs(r - 0.5) / 0.25);
    }
    u.values.front() = u.values.back() = 0.0;
    return u;
}

}  // namespace

TEST_CASE("sphere_area") {
    CHECK(sphere_area(2) == doctest::Approx(2 * pi));
    CHECK(sphere_area(3) == doctest::Approx(4 * pi));
}

TEST_CASE("quotient_radial: tent against independent integrals") {
    const auto q = quotient_radial(tent(), {1.0, 2});
    // Energy: slope 4 on [0.25, 0.75]: 2 pi * 16 * (0.75^2 - 0.25^2) / 2.
    CHECK(q.dirichlet_energy == doctest::Approx(8 * pi).epsilon(1e-13));
    // Mass in t = log(1/r): int u(e^{-t})^2 / t^2 dt.
    auto f = [](double t) {
        const double r = std::exp(-t);
        const double u = 1.0 - std::abs(r - 0.5) / 0.25;
        return u * u / (t * t);
    };
    const double mass = 2 * pi * (quad::gauss(f, std::log(2.0), std::log(4.0), 400, 16) +
                                  quad::gauss(f, -std::log(0.75), std::log(2.0), 400, 16));
    CHECK(q.weighted_mass == doctest::Approx(mass).epsilon(1e-8));
    CHECK(q.ratio == doctest::Approx(8 * pi / mass).epsilon(1e-8));
    CHECK(q.quad_error_estimate >= 0.0);
}

TEST_CASE("quotient_radial homogeneity and lower bound") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        RadialFunction u;
        const int n = 20 + trial;
        for (int i = 0; i <= n; ++i) {
            u.grid.push_back(0.01 + 0.98 * i / n);
            u.values.push_back(i == 0 || i == n ? 0.0 : U(rng) - 0.3);
        }
        const auto q = quotient_radial(u, {1.0, 2});
        CHECK(q.ratio + q.quad_error_estimate >= 0.25);
        for (double c : {-3.0, 0.01, 250.0}) {
            auto v = u;
            for (double& x : v.values) x *= c;
            CHECK(quotient_radial(v, {1.0, 2}).ratio == doctest::Approx(q.ratio).epsilon(1e-12));
        }
    }
    for (int N : {3, 4}) {
        auto u = log_bump(1.0, 0.9, 400, N);
        const auto q = quotient_radial(u, {1.0, N});
        CHECK(q.ratio >= std::pow((N - 1.0) / N, N));
    }
}

TEST_CASE("quotient_radial errors") {
    RadialFunction u{{0.2, 0.4, 0.6}, {0.0, 0.0, 0.0}, true, 2};
    CHECK_THROWS_AS(quotient_radial(u, {1.0, 2}), DegenerateInputError);
    RadialFunction v{{0.2, 0.4, 1.0}, {0.0, 1.0, 0.0}, true, 2};
    CHECK_THROWS_AS(quotient_radial(v, {1.0, 2}), DomainRangeError);
    RadialFunction w{{0.2, 0.4, 0.6}, {0.0, 1.0, 1.0}, true, 2};
    CHECK_THROWS_AS(quotient_radial(w, {1.0, 2}), DegenerateInputError);
}

TEST_CASE("hardy_scale keeps the quotient") {
    CHECK(hardy_scale(tent(), 1.0, 1.0).u.grid == tent().grid);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> C(0.6, 2.0), W(0.2, 0.5);
    for (int trial = 0; trial < 10; ++trial) {
        const auto u = log_bump(C(rng), W(rng), 2000);
        const double q = quotient_radial(u, {1.0, 2}).ratio;
        for (double lambda : {0.5, 2.0, 5.0}) {
            const auto s = hardy_scale(u, lambda, 1.0);
            CHECK_FALSE(s.support_warning);
            const double qs = quotient_radial(s.u, {1.0, 2}).ratio;
            CHECK(std::abs(qs - q) / q <= 1e-4);
        }
    }
}

TEST_CASE("hardy_scale support map") {
    const auto u = log_bump(1.0, 0.5, 200);
    const auto s = hardy_scale(u, 2.0, 1.0).u;
    // Support in t moves from [0.5, 1.5] to [0.25, 0.75].
    CHECK(-std::log(s.grid.back()) == doctest::Approx(0.25));
    CHECK(-std::log(s.grid.front()) == doctest::Approx(0.75));
    CHECK(s.values[100] == doctest::Approx(u.values[100] / std::sqrt(2.0)));
    // Extreme contraction toward r = 0 underflows the grid.
    CHECK(hardy_scale(u, 1e-3, 1.0).support_warning);
}

TEST_CASE("log_coordinate_transport matches quotient_radial") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> C(0.5, 3.0), W(0.1, 0.45);
    for (int trial = 0; trial < 20; ++trial) {
        const double c = C(rng), w = std::min(W(rng), c - 0.05);
        const auto u = log_bump(c, w, 4000);
        const auto v = log_coordinate_transport(u, 1.0);
        CHECK(v.t.front() == doctest::Approx(c - w));
        const double q1 = hardy_1d_quotient(v.t, v.v, v.p);
        const double q2 = quotient_radial(u, {1.0, 2}).ratio;
        CHECK(std::abs(q1 - q2) / q2 < 1e-6);
    }
    // Support near r = R corresponds to support near t = 0.
    RadialFunction near{{0.98, 0.99, 0.995}, {0.0, 1.0, 0.0}, true, 2};
    CHECK(log_coordinate_transport(near, 1.0).t.front() < 0.01);
}

TEST_CASE("quotient_polar: radial inputs agree with quotient_radial") {
    const auto u = log_bump(1.0, 0.6, 300);
    std::vector<double> theta;
    for (int j = 0; j < 64; ++j) theta.push_back(2 * pi * j / 64);
    std::vector<double> vals;
    for (double x : u.values)
        for (int j = 0; j < 64; ++j) vals.push_back(x);
    const auto pg = PolarGridFunction::on_domain(u.grid, theta, vals, DomainSpec::ball(), true);
    const auto qp = quotient_polar(pg, {1.0, 2});
    const auto qr = quotient_radial(u, {1.0, 2});
    CHECK(qp.ratio == doctest::Approx(qr.ratio).epsilon(1e-6));
    CHECK(qp.angular_energy == 0.0);
    const auto qs = quotient_polar_serial(pg, {1.0, 2});
    CHECK(qs.ratio == qp.ratio);
    CHECK(qs.weighted_mass == qp.weighted_mass);
}

TEST_CASE("quotient_polar: f(r) sin(theta) on the half-disk") {
    std::vector<double> r, theta, vals, f;
    const int nr = 400, nt = 1601;
    for (int i = 0; i <= nr; ++i) {
        r.push_back(0.2 + 0.6 * i / nr);
        const double x = (r.back() - 0.5) / 0.3;
        f.push_back(i == 0 || i == nr ? 0.0 : 1.0 - x * x);
    }
    for (int j = 0; j < nt; ++j) theta.push_back(pi * j / (nt - 1));
    for (int i = 0; i <= nr; ++i)
        for (int j = 0; j < nt; ++j) vals.push_back(f[i] * std::sin(theta[j]));
    const auto pg = PolarGridFunction::on_domain(r, theta, vals, DomainSpec::half_disk(), false);
    const auto q = quotient_polar(pg, {1.0, 2});
    // Oracle: (pi/2) int (f'^2 r + f^2 / r) dr for f = 1 - ((r - 0.5)/0.3)^2.
    auto fp = [](double s) { return -2.0 * (s - 0.5) / 0.09; };
    auto ff = [](double s) { const double x = (s - 0.5) / 0.3; return 1.0 - x * x; };
    const double er = (pi / 2) * quad::gauss([&](double s) { return fp(s) * fp(s) * s; }, 0.2, 0.8, 16, 10);
    const double ea = (pi / 2) * quad::gauss([&](double s) { return ff(s) * ff(s) / s; }, 0.2, 0.8, 16, 10);
    CHECK(q.radial_energy == doctest::Approx(er).epsilon(1e-4));
    CHECK(q.angular_energy == doctest::Approx(ea).epsilon(1e-4));
    CHECK(q.dirichlet_energy == doctest::Approx(er + ea).epsilon(1e-4));
}
