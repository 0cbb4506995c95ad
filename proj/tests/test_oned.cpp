#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "hardy/error.hpp"
#include "hardy/oned.hpp"

using namespace hardy;
using std::numbers::pi;

namespace {

// Independent oracle for E(a): uniform theta grid, nodal weight 1/sin^2, dense bisection.
double ea_uniform_theta(double a, int M) {
    const double h = (pi - 2 * a) / M;
    const int n = M - 1;
    std::vector<double> d(n), e(n - 1);
    for (int i = 0; i < n; ++i) {
        const double s = std::sin(a + h * (i + 1));
        d[i] = 2.0 / (h * h) * s * s;
        if (i + 1 < n) {
            const double s2 = std::sin(a + h * (i + 2));
            e[i] = -1.0 / (h * h) * s * s2;
        }
    }
    auto count = [&](double x) {
        int c = 0;
        double q = d[0] - x;
        c += q < 0;
        for (int i = 1; i < n; ++i) {
            q = d[i] - x - e[i - 1] * e[i - 1] / q;
            c += q < 0;
        }
        return c;
    };
    double lo = 0.0, hi = 1e3;
    for (int it = 0; it < 100; ++it) {
        const double mid = 0.5 * (lo + hi);
        (count(mid) >= 1 ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

double ea_uniform_theta_extrapolated(double a) {
    return (4.0 * ea_uniform_theta(a, 8000) - ea_uniform_theta(a, 4000)) / 3.0;
}

}  // namespace

TEST_CASE("hardy_1d_quotient: tent on [1,3]") {
    std::vector<double> t, v;
    for (int i = 0; i <= 200; ++i) {
        t.push_back(1.0 + i / 100.0);
        v.push_back(1.0 - std::abs(t.back() - 2.0));
    }
    v.front() = v.back() = 0.0;
    const double mass = 4.0 + 4.0 * std::log(2.0) - 6.0 * std::log(3.0);
    CHECK(hardy_1d_quotient(t, v, 2) == doctest::Approx(2.0 / mass).epsilon(1e-10));
}

TEST_CASE("hardy_1d_quotient: t^0.9 (1 - t) in closed form") {
    SmoothProfile v{[](double t) { return std::pow(t, 0.9) * (1.0 - t); },
                    [](double t) { return 0.9 * std::pow(t, -0.1) - 1.9 * std::pow(t, 0.9); }};
    const double energy = 0.81 / 0.8 - 2.0 * 0.9 * 1.9 / 1.8 + 3.61 / 2.8;
    const double mass = 1.0 / 0.8 - 2.0 / 1.8 + 1.0 / 2.8;
    const double q = hardy_1d_quotient(v, 1.0, 2);
    CHECK(q == doctest::Approx(energy / mass).epsilon(1e-8));
    CHECK(q >= 0.25);

    // Sampled on a graded grid the piecewise-linear model converges to the same value.
    std::vector<double> t{0.0}, vs{0.0};
    for (int k = 40; k >= 1; --k) {
        t.push_back(std::ldexp(1.0, -k));
        vs.push_back(v.value(t.back()));
    }
    for (int i = 1; i <= 4000; ++i) {
        t.push_back(0.5 + 0.5 * i / 4000.0);
        vs.push_back(v.value(t.back()));
    }
    vs.back() = 0.0;
    CHECK(hardy_1d_quotient(t, vs, 2) == doctest::Approx(q).epsilon(2e-2));
}

TEST_CASE("hardy_1d_quotient input validation") {
    std::vector<double> t{0.0, 1.0, 2.0}, v{0.0, 1.0, 0.5};
    CHECK_THROWS_AS(hardy_1d_quotient(t, v, 2), DegenerateInputError);
    std::vector<double> z{0.0, 0.0, 0.0};
    CHECK_THROWS_AS(hardy_1d_quotient(t, z, 2), DegenerateInputError);
    std::vector<double> bad{0.0, 2.0, 1.0}, w{0.0, 1.0, 0.0};
    CHECK_THROWS_AS(hardy_1d_quotient(bad, w, 2), DomainRangeError);
}

TEST_CASE("power_cutoff_quotient closed form for p = 2") {
    for (double alpha : {0.6, 0.75, 1.0, 1.5}) {
        const double kappa = 2.0 * (alpha - 1.0) + 1.0;
        const double bridge = 3.0 - 4.0 * std::log(2.0);
        const double expected = (alpha * alpha / kappa + 1.0) / (1.0 / kappa + bridge);
        CHECK(power_cutoff_quotient(alpha, 2) == doctest::Approx(expected).epsilon(1e-12));
    }
    CHECK(std::abs(power_cutoff_quotient(0.5 + std::ldexp(1.0, -8), 2) - 0.25) < 0.02);
    CHECK_THROWS_AS(power_cutoff_quotient(0.5, 2), DomainRangeError);
}

TEST_CASE("radial_reduction_constant approaches ((N-1)/N)^N") {
    for (int N : {2, 3, 10}) {
        const double target = std::pow((N - 1.0) / N, N);
        const auto res = radial_reduction_constant(N);
        CHECK(res.infimum >= target);
        CHECK(std::abs(res.infimum - target) < 0.02);
        for (double q : res.quotients) CHECK(q >= target - 1e-12);
    }
    CHECK_THROWS_AS(radial_reduction_constant(1), DomainRangeError);
}

TEST_CASE("E(a) values and the independent uniform-theta oracle") {
    // Frozen values produced by the uniform-theta oracle below.
    CHECK(Ea_value(0.5) == doctest::Approx(1.7794).epsilon(1e-4));
    CHECK(Ea_value(1.0) == doctest::Approx(7.2393).epsilon(1e-4));
    for (double a : {0.5, 0.9, 1.0}) CHECK(Ea_value(a) == doctest::Approx(ea_uniform_theta_extrapolated(a)).epsilon(1e-6));
}

TEST_CASE("E(a) exceeds 1/4 and is non-decreasing") {
    for (double a : {0.1, 0.5, 1.0, 1.4}) CHECK(Ea_value(a) > 0.25 + 1e-3);
    double prev = 0.25;
    for (int i = 1; i <= 20; ++i) {
        const double a = (pi / 2) * i / 21.0;
        const double e = Ea_value(a, 512);
        CHECK(e >= prev);
        prev = e;
    }
}

TEST_CASE("solve_Ea eigenfunction and residual") {
    const auto res = solve_Ea({0.9, 1024});
    CHECK(res.value == doctest::Approx(Ea_value(0.9, 1024)).epsilon(1e-14));
    CHECK(res.residual < 1e-6);
    CHECK(res.theta.front() == doctest::Approx(0.9));
    CHECK(res.theta.back() == doctest::Approx(pi - 0.9));
    for (std::size_t i = 1; i + 1 < res.phi.size(); ++i) CHECK(res.phi[i] > 0.0);
    CHECK(res.phi.front() == 0.0);
    CHECK_THROWS_AS(solve_Ea({0.0, 1024}), DomainRangeError);
    CHECK_THROWS_AS(solve_Ea({0.5, 8}), DomainRangeError);
}

TEST_CASE("invert_Ea round trip") {
    const double target = Ea_value(1.1);
    const double a = invert_Ea(target, 0.9);
    CHECK(a == doctest::Approx(1.1).epsilon(1e-8));
    CHECK(std::abs(Ea_value(a) - target) <= 1e-10);
    CHECK_THROWS_AS(invert_Ea(1.0, 0.9), DomainRangeError);
}

TEST_CASE("E(0+) extrapolates to 1/4") {
    const auto ex = extrapolate_E0();
    CHECK(std::abs(ex.limit - 0.25) < 1e-3);
    CHECK(ex.rms_residual < 1e-3);
}

TEST_CASE("integration-by-parts identity for the sin^2 weight") {
    SmoothProfile s2{[](double t) { return std::sin(t) * std::sin(t); },
                     [](double t) { return 2.0 * std::sin(t) * std::cos(t); }};
    auto r1 = appendix_identity_residual(s2);
    CHECK(std::abs(r1.residual) < 1e-8);
    CHECK(r1.lhs >= 0.0);
    CHECK(r1.rayleigh >= 0.25);
    // Exact: int (u')^2 = pi/2, int u^2/4 sin^2 = pi/8.
    CHECK(r1.lhs == doctest::Approx(pi / 2 - pi / 8).epsilon(1e-10));

    auto bump = [](double t) {
        if (t <= 0.5 || t >= 2.5) return 0.0;
        const double x = (t - 1.5);
        return std::exp(-1.0 / (1.0 - x * x));
    };
    auto dbump = [&](double t) {
        if (t <= 0.5 || t >= 2.5) return 0.0;
        const double x = (t - 1.5);
        return bump(t) * (-2.0 * x / ((1.0 - x * x) * (1.0 - x * x)));
    };
    auto r2 = appendix_identity_residual({bump, dbump});
    CHECK(std::abs(r2.residual) < 1e-8);
    CHECK(r2.rayleigh >= 0.25);
}

TEST_CASE("sin^alpha quotients") {
    for (double alpha : {0.51, 0.6, 0.75, 1.0, 2.0}) {
        // Beta-function reduction: int sin^{2a} / int sin^{2a-2} = (2a - 1)/(2a).
        const double ratio = std::exp(std::lgamma(alpha + 0.5) - std::lgamma(alpha + 1.0) -
                                      std::lgamma(alpha - 0.5) + std::lgamma(alpha));
        const double expected = alpha * alpha * (1.0 - ratio);
        const double q = sin_alpha_quotient(alpha);
        CHECK(q == doctest::Approx(expected).epsilon(1e-9));
        CHECK(q <= alpha * alpha);
        CHECK(q > 0.25);
    }
    double prev = INFINITY;
    for (int k = 1; k <= 8; ++k) {
        const double q = sin_alpha_quotient(0.5 + std::ldexp(1.0, -k));
        CHECK(q < prev);
        prev = q;
    }
    CHECK(std::abs(prev - 0.25) < 3e-3);
    CHECK_THROWS_AS(sin_alpha_quotient(0.5), DomainRangeError);
}

TEST_CASE("arc Poincare constant") {
    CHECK(arc_poincare_constant(pi, 2).eigenvalue == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(arc_poincare_constant(pi / 2, 2).eigenvalue == doctest::Approx(4.0).epsilon(1e-14));
    for (int p : {2, 3, 4}) {
        const double L = 2.0;
        const double l1 = arc_poincare_constant(L, p).eigenvalue;
        const double l2 = arc_poincare_constant(L / 2, p).eigenvalue;
        const double l4 = arc_poincare_constant(L / 4, p).eigenvalue;
        CHECK(l2 == doctest::Approx(std::pow(2.0, p) * l1).epsilon(1e-13));
        CHECK(l4 == doctest::Approx(std::pow(4.0, p) * l1).epsilon(1e-13));
        CHECK(arc_poincare_constant(L, p).bound == doctest::Approx(l1).epsilon(1e-13));
    }
    CHECK_THROWS_AS(arc_poincare_constant(7.0, 2), DomainRangeError);
}
