#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hardy/error.hpp"
#include "hardy/oned.hpp"
#include "hardy/testfn.hpp"

using namespace hardy;
using std::numbers::pi;

namespace {
const DomainSpec& cusp09() {
    static const DomainSpec dom = DomainSpec::cusp_domain(CuspProfile::calibrated(0.9));
    return dom;
}
}  // namespace

TEST_CASE("phi_alpha sequence decreases toward ((N-1)/N)^N") {
    for (int N : {2, 3}) {
        const double target = std::pow((N - 1.0) / N, N);
        double prev = INFINITY;
        for (int k = 3; k <= 10; ++k) {
            const auto r = phi_alpha_quotient({(N - 1.0) / N - std::ldexp(1.0, -k), 0.5, 1.0, N});
            CHECK(r.q.ratio < prev + 1e-3);
            CHECK(r.q.ratio >= target);
            prev = r.q.ratio;
        }
        CHECK(std::abs(prev - target) < 0.02);
    }
}

TEST_CASE("phi_alpha main terms") {
    const PhiAlphaParams p{0.4, 0.5, 1.0, 2};
    const auto r = phi_alpha_quotient(p);
    CHECK(r.main_energy / r.main_mass == doctest::Approx(0.16).epsilon(1e-14));
    CHECK(r.leading_ratio == doctest::Approx(0.16).epsilon(1e-15));
    // Closed form: omega t_c^kappa / (-kappa), t_c = log 4, kappa = 2 (0.4 - 1) + 1 = -0.2.
    CHECK(r.main_mass == doctest::Approx(2 * pi * std::pow(std::log(4.0), -0.2) / 0.2).epsilon(1e-12));
    // Bridge energy: slope 4 (log 4)^0.4 on [1/4, 1/2], 2 pi slope^2 (1/4 - 1/16) / 2.
    const double slope = 4.0 * std::pow(std::log(4.0), 0.4);
    CHECK(r.q.dirichlet_energy - r.main_energy == doctest::Approx(pi * slope * slope * 0.1875).epsilon(1e-12));
    CHECK_THROWS_AS(phi_alpha_quotient({0.5, 0.5, 1.0, 2}), DomainRangeError);
    CHECK_THROWS_AS(phi_alpha_quotient({0.4, 1.5, 1.0, 2}), DomainRangeError);
}

TEST_CASE("psi_beta matches its closed form and decreases") {
    for (int N : {2, 3, 4}) {
        const double crit = (N - 1.0) / N;
        double prev = INFINITY;
        for (int k = 3; k <= 10; ++k) {
            const double beta = crit + std::ldexp(1.0, -k);
            const double q = psi_beta_quotient({beta, 1.0, N}).ratio;
            CHECK(q == doctest::Approx(psi_beta_closed_form(beta, N)).epsilon(1e-10));
            CHECK(q < prev + 1e-3);
            CHECK(q >= std::pow(crit, N));
            prev = q;
        }
        CHECK(std::abs(prev - std::pow(crit, N)) < 0.02);
    }
    // beta = 1, N = 2 in t = log(1/r): energy 2 pi int_0^1 dt, mass 2 pi (1 + 1).
    const auto q1 = psi_beta_quotient({1.0, 1.0, 2});
    CHECK(q1.dirichlet_energy == doctest::Approx(2 * pi).epsilon(1e-10));
    CHECK(q1.weighted_mass == doctest::Approx(4 * pi).epsilon(1e-10));
    CHECK(q1.ratio == doctest::Approx(0.5).epsilon(1e-10));
    CHECK_THROWS_AS(psi_beta_quotient({0.5, 1.0, 2}), DomainRangeError);
}

TEST_CASE("half-space family on the unit disk") {
    const auto ball = DomainSpec::ball();
    double prev_ratio = 0.0, hq = 0.0;
    for (int l : {4, 16, 64}) {
        const auto r = halfspace_quotient({l}, ball);
        CHECK(r.q.ratio <= 0.25 + r.epsilon + 0.05);
        CHECK(r.q.ratio >= 0.25);
        CHECK(r.support_top == doctest::Approx(1.0 / l));
        CHECK(r.q.ratio > prev_ratio);
        if (hq != 0.0) CHECK(r.half_space_quotient == doctest::Approx(hq).epsilon(1e-12));
        hq = r.half_space_quotient;
        prev_ratio = r.q.ratio;
    }
    CHECK(std::abs(prev_ratio - hq) / hq < 0.01);
    CHECK(hq >= 0.25);
    CHECK_THROWS_AS(halfspace_quotient({1}, ball), ConstructionError);
    CHECK_THROWS_AS(halfspace_quotient({8}, DomainSpec::half_disk()), ConstructionError);
}

TEST_CASE("cusp family: energy identity and log divergence") {
    const auto r = cusp_upper_bound({0.95, 0.0, 0.0, 1024}, cusp09());
    CHECK(r.radial_energy_factor == doctest::Approx(3.0).epsilon(1e-14));
    // Ramps contribute (log 2 - 1/2) and 4 (log 2 - 5/8) on top of the plateau log(delta / 4 eps).
    const double ramps = (std::log(2.0) - 0.5) + 4.0 * (std::log(2.0) - 0.625);
    CHECK(r.psi_log_integral == doctest::Approx(r.plateau_log + ramps).epsilon(1e-12));
    CHECK(r.psi_log_integral >= r.plateau_log);
    CHECK(r.delta == doctest::Approx(0.5 * r.delta_prime));
    CHECK(cusp_g(r.delta_prime, 0.9).value == doctest::Approx(cusp09().cusp->E_a / r.E_a_prime).epsilon(1e-9));
    double prev = 0.0;
    for (int k : {8, 12, 16}) {
        const auto s = cusp_upper_bound({0.95, std::ldexp(r.delta, -k), 0.0, 1024}, cusp09());
        CHECK(s.plateau_log > prev);
        prev = s.plateau_log;
    }
}

TEST_CASE("cusp family: quotient against the certified bound") {
    const auto r = cusp_upper_bound({0.95, 0.0, 0.0, 1024}, cusp09());
    CHECK(r.epsilon == doctest::Approx(std::ldexp(r.delta, -8)));
    CHECK(std::abs(r.q.ratio - r.bound) / r.bound <= 0.05);
    CHECK(r.bound > cusp09().cusp->E_a);
    CHECK(r.q.ratio >= 0.25);
}

TEST_CASE("cusp family construction errors") {
    CHECK_THROWS_AS(cusp_upper_bound({0.95, 0.0, 0.0, 512}, DomainSpec::ball()), ConstructionError);
    CHECK_THROWS_AS(cusp_upper_bound({0.85, 0.0, 0.0, 512}, cusp09()), DomainRangeError);
    CHECK_THROWS_AS(cusp_upper_bound({0.95, 0.0, 0.3, 512}, cusp09()), ConstructionError);
    CHECK_THROWS_AS(cusp_upper_bound({0.95, 0.01, 0.03, 512}, cusp09()), ConstructionError);
}
