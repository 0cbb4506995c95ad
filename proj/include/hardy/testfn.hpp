#pragma once

// Explicit test-function families. Each evaluation is an upper bound for the best
// constant of the domain it lives on.

#include <vector>

#include "hardy/domain.hpp"
#include "hardy/quotient.hpp"

namespace hardy {

/// (log R/|x|)^alpha on |x| <= cR/2, linear bridge down to 0 on [cR/2, cR].
struct PhiAlphaParams {
    double alpha = 0.45;  // in (0, (N-1)/N)
    double c = 0.5;       // B_{cR} must lie in the domain
    double R = 1.0;
    int N = 2;
};

struct PhiAlphaReport {
    QuotientReport q;
    double leading_ratio = 0.0;  // alpha^N: ratio of the main terms of energy and mass
    double main_energy = 0.0;    // omega alpha^N t_c^kappa / (-kappa), t_c = log(2/c)
    double main_mass = 0.0;      // omega t_c^kappa / (-kappa)
};

PhiAlphaReport phi_alpha_quotient(const PhiAlphaParams& p);

/// 1 on |x| <= R/e, (log R/|x|)^beta on R/e <= |x| <= R.
struct PsiBetaParams {
    double beta = 0.75;  // > (N-1)/N
    double R = 1.0;
    int N = 2;
};

QuotientReport psi_beta_quotient(const PsiBetaParams& p);

/// beta^N / (1 + kappa/(N-1)), kappa = N(beta - 1) + 1.
double psi_beta_closed_form(double beta, int N);

/// Half-space profile v(z', z_N) = z_N^gamma (1 - z_N/B)_+ (1 - z'^2/(A z_N))_+ moved to the
/// bottom pole -R e_2 of the domain and shrunk by l: u(x) = v(l (x + R e_2)). N = 2.
struct HalfSpaceFamilyParams {
    int l = 4;
    double A = 1.0;
    double B = 1.0;
    double gamma = 0.6;  // > 1/2 for finite weighted mass
    double R = 1.0;
};

struct HalfSpaceReport {
    QuotientReport q;
    double half_space_quotient = 0.0;  // int |grad v|^2 / int (v/z_N)^2
    double epsilon = 0.0;              // half_space_quotient - 1/4
    int l = 0;
    double support_top = 0.0;          // sup of x_2 + R over the support, equals B / l
};

/// Throws ConstructionError when the shrunk support is not inside `dom`.
HalfSpaceReport halfspace_quotient(const HalfSpaceFamilyParams& p, const DomainSpec& dom);

/// psi_eps^delta(rho) phi_{a'}(theta) in the tip frame of the calibrated cusp domain.
struct CuspFamilyParams {
    double a_prime = 0.95;
    double epsilon = 0.0;  // 0 selects delta * 2^{-8}
    double delta = 0.0;    // 0 selects delta' / 2
    int M = 1024;          // angular grid for phi_{a'}
};

struct CuspBoundReport {
    QuotientReport q;
    double bound = 0.0;           // E(a') / min_{[0, delta]} g
    double E_a_prime = 0.0;
    double min_g = 0.0;
    double delta = 0.0;
    double delta_prime = 0.0;     // g(delta') = E(a) / E(a')
    double epsilon = 0.0;
    double radial_energy_factor = 0.0;  // int (psi')^2 rho d rho, equal to 3
    double psi_log_integral = 0.0;      // int psi^2 / rho d rho
    double plateau_log = 0.0;           // log(delta / (4 eps)), a lower bound for the above
};

CuspBoundReport cusp_upper_bound(const CuspFamilyParams& p, const DomainSpec& dom);

}  // namespace hardy
