#pragma once

// One-dimensional spectral problems behind the critical Hardy constant: the
// classical Hardy quotient on the half-line, the angular eigenvalue E(a) on
// (a, pi - a), the v = u / sqrt(sin) identity, and the radial reduction that
// turns the N-dimensional radial quotient into a 1-D Hardy quotient in t = log(R/r).

#include <functional>
#include <span>
#include <vector>

namespace hardy {

/// A smooth function given together with its derivative.
struct SmoothProfile {
    std::function<double(double)> value;
    std::function<double(double)> derivative;
};

// ---- classical 1-D Hardy quotient ------------------------------------------

/// int |v'|^p / int |v|^p / t^p for the piecewise-linear interpolant of (t, v).
/// Requires t strictly increasing with t[0] >= 0 and v = 0 at both ends.
double hardy_1d_quotient(std::span<const double> t, std::span<const double> v, int p);

/// Same quotient for a smooth profile supported in [0, T], via composite Gauss
/// on a grid graded geometrically toward t = 0.
double hardy_1d_quotient(const SmoothProfile& v, double T, int p);

/// Quotient of v(t) = t^alpha on [0,1], (2 - t) on [1,2], 0 beyond. Requires alpha > (p-1)/p.
/// The [0,1] part is integrated in closed form (power-weighted rule), the bridge by Gauss.
double power_cutoff_quotient(double alpha, int p);

struct RadialReductionResult {
    double infimum;                 // min over the schedule
    double best_alpha;
    std::vector<double> alphas;
    std::vector<double> quotients;
};

/// Minimises the 1-D Hardy quotient with p = N over alpha = (N-1)/N + 2^{-k}, k in `ks`.
RadialReductionResult radial_reduction_constant(int N, std::span<const int> ks);
RadialReductionResult radial_reduction_constant(int N);

// ---- angular eigenvalue E(a) -----------------------------------------------

struct AngularEigenProblem {
    double a = 0.5;  // half-opening defect: interval (a, pi - a)
    int M = 2048;    // coarse grid intervals; the fine grid uses 2M
};

struct AngularEigenResult {
    double value = 0.0;          // Richardson-extrapolated eigenvalue
    double coarse = 0.0;         // eigenvalue on M intervals
    double fine = 0.0;           // eigenvalue on 2M intervals
    std::vector<double> theta;   // fine-grid nodes including both ends
    std::vector<double> phi;     // positive eigenfunction, max-normalised, zero at both ends
    double residual = 0.0;       // ||K phi - mu M phi|| / ||M phi|| on the fine grid
    int grid_size = 0;
};

/// Smallest mu with -phi'' = mu phi / sin^2 on (a, pi - a), Dirichlet at both ends.
///
/// Discretised on a uniform grid in z = log tan(theta/2), where the quotient reads
/// int phi_z^2 cosh z / int phi^2 cosh z; the generalized tridiagonal problem is
/// solved by Sturm bisection and the eigenvector by inverse iteration.
AngularEigenResult solve_Ea(const AngularEigenProblem& prob);

/// Eigenvalue only.
double Ea_value(double a, int M = 2048);

/// a in (a_lo, pi/2) with E(a) = target, for target >= E(a_lo). Tolerance in E-value.
double invert_Ea(double target, double a_lo, int M = 2048, double tol = 1e-10);

struct EZeroExtrapolation {
    double limit = 0.0;    // extrapolated E(0+)
    double K = 0.0;
    double b = 0.0;
    double rms_residual = 0.0;
    std::vector<double> a_values;
    std::vector<double> E_values;
};

/// E(0+) from E(2^{-k}) fitted to C + K/(Z + b)^2 with Z = log cot(a/2).
EZeroExtrapolation extrapolate_E0(std::span<const int> ks, int M = 2048);
EZeroExtrapolation extrapolate_E0();

// ---- identities and explicit tests on (0, pi) ------------------------------

struct AppendixIdentity {
    double lhs = 0.0;       // int (u')^2 - u^2 / (4 sin^2)
    double rhs = 0.0;       // int u^2/4 + int (v')^2 sin,  v = u / sqrt(sin)
    double residual = 0.0;  // lhs - rhs
    double rayleigh = 0.0;  // int (u')^2 / int u^2/sin^2
};

/// Both sides of the v = u / sqrt(sin) identity by independent composite Gauss rules.
/// u must vanish at 0 and pi.
AppendixIdentity appendix_identity_residual(const SmoothProfile& u);

/// int (u_a')^2 / int u_a^2 / sin^2 for u_a = sin^alpha, alpha > 1/2.
double sin_alpha_quotient(double alpha);

struct ArcPoincare {
    double eigenvalue;  // first Dirichlet eigenvalue of the p-Laplacian on an arc of length L
    double constant;    // C with eigenvalue >= C L^{-p}
    double bound;       // C L^{-p}
};

/// First Dirichlet eigenvalue of -Delta_p on an arc of length L (n = 1), closed form
/// lambda = (p-1) (pi_p / L)^p with pi_p = 2 pi (p-1)^{1/p} / (p sin(pi/p)).
ArcPoincare arc_poincare_constant(double arc_length, int p);

}  // namespace hardy
