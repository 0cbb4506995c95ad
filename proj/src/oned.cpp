#include "hardy/oned.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hardy/error.hpp"
#include "hardy/fit.hpp"
#include "hardy/quadrature.hpp"

namespace hardy {

namespace {

constexpr double pi = std::numbers::pi;

double ipow(double x, int p) { return std::pow(std::abs(x), p); }

// ---- symmetric tridiagonal helpers --------------------------------------

// Number of eigenvalues of the symmetric tridiagonal (d, e) strictly below x.
int sturm_count(std::span<const double> d, std::span<const double> e, double x) {
    int count = 0;
    double q = d[0] - x;
    if (q < 0) ++count;
    for (std::size_t i = 1; i < d.size(); ++i) {
        if (q == 0.0) q = 1e-300;
        q = d[i] - x - e[i - 1] * e[i - 1] / q;
        if (q < 0) ++count;
    }
    return count;
}

double smallest_eigenvalue(std::span<const double> d, std::span<const double> e) {
    double lo = 0.0, hi = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i) {
        double rad = 0.0;
        if (i > 0) rad += std::abs(e[i - 1]);
        if (i + 1 < d.size()) rad += std::abs(e[i]);
        hi = std::max(hi, d[i] + rad);
        lo = std::min(lo, d[i] - rad);
    }
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (sturm_count(d, e, mid) >= 1)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

// Solves (T - shift I) y = rhs by the Thomas algorithm (T - shift I assumed positive definite).
std::vector<double> thomas(std::span<const double> d, std::span<const double> e, double shift,
                           std::span<const double> rhs) {
    const std::size_t n = d.size();
    std::vector<double> c(n), y(rhs.begin(), rhs.end());
    double piv = d[0] - shift;
    c[0] = n > 1 ? e[0] / piv : 0.0;
    y[0] /= piv;
    for (std::size_t i = 1; i < n; ++i) {
        piv = d[i] - shift - e[i - 1] * c[i - 1];
        if (i + 1 < n) c[i] = e[i] / piv;
        y[i] = (y[i] - e[i - 1] * y[i - 1]) / piv;
    }
    for (std::size_t i = n - 1; i-- > 0;) y[i] -= c[i] * y[i + 1];
    return y;
}

struct AngularSystem {
    std::vector<double> z;         // all nodes, including ends
    std::vector<double> stiff_c;   // cosh at cell midpoints / h
    std::vector<double> mass;      // interior lumped masses
    std::vector<double> d, e;      // symmetrically scaled tridiagonal
};

AngularSystem build_angular(double a, int M) {
    if (!(a > 0.0 && a < pi / 2)) throw DomainRangeError("solve_Ea: a must lie in (0, pi/2)");
    if (M < 16) throw DomainRangeError("solve_Ea: grid size M must be >= 16");
    AngularSystem s;
    const double Z = std::log(1.0 / std::tan(0.5 * a));
    const double h = 2.0 * Z / M;
    s.z.resize(M + 1);
    for (int i = 0; i <= M; ++i) s.z[i] = -Z + h * i;
    s.z[M] = Z;
    s.stiff_c.resize(M);
    for (int i = 0; i < M; ++i) s.stiff_c[i] = std::cosh(-Z + h * (i + 0.5)) / h;
    const int n = M - 1;
    s.mass.resize(n);
    s.d.resize(n);
    s.e.resize(n > 0 ? n - 1 : 0);
    for (int i = 0; i < n; ++i) s.mass[i] = h * std::cosh(s.z[i + 1]);
    for (int i = 0; i < n; ++i) s.d[i] = (s.stiff_c[i] + s.stiff_c[i + 1]) / s.mass[i];
    for (int i = 0; i + 1 < n; ++i) s.e[i] = -s.stiff_c[i + 1] / std::sqrt(s.mass[i] * s.mass[i + 1]);
    return s;
}

// Bisection locates the eigenvalue to the conditioning of the scaled matrix; a few
// inverse-iteration steps and the Rayleigh quotient in difference form recover full accuracy.
// Returns the eigenvalue and leaves the mass-scaled eigenvector in y.
double angular_eigenpair(const AngularSystem& s, std::vector<double>& y) {
    const double mu0 = smallest_eigenvalue(s.d, s.e);
    if (!std::isfinite(mu0)) throw NumericalError("solve_Ea: non-finite eigenvalue");
    const std::size_t n = s.d.size();
    y.assign(n, 1.0);
    const double shift = mu0 - 1e-6 * std::abs(mu0);
    for (int it = 0; it < 3; ++it) {
        y = thomas(s.d, s.e, shift, y);
        double nrm = 0.0;
        for (double v : y) nrm += v * v;
        nrm = std::sqrt(nrm);
        if (!(nrm > 0.0) || !std::isfinite(nrm)) throw NumericalError("solve_Ea: inverse iteration failed");
        for (double& v : y) v /= nrm;
    }
    double num = 0.0, den = 0.0, prev = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double phi = y[i] / std::sqrt(s.mass[i]);
        num += s.stiff_c[i] * (phi - prev) * (phi - prev);
        den += s.mass[i] * phi * phi;
        prev = phi;
    }
    num += s.stiff_c[n] * prev * prev;
    const double mu = num / den;
    if (!std::isfinite(mu) || std::abs(mu - mu0) > 1e-6 * std::abs(mu0))
        throw NumericalError("solve_Ea: Rayleigh refinement disagrees with bisection");
    return mu;
}

double angular_eigenvalue(double a, int M) {
    auto s = build_angular(a, M);
    std::vector<double> y;
    return angular_eigenpair(s, y);
}

}  // namespace

// ---- classical 1-D Hardy quotient ------------------------------------------

double hardy_1d_quotient(std::span<const double> t, std::span<const double> v, int p) {
    if (t.size() != v.size() || t.size() < 3) throw DegenerateInputError("hardy_1d_quotient: need >= 3 samples");
    if (p < 2) throw DomainRangeError("hardy_1d_quotient: p must be >= 2");
    if (t[0] < 0.0) throw DomainRangeError("hardy_1d_quotient: t must be nonnegative");
    if (v.front() != 0.0 || v.back() != 0.0) throw DegenerateInputError("hardy_1d_quotient: v must vanish at both ends");
    const auto& rule = quad::gauss_legendre(10);
    double energy = 0.0, mass = 0.0;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        const double dt = t[i + 1] - t[i];
        if (!(dt > 0.0)) throw DomainRangeError("hardy_1d_quotient: t must be strictly increasing");
        const double slope = (v[i + 1] - v[i]) / dt;
        energy += ipow(slope, p) * dt;
        const double mid = 0.5 * (t[i] + t[i + 1]), half = 0.5 * dt;
        double cell = 0.0;
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
            const double x = mid + half * rule.nodes[k];
            const double val = v[i] + slope * (x - t[i]);
            cell += rule.weights[k] * ipow(val / x, p);
        }
        mass += half * cell;
    }
    if (!(mass > 0.0)) throw DegenerateInputError("hardy_1d_quotient: zero weighted mass");
    return energy / mass;
}

double hardy_1d_quotient(const SmoothProfile& v, double T, int p) {
    if (!(T > 0.0)) throw DomainRangeError("hardy_1d_quotient: T must be positive");
    // Geometric cells toward 0 resolve power-law behaviour there.
    std::vector<double> breaks;
    for (int k = 60; k >= 1; --k) breaks.push_back(T * std::ldexp(1.0, -k));
    for (int i = 1; i <= 64; ++i) breaks.push_back(T * (0.5 + 0.5 * i / 64.0));
    auto energy = quad::gauss([&](double x) { return ipow(v.derivative(x), p); }, breaks, 20);
    auto mass = quad::gauss([&](double x) { return ipow(v.value(x) / x, p); }, breaks, 20);
    if (!(mass > 0.0)) throw DegenerateInputError("hardy_1d_quotient: zero weighted mass");
    return energy / mass;
}

double power_cutoff_quotient(double alpha, int p) {
    const double kappa = p * (alpha - 1.0) + 1.0;
    if (!(kappa > 0.0)) throw DomainRangeError("power_cutoff_quotient: alpha must exceed (p-1)/p");
    auto one = [](double) { return 1.0; };
    const double e0 = std::pow(alpha, p) * quad::power_weighted(one, kappa - 1.0, 1.0, 1, 4);
    const double m0 = quad::power_weighted(one, kappa - 1.0, 1.0, 1, 4);
    const double m1 = quad::gauss([p](double x) { return ipow((2.0 - x) / x, p); }, 1.0, 2.0, 16, 10);
    return (e0 + 1.0) / (m0 + m1);
}

RadialReductionResult radial_reduction_constant(int N, std::span<const int> ks) {
    if (N < 2) throw DomainRangeError("radial_reduction_constant: N must be >= 2");
    if (ks.empty()) throw DegenerateInputError("radial_reduction_constant: empty schedule");
    RadialReductionResult out{INFINITY, 0.0, {}, {}};
    const double base = (N - 1.0) / N;
    for (int k : ks) {
        const double alpha = base + std::ldexp(1.0, -k);
        const double q = power_cutoff_quotient(alpha, N);
        out.alphas.push_back(alpha);
        out.quotients.push_back(q);
        if (q < out.infimum) {
            out.infimum = q;
            out.best_alpha = alpha;
        }
    }
    return out;
}

RadialReductionResult radial_reduction_constant(int N) {
    std::vector<int> ks;
    for (int k = 3; k <= 24; ++k) ks.push_back(k);
    return radial_reduction_constant(N, ks);
}

// ---- E(a) --------------------------------------------------------------------

AngularEigenResult solve_Ea(const AngularEigenProblem& prob) {
    AngularEigenResult out;
    out.coarse = angular_eigenvalue(prob.a, prob.M);
    auto s = build_angular(prob.a, 2 * prob.M);
    std::vector<double> y;
    out.fine = angular_eigenpair(s, y);
    out.value = (4.0 * out.fine - out.coarse) / 3.0;
    out.grid_size = 2 * prob.M;

    const std::size_t n = s.d.size();
    std::vector<double> phi(n);
    for (std::size_t i = 0; i < n; ++i) phi[i] = y[i] / std::sqrt(s.mass[i]);
    double peak = 0.0;
    for (double v : phi)
        if (std::abs(v) > std::abs(peak)) peak = v;
    for (double& v : phi) v /= peak;

    // Residual of the unscaled generalized problem K phi = mu M phi.
    double rr = 0.0, mm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double kv = (s.stiff_c[i] + s.stiff_c[i + 1]) * phi[i];
        if (i > 0) kv -= s.stiff_c[i] * phi[i - 1];
        if (i + 1 < n) kv -= s.stiff_c[i + 1] * phi[i + 1];
        const double mv = s.mass[i] * phi[i];
        rr += (kv - out.fine * mv) * (kv - out.fine * mv);
        mm += mv * mv;
    }
    out.residual = std::sqrt(rr / mm);

    out.theta.resize(s.z.size());
    for (std::size_t i = 0; i < s.z.size(); ++i) out.theta[i] = 2.0 * std::atan(std::exp(s.z[i]));
    out.theta.front() = prob.a;
    out.theta.back() = pi - prob.a;
    out.phi.assign(s.z.size(), 0.0);
    std::copy(phi.begin(), phi.end(), out.phi.begin() + 1);
    return out;
}

double Ea_value(double a, int M) {
    const double coarse = angular_eigenvalue(a, M);
    const double fine = angular_eigenvalue(a, 2 * M);
    return (4.0 * fine - coarse) / 3.0;
}

double invert_Ea(double target, double a_lo, int M, double tol) {
    const double e_lo = Ea_value(a_lo, M);
    if (target < e_lo - tol) throw DomainRangeError("invert_Ea: target below E(a_lo)");
    if (std::abs(target - e_lo) <= tol) return a_lo;
    double lo = a_lo, hi = a_lo, f_lo = std::log(e_lo / target), f_hi = 0.0;
    for (int j = 1;; ++j) {
        hi = a_lo + (pi / 2 - a_lo) * (1.0 - std::ldexp(1.0, -j));
        f_hi = std::log(Ea_value(hi, M) / target);
        if (f_hi >= 0.0) break;
        lo = hi;
        f_lo = f_hi;
        if (j > 50) throw NumericalError("invert_Ea: could not bracket the target");
    }
    // Illinois regula falsi on log E.
    int side = 0;
    for (int it = 0; it < 200; ++it) {
        const double a = (lo * f_hi - hi * f_lo) / (f_hi - f_lo);
        const double e = Ea_value(a, M);
        if (std::abs(e - target) <= tol || hi - lo < 1e-15) return a;
        const double f = std::log(e / target);
        if (f > 0) {
            hi = a;
            f_hi = f;
            if (side == 1) f_lo *= 0.5;
            side = 1;
        } else {
            lo = a;
            f_lo = f;
            if (side == -1) f_hi *= 0.5;
            side = -1;
        }
    }
    throw NumericalError("invert_Ea: no convergence");
}

EZeroExtrapolation extrapolate_E0(std::span<const int> ks, int M) {
    if (ks.size() < 3) throw DegenerateInputError("extrapolate_E0: need >= 3 points");
    EZeroExtrapolation out;
    std::vector<double> Z;
    for (int k : ks) {
        const double a = std::ldexp(1.0, -k);
        out.a_values.push_back(a);
        out.E_values.push_back(Ea_value(a, M));
        Z.push_back(std::log(1.0 / std::tan(0.5 * a)));
    }
    const double zmin = *std::min_element(Z.begin(), Z.end());
    auto fit = fit_inverse_square(Z, out.E_values, -0.5 * zmin, 20.0);
    out.limit = fit.C;
    out.K = fit.K;
    out.b = fit.b;
    out.rms_residual = fit.rms_residual;
    return out;
}

EZeroExtrapolation extrapolate_E0() {
    static const int ks[] = {10, 14, 18, 24, 32, 44, 60};
    return extrapolate_E0(ks);
}

// ---- (0, pi) identities ------------------------------------------------------

AppendixIdentity appendix_identity_residual(const SmoothProfile& u) {
    if (std::abs(u.value(0.0)) > 1e-12 || std::abs(u.value(pi)) > 1e-12)
        throw DegenerateInputError("appendix_identity_residual: u must vanish at 0 and pi");
    AppendixIdentity out;
    auto lhs_integrand = [&](double th) {
        const double s = std::sin(th), up = u.derivative(th), uv = u.value(th);
        return up * up - 0.25 * uv * uv / (s * s);
    };
    auto rhs_integrand = [&](double th) {
        const double s = std::sin(th), c = std::cos(th), uv = u.value(th), up = u.derivative(th);
        const double vp = up / std::sqrt(s) - 0.5 * uv * c / (s * std::sqrt(s));
        return 0.25 * uv * uv + vp * vp * s;
    };
    out.lhs = quad::gauss(lhs_integrand, 0.0, pi, 64, 20);
    out.rhs = quad::gauss(rhs_integrand, 0.0, pi, 97, 16);
    out.residual = out.lhs - out.rhs;
    const double energy = quad::gauss([&](double th) { return std::pow(u.derivative(th), 2); }, 0.0, pi, 64, 20);
    const double mass = quad::gauss(
        [&](double th) { return std::pow(u.value(th) / std::sin(th), 2); }, 0.0, pi, 64, 20);
    out.rayleigh = energy / mass;
    return out;
}

double sin_alpha_quotient(double alpha) {
    if (!(alpha > 0.5)) throw DomainRangeError("sin_alpha_quotient: alpha must exceed 1/2");
    // int_0^pi sin^m = 2 int_0^{pi/2} theta^m (sin theta / theta)^m. The power weight is
    // integrated exactly on [0, eps]; beyond eps, Gauss on cells graded toward eps.
    auto half_integral = [](double m) {
        constexpr double eps = 1e-3;
        auto ratio = [m](double th) { return th > 0 ? std::pow(std::sin(th) / th, m) : 1.0; };
        const double inner = quad::power_weighted(ratio, m, eps, 16, 10);
        std::vector<double> breaks{eps};
        while (breaks.back() * 2.0 < pi / 2) breaks.push_back(breaks.back() * 2.0);
        for (int i = 1; i <= 16; ++i) breaks.push_back(breaks.back() + (pi / 2 - breaks.back()) / (17 - i));
        const double outer = quad::gauss([&](double th) { return std::pow(th, m) * ratio(th); }, breaks, 20);
        return 2.0 * (inner + outer);
    };
    const double m = 2.0 * alpha - 2.0;
    const double i_m = half_integral(m);        // int sin^{2a-2}  (denominator)
    const double i_m2 = half_integral(m + 2.0); // int sin^{2a}
    // (u')^2 = a^2 sin^{2a-2} cos^2 = a^2 (sin^{2a-2} - sin^{2a}).
    return alpha * alpha * (i_m - i_m2) / i_m;
}

ArcPoincare arc_poincare_constant(double arc_length, int p) {
    if (!(arc_length > 0.0 && arc_length < 2 * pi)) throw DomainRangeError("arc_poincare_constant: L outside (0, 2pi)");
    if (p < 2) throw DomainRangeError("arc_poincare_constant: p must be >= 2");
    const double pi_p = 2.0 * pi * std::pow(p - 1.0, 1.0 / p) / (p * std::sin(pi / p));
    const double lambda = (p - 1.0) * std::pow(pi_p / arc_length, p);
    const double C = lambda * std::pow(arc_length, p);
    return {lambda, C, C * std::pow(arc_length, -p)};
}

}  // namespace hardy
