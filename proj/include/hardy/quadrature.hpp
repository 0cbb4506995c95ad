#pragma once

#include <functional>
#include <span>
#include <vector>

namespace hardy::quad {

struct GaussRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

/// Gauss-Legendre rule with n points (Newton iteration on P_n). Cached per n.
const GaussRule& gauss_legendre(int n);

/// Composite Gauss-Legendre over the cells of `breaks`.
double gauss(const std::function<double(double)>& f, std::span<const double> breaks, int points = 10);

/// Composite Gauss-Legendre on [lo, hi] with `cells` equal cells.
double gauss(const std::function<double(double)>& f, double lo, double hi, int cells, int points = 10);

/// Integral of f(t) * t^gamma over [0, T] (gamma > -1) or [T, inf) (gamma < -1).
///
/// Substitutes t = T x^{1/(gamma+1)}, which maps the power weight to a constant, so
/// f only needs to be smooth in x. The integral is exact for constant f.
double power_weighted(const std::function<double(double)>& f, double gamma, double T, int cells = 64,
                      int points = 10);

/// Composite Simpson on a uniform sample set (odd count).
double simpson(std::span<const double> samples, double h);

/// Geometric grid of `n+1` points on [lo, hi] clustered at both ends with ratio `ratio`.
std::vector<double> two_sided_geometric(double lo, double hi, int n, double ratio);

}  // namespace hardy::quad
