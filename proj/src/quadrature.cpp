#include "hardy/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace hardy::quad {

namespace {

GaussRule build_rule(int n) {
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        rule.nodes[i] = x;
        rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
    static std::mutex mu;
    static std::map<int, GaussRule> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
    return it->second;
}

double gauss(const std::function<double(double)>& f, std::span<const double> breaks, int points) {
    const auto& rule = gauss_legendre(points);
    double sum = 0.0;
    for (std::size_t c = 0; c + 1 < breaks.size(); ++c) {
        const double mid = 0.5 * (breaks[c] + breaks[c + 1]);
        const double half = 0.5 * (breaks[c + 1] - breaks[c]);
        double cell = 0.0;
        for (int k = 0; k < points; ++k) cell += rule.weights[k] * f(mid + half * rule.nodes[k]);
        sum += half * cell;
    }
    return sum;
}

double gauss(const std::function<double(double)>& f, double lo, double hi, int cells, int points) {
    std::vector<double> breaks(cells + 1);
    for (int i = 0; i <= cells; ++i) breaks[i] = lo + (hi - lo) * i / cells;
    breaks[cells] = hi;
    return gauss(f, breaks, points);
}

double power_weighted(const std::function<double(double)>& f, double gamma, double T, int cells, int points) {
    const double kappa = gamma + 1.0;
    if (kappa == 0.0) throw std::invalid_argument("power_weighted: gamma = -1 is not integrable");
    // t = T x^{1/kappa}; dt t^gamma = T^kappa / kappa dx  (x in (0,1]).
    const double scale = std::pow(T, kappa) / std::abs(kappa);
    auto g = [&](double x) { return f(T * std::pow(x, 1.0 / kappa)); };
    return scale * gauss(g, 0.0, 1.0, cells, points);
}

double simpson(std::span<const double> samples, double h) {
    const std::size_t n = samples.size();
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("simpson: need an odd sample count >= 3");
    double s = samples.front() + samples.back();
    for (std::size_t i = 1; i + 1 < n; ++i) s += (i % 2 ? 4.0 : 2.0) * samples[i];
    return s * h / 3.0;
}

std::vector<double> two_sided_geometric(double lo, double hi, int n, double ratio) {
    if (n < 2) throw std::invalid_argument("two_sided_geometric: n >= 2");
    // Symmetric spacing profile: cell widths grow by `ratio` from each end toward the middle.
    std::vector<double> widths(n);
    for (int i = 0; i < n; ++i) {
        int d = std::min(i, n - 1 - i);
        widths[i] = std::pow(ratio, d);
    }
    double total = 0.0;
    for (double w : widths) total += w;
    std::vector<double> pts(n + 1);
    pts[0] = lo;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        acc += widths[i];
        pts[i + 1] = lo + (hi - lo) * acc / total;
    }
    pts[n] = hi;
    return pts;
}

}  // namespace hardy::quad
