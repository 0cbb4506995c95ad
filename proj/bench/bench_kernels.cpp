// Serial reference against the OpenMP version of each parallel kernel.
// Usage: bench_kernels [repeats]. Thread count follows OMP_NUM_THREADS.

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>

#include "hardy/fem2d.hpp"
#include "hardy/quotient.hpp"
#include "hardy/rearrange.hpp"

using namespace hardy;

namespace {

double best_of(int repeats, const std::function<void()>& f) {
    double best = INFINITY;
    for (int i = 0; i < repeats; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-18s %12.4f %12.4f %8.2fx\n", name, serial * 1e3, parallel * 1e3, serial / parallel);
}

PolarGridFunction sample_field(int nr, int nt) {
    const double pi = std::numbers::pi;
    std::vector<double> r, theta, vals;
    for (int i = 0; i < nr; ++i) r.push_back(0.05 + 0.9 * i / (nr - 1));
    for (int j = 0; j < nt; ++j) theta.push_back(pi * j / (nt - 1));
    for (double rr : r)
        for (double t : theta)
            vals.push_back(std::max(0.0, std::sin(t) * (rr - 0.05) * (0.95 - rr)) * (1.0 + 0.5 * std::cos(3 * t + 7 * rr)));
    return PolarGridFunction::on_domain(r, theta, vals, DomainSpec::half_disk(), false);
}

}  // namespace

int main(int argc, char** argv) {
    const int repeats = argc > 1 ? std::max(1, std::atoi(argv[1])) : 5;
    const WeightParams p{1.0, 2};
    std::printf("threads: %d, repeats: %d (best time reported)\n", omp_get_max_threads(), repeats);
    std::printf("%-18s %12s %12s %9s\n", "kernel", "serial ms", "parallel ms", "speedup");

    const auto mesh = mesh_truncated(DomainSpec::ball(), 64, 0.005);
    row("fem assembly", best_of(repeats, [&] { assemble_serial(mesh, p); }),
        best_of(repeats, [&] { assemble(mesh, p); }));

    const auto u = sample_field(801, 1201);
    row("quotient_polar", best_of(repeats, [&] { quotient_polar_serial(u, p); }),
        best_of(repeats, [&] { quotient_polar(u, p); }));
    row("rearrangement", best_of(repeats, [&] { rearrange_function_serial(u); }),
        best_of(repeats, [&] { rearrange_function(u); }));
    std::printf("mesh: %zu vertices, %zu triangles; grid: %zu x %zu\n", mesh.vertices.size(), mesh.triangles.size(),
                u.rows(), u.cols());
    return 0;
}
