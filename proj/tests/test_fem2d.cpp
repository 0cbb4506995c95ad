#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hardy/error.hpp"
#include "hardy/fem2d.hpp"
#include "hardy/oned.hpp"

using namespace hardy;
using std::numbers::pi;

namespace {

// Smallest Dirichlet eigenvalue of the radial problem on the truncated ball: in the
// coordinate s = log log(R/r) the quotient separates with ground state sin(pi s / L).
double annulus_exact(const Mesh& m) { return 0.25 + pi * pi / (m.window_length * m.window_length); }

Mesh single_triangle() {
    Mesh m;
    m.vertices = {{0.3, 0.3}, {0.4, 0.3}, {0.3, 0.4}};
    m.triangles = {{0, 1, 2}};
    m.boundary = {0, 0, 0};
    m.truncation = {0, 0, 0};
    m.n = 4;
    return m;
}

}  // namespace

TEST_CASE("annulus mesh is a closed ring") {
    const auto m = mesh_truncated(DomainSpec::ball(), 8, 0.05);
    CHECK(m.chart == "origin-periodic");
    const long V = static_cast<long>(m.vertices.size()), E = static_cast<long>(m.edge_count());
    const long F = static_cast<long>(m.triangles.size());
    CHECK(V - E + F == 0);
    CHECK(m.angular_intervals % 4 == 0);
    for (std::size_t v = 0; v < m.vertices.size(); ++v) {
        const double r = std::hypot(m.vertices[v][0], m.vertices[v][1]);
        CHECK(r >= 1.0 / 8 - 1e-12);
        CHECK(r <= 1.0 - 1.0 / 8 + 1e-12);
        if (m.boundary[v]) CHECK((std::abs(r - 0.125) < 1e-12 || std::abs(r - 0.875) < 1e-12));
    }
}

TEST_CASE("half-disk mesh stays inside the truncated domain") {
    const auto dom = DomainSpec::half_disk();
    const auto m = mesh_truncated(dom, 8, 0.05);
    CHECK(m.chart == "origin-arc");
    const long V = static_cast<long>(m.vertices.size()), E = static_cast<long>(m.edge_count());
    CHECK(V - E + static_cast<long>(m.triangles.size()) == 1);
    for (const auto& t : m.triangles) {
        double cx = 0, cy = 0;
        for (int k = 0; k < 3; ++k) {
            cx += m.vertices[t[k]][0] / 3;
            cy += m.vertices[t[k]][1] / 3;
        }
        CHECK(cy > 0.0);
        const double r = std::hypot(cx, cy);
        CHECK(r > 1.0 / 8);
        CHECK(r < 1.0 - 1.0 / 8);
    }
    CHECK(m.min_angle_deg > 5.0);
}

TEST_CASE("halving h at least quadruples the triangle count") {
    for (const auto& dom : {DomainSpec::ball(), DomainSpec::half_disk()}) {
        const auto coarse = mesh_truncated(dom, 16, 0.04);
        const auto fine = mesh_truncated(dom, 16, 0.02);
        CHECK(fine.triangles.size() >= 4 * coarse.triangles.size());
    }
}

TEST_CASE("mesh construction rejects bad input") {
    CHECK_THROWS_AS(mesh_truncated(DomainSpec::ball(), 2, 0.05), ConstructionError);
    CHECK_THROWS_AS(mesh_truncated(DomainSpec::ball(), 0, 0.05), DomainRangeError);
    CHECK_THROWS_AS(mesh_truncated(DomainSpec::ball(), 8, 0.0), DomainRangeError);
}

TEST_CASE("P1 element stiffness on a right triangle") {
    const auto ops = assemble(single_triangle(), {1.0, 2});
    const double expected[3][3] = {{1.0, -0.5, -0.5}, {-0.5, 0.5, 0.0}, {-0.5, 0.0, 0.5}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(ops.stiffness.coeff(i, j) == doctest::Approx(expected[i][j]).epsilon(1e-14));
}

TEST_CASE("element mass integrates the weight") {
    // Total weighted mass is the integral of W over the triangle; compare to a fine 1D-in-each-direction sum.
    const auto m = single_triangle();
    const auto ops = assemble(m, {1.0, 2});
    const WeightParams p{1.0, 2};
    double total = 0.0;
    for (int k = 0; k < ops.mass.outerSize(); ++k)
        for (Eigen::SparseMatrix<double>::InnerIterator it(ops.mass, k); it; ++it) total += it.value();
    const int n = 800;
    const double hh = 0.1 / n;
    double ref = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; i + j < n; ++j) {
            // lower triangle cells fully inside, diagonal cells contribute half
            const double x = 0.3 + (i + 0.5) * hh, y = 0.3 + (j + 0.5) * hh;
            ref += (i + j == n - 1 ? 0.5 : 1.0) * weight_eval(p, std::hypot(x, y)) * hh * hh;
        }
    CHECK(total == doctest::Approx(ref).epsilon(2e-3));
}

TEST_CASE("stiffness annihilates constants and mass is symmetric positive") {
    const auto m = mesh_truncated(DomainSpec::half_disk(), 8, 0.05);
    const auto ops = assemble(m, {1.0, 2});
    const Eigen::VectorXd one = Eigen::VectorXd::Ones(ops.stiffness.rows());
    CHECK((ops.stiffness * one).cwiseAbs().maxCoeff() < 1e-10);
    CHECK((ops.mass * one).minCoeff() > 0.0);
    const Eigen::SparseMatrix<double> asym = ops.mass - Eigen::SparseMatrix<double>(ops.mass.transpose());
    CHECK(asym.norm() < 1e-14 * ops.mass.norm());
}

TEST_CASE("serial and parallel assembly agree exactly") {
    const auto m = mesh_truncated(DomainSpec::ball(), 8, 0.05);
    const auto a = assemble(m, {1.0, 2});
    const auto b = assemble_serial(m, {1.0, 2});
    CHECK((a.stiffness - b.stiffness).norm() == 0.0);
    CHECK((a.mass - b.mass).norm() == 0.0);
}

TEST_CASE("smallest_eigen on a diagonal pencil") {
    Eigen::SparseMatrix<double> K(2, 2), M(2, 2);
    K.insert(0, 0) = 3.0;
    K.insert(1, 1) = 2.0;
    M.insert(0, 0) = 1.0;
    M.insert(1, 1) = 1.0;
    const auto r = smallest_eigen(K, M);
    CHECK(r.d_n == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(std::abs(r.vector[1]) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(r.vector[1] > 0.0);
    Eigen::SparseMatrix<double> Kneg(2, 2);
    Kneg.insert(0, 0) = -1.0;
    Kneg.insert(1, 1) = 2.0;
    CHECK_THROWS_AS(smallest_eigen(Kneg, M), DegenerateInputError);
}

TEST_CASE("truncated ball eigenvalue matches the separated solution") {
    const WeightParams p{1.0, 2};
    double prev = INFINITY;
    for (int n : {4, 8, 16, 32}) {
        const auto m = mesh_truncated(DomainSpec::ball(), n, 0.02);
        const auto r = solve_truncated(m, p);
        CHECK(r.d_n == doctest::Approx(annulus_exact(m)).epsilon(0.01));
        CHECK(r.d_n >= 0.25);
        CHECK(r.d_n < prev);
        prev = r.d_n;
        // ground state is single-signed
        double lo = 0.0;
        for (double v : r.vector) lo = std::min(lo, v);
        CHECK(lo > -1e-8);
    }
}

TEST_CASE("h-refinement does not increase d_n") {
    const WeightParams p{1.0, 2};
    const auto coarse = solve_truncated(mesh_truncated(DomainSpec::half_disk(), 16, 0.04), p);
    const auto fine = solve_truncated(mesh_truncated(DomainSpec::half_disk(), 16, 0.02), p);
    CHECK(fine.d_n <= coarse.d_n + 1e-9);
    CHECK(fine.d_n > 0.25);
}

TEST_CASE("collar fractions partition the mass") {
    const WeightParams p{1.0, 2};
    const auto m = mesh_truncated(DomainSpec::ball(), 16, 0.04);
    const auto r = solve_truncated(m, p);
    const auto c = collar_fractions(m, p, r.vector, 16);
    CHECK(c.escape == doctest::Approx(0.0));
    CHECK(c.total == doctest::Approx(c.inner + c.outer));
    CHECK(c.total > 0.0);
    CHECK(c.total < 1.0);
    const auto c4 = collar_fractions(m, p, r.vector, 4);
    CHECK(c4.escape > 0.0);
}

TEST_CASE("ball extrapolation recovers 1/4") {
    ExtrapolationOptions opt;
    opt.h = 0.03;
    const auto est = extrapolate_constant({4, 8, 16, 32}, DomainSpec::ball(), opt);
    CHECK(est.estimate == doctest::Approx(0.25).epsilon(0.04));
    CHECK(est.monotone);
    CHECK(est.rows.size() == 4);
    CHECK(est.final_vector.size() == est.final_mesh.vertices.size());
    CHECK_THROWS_AS(extrapolate_constant({8, 4, 16}, DomainSpec::ball(), opt), DomainRangeError);
    CHECK_THROWS_AS(extrapolate_constant({4, 8}, DomainSpec::ball(), opt), DegenerateInputError);
}

TEST_CASE("cusp with calibrated profile approaches E(a)") {
    ExtrapolationOptions opt;
    opt.h = 0.02;
    const auto dom = DomainSpec::cusp_domain(CuspProfile::calibrated(0.9));
    const auto est = extrapolate_constant({8, 32, 128, 512, 2048}, dom, opt);
    CHECK(est.final_mesh.chart == "tip");
    CHECK(est.monotone);
    CHECK(std::abs(est.estimate - Ea_value(0.9)) / Ea_value(0.9) < 0.05);
}
