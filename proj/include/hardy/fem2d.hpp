#pragma once

// P1 finite elements for the N = 2 critical Hardy quotient on truncated domains
// Omega_n = Omega ∩ (B_{R-1/n} \ closed B_{1/n}).

#include <Eigen/Sparse>
#include <array>
#include <string>
#include <vector>

#include "hardy/domain.hpp"
#include "hardy/weight.hpp"

namespace hardy {

struct Mesh {
    std::vector<std::array<double, 2>> vertices;
    std::vector<std::array<int, 3>> triangles;  // counter-clockwise
    std::vector<char> boundary;                 // vertex lies on the boundary of Omega_n
    std::vector<char> truncation;               // vertex lies on |x| = 1/n or |x| = R - 1/n

    // Grading metadata.
    std::string chart;         // "origin-periodic", "origin-arc" or "tip"
    int n = 0;
    double h = 0.0;
    double R = 1.0;
    double r_inner = 0.0;      // inner truncation radius actually used
    double r_outer = 0.0;
    double window_length = 0.0;  // length of the radial chart interval, see mesh_truncated
    int radial_intervals = 0;
    int angular_intervals = 0;
    double min_angle_deg = 0.0;

    std::size_t edge_count() const;
};

/// Structured triangulation of Omega_n.
///
/// Origin frame: radial nodes uniform in s = log log(R/|x|) (geometric toward both
/// truncation circles), angular nodes uniform across the slice. Supported slices are the
/// full circle or a single arc at every radius. window_length is the s-extent.
///
/// Tip frame (calibrated cusp): nodes uniform in log rho between the truncation circle and
/// rho = r0, angular nodes uniform across (a(rho), pi - a(rho)). window_length is
/// log(r0 n), the log rho extent along theta = pi/2.
///
/// Node spacing in the chart is about 2.5 h; interval counts are floor(c/h) for a
/// chart-dependent c, so halving h at least quadruples the triangle count.
Mesh mesh_truncated(const DomainSpec& dom, int n, double target_h);

struct FemOperators {
    Eigen::SparseMatrix<double> stiffness;
    Eigen::SparseMatrix<double> mass;  // W_R-weighted
};

/// Exact P1 stiffness; mass by the 6-point degree-4 rule, with one level of 4-way
/// subdivision on elements that touch a truncation circle. Elements are processed in
/// parallel into per-element blocks and scattered in element order.
FemOperators assemble(const Mesh& mesh, const WeightParams& p);
FemOperators assemble_serial(const Mesh& mesh, const WeightParams& p);

struct EigenResult {
    double d_n = 0.0;
    std::vector<double> vector;  // weighted mass 1, nonnegative mean
    int iterations = 0;
    double residual = 0.0;       // ||K v - d M v|| / ||M v|| in the lumped-mass dual norm
    int n = 0;
};

struct EigenOptions {
    double tol = 1e-9;
    int max_iterations = 300;
};

/// Smallest generalized eigenpair of K v = d M v (both SPD) by shifted inverse iteration.
/// Shifts stay below the smallest eigenvalue, checked through the LDL^T inertia.
EigenResult smallest_eigen(const Eigen::SparseMatrix<double>& K, const Eigen::SparseMatrix<double>& M,
                           const EigenOptions& opt = {});

/// Assembles on the mesh, eliminates boundary vertices and solves; the returned vector is
/// indexed by mesh vertex with zeros on the boundary.
EigenResult solve_truncated(const Mesh& mesh, const WeightParams& p, const EigenOptions& opt = {});

struct CollarReport {
    double inner = 0.0;   // share of weighted mass in elements with centroid |x| < 2/n
    double outer = 0.0;   // share with centroid |x| > R - 2/n
    double total = 0.0;
    double escape = 0.0;  // share outside the first schedule domain Omega_{n_0}
};

CollarReport collar_fractions(const Mesh& mesh, const WeightParams& p, const std::vector<double>& v, int n0);

struct TruncationRow {
    int n = 0;
    double d_n = 0.0;
    double window_length = 0.0;
    int vertices = 0;
    int triangles = 0;
    int iterations = 0;
    double residual = 0.0;
    double min_angle_deg = 0.0;
    CollarReport collar;
};

struct ConstantEstimate {
    double estimate = 0.0;  // C of the fit d = C + K / (L + b)^2
    double fit_K = 0.0;
    double fit_b = 0.0;
    double fit_rms = 0.0;
    double aitken = 0.0;    // Aitken delta^2 on the last three d_n (reported alongside)
    bool monotone = true;   // d_n non-increasing within tolerance
    std::vector<std::string> warnings;
    std::vector<TruncationRow> rows;
    std::vector<double> final_vector;  // eigenvector for the last schedule point
    Mesh final_mesh;
};

struct ExtrapolationOptions {
    double h = 0.02;
    EigenOptions eigen;
    double monotone_tol = 1e-6;
};

/// d_n along the schedule (points computed concurrently), extrapolated in the window length.
ConstantEstimate extrapolate_constant(const std::vector<int>& schedule, const DomainSpec& dom,
                                      const ExtrapolationOptions& opt = {});

/// ASCII legacy VTK unstructured grid with the vector as point data.
void write_vtk(const std::string& path, const Mesh& mesh, const std::vector<double>& values);

}  // namespace hardy
