#include "hardy/fem2d.hpp"

#include <Eigen/SparseCholesky>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <utility>

#include "hardy/error.hpp"
#include "hardy/fit.hpp"

namespace hardy {

namespace {

constexpr double pi = std::numbers::pi;
using SpMat = Eigen::SparseMatrix<double>;
using Vec = Eigen::VectorXd;

// Chart spacing relative to the target element size.
constexpr double kSpacing = 2.5;

int interval_count(double extent, double floor_extent, double h, int minimum) {
    return std::max(minimum, static_cast<int>(std::floor(std::max(extent, floor_extent) / (kSpacing * h))));
}

void orient_and_measure(Mesh& m) {
    double min_angle = 180.0;
    for (auto& t : m.triangles) {
        const auto& a = m.vertices[t[0]];
        const auto& b = m.vertices[t[1]];
        const auto& c = m.vertices[t[2]];
        const double area2 = (b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]);
        if (area2 == 0.0) throw ConstructionError("mesh_truncated: degenerate triangle");
        if (area2 < 0.0) std::swap(t[1], t[2]);
        for (int k = 0; k < 3; ++k) {
            const auto& p = m.vertices[t[k]];
            const auto& q = m.vertices[t[(k + 1) % 3]];
            const auto& r = m.vertices[t[(k + 2) % 3]];
            const double ux = q[0] - p[0], uy = q[1] - p[1], vx = r[0] - p[0], vy = r[1] - p[1];
            const double ang = std::atan2(std::abs(ux * vy - uy * vx), ux * vx + uy * vy) * 180.0 / pi;
            min_angle = std::min(min_angle, ang);
        }
    }
    m.min_angle_deg = min_angle;
}

// Quads (i, j)-(i+1, j+1) of a structured grid split into two triangles.
void add_quads(Mesh& m, int rows, int cols_nodes, bool periodic) {
    const int cells = periodic ? cols_nodes : cols_nodes - 1;
    for (int i = 0; i + 1 < rows; ++i)
        for (int j = 0; j < cells; ++j) {
            const int jn = (j + 1) % cols_nodes;
            const int v00 = i * cols_nodes + j, v01 = i * cols_nodes + jn;
            const int v10 = (i + 1) * cols_nodes + j, v11 = (i + 1) * cols_nodes + jn;
            m.triangles.push_back({v00, v10, v11});
            m.triangles.push_back({v00, v11, v01});
        }
}

Mesh mesh_origin(const DomainSpec& dom, int n, double h) {
    Mesh m;
    m.n = n;
    m.h = h;
    m.R = dom.R;
    const double R = dom.R;
    double r_in = 1.0 / n;
    if (dom.kind == DomainKind::BallWithCoreCutoff) r_in = std::max(r_in, dom.core_fraction * R);
    const double r_out = R - 1.0 / n;
    if (!(r_in < r_out)) throw ConstructionError("mesh_truncated: empty truncated domain");
    m.r_inner = r_in;
    m.r_outer = r_out;
    auto s_of = [R](double r) { return std::log(-std::log(r / R)); };
    const double s_in = s_of(r_in), s_out = s_of(r_out);
    m.window_length = s_in - s_out;
    const int ns = interval_count(m.window_length, 0.5, h, 2);
    std::vector<double> radii(ns + 1);
    for (int i = 0; i <= ns; ++i) radii[i] = R * std::exp(-std::exp(s_in - m.window_length * i / ns));
    radii.front() = r_in;
    radii.back() = r_out;

    std::vector<ArcSet> slices;
    bool all_full = true;
    double max_width = 0.0;
    for (double r : radii) {
        ArcSet s = dom.slice(r);
        if (s.empty()) s = dom.slice(r * (1.0 + 1e-9));
        if (s.empty()) throw ConstructionError("mesh_truncated: empty slice inside the truncated domain");
        if (!s.is_full_circle() && s.arcs().size() != 1 &&
            !(s.arcs().size() == 2 && s.arcs()[0].lo == 0.0 && s.arcs()[1].hi >= 2 * pi))
            throw ConstructionError("mesh_truncated: only single-arc or full-circle slices are supported");
        all_full = all_full && s.is_full_circle();
        max_width = std::max(max_width, s.measure());
        slices.push_back(std::move(s));
    }
    const int rows = ns + 1;
    m.radial_intervals = ns;
    if (all_full) {
        const int nt = std::max(16, 4 * static_cast<int>(std::floor(2 * pi / (4 * kSpacing * h))));
        m.chart = "origin-periodic";
        m.angular_intervals = nt;
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < nt; ++j) {
                const double t = 2 * pi * j / nt;
                m.vertices.push_back({radii[i] * std::cos(t), radii[i] * std::sin(t)});
                const bool edge = i == 0 || i == rows - 1;
                m.boundary.push_back(edge);
                m.truncation.push_back(edge);
            }
        add_quads(m, rows, nt, true);
    } else {
        const int nt = interval_count(max_width, 0.5, h, 4);
        m.chart = "origin-arc";
        m.angular_intervals = nt;
        for (int i = 0; i < rows; ++i) {
            const auto& arcs = slices[i].arcs();
            double lo, width;
            if (slices[i].is_full_circle()) {
                throw ConstructionError("mesh_truncated: mixed full-circle and arc slices are not supported");
            } else if (arcs.size() == 2) {  // arc through theta = 0
                lo = arcs[1].lo;
                width = slices[i].measure();
            } else {
                lo = arcs[0].lo;
                width = arcs[0].hi - arcs[0].lo;
            }
            for (int j = 0; j <= nt; ++j) {
                const double t = lo + width * j / nt;
                m.vertices.push_back({radii[i] * std::cos(t), radii[i] * std::sin(t)});
                m.boundary.push_back(i == 0 || i == rows - 1 || j == 0 || j == nt);
                m.truncation.push_back(i == 0 || i == rows - 1);
            }
        }
        add_quads(m, rows, nt + 1, false);
    }
    orient_and_measure(m);
    return m;
}

Mesh mesh_tip(const DomainSpec& dom, int n, double h) {
    const CuspProfile& prof = *dom.cusp;
    Mesh m;
    m.n = n;
    m.h = h;
    m.R = 1.0;
    m.chart = "tip";
    m.r_inner = 1.0 / n;
    m.r_outer = 1.0 - 1.0 / n;
    if (!(1.0 / n < 1.0 - prof.r0)) throw ConstructionError("mesh_truncated: inner truncation reaches the cusp domain");
    if (!(prof.r0 * n > 1.0)) throw ConstructionError("mesh_truncated: truncation removes the whole cusp domain");
    const double c = 1.0 - (1.0 - 1.0 / n) * (1.0 - 1.0 / n);
    // rho at which the ray theta meets |x| = 1 - 1/n.
    auto rho_in = [c](double th) {
        const double s = std::sin(th);
        if (s * s <= c) throw ConstructionError("mesh_truncated: truncation circle misses the cusp slice");
        return c / (s + std::sqrt(s * s - c));
    };
    const double log_r0 = std::log(prof.r0);
    auto rho_at = [&](double sigma, double th) {
        return std::exp((1.0 - sigma) * std::log(rho_in(th)) + sigma * log_r0);
    };
    m.window_length = std::log(prof.r0 * n);
    const int ns = interval_count(m.window_length, 0.5, h, 2);
    const int nt = interval_count(pi - 2 * prof.a, 0.5, h, 4);
    m.radial_intervals = ns;
    m.angular_intervals = nt;
    for (int i = 0; i <= ns; ++i) {
        const double sigma = static_cast<double>(i) / ns;
        double lo = prof.a;
        for (int it = 0; it < 200; ++it) {
            const double next = prof.angle_at(rho_at(sigma, lo));
            if (std::abs(next - lo) < 1e-15) break;
            lo = next;
        }
        for (int j = 0; j <= nt; ++j) {
            const double th = lo + (pi - 2 * lo) * j / nt;
            const double rho = i == ns ? prof.r0 : rho_at(sigma, th);
            m.vertices.push_back({rho * std::cos(th), 1.0 - rho * std::sin(th)});
            m.boundary.push_back(i == 0 || i == ns || j == 0 || j == nt);
            m.truncation.push_back(i == 0);
        }
    }
    add_quads(m, ns + 1, nt + 1, false);
    orient_and_measure(m);
    return m;
}

// ---- element integrals ---------------------------------------------------------------

struct Rule {
    std::array<std::array<double, 3>, 6> bary;
    std::array<double, 6> w;
};

const Rule& dunavant4() {
    static const Rule rule = [] {
        Rule r;
        const double a = 0.445948490915965, wa = 0.223381589678011;
        const double b = 0.091576213509771, wb = 0.109951743655322;
        r.bary = {{{1 - 2 * a, a, a}, {a, 1 - 2 * a, a}, {a, a, 1 - 2 * a},
                   {1 - 2 * b, b, b}, {b, 1 - 2 * b, b}, {b, b, 1 - 2 * b}}};
        r.w = {wa, wa, wa, wb, wb, wb};
        return r;
    }();
    return rule;
}

struct ElementBlock {
    std::array<double, 9> K{};
    std::array<double, 9> M{};
};

using Bary = std::array<double, 3>;

// Adds int_T' W phi_i phi_j over the sub-triangle T' with corners given in parent barycentrics.
void add_mass(std::array<double, 9>& M, const std::array<std::array<double, 2>, 3>& X, const std::array<Bary, 3>& C,
              double area, const WeightParams& p) {
    const Rule& rule = dunavant4();
    for (int q = 0; q < 6; ++q) {
        Bary lam{0, 0, 0};
        for (int k = 0; k < 3; ++k)
            for (int c = 0; c < 3; ++c) lam[c] += rule.bary[q][k] * C[k][c];
        double x = 0, y = 0;
        for (int c = 0; c < 3; ++c) {
            x += lam[c] * X[c][0];
            y += lam[c] * X[c][1];
        }
        const double W = weight_eval(p, std::hypot(x, y));
        if (!std::isfinite(W)) throw NumericalError("assemble: non-finite weight");
        const double s = rule.w[q] * area * W;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) M[i * 3 + j] += s * lam[i] * lam[j];
    }
}

ElementBlock element_block(const Mesh& mesh, std::size_t e, const WeightParams& p) {
    const auto& t = mesh.triangles[e];
    std::array<std::array<double, 2>, 3> X{mesh.vertices[t[0]], mesh.vertices[t[1]], mesh.vertices[t[2]]};
    ElementBlock blk;
    const double area2 = (X[1][0] - X[0][0]) * (X[2][1] - X[0][1]) - (X[2][0] - X[0][0]) * (X[1][1] - X[0][1]);
    const double b[3] = {X[1][1] - X[2][1], X[2][1] - X[0][1], X[0][1] - X[1][1]};
    const double c[3] = {X[2][0] - X[1][0], X[0][0] - X[2][0], X[1][0] - X[0][0]};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) blk.K[i * 3 + j] = (b[i] * b[j] + c[i] * c[j]) / (2.0 * area2);
    const double area = 0.5 * area2;
    const Bary v0{1, 0, 0}, v1{0, 1, 0}, v2{0, 0, 1};
    const bool refine = mesh.truncation[t[0]] || mesh.truncation[t[1]] || mesh.truncation[t[2]];
    if (!refine) {
        add_mass(blk.M, X, {v0, v1, v2}, area, p);
    } else {
        const Bary m01{0.5, 0.5, 0}, m12{0, 0.5, 0.5}, m02{0.5, 0, 0.5};
        add_mass(blk.M, X, {v0, m01, m02}, 0.25 * area, p);
        add_mass(blk.M, X, {m01, v1, m12}, 0.25 * area, p);
        add_mass(blk.M, X, {m02, m12, v2}, 0.25 * area, p);
        add_mass(blk.M, X, {m01, m12, m02}, 0.25 * area, p);
    }
    return blk;
}

FemOperators scatter(const Mesh& mesh, const std::vector<ElementBlock>& blocks) {
    std::vector<Eigen::Triplet<double>> tk, tm;
    tk.reserve(9 * blocks.size());
    tm.reserve(9 * blocks.size());
    for (std::size_t e = 0; e < blocks.size(); ++e) {
        const auto& t = mesh.triangles[e];
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                tk.emplace_back(t[i], t[j], blocks[e].K[i * 3 + j]);
                tm.emplace_back(t[i], t[j], blocks[e].M[i * 3 + j]);
            }
    }
    const auto nv = static_cast<Eigen::Index>(mesh.vertices.size());
    FemOperators ops{SpMat(nv, nv), SpMat(nv, nv)};
    ops.stiffness.setFromTriplets(tk.begin(), tk.end());
    ops.mass.setFromTriplets(tm.begin(), tm.end());
    return ops;
}

void check_assembly_input(const Mesh& mesh, const WeightParams& p) {
    p.validate();
    if (p.N != 2) throw DomainRangeError("assemble: N must be 2");
    if (mesh.triangles.empty()) throw ConstructionError("assemble: empty mesh");
    if (mesh.truncation.size() != mesh.vertices.size()) throw ConstructionError("assemble: vertex flags missing");
}

double dual_norm(const Vec& r, const Vec& lumped) { return std::sqrt((r.array().square() / lumped.array()).sum()); }

}  // namespace

std::size_t Mesh::edge_count() const {
    std::set<std::pair<int, int>> edges;
    for (const auto& t : triangles)
        for (int k = 0; k < 3; ++k) edges.insert(std::minmax(t[k], t[(k + 1) % 3]));
    return edges.size();
}

Mesh mesh_truncated(const DomainSpec& dom, int n, double target_h) {
    dom.validate();
    if (n < 1) throw DomainRangeError("mesh_truncated: n must be positive");
    if (!(target_h > 0.0 && target_h < 1.0)) throw DomainRangeError("mesh_truncated: target_h outside (0, 1)");
    if (!(1.0 / n < dom.R - 1.0 / n)) throw ConstructionError("mesh_truncated: 1/n >= R - 1/n");
    return dom.tip_frame() ? mesh_tip(dom, n, target_h) : mesh_origin(dom, n, target_h);
}

FemOperators assemble(const Mesh& mesh, const WeightParams& p) {
    check_assembly_input(mesh, p);
    std::vector<ElementBlock> blocks(mesh.triangles.size());
    const long ne = static_cast<long>(blocks.size());
    bool failed = false;
#pragma omp parallel for schedule(static)
    for (long e = 0; e < ne; ++e) {
        try {
            blocks[static_cast<std::size_t>(e)] = element_block(mesh, static_cast<std::size_t>(e), p);
        } catch (...) {
#pragma omp atomic write
            failed = true;
        }
    }
    if (failed) throw NumericalError("assemble: weight quadrature failed (element touches |x| = 0 or |x| = R)");
    return scatter(mesh, blocks);
}

FemOperators assemble_serial(const Mesh& mesh, const WeightParams& p) {
    check_assembly_input(mesh, p);
    std::vector<ElementBlock> blocks(mesh.triangles.size());
    for (std::size_t e = 0; e < blocks.size(); ++e) {
        try {
            blocks[e] = element_block(mesh, e, p);
        } catch (...) {
            throw NumericalError("assemble: weight quadrature failed (element touches |x| = 0 or |x| = R)");
        }
    }
    return scatter(mesh, blocks);
}

EigenResult smallest_eigen(const SpMat& K, const SpMat& M, const EigenOptions& opt) {
    if (K.rows() != K.cols() || M.rows() != K.rows() || K.rows() == 0)
        throw DegenerateInputError("smallest_eigen: operator size mismatch");
    const Eigen::Index n = K.rows();
    Vec lumped = M * Vec::Ones(n);
    if ((lumped.array() <= 0.0).any()) throw DegenerateInputError("smallest_eigen: mass matrix is not positive");

    Eigen::SimplicialLDLT<SpMat> solver;
    auto factor = [&](double sigma) {
        SpMat A = K - sigma * M;
        solver.compute(A);
        if (solver.info() != Eigen::Success) return -1;
        return static_cast<int>((solver.vectorD().array() < 0.0).count());
    };
    double sigma = 0.0;
    if (factor(0.0) != 0) throw DegenerateInputError("smallest_eigen: stiffness is not positive definite");

    Vec x = Vec::Ones(n);
    x /= std::sqrt(x.dot(M * x));
    double rho = x.dot(K * x), res = INFINITY, f = 0.05;
    EigenResult out;
    for (int it = 1; it <= opt.max_iterations; ++it) {
        Vec y = solver.solve(M * x);
        if (!y.allFinite()) throw NumericalError("smallest_eigen: solve produced non-finite values", res);
        const double nrm = std::sqrt(y.dot(M * y));
        x = y / nrm;
        const Vec Kx = K * x, Mx = M * x;
        rho = x.dot(Kx);
        res = dual_norm(Kx - rho * Mx, lumped) / dual_norm(Mx, lumped);
        out.iterations = it;
        if (res <= opt.tol * std::max(1.0, rho)) break;
        if (it == opt.max_iterations) throw NumericalError("smallest_eigen: iteration cap exceeded", res);
        if (it >= 3 && it % 3 == 0) {
            // Move the shift toward rho while the inertia confirms it stays below the spectrum.
            for (int tries = 0; tries < 20; ++tries) {
                const double trial = rho * (1.0 - f);
                const int neg = factor(trial);
                if (neg == 0) {
                    sigma = trial;
                    f = std::max(0.1 * f, 1e-6);
                    break;
                }
                f = std::min(10.0 * f, 0.5);
                if (tries == 19 && factor(sigma) != 0) throw NumericalError("smallest_eigen: shift recovery failed", res);
            }
        }
    }
    if (x.sum() < 0.0) x = -x;
    out.d_n = rho;
    out.residual = res;
    out.vector.assign(x.data(), x.data() + n);
    return out;
}

EigenResult solve_truncated(const Mesh& mesh, const WeightParams& p, const EigenOptions& opt) {
    const auto ops = assemble(mesh, p);
    const std::size_t nv = mesh.vertices.size();
    std::vector<int> index(nv, -1);
    int nf = 0;
    for (std::size_t v = 0; v < nv; ++v)
        if (!mesh.boundary[v]) index[v] = nf++;
    if (nf == 0) throw ConstructionError("solve_truncated: no interior vertices");
    auto restrict = [&](const SpMat& A) {
        std::vector<Eigen::Triplet<double>> t;
        for (Eigen::Index c = 0; c < A.outerSize(); ++c)
            for (SpMat::InnerIterator it(A, c); it; ++it)
                if (index[it.row()] >= 0 && index[it.col()] >= 0) t.emplace_back(index[it.row()], index[it.col()], it.value());
        SpMat R(nf, nf);
        R.setFromTriplets(t.begin(), t.end());
        return R;
    };
    auto res = smallest_eigen(restrict(ops.stiffness), restrict(ops.mass), opt);
    std::vector<double> full(nv, 0.0);
    for (std::size_t v = 0; v < nv; ++v)
        if (index[v] >= 0) full[v] = res.vector[static_cast<std::size_t>(index[v])];
    res.vector = std::move(full);
    res.n = mesh.n;
    return res;
}

CollarReport collar_fractions(const Mesh& mesh, const WeightParams& p, const std::vector<double>& v, int n0) {
    if (v.size() != mesh.vertices.size()) throw ContractViolation("collar_fractions: vector size mismatch");
    if (n0 < 1) throw DomainRangeError("collar_fractions: n0 must be positive");
    const double R = p.R, n = mesh.n;
    double total = 0.0, inner = 0.0, outer = 0.0, escape = 0.0;
    for (std::size_t e = 0; e < mesh.triangles.size(); ++e) {
        const auto& t = mesh.triangles[e];
        const auto blk = element_block(mesh, e, p);
        double m = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m += v[t[i]] * blk.M[i * 3 + j] * v[t[j]];
        double cx = 0, cy = 0;
        for (int k = 0; k < 3; ++k) {
            cx += mesh.vertices[t[k]][0] / 3.0;
            cy += mesh.vertices[t[k]][1] / 3.0;
        }
        const double rc = std::hypot(cx, cy);
        total += m;
        if (rc < 2.0 / n) inner += m;
        if (rc > R - 2.0 / n) outer += m;
        if (rc < 1.0 / n0 || rc > R - 1.0 / n0) escape += m;
    }
    if (!(total > 0.0)) throw DegenerateInputError("collar_fractions: zero weighted mass");
    return {inner / total, outer / total, (inner + outer) / total, escape / total};
}

ConstantEstimate extrapolate_constant(const std::vector<int>& schedule, const DomainSpec& dom,
                                      const ExtrapolationOptions& opt) {
    if (schedule.size() < 3) throw DegenerateInputError("extrapolate_constant: need at least 3 schedule points");
    for (std::size_t k = 0; k < schedule.size(); ++k) {
        if (!(1.0 / schedule[k] < dom.R - 1.0 / schedule[k])) throw DomainRangeError("extrapolate_constant: 1/n >= R - 1/n");
        if (k > 0 && schedule[k] <= schedule[k - 1]) throw DomainRangeError("extrapolate_constant: schedule must increase");
    }
    const WeightParams p{dom.R, 2};
    const std::size_t m = schedule.size();
    ConstantEstimate out;
    out.rows.resize(m);
    std::vector<Mesh> meshes(m);
    std::vector<std::vector<double>> vecs(m);
    std::vector<std::string> errors(m);
    const long count = static_cast<long>(m);
#pragma omp parallel for schedule(dynamic, 1)
    for (long k = 0; k < count; ++k) {
        const auto kk = static_cast<std::size_t>(k);
        try {
            meshes[kk] = mesh_truncated(dom, schedule[kk], opt.h);
            const auto eig = solve_truncated(meshes[kk], p, opt.eigen);
            auto& row = out.rows[kk];
            row.n = schedule[kk];
            row.d_n = eig.d_n;
            row.window_length = meshes[kk].window_length;
            row.vertices = static_cast<int>(meshes[kk].vertices.size());
            row.triangles = static_cast<int>(meshes[kk].triangles.size());
            row.iterations = eig.iterations;
            row.residual = eig.residual;
            row.min_angle_deg = meshes[kk].min_angle_deg;
            row.collar = collar_fractions(meshes[kk], p, eig.vector, schedule.front());
            vecs[kk] = eig.vector;
        } catch (const std::exception& ex) {
            errors[kk] = ex.what();
        }
    }
    for (std::size_t k = 0; k < m; ++k)
        if (!errors[k].empty()) throw NumericalError("extrapolate_constant: n = " + std::to_string(schedule[k]) + ": " + errors[k]);

    std::vector<double> L, d;
    for (const auto& row : out.rows) {
        L.push_back(row.window_length);
        d.push_back(row.d_n);
        if (row.d_n < 0.25 - 1e-6) out.warnings.push_back("d_n below 1/4 at n = " + std::to_string(row.n));
    }
    for (std::size_t k = 1; k < m; ++k)
        if (d[k] > d[k - 1] + opt.monotone_tol) {
            out.monotone = false;
            out.warnings.push_back("d_n increases from n = " + std::to_string(schedule[k - 1]) + " to n = " +
                                   std::to_string(schedule[k]) + "; mesh too coarse");
        }
    const double Lmin = *std::min_element(L.begin(), L.end());
    const auto fit = fit_inverse_square(L, d, -0.5 * Lmin, 20.0);
    out.estimate = fit.C;
    out.fit_K = fit.K;
    out.fit_b = fit.b;
    out.fit_rms = fit.rms_residual;
    const double d1 = d[m - 3], d2 = d[m - 2], d3 = d[m - 1];
    const double den = (d3 - d2) - (d2 - d1);
    out.aitken = den != 0.0 ? d3 - (d3 - d2) * (d3 - d2) / den : d3;
    out.final_mesh = std::move(meshes.back());
    out.final_vector = std::move(vecs.back());
    return out;
}

void write_vtk(const std::string& path, const Mesh& mesh, const std::vector<double>& values) {
    if (values.size() != mesh.vertices.size()) throw ContractViolation("write_vtk: vector size mismatch");
    std::ofstream os(path);
    if (!os) throw std::runtime_error("write_vtk: cannot open " + path);
    os.precision(17);
    os << "# vtk DataFile Version 3.0\nhardy eigenvector n=" << mesh.n << "\nASCII\nDATASET UNSTRUCTURED_GRID\n";
    os << "POINTS " << mesh.vertices.size() << " double\n";
    for (const auto& v : mesh.vertices) os << v[0] << ' ' << v[1] << " 0\n";
    os << "CELLS " << mesh.triangles.size() << ' ' << 4 * mesh.triangles.size() << '\n';
    for (const auto& t : mesh.triangles) os << "3 " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    os << "CELL_TYPES " << mesh.triangles.size() << '\n';
    for (std::size_t e = 0; e < mesh.triangles.size(); ++e) os << "5\n";
    os << "POINT_DATA " << mesh.vertices.size() << "\nSCALARS psi double 1\nLOOKUP_TABLE default\n";
    for (double v : values) os << v << '\n';
}

}  // namespace hardy
