#pragma once

#include <vector>

#include "hardy/domain.hpp"
#include "hardy/quotient.hpp"

namespace hardy {

/// Centred-arc replacement of a domain: at radius r the slice becomes the arc
/// (pi/2 - a*(r), pi/2 + a*(r)) with 2 a*(r) r = m(r).
struct RearrangedDomain {
    std::vector<double> r;
    std::vector<double> half_width;  // a*(r), angular
    DomainSpec source;
};

RearrangedDomain rearrange_domain(const DomainSpec& dom, const std::vector<double>& r_grid);

/// Row-wise symmetric decreasing rearrangement about theta = pi/2.
///
/// Each radius row is sorted in decreasing order and laid out from the grid point at
/// pi/2 outward, alternating sides. The theta grid must be uniform and contain pi/2:
/// periodic grids start at 0 with a multiple of 4 points, open grids are symmetric about
/// pi/2 with an odd number of points. Negative samples throw ContractViolation.
PolarGridFunction rearrange_function(const PolarGridFunction& u);
PolarGridFunction rearrange_function_serial(const PolarGridFunction& u);

/// sum_ij c_i h u_ij^2 with c_i = int hat_i W r dr and h the theta spacing. Every column
/// carries the same weight, so the sum is invariant under row permutations.
double lumped_weighted_mass(const PolarGridFunction& u, const WeightParams& p);

struct PolyaSzegoReport {
    double energy = 0.0;
    double energy_star = 0.0;
    double margin = 0.0;  // energy - energy_star
    double ratio = 0.0;
    double ratio_star = 0.0;
    double lumped_mass = 0.0;
    double lumped_mass_star = 0.0;
};

PolyaSzegoReport polya_szego_check(const PolarGridFunction& u, const WeightParams& p);

struct HardyLittlewoodReport {
    double lhs = 0.0;  // int u v
    double rhs = 0.0;  // int u* v*
};

/// Both integrals with lumped area weights (r-hat integrals times the theta spacing).
HardyLittlewoodReport hardy_littlewood_check(const PolarGridFunction& u, const PolarGridFunction& v);

}  // namespace hardy
