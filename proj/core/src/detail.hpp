#pragma once

#include "proxgeo/types.hpp"

#include <cstdint>
#include <limits>
#include <vector>

namespace proxgeo::detail {

/// `count` parameters stratified over [lo, hi] with a seed-dependent offset.
std::vector<double> stratified(std::size_t count, std::uint64_t seed, double lo, double hi);

/// Orthonormal basis of the complement of `d` (unit) in R^n, n-1 vectors.
std::vector<Point> orthogonal_complement(const Point& d);

/// Surface measure of the unit sphere S^{n-1}.
double unit_sphere_area(int n);

/// Scale used for relative tolerances at a point.
inline double scale_of(const Point& p) { return std::max(1.0, p.cwiseAbs().maxCoeff()); }

/// Rounding allowance for membership of solid sets, so that computed
/// projections test as members.
inline double rounding_slack(double scale) { return 16 * std::numeric_limits<double>::epsilon() * std::max(1.0, scale); }

/// Keeps `candidate` when it is strictly closer, or equally close and lexicographically smaller.
void keep_nearest(Projection& best, bool& have, double distance, const Point& candidate);

/// Removes directions within `tol` of an earlier one.
std::vector<UnitVector> dedupe(std::vector<UnitVector> dirs, double tol = 1e-9);

} // namespace proxgeo::detail
