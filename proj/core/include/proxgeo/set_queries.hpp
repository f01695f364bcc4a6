#pragma once

#include "proxgeo/set_oracle.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace proxgeo {

/// Membership with a dimension check.
bool contains(const SetOracle& set, const Point& p);

/// Distance to S and the (lexicographically smallest computed) nearest point.
Projection distance_and_project(const SetOracle& set, const Point& p);

/// Deterministic boundary points of S inside `window`. Uses the oracle's
/// parametrization when it has one; otherwise projects low-discrepancy
/// exterior points of the window onto S.
std::vector<Point> boundary_sample(const SetOracle& set, std::size_t budget, std::uint64_t seed,
                                   const Window& window, const Tolerances& tol = {});

/// A point of B(p; eps) ∩ int S, or nothing when every probe fails.
std::optional<Point> interior_probe(const SetOracle& set, const Point& p, double eps,
                                    const Tolerances& tol = {});

/// bdry(int S) versus the thin boundary (bdry S) \ bdry(int S) at a boundary point.
BoundaryClass classify_boundary(const SetOracle& set, const Point& p, double eps,
                                const Tolerances& tol = {});

const char* to_string(BoundaryClass c);

} // namespace proxgeo
