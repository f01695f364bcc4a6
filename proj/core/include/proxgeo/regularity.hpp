#pragma once

#include "proxgeo/set_oracle.hpp"
#include "proxgeo/sphere_conditions.hpp"

#include <optional>

namespace proxgeo {

struct RegularityEstimate {
  double rho = 0.0;     // prox-regularity radius of cl(int S)
  double r_prime = 0.0; // extended exterior condition radius
  double r_S = kInfinity;
  std::optional<double> r_out; // min{rho, r', r_S/4} when r_S > 0
};

/// Distance between bdry(cl(int S)) and the thin boundary of S, from boundary
/// samples refined by a line search toward cl(int S). +inf without thin points.
double r_S_distance(const SetOracle& set, const Window& window, std::size_t budget = 2000,
                    std::uint64_t seed = 0, const Tolerances& tol = {});

/// min{rho, r_prime, r_S / 4}; every argument must be positive.
double prox_radius_estimate(double rho, double r_prime, double r_S);

/// Largest radius in [lo, hi] for which `condition` passes on samples, by
/// `steps` bisection steps; nullopt when it already fails at lo.
std::optional<double> largest_passing_radius(const SetOracle& set, Condition condition, double lo,
                                             double hi, const Window& window,
                                             const CheckOptions& options = {},
                                             const Tolerances& tol = {}, int steps = 10);

RegularityEstimate make_estimate(double rho, double r_prime, double r_S);

} // namespace proxgeo
