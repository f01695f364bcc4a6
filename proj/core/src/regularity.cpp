#include "proxgeo/regularity.hpp"

#include "detail.hpp"
#include "proxgeo/set_queries.hpp"

#include <algorithm>
#include <cmath>

namespace proxgeo {

namespace {

bool is_thin(const SetOracle& set, const Point& p, const Tolerances& tol) {
  if (auto c = set.boundary_class(p)) return *c == BoundaryClass::ThinBoundary;
  try {
    return classify_boundary(set, p, 1e-3, tol) == BoundaryClass::ThinBoundary;
  } catch (const GeometryError&) {
    return false;
  }
}

} // namespace

double r_S_distance(const SetOracle& set, const Window& window, std::size_t budget,
                    std::uint64_t seed, const Tolerances& tol) {
  const OraclePtr closure = set.closure_of_interior();
  if (!closure) throw GeometryError(set.kind() + ": no cl(int S) companion available");
  if (closure->empty()) return kInfinity;

  double best = kInfinity;
  for (const Point& b : boundary_sample(set, budget, seed, window, tol)) {
    if (!is_thin(set, b, tol)) continue;
    const Projection pr = closure->project(b);
    double dist = pr.distance;
    // Slide along [b, a] while the point stays on the thin boundary.
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 60; ++i) {
      const double t = 0.5 * (lo + hi);
      const Point m = b + t * (pr.nearest - b);
      if (set.contains(m) && is_thin(set, m, tol)) {
        lo = t;
        dist = std::min(dist, closure->project(m).distance);
      } else {
        hi = t;
      }
    }
    best = std::min(best, dist);
  }
  return best;
}

double prox_radius_estimate(double rho, double r_prime, double r_S) {
  if (!(rho > 0) || !(r_prime > 0) || !(r_S > 0))
    throw GeometryError("prox_radius_estimate: rho, r' and r_S must all be positive");
  return std::min({rho, r_prime, r_S / 4});
}

std::optional<double> largest_passing_radius(const SetOracle& set, Condition condition, double lo,
                                             double hi, const Window& window,
                                             const CheckOptions& options, const Tolerances& tol,
                                             int steps) {
  if (!(lo > 0) || !(hi > lo)) throw GeometryError("largest_passing_radius: need 0 < lo < hi");
  if (!check_condition(set, condition, lo, window, options, tol).pass) return std::nullopt;
  if (check_condition(set, condition, hi, window, options, tol).pass) return hi;
  for (int i = 0; i < steps; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (check_condition(set, condition, mid, window, options, tol).pass)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

RegularityEstimate make_estimate(double rho, double r_prime, double r_S) {
  RegularityEstimate e{rho, r_prime, r_S, std::nullopt};
  if (r_S > 0) e.r_out = prox_radius_estimate(rho, r_prime, r_S);
  return e;
}

} // namespace proxgeo
