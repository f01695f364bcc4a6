#include "proxgeo/set_queries.hpp"

#include "detail.hpp"
#include "proxgeo/sampling.hpp"

#include <cmath>

namespace proxgeo {

bool contains(const SetOracle& set, const Point& p) {
  require_dimension(p, set.dimension());
  return set.contains(p);
}

Projection distance_and_project(const SetOracle& set, const Point& p) {
  require_dimension(p, set.dimension());
  if (set.empty()) throw GeometryError("projection onto the empty set");
  return set.project(p);
}

std::vector<Point> boundary_sample(const SetOracle& set, std::size_t budget, std::uint64_t seed,
                                   const Window& window, const Tolerances& tol) {
  if (budget == 0) throw GeometryError("boundary_sample: budget must be at least 1");
  if (window.dimension() != set.dimension())
    throw GeometryError("boundary_sample: window dimension does not match the set");
  if (set.empty()) return {};
  if (auto pts = set.parametrized_boundary(budget, seed, window)) return *pts;

  std::vector<Point> pts;
  const int n = set.dimension();
  sampling::Halton h(n, seed);
  const auto attempts = static_cast<std::uint64_t>(tol.probe_budget) * budget;
  for (std::uint64_t i = 0; i < attempts && pts.size() < budget; ++i) {
    Point q = h.at(i);
    for (int k = 0; k < n; ++k) {
      const auto [lo, hi] = window.bounds[static_cast<std::size_t>(k)];
      q[k] = lo + q[k] * (hi - lo);
    }
    if (set.contains(q)) continue;
    Point p = set.project(q).nearest;
    if (window.contains(p)) pts.push_back(std::move(p));
  }
  if (2 * pts.size() < budget)
    throw GeometryError("boundary_sample: found only " + std::to_string(pts.size()) +
                        " boundary points for a budget of " + std::to_string(budget));
  return pts;
}

std::optional<Point> interior_probe(const SetOracle& set, const Point& p, double eps,
                                    const Tolerances& tol) {
  if (!(eps > 0)) throw GeometryError("interior_probe: eps must be positive");
  require_dimension(p, set.dimension());
  if (set.empty()) return std::nullopt;
  const int n = set.dimension();
  const bool exact = set.capabilities().interior_membership;
  const double cluster = std::min(tol.tol_boundary, eps / 4);
  const double reach = exact ? 0.999 * eps : eps - 2 * cluster;
  sampling::Halton h(n);

  auto cluster_inside = [&](const Point& z) {
    if (!set.contains(z)) return false;
    for (int k = 0; k < n; ++k) {
      Point e = Point::Zero(n);
      e[k] = cluster;
      if (!set.contains(z + e) || !set.contains(z - e)) return false;
    }
    return true;
  };

  for (int i = 0; i < tol.probe_budget; ++i) {
    Point z = p + reach * sampling::unit_ball_point(h, static_cast<std::uint64_t>(i));
    if (exact ? set.in_interior(z) : cluster_inside(z)) return z;
  }
  return std::nullopt;
}

BoundaryClass classify_boundary(const SetOracle& set, const Point& p, double eps,
                                const Tolerances& tol) {
  require_dimension(p, set.dimension());
  if (set.empty()) throw GeometryError("classify_boundary: the set is empty");
  const double scale = detail::scale_of(p);
  const double dist = set.project(p).distance;
  if (dist > tol.tol_boundary * scale)
    throw GeometryError("classify_boundary: point lies outside S, at distance " +
                        std::to_string(dist));

  // A boundary point has points of S^c arbitrarily close.
  const int n = set.dimension();
  const double probe = 100 * tol.tol_boundary * scale;
  sampling::Halton h(n);
  bool exits = false;
  for (int i = 0; i < 64 && !exits; ++i)
    exits = !set.contains(p + probe * sampling::unit_sphere_point(h, static_cast<std::uint64_t>(i)));
  if (!exits) throw GeometryError("classify_boundary: point lies deep inside int S");

  if (auto c = set.boundary_class(p)) return *c;
  return interior_probe(set, p, eps, tol) ? BoundaryClass::InteriorBoundary
                                          : BoundaryClass::ThinBoundary;
}

const char* to_string(BoundaryClass c) {
  return c == BoundaryClass::InteriorBoundary ? "interior_boundary" : "thin_boundary";
}

} // namespace proxgeo
