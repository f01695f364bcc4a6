#pragma once

#include "proxgeo/set_oracle.hpp"

#include <vector>

namespace proxgeo {

/// Absolute slack used for membership in sets with empty interior (curves,
/// lines, segments), where exact floating-point membership is measure zero.
inline constexpr double kThinMembershipSlack = 1e-12;

/// The empty set; cl(int S) of sets with empty interior.
class EmptySet final : public SetOracle {
public:
  explicit EmptySet(int dimension) : dimension_(dimension) {}

  int dimension() const override { return dimension_; }
  std::string kind() const override { return "empty"; }
  bool empty() const override { return true; }
  Capabilities capabilities() const override;
  bool contains(const Point& p) const override;
  Projection project(const Point& p) const override;
  bool in_interior(const Point&) const override { return false; }
  std::vector<UnitVector> normal_generators(const Point&) const override { return {}; }
  std::optional<std::vector<Point>> parametrized_boundary(std::size_t, std::uint64_t,
                                                          const Window&) const override {
    return std::vector<Point>{};
  }
  double boundary_measure(const Window&) const override { return 0.0; }
  bool regular_closed() const override { return true; }

private:
  int dimension_;
};

/// Closed Euclidean ball B̄(c; r) in R^n (the closed disk for n = 2).
class ClosedBall final : public SetOracle {
public:
  ClosedBall(Point center, double radius);

  int dimension() const override { return static_cast<int>(center_.size()); }
  std::string kind() const override { return "disk"; }
  Capabilities capabilities() const override;
  bool contains(const Point& p) const override;
  Projection project(const Point& p) const override;
  bool in_interior(const Point& p) const override;
  std::vector<UnitVector> normal_generators(const Point& x) const override;
  std::optional<BoundaryClass> boundary_class(const Point&) const override {
    return BoundaryClass::InteriorBoundary;
  }
  std::optional<std::vector<Point>> parametrized_boundary(std::size_t count, std::uint64_t seed,
                                                          const Window& window) const override;
  double boundary_measure(const Window& window) const override;
  OraclePtr closure_of_interior() const override;
  bool regular_closed() const override { return true; }
  std::vector<Polyline> outline(const Window& window) const override;

  const Point& center() const { return center_; }
  double radius() const { return radius_; }

private:
  Point center_;
  double radius_;
};

/// {x : <a, x> <= b}.
class ClosedHalfspace final : public SetOracle {
public:
  ClosedHalfspace(Point normal, double offset);

  int dimension() const override { return static_cast<int>(normal_.size()); }
  std::string kind() const override { return "halfspace"; }
  Capabilities capabilities() const override;
  bool contains(const Point& p) const override;
  Projection project(const Point& p) const override;
  bool in_interior(const Point& p) const override;
  std::vector<UnitVector> normal_generators(const Point& x) const override;
  std::optional<BoundaryClass> boundary_class(const Point&) const override {
    return BoundaryClass::InteriorBoundary;
  }
  std::optional<std::vector<Point>> parametrized_boundary(std::size_t count, std::uint64_t seed,
                                                          const Window& window) const override;
  double boundary_measure(const Window& window) const override;
  OraclePtr closure_of_interior() const override;
  bool regular_closed() const override { return true; }
  std::vector<Polyline> outline(const Window& window) const override;

private:
  Point normal_; // unit
  double offset_;
};

/// Closed segment [a, b], or the full line through a and b when `infinite`.
class LineSet final : public SetOracle {
public:
  static LineSet segment(Point a, Point b);
  static LineSet line(Point through, Point direction);

  int dimension() const override { return static_cast<int>(origin_.size()); }
  std::string kind() const override { return infinite_ ? "line" : "segment"; }
  Capabilities capabilities() const override;
  bool contains(const Point& p) const override;
  Projection project(const Point& p) const override;
  bool in_interior(const Point&) const override { return dimension() == 1; }
  std::vector<UnitVector> normal_generators(const Point& x) const override;
  std::optional<BoundaryClass> boundary_class(const Point&) const override {
    return BoundaryClass::ThinBoundary;
  }
  std::optional<std::vector<Point>> parametrized_boundary(std::size_t count, std::uint64_t seed,
                                                          const Window& window) const override;
  double boundary_measure(const Window& window) const override;
  OraclePtr closure_of_interior() const override;
  std::vector<Polyline> outline(const Window& window) const override;

private:
  LineSet(Point origin, Point direction, double length, bool infinite);
  // Parameter interval of the set clipped to the window (empty when lo > hi).
  std::pair<double, double> clipped_range(const Window& window) const;
  double clamp_parameter(double t) const;

  Point origin_;
  Point direction_; // unit
  double length_;
  bool infinite_;
};

/// S = (∪ B(c_i; r_i))^c for open balls B(c_i; r_i).
class ComplementOfOpenBalls final : public SetOracle {
public:
  explicit ComplementOfOpenBalls(std::vector<Ball> balls);

  int dimension() const override;
  std::string kind() const override { return "complement_of_balls"; }
  Capabilities capabilities() const override;
  bool contains(const Point& p) const override;
  Projection project(const Point& p) const override;
  bool in_interior(const Point& p) const override;
  std::vector<UnitVector> normal_generators(const Point& x) const override;
  std::optional<BoundaryClass> boundary_class(const Point&) const override {
    return BoundaryClass::InteriorBoundary;
  }
  std::optional<std::vector<Point>> parametrized_boundary(std::size_t count, std::uint64_t seed,
                                                          const Window& window) const override;
  double boundary_measure(const Window& window) const override;
  OraclePtr closure_of_interior() const override;
  bool regular_closed() const override { return true; }
  std::vector<Polyline> outline(const Window& window) const override;

  const std::vector<Ball>& balls() const { return balls_; }

private:
  bool covered_by_other(const Point& p, std::size_t skip, double slack) const;

  std::vector<Ball> balls_;
};

/// Finite union of closed sets; distance is the minimum over the parts.
class UnionOracle final : public SetOracle {
public:
  explicit UnionOracle(std::vector<OraclePtr> parts, std::string kind = "union");

  int dimension() const override;
  std::string kind() const override { return kind_; }
  Capabilities capabilities() const override;
  bool contains(const Point& p) const override;
  Projection project(const Point& p) const override;
  bool in_interior(const Point& p) const override;
  std::vector<UnitVector> normal_generators(const Point& x) const override;
  std::optional<BoundaryClass> boundary_class(const Point& x) const override;
  std::optional<std::vector<Point>> parametrized_boundary(std::size_t count, std::uint64_t seed,
                                                          const Window& window) const override;
  double boundary_measure(const Window& window) const override;
  OraclePtr closure_of_interior() const override;
  bool regular_closed() const override;
  std::vector<Polyline> outline(const Window& window) const override;

  const std::vector<OraclePtr>& parts() const { return parts_; }

private:
  std::vector<OraclePtr> parts_;
  std::string kind_;
};

/// Graph {(t, sign * e^t) : t in R} in R^2. Projection by multistart 1-D
/// minimization over t with Brent refinement and a Newton polish.
class ExpGraph final : public SetOracle {
public:
  explicit ExpGraph(int sign);

  int dimension() const override { return 2; }
  std::string kind() const override { return "exp_graph"; }
  Capabilities capabilities() const override;
  bool contains(const Point& p) const override;
  Projection project(const Point& p) const override;
  bool in_interior(const Point&) const override { return false; }
  std::vector<UnitVector> normal_generators(const Point& x) const override;
  std::optional<BoundaryClass> boundary_class(const Point&) const override {
    return BoundaryClass::ThinBoundary;
  }
  std::optional<std::vector<Point>> parametrized_boundary(std::size_t count, std::uint64_t seed,
                                                          const Window& window) const override;
  double boundary_measure(const Window& window) const override;
  OraclePtr closure_of_interior() const override;
  std::vector<Polyline> outline(const Window& window) const override;

  /// Curve parameter of the nearest point.
  double nearest_parameter(const Point& p) const;

private:
  int sign_;
};

/// Region {x <= 0, |y| <= c x^2}: two parabolic arcs meeting in a cusp at the origin.
class CuspRegion final : public SetOracle {
public:
  explicit CuspRegion(double c);

  int dimension() const override { return 2; }
  std::string kind() const override { return "cusp_region"; }
  Capabilities capabilities() const override;
  bool contains(const Point& p) const override;
  Projection project(const Point& p) const override;
  bool in_interior(const Point& p) const override;
  std::vector<UnitVector> normal_generators(const Point& x) const override;
  std::optional<BoundaryClass> boundary_class(const Point&) const override {
    return BoundaryClass::InteriorBoundary;
  }
  std::optional<std::vector<Point>> parametrized_boundary(std::size_t count, std::uint64_t seed,
                                                          const Window& window) const override;
  double boundary_measure(const Window& window) const override;
  OraclePtr closure_of_interior() const override;
  bool regular_closed() const override { return true; }
  std::vector<Polyline> outline(const Window& window) const override;

private:
  double c_;
};

/// The cusp region continued by its two bounding parabolas for x >= 0:
/// S = {x <= 0, |y| <= c x^2} ∪ {(x, ±c x^2) : x >= 0}.
/// Satisfies the exterior r-sphere condition exactly for r <= 1/(2c), but the
/// whiskers' gap-facing normals are not realized near the tip.
class CuspWithWhiskers final : public SetOracle {
public:
  explicit CuspWithWhiskers(double c);

  int dimension() const override { return 2; }
  std::string kind() const override { return "example3_surrogate"; }
  Capabilities capabilities() const override;
  bool contains(const Point& p) const override;
  Projection project(const Point& p) const override;
  bool in_interior(const Point& p) const override;
  std::vector<UnitVector> normal_generators(const Point& x) const override;
  std::optional<BoundaryClass> boundary_class(const Point& x) const override;
  std::optional<std::vector<Point>> parametrized_boundary(std::size_t count, std::uint64_t seed,
                                                          const Window& window) const override;
  double boundary_measure(const Window& window) const override;
  OraclePtr closure_of_interior() const override;
  std::vector<Polyline> outline(const Window& window) const override;

  double curvature_coefficient() const { return c_; }

private:
  double c_;
};

/// Forwards only membership and projection of another oracle, hiding every
/// analytic capability. Exercises the generic probing algorithms.
class GenericView final : public SetOracle {
public:
  explicit GenericView(OraclePtr inner) : inner_(std::move(inner)) {}

  int dimension() const override { return inner_->dimension(); }
  std::string kind() const override { return "generic(" + inner_->kind() + ")"; }
  Capabilities capabilities() const override { return {}; }
  bool contains(const Point& p) const override { return inner_->contains(p); }
  Projection project(const Point& p) const override { return inner_->project(p); }

private:
  OraclePtr inner_;
};

} // namespace proxgeo
