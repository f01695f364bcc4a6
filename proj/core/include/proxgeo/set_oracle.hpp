#pragma once

#include "proxgeo/types.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace proxgeo {

struct Capabilities {
  bool exact_projection = false;
  bool analytic_normals = false;
  bool interior_membership = false;
  bool closure_of_interior_available = false;
};

/// Which part of bdry S a boundary point belongs to: bdry(int S), or the thin
/// remainder (bdry S) \ bdry(int S).
enum class BoundaryClass { InteriorBoundary, ThinBoundary };

using Polyline = std::vector<Point>;

class SetOracle;
using OraclePtr = std::shared_ptr<const SetOracle>;

/// A closed set S of R^n accessed through point queries.
///
/// Implementations are immutable after construction; every query is
/// re-entrant. Only `dimension`, `contains` and `project` are mandatory, the
/// rest default to "unsupported" and the generic algorithms in set_queries.hpp
/// fall back to probing.
class SetOracle {
public:
  virtual ~SetOracle() = default;

  virtual int dimension() const = 0;
  virtual std::string kind() const = 0;
  virtual Capabilities capabilities() const { return {}; }
  virtual bool empty() const { return false; }

  /// Membership in S (S closed).
  virtual bool contains(const Point& p) const = 0;

  /// Distance to S and a nearest point. Ties go to the lexicographically
  /// smallest candidate. Throws when S is empty.
  virtual Projection project(const Point& p) const = 0;

  /// Membership in int S. Only meaningful when capabilities().interior_membership.
  virtual bool in_interior(const Point& /*p*/) const {
    throw GeometryError(kind() + ": no exact interior membership");
  }

  /// Generators of the proximal normal cone at a boundary point; only
  /// meaningful with capabilities().analytic_normals. Empty means N = {0}.
  virtual std::vector<UnitVector> normal_generators(const Point& /*x*/) const {
    throw GeometryError(kind() + ": no analytic normals");
  }

  /// Exact classification of a boundary point, when the set knows its parts.
  virtual std::optional<BoundaryClass> boundary_class(const Point& /*x*/) const {
    return std::nullopt;
  }

  /// Boundary points from a closed-form parametrization clipped to `window`.
  /// nullopt when the set has no parametrization.
  virtual std::optional<std::vector<Point>> parametrized_boundary(std::size_t /*count*/,
                                                                  std::uint64_t /*seed*/,
                                                                  const Window& /*window*/) const {
    return std::nullopt;
  }

  /// (n-1)-dimensional size of the boundary inside the window; used to split a
  /// sampling budget across the parts of a union.
  virtual double boundary_measure(const Window& /*window*/) const { return 1.0; }

  /// Companion oracle for cl(int S), when known analytically.
  virtual OraclePtr closure_of_interior() const { return nullptr; }

  /// S = cl(int S).
  virtual bool regular_closed() const { return false; }

  /// Boundary drawn as polylines for 2-D rendering.
  virtual std::vector<Polyline> outline(const Window& /*window*/) const { return {}; }
};

} // namespace proxgeo
