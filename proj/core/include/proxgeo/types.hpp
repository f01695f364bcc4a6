#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace proxgeo {

/// A point of R^n. The dimension is fixed per scene.
using Point = Eigen::VectorXd;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Thrown for violated preconditions and unrecoverable geometric failures.
class GeometryError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Numerical knobs shared by every query.
struct Tolerances {
  double tol_unit = 1e-12;
  /// Slack in ball-emptiness tests.
  double tol_emptiness = 1e-9;
  /// Bisection bracket width and probe-cluster radius.
  double tol_boundary = 1e-9;
  int max_bisection_iters = 200;
  int probe_budget = 4096;

  void validate() const;
};

/// A direction of unit Euclidean norm.
class UnitVector {
public:
  /// Normalizes `v`; throws on a zero or non-finite vector.
  static UnitVector normalized(const Point& v);
  /// Wraps an already normalized vector; throws when | |v| - 1 | > tol.
  static UnitVector from_unit(Point v, double tol = 1e-12);

  const Point& dir() const { return dir_; }
  Eigen::Index size() const { return dir_.size(); }
  double operator[](Eigen::Index i) const { return dir_[i]; }

private:
  explicit UnitVector(Point v) : dir_(std::move(v)) {}
  Point dir_;
};

enum class Closedness { open, closed };

struct Ball {
  Point center;
  double radius = 0.0;
  Closedness closedness = Closedness::closed;

  bool contains(const Point& p, double slack = 0.0) const;
};

/// Axis-aligned box [lo_i, hi_i] used to clip unbounded boundaries.
struct Window {
  std::vector<std::pair<double, double>> bounds;

  int dimension() const { return static_cast<int>(bounds.size()); }
  bool contains(const Point& p, double slack = 0.0) const;
  double diameter() const;
  static Window cube(int dimension, double lo, double hi);
};

struct Projection {
  double distance = 0.0;
  Point nearest;
};

void require_dimension(const Point& p, int dimension);

/// Lexicographic order on coordinates, used to break projection ties.
bool lexicographically_less(const Point& a, const Point& b);

} // namespace proxgeo
