#pragma once

#include "proxgeo/set_oracle.hpp"

#include <optional>
#include <string>
#include <vector>

namespace proxgeo {

/// Optional parameters of the gallery constructors; unset fields take the
/// documented defaults.
struct GalleryParams {
  std::optional<int> dimension;           // disk, halfspace, line: default 2
  std::optional<Point> center;            // disk: origin
  std::optional<double> radius;           // disk: 1; simplex_ball_complement: r = 1
  std::optional<Point> normal;            // halfspace: e_n, i.e. {x_n <= offset}
  std::optional<double> offset;           // halfspace: 0
  std::optional<Point> point;             // line: origin
  std::optional<Point> direction;         // line: e_1
  std::optional<Point> a, b;              // segment: (1,0), (2,0)
  std::optional<double> c;                // example3_surrogate: 1
  std::optional<int> n;                   // simplex_ball_complement: 2
  std::vector<Ball> balls;                // complement_of_balls: centers (±0.8, 0), radius 1.5
  std::vector<OraclePtr> parts;           // union
};

/// Ids: example1, example2, example3_surrogate, disk, halfspace, line, segment,
/// complement_of_balls, union, simplex_ball_complement.
OraclePtr make_gallery_set(const std::string& id, const GalleryParams& params = {});

std::vector<std::string> gallery_ids();

/// Centers C_0..C_n of n+1 pairwise tangent r-balls around the origin of R^n.
struct SimplexConfig {
  int n = 0;
  double r = 0.0;
  std::vector<Point> centers;
};

SimplexConfig simplex_centers(int n, double r);

/// n r / (2 sqrt(n^2 - 1)).
double tightness_formula(int n, double r);

/// sup { rho : exists c with p in B̄(c; rho) ⊆ ∪ B(c_i; r_i) }, estimated by a
/// multistart compass search over centers; the containment radius at a center
/// is its exact distance to the complement of the union. Throws when p is not
/// covered by the union.
double max_inscribed_radius_through_point(const std::vector<Ball>& balls, const Point& p,
                                          int budget = 256);

struct TightnessRow {
  int n = 0;
  double r = 0.0;
  double formula = 0.0;
  std::optional<double> measured;
  std::string error; // optimizer or precondition failure
  double abs_error() const;
  double rel_error() const;
};

TightnessRow tightness_row(int n, double r, int budget = 256);

} // namespace proxgeo
