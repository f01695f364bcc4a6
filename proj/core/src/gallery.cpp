#include "proxgeo/gallery.hpp"

#include "proxgeo/oracles.hpp"
#include "proxgeo/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace proxgeo {

namespace {

Point unit(int n, int k) {
  Point e = Point::Zero(n);
  e[k] = 1.0;
  return e;
}

Point vec2(double x, double y) {
  Point p(2);
  p << x, y;
  return p;
}

std::vector<Ball> simplex_balls(int n, double r) {
  std::vector<Ball> balls;
  for (auto& c : simplex_centers(n, r).centers) balls.push_back({c, r, Closedness::open});
  return balls;
}

} // namespace

std::vector<std::string> gallery_ids() {
  return {"example1", "example2", "example3_surrogate", "disk", "halfspace", "line",
          "segment", "complement_of_balls", "union", "simplex_ball_complement"};
}

OraclePtr make_gallery_set(const std::string& id, const GalleryParams& params) {
  const int dim = params.dimension.value_or(2);
  if (dim < 1) throw GeometryError("dimension must be at least 1");

  if (id == "example1") {
    return std::make_shared<UnionOracle>(
        std::vector<OraclePtr>{std::make_shared<ExpGraph>(1), std::make_shared<ExpGraph>(-1)}, "example1");
  }
  if (id == "example2") {
    return std::make_shared<UnionOracle>(
        std::vector<OraclePtr>{std::make_shared<ClosedBall>(Point::Zero(2), 1.0),
                               std::make_shared<LineSet>(LineSet::segment(vec2(1, 0), vec2(2, 0)))},
        "example2");
  }
  if (id == "example3_surrogate") return std::make_shared<CuspWithWhiskers>(params.c.value_or(1.0));
  if (id == "disk") {
    const Point c = params.center.value_or(Point::Zero(dim));
    return std::make_shared<ClosedBall>(c, params.radius.value_or(1.0));
  }
  if (id == "halfspace") {
    const Point a = params.normal.value_or(unit(dim, dim - 1));
    return std::make_shared<ClosedHalfspace>(a, params.offset.value_or(0.0));
  }
  if (id == "line") {
    const Point p = params.point.value_or(Point::Zero(dim));
    const Point d = params.direction.value_or(unit(static_cast<int>(p.size()), 0));
    return std::make_shared<LineSet>(LineSet::line(p, d));
  }
  if (id == "segment") {
    return std::make_shared<LineSet>(
        LineSet::segment(params.a.value_or(vec2(1, 0)), params.b.value_or(vec2(2, 0))));
  }
  if (id == "complement_of_balls") {
    std::vector<Ball> balls = params.balls;
    if (balls.empty())
      balls = {{vec2(-0.8, 0), 1.5, Closedness::open}, {vec2(0.8, 0), 1.5, Closedness::open}};
    return std::make_shared<ComplementOfOpenBalls>(std::move(balls));
  }
  if (id == "union") return std::make_shared<UnionOracle>(params.parts);
  if (id == "simplex_ball_complement")
    return std::make_shared<ComplementOfOpenBalls>(simplex_balls(params.n.value_or(2), params.radius.value_or(1.0)));
  throw GeometryError("unknown gallery id '" + id + "'");
}

SimplexConfig simplex_centers(int n, double r) {
  if (n < 2) throw GeometryError("simplex_centers: n must be at least 2");
  if (!(r > 0)) throw GeometryError("simplex_centers: r must be positive");
  SimplexConfig cfg{n, r, {}};
  const double scale = -n * r / std::sqrt(static_cast<double>(n) * (n - 1));
  for (int i = 0; i <= n; ++i) {
    Point c = Point::Zero(n);
    // e_0 := 0, coordinates are 1-based.
    if (i >= 1) c[i - 1] = std::sqrt(static_cast<double>(i) / (i + 1));
    for (int k = i + 1; k <= n; ++k) c[k - 1] = -1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
    cfg.centers.push_back(scale * c);
  }

  const double norm = n * r / std::sqrt(static_cast<double>(n) * n - 1);
  const double side = (cfg.centers[0] - cfg.centers[1]).norm();
  for (int i = 0; i <= n; ++i) {
    if (std::abs(cfg.centers[i].norm() - norm) > 1e-12 * norm)
      throw GeometryError("simplex_centers: norm invariant violated");
    for (int j = i + 1; j <= n; ++j)
      if (std::abs((cfg.centers[i] - cfg.centers[j]).norm() - side) > 1e-12 * side)
        throw GeometryError("simplex_centers: centers are not equidistant");
  }
  return cfg;
}

double tightness_formula(int n, double r) {
  return n * r / (2 * std::sqrt(static_cast<double>(n) * n - 1));
}

double max_inscribed_radius_through_point(const std::vector<Ball>& balls, const Point& p, int budget) {
  if (balls.empty()) throw GeometryError("max_inscribed_radius_through_point: no balls");
  const bool covered = std::any_of(balls.begin(), balls.end(), [&](const Ball& b) {
    return (p - b.center).norm() < b.radius;
  });
  if (!covered) throw GeometryError("max_inscribed_radius_through_point: point is not in the union");

  const ComplementOfOpenBalls complement(balls);
  const int n = static_cast<int>(p.size());
  // Radius of the largest closed ball at c inside the union, 0 outside it.
  auto reach = [&](const Point& c) { return complement.contains(c) ? 0.0 : complement.project(c).distance; };
  auto feasible = [&](const Point& c, double rho) { return (p - c).norm() <= rho; };

  std::vector<Point> starts{p};
  for (const auto& b : balls) {
    starts.push_back(b.center);
    starts.push_back(0.5 * (p + b.center));
  }

  double best = 0.0;
  Point best_center = p;
  double largest = 0.0;
  for (const auto& b : balls) largest = std::max(largest, b.radius);
  for (Point c : starts) {
    double val = reach(c);
    if (!feasible(c, val)) continue;
    double step = largest / 2;
    while (step > 1e-12 * largest) {
      bool moved = false;
      for (int k = 0; k < n && !moved; ++k) {
        for (double s : {step, -step}) {
          Point t = c;
          t[k] += s;
          const double v = reach(t);
          if (v > val && feasible(t, v)) {
            c = t;
            val = v;
            moved = true;
            break;
          }
        }
      }
      if (!moved) step /= 2;
    }
    if (val > best) {
      best = val;
      best_center = c;
    }
  }

  // Sampled containment of the winning sphere guards the distance computation.
  const sampling::Halton h(n);
  auto in_union = [&](const Point& q) {
    return std::any_of(balls.begin(), balls.end(), [&](const Ball& b) { return (q - b.center).norm() < b.radius; });
  };
  for (int attempt = 0; attempt < 64; ++attempt) {
    bool ok = true;
    for (int i = 0; i < budget && ok; ++i)
      ok = in_union(best_center + best * (1 - 1e-9) * sampling::unit_sphere_point(h, static_cast<std::uint64_t>(i)));
    if (ok) break;
    best *= 1 - 1e-6;
  }
  return best;
}

double TightnessRow::abs_error() const {
  return measured ? std::abs(*measured - formula) : std::numeric_limits<double>::quiet_NaN();
}

double TightnessRow::rel_error() const { return abs_error() / formula; }

TightnessRow tightness_row(int n, double r, int budget) {
  TightnessRow row;
  row.n = n;
  row.r = r;
  row.formula = tightness_formula(n, r);
  try {
    row.measured = max_inscribed_radius_through_point(simplex_balls(n, r), Point::Zero(n), budget);
  } catch (const GeometryError& e) {
    row.error = e.what();
  }
  return row;
}

} // namespace proxgeo
