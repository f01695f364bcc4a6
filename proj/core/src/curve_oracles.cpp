#include "proxgeo/oracles.hpp"

#include "detail.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/minima.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace proxgeo {

namespace {

constexpr double kExpClamp = 700.0;

Point point2(double x, double y) {
  Point p(2);
  p << x, y;
  return p;
}

// Real roots of t^3 + a t + b = 0.
std::vector<double> depressed_cubic_roots(double a, double b) {
  std::vector<double> roots;
  const double disc = b * b / 4 + a * a * a / 27;
  if (disc > 0) {
    const double s = std::sqrt(disc);
    roots.push_back(std::cbrt(-b / 2 + s) + std::cbrt(-b / 2 - s));
  } else if (a == 0) {
    roots.push_back(0.0);
  } else {
    const double m = 2 * std::sqrt(-a / 3);
    const double arg = std::clamp(3 * b / (a * m), -1.0, 1.0);
    const double theta = std::acos(arg) / 3;
    for (int k = 0; k < 3; ++k) roots.push_back(m * std::cos(theta - 2 * std::numbers::pi * k / 3));
  }
  return roots;
}

// Parameters t of critical points of |(t, c t^2) - (px, py)|^2, plus `extra`,
// restricted to [lo, hi]; returns the one with smallest distance.
struct ParabolaHit {
  double t;
  double distance;
};

ParabolaHit nearest_on_parabola(double c, double px, double py, double lo, double hi) {
  // g'(t)/2 = 2c^2 t^3 + (1 - 2 c py) t - px
  const double a = (1 - 2 * c * py) / (2 * c * c);
  const double b = -px / (2 * c * c);
  std::vector<double> ts = depressed_cubic_roots(a, b);
  for (double& t : ts) {
    for (int k = 0; k < 4; ++k) {
      const double f = t * t * t + a * t + b;
      const double df = 3 * t * t + a;
      if (df == 0) break;
      const double next = t - f / df;
      if (!std::isfinite(next)) break;
      t = next;
    }
  }
  if (std::isfinite(lo)) ts.push_back(lo);
  if (std::isfinite(hi)) ts.push_back(hi);
  ParabolaHit best{0.0, kInfinity};
  for (double t : ts) {
    t = std::clamp(t, lo, hi);
    const double d = std::hypot(t - px, c * t * t - py);
    if (d < best.distance || (d == best.distance && t < best.t)) best = {t, d};
  }
  return best;
}

double arc_length(auto&& speed, double lo, double hi) {
  if (!(hi > lo)) return 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(speed, lo, hi, 8, 1e-10);
}

// Curve parameters for `count` samples on [lo, hi], both endpoints included when possible.
std::vector<double> curve_parameters(std::size_t count, std::uint64_t seed, double lo, double hi) {
  if (count >= 2 && seed == 0) {
    std::vector<double> ts(count);
    for (std::size_t i = 0; i < count; ++i)
      ts[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    return ts;
  }
  return detail::stratified(count, seed, lo, hi);
}

std::pair<double, double> axis_range(const Window& window, int axis, double fallback) {
  if (window.dimension() <= axis) return {-fallback, fallback};
  return window.bounds[static_cast<std::size_t>(axis)];
}

// Parameter range of t |-> (t, c t^2) inside the window.
std::pair<double, double> parabola_range(double c, const Window& window) {
  auto [lo, hi] = axis_range(window, 0, 1.0);
  const auto [ylo, yhi] = axis_range(window, 1, 1.0);
  const double ymax = std::max(std::abs(ylo), std::abs(yhi));
  const double tmax = std::sqrt(ymax / c);
  return {std::max(lo, -tmax), std::min(hi, tmax)};
}

UnitVector parabola_up_normal(double c, double t) {
  return UnitVector::normalized(point2(-2 * c * t, 1.0));
}

} // namespace

// ---------------------------------------------------------------------------
// ExpGraph

ExpGraph::ExpGraph(int sign) : sign_(sign >= 0 ? 1 : -1) {}

Capabilities ExpGraph::capabilities() const { return {true, true, true, true}; }

double ExpGraph::nearest_parameter(const Point& p) const {
  require_dimension(p, 2);
  const double px = p[0];
  const double q = sign_ * p[1];
  auto g = [&](double t) {
    const double e = std::exp(t);
    return (t - px) * (t - px) + (e - q) * (e - q);
  };

  // The nearest point is no farther than the vertical drop.
  const double d0 = std::abs(std::exp(std::clamp(px, -kExpClamp, kExpClamp)) - q);
  double lo = px - d0;
  double hi = px + d0;
  if (q + d0 > 0) hi = std::min(hi, std::log(q + d0));
  if (q - d0 > 0) lo = std::max(lo, std::log(q - d0));
  lo = std::clamp(lo, -kExpClamp, kExpClamp);
  hi = std::clamp(hi, -kExpClamp, kExpClamp);
  if (hi < lo) std::swap(lo, hi);
  if (hi - lo < 1e-300) return lo;

  constexpr int kStarts = 64;
  std::array<double, kStarts + 1> ts{};
  std::array<double, kStarts + 1> gs{};
  for (int i = 0; i <= kStarts; ++i) {
    ts[i] = lo + (hi - lo) * i / kStarts;
    gs[i] = g(ts[i]);
  }
  double best_t = ts[0];
  double best_g = gs[0];
  auto consider = [&](double t) {
    const double v = g(t);
    if (v < best_g) {
      best_g = v;
      best_t = t;
    }
  };
  consider(ts[kStarts]);
  for (int i = 0; i <= kStarts; ++i) {
    const bool left = i == 0 || gs[i] <= gs[i - 1];
    const bool right = i == kStarts || gs[i] <= gs[i + 1];
    if (!(left && right)) continue;
    const double a = ts[std::max(0, i - 1)];
    const double b = ts[std::min(kStarts, i + 1)];
    const auto r = boost::math::tools::brent_find_minima(g, a, b, std::numeric_limits<double>::digits);
    consider(r.first);
  }
  // Newton polish on g'.
  double t = best_t;
  for (int k = 0; k < 8; ++k) {
    const double e = std::exp(t);
    const double d1 = 2 * (t - px) + 2 * (e * e - q * e);
    const double d2 = 2 + 2 * (2 * e * e - q * e);
    if (!(d2 > 0)) break;
    const double next = t - d1 / d2;
    if (!std::isfinite(next) || std::abs(next - t) > (hi - lo)) break;
    t = next;
  }
  if (g(t) <= best_g) best_t = t;
  return best_t;
}

bool ExpGraph::contains(const Point& p) const {
  require_dimension(p, 2);
  const double slack = kThinMembershipSlack * detail::scale_of(p);
  // Far from the graph vertically and horizontally: cheap rejection.
  const double e = std::exp(std::clamp(p[0], -kExpClamp, kExpClamp));
  if (std::abs(sign_ * p[1] - e) > slack && sign_ * p[1] <= 0) return false;
  return project(p).distance <= slack;
}

Projection ExpGraph::project(const Point& p) const {
  const double t = nearest_parameter(p);
  Point q = point2(t, sign_ * std::exp(t));
  return {(p - q).norm(), std::move(q)};
}

std::vector<UnitVector> ExpGraph::normal_generators(const Point& x) const {
  const double e = std::exp(std::clamp(x[0], -kExpClamp, kExpClamp));
  const Point n = point2(-sign_ * e, 1.0);
  return {UnitVector::normalized(n), UnitVector::normalized(-n)};
}

std::optional<std::vector<Point>> ExpGraph::parametrized_boundary(std::size_t count,
                                                                  std::uint64_t seed,
                                                                  const Window& window) const {
  const auto [lo, hi] = axis_range(window, 0, 5.0);
  std::vector<Point> pts;
  for (double t : curve_parameters(count, seed, lo, hi)) pts.push_back(point2(t, sign_ * std::exp(t)));
  return pts;
}

double ExpGraph::boundary_measure(const Window& window) const {
  const auto [lo, hi] = axis_range(window, 0, 5.0);
  return arc_length([](double t) { return std::sqrt(1 + std::exp(2 * t)); }, lo, hi);
}

OraclePtr ExpGraph::closure_of_interior() const { return std::make_shared<EmptySet>(2); }

std::vector<Polyline> ExpGraph::outline(const Window& window) const {
  const auto [lo, hi] = axis_range(window, 0, 5.0);
  const auto [ylo, yhi] = axis_range(window, 1, 1e300);
  Polyline line;
  std::vector<Polyline> lines;
  for (int i = 0; i <= 512; ++i) {
    const double t = lo + (hi - lo) * i / 512;
    const double y = sign_ * std::exp(t);
    if (y < ylo || y > yhi) {
      if (line.size() > 1) lines.push_back(std::move(line));
      line.clear();
      continue;
    }
    line.push_back(point2(t, y));
  }
  if (line.size() > 1) lines.push_back(std::move(line));
  return lines;
}

// ---------------------------------------------------------------------------
// CuspRegion

CuspRegion::CuspRegion(double c) : c_(c) {
  if (!(c > 0) || !std::isfinite(c)) throw GeometryError("cusp coefficient must be positive");
}

Capabilities CuspRegion::capabilities() const { return {true, true, true, true}; }

bool CuspRegion::contains(const Point& p) const {
  require_dimension(p, 2);
  return p[0] <= 0 && std::abs(p[1]) <= c_ * p[0] * p[0];
}

bool CuspRegion::in_interior(const Point& p) const {
  return p[0] < 0 && std::abs(p[1]) < c_ * p[0] * p[0];
}

Projection CuspRegion::project(const Point& p) const {
  require_dimension(p, 2);
  if (contains(p)) return {0.0, p};
  const auto up = nearest_on_parabola(c_, p[0], p[1], -kInfinity, 0.0);
  const auto down = nearest_on_parabola(c_, p[0], -p[1], -kInfinity, 0.0);
  Projection best;
  bool have = false;
  detail::keep_nearest(best, have, up.distance, point2(up.t, c_ * up.t * up.t));
  detail::keep_nearest(best, have, down.distance, point2(down.t, -c_ * down.t * down.t));
  return best;
}

std::vector<UnitVector> CuspRegion::normal_generators(const Point& x) const {
  const double tip = 1e-12;
  if (std::abs(x[0]) <= tip)
    return {UnitVector::normalized(point2(0, 1)), UnitVector::normalized(point2(0, -1)),
            UnitVector::normalized(point2(1, 0))};
  const UnitVector n = parabola_up_normal(c_, x[0]);
  if (x[1] >= 0) return {n};
  return {UnitVector::normalized(point2(n[0], -n[1]))};
}

std::optional<std::vector<Point>> CuspRegion::parametrized_boundary(std::size_t count,
                                                                    std::uint64_t seed,
                                                                    const Window& window) const {
  auto [lo, hi] = parabola_range(c_, window);
  hi = std::min(hi, 0.0);
  std::vector<Point> pts;
  if (lo > hi) return pts;
  const std::size_t upper = (count + 1) / 2;
  for (double t : curve_parameters(upper, seed, lo, hi)) pts.push_back(point2(t, c_ * t * t));
  for (double t : curve_parameters(count - upper, seed, lo, hi)) pts.push_back(point2(t, -c_ * t * t));
  return pts;
}

double CuspRegion::boundary_measure(const Window& window) const {
  auto [lo, hi] = parabola_range(c_, window);
  hi = std::min(hi, 0.0);
  const double c = c_;
  return 2 * arc_length([c](double t) { return std::sqrt(1 + 4 * c * c * t * t); }, lo, hi);
}

OraclePtr CuspRegion::closure_of_interior() const { return std::make_shared<CuspRegion>(*this); }

std::vector<Polyline> CuspRegion::outline(const Window& window) const {
  auto [lo, hi] = parabola_range(c_, window);
  hi = std::min(hi, 0.0);
  Polyline line;
  for (int i = 0; i <= 256; ++i) {
    const double t = lo + (hi - lo) * i / 256;
    line.push_back(point2(t, c_ * t * t));
  }
  for (int i = 256; i >= 0; --i) {
    const double t = lo + (hi - lo) * i / 256;
    line.push_back(point2(t, -c_ * t * t));
  }
  return {line};
}

// ---------------------------------------------------------------------------
// CuspWithWhiskers

CuspWithWhiskers::CuspWithWhiskers(double c) : c_(c) {
  if (!(c > 0) || !std::isfinite(c)) throw GeometryError("cusp coefficient must be positive");
}

Capabilities CuspWithWhiskers::capabilities() const { return {true, true, true, true}; }

bool CuspWithWhiskers::contains(const Point& p) const {
  require_dimension(p, 2);
  if (p[0] <= 0 && std::abs(p[1]) <= c_ * p[0] * p[0]) return true;
  return project(p).distance <= kThinMembershipSlack * detail::scale_of(p);
}

bool CuspWithWhiskers::in_interior(const Point& p) const {
  return p[0] < 0 && std::abs(p[1]) < c_ * p[0] * p[0];
}

Projection CuspWithWhiskers::project(const Point& p) const {
  require_dimension(p, 2);
  if (p[0] <= 0 && std::abs(p[1]) <= c_ * p[0] * p[0]) return {0.0, p};
  // bdry S lies on the two full parabolas.
  const auto up = nearest_on_parabola(c_, p[0], p[1], -kInfinity, kInfinity);
  const auto down = nearest_on_parabola(c_, p[0], -p[1], -kInfinity, kInfinity);
  Projection best;
  bool have = false;
  detail::keep_nearest(best, have, up.distance, point2(up.t, c_ * up.t * up.t));
  detail::keep_nearest(best, have, down.distance, point2(down.t, -c_ * down.t * down.t));
  return best;
}

std::vector<UnitVector> CuspWithWhiskers::normal_generators(const Point& x) const {
  const double tip = 1e-12;
  if (std::abs(x[0]) <= tip)
    return {UnitVector::normalized(point2(0, 1)), UnitVector::normalized(point2(0, -1))};
  const UnitVector n = parabola_up_normal(c_, x[0]);
  const UnitVector outward = x[1] >= 0 ? n : UnitVector::normalized(point2(n[0], -n[1]));
  if (x[0] < 0) return {outward};
  return {outward, UnitVector::normalized(-outward.dir())};
}

std::optional<BoundaryClass> CuspWithWhiskers::boundary_class(const Point& x) const {
  return x[0] > 1e-12 ? BoundaryClass::ThinBoundary : BoundaryClass::InteriorBoundary;
}

std::optional<std::vector<Point>> CuspWithWhiskers::parametrized_boundary(
    std::size_t count, std::uint64_t seed, const Window& window) const {
  const auto [lo, hi] = parabola_range(c_, window);
  std::vector<Point> pts;
  if (lo > hi) return pts;
  const std::size_t upper = (count + 1) / 2;
  for (double t : curve_parameters(upper, seed, lo, hi)) pts.push_back(point2(t, c_ * t * t));
  for (double t : curve_parameters(count - upper, seed, lo, hi)) pts.push_back(point2(t, -c_ * t * t));
  return pts;
}

double CuspWithWhiskers::boundary_measure(const Window& window) const {
  const auto [lo, hi] = parabola_range(c_, window);
  const double c = c_;
  return 2 * arc_length([c](double t) { return std::sqrt(1 + 4 * c * c * t * t); }, lo, hi);
}

OraclePtr CuspWithWhiskers::closure_of_interior() const { return std::make_shared<CuspRegion>(c_); }

std::vector<Polyline> CuspWithWhiskers::outline(const Window& window) const {
  const auto [lo, hi] = parabola_range(c_, window);
  Polyline up, down;
  for (int i = 0; i <= 256; ++i) {
    const double t = lo + (hi - lo) * i / 256;
    up.push_back(point2(t, c_ * t * t));
    down.push_back(point2(t, -c_ * t * t));
  }
  return {up, down};
}

} // namespace proxgeo
