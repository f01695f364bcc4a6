#include "proxgeo/covering.hpp"

#include "detail.hpp"
#include "proxgeo/sampling.hpp"
#include "proxgeo/set_queries.hpp"
#include "proxgeo/sphere_conditions.hpp"

#include <algorithm>
#include <cfloat>
#include <charconv>
#include <cmath>

namespace proxgeo {

const char* to_string(CoverCase c) {
  switch (c) {
  case CoverCase::Case1: return "Case1";
  case CoverCase::Case2: return "Case2";
  case CoverCase::Case3_y_eq_x: return "Case3_y_eq_x";
  case CoverCase::Case3_y_near: return "Case3_y_near";
  case CoverCase::Case3_y_far: return "Case3_y_far";
  }
  return "Case1";
}

double r_epsilon(double r0, double d, double r) {
  if (!(r0 > 0) || !(r > 0)) throw GeometryError("r_epsilon: radii must be positive");
  if (!(d >= r)) throw GeometryError("r_epsilon: requires |y_eps - x| >= r");
  return r0 * r0 * d / (d * d + r0 * r0 - r * r);
}

bool verify_claim1(const Point& x, double r0, const Point& y, double r, double r_eps,
                   std::size_t samples, std::uint64_t seed) {
  const Point u = (y - x).normalized();
  const Point c = x + r_eps * u;
  const sampling::Halton h(static_cast<int>(x.size()), seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const Point p = c + r_eps * sampling::unit_ball_point(h, i);
    if ((p - x).norm() >= r0 && (p - y).norm() >= r) return false;
  }
  return true;
}

namespace {

// Point of bdry S on [inside, outside] by membership bisection.
std::pair<Point, Point> bisect_boundary(const SetOracle& set, Point inside, Point outside,
                                        const Tolerances& tol) {
  const double width = tol.tol_boundary * detail::scale_of(outside);
  for (int i = 0; i < tol.max_bisection_iters && (outside - inside).norm() > width; ++i) {
    const Point mid = 0.5 * (inside + outside);
    if (set.contains(mid))
      inside = mid;
    else
      outside = mid;
  }
  return {inside, outside};
}

void finish_ball(const SetOracle& set, CoverTrace& t, const Point& center, double r,
                 const Tolerances& tol) {
  t.ball = Ball{center, r / 2, Closedness::closed};
  const bool holds_x = (t.x - center).norm() <= r / 2 + 1e-12 * detail::scale_of(center);
  const double dist = set.project(center).distance;
  t.verified = holds_x && dist >= r / 2 - tol.tol_emptiness;
}

bool run_case3(const SetOracle& set, CoverTrace& t, double r, double eps,
               const CoverOptions& options, const Tolerances& tol) {
  const Point& x = t.x;
  std::optional<Point> z;
  for (int k = 0; k <= options.max_eps_halvings && !z; ++k) {
    if (k > 0) eps /= 2;
    z = interior_probe(set, t.s0, eps, tol);
  }
  t.eps = eps;
  if (!z) {
    t.error = "interior probe exhausted near s0";
    return false;
  }
  t.z_eps = *z;

  auto [inside, outside] = bisect_boundary(set, *z, x, tol);
  Point s = inside;
  if (set.capabilities().exact_projection) s = set.project(outside).nearest;

  const auto normals =
      sample_proximal_normals(set, s, options.normal_budget, options.seed, tol, false);
  const Point toward_x = (x - s).normalized();
  const ProximalNormalCandidate* best = nullptr;
  double best_score = -kInfinity;
  for (const auto& c : normals) {
    if (!realized_by_sphere(set, c.base, c.dir, r, tol)) continue;
    const double score = c.dir.dir().dot(toward_x);
    if (score > best_score) {
      best_score = score;
      best = &c;
    }
  }
  t.s_eps = s;
  if (!best) {
    t.error = normals.empty() ? "no proximal normal found at s_eps"
                              : "extended-condition-violated at s_eps";
    return false;
  }
  s = best->base;
  t.s_eps = s;
  t.zeta_eps = best->dir.dir();
  const Point y = s + r * best->dir.dir();
  t.y_eps = y;

  const Point xi = (*z - x).normalized();
  t.claim2 = xi.dot(best->dir.dir()) < eps / (2 * r) + tol.tol_emptiness;

  const double d = (y - x).norm();
  if (d <= tol.tol_boundary) {
    t.cover_case = CoverCase::Case3_y_eq_x;
    finish_ball(set, t, x, r, tol);
  } else if (d < r) {
    t.cover_case = CoverCase::Case3_y_near;
    finish_ball(set, t, x + (r / 2) * (y - x) / d, r, tol);
  } else {
    t.cover_case = CoverCase::Case3_y_far;
    const double re = r_epsilon(t.r0, d, r);
    t.r_eps = re;
    t.claim3 = re > r / 2;
    t.claim1 = verify_claim1(x, t.r0, y, r, re, options.claim1_samples, options.seed);
    finish_ball(set, t, x + (r / 2) * (y - x) / d, r, tol);
  }
  return true;
}

} // namespace

CoverTrace cover_point(const SetOracle& set, const Point& x, double r, const CoverOptions& options,
                       const Tolerances& tol) {
  if (!(r > 0)) throw GeometryError("cover_point: radius must be positive");
  require_dimension(x, set.dimension());
  if (set.contains(x)) throw GeometryError("cover_point: x lies in S");

  CoverTrace t;
  t.x = x;
  const Projection pr = distance_and_project(set, x);
  t.s0 = pr.nearest;
  t.r0 = pr.distance;
  t.ball = Ball{x, r / 2, Closedness::closed};

  if (t.r0 > r / 2) {
    t.cover_case = CoverCase::Case1;
    finish_ball(set, t, x, r, tol);
    return t;
  }

  const Point zeta0 = (x - t.s0) / t.r0;
  const double eps0 = std::max(t.r0 * t.r0 * t.r0 / (4 * r * r),
                               1e3 * DBL_EPSILON * detail::scale_of(t.s0));
  BoundaryClass cls;
  try {
    cls = classify_boundary(set, t.s0, eps0, tol);
  } catch (const GeometryError& e) {
    t.error = std::string("classification failed at s0: ") + e.what();
    return t;
  }

  if (cls == BoundaryClass::ThinBoundary) {
    t.zeta0 = zeta0;
    if (!realized_by_sphere(set, t.s0, zeta0, r, tol)) {
      t.error = "extended-condition-violated at s0";
      return t;
    }
    t.cover_case = CoverCase::Case2;
    const Point center = x + (r / 2) * zeta0;
    const Point far_center = t.s0 + r * zeta0;
    t.case2_lemma = (center - far_center).norm() <= (r - t.r0) - r / 2 + 1e-12 * detail::scale_of(x);
    finish_ball(set, t, center, r, tol);
    return t;
  }

  if (!run_case3(set, t, r, eps0, options, tol)) return t;
  if (!t.verified) {
    // The proof's inequalities hold with O(eps) slack; shrink eps once.
    CoverTrace retry = t;
    retry.error.clear();
    if (run_case3(set, retry, r, eps0 / 4, options, tol) && retry.verified) return retry;
    t.error = "final ball failed the emptiness check";
    return t;
  }
  if (t.claim1 == false) t.error = "claim 1 containment failed";
  if (t.claim2 == false) t.error = "claim 2 inner-product bound failed";
  if (t.claim3 == false) t.error = "claim 3 radius bound failed";
  return t;
}

RegularClosedTrace cover_point_regular_closed(const SetOracle& set, const Point& x, double r,
                                              double r_prime, const CoverOptions& options,
                                              const Tolerances& tol) {
  if (!(r_prime > 0) || !(r_prime < r / 2))
    throw GeometryError("cover_point_regular_closed: requires 0 < r' < r/2");
  if (!set.regular_closed()) throw GeometryError(set.kind() + " is not regular closed");
  const OraclePtr closure = set.closure_of_interior();
  if (!closure) throw GeometryError(set.kind() + ": no cl(int S) companion available");
  if (set.contains(x)) throw GeometryError("cover_point_regular_closed: x lies in S");

  RegularClosedTrace out;
  out.upstream = cover_point(*closure, x, r, options, tol);
  if (!out.upstream.verified) {
    out.error = out.upstream.error.empty() ? "upstream ball not verified" : out.upstream.error;
    return out;
  }
  const Point& y = out.upstream.ball.center;
  const double d = (y - x).norm();
  if (d < r_prime) {
    out.branch = 1;
    out.ball = Ball{y, r_prime, Closedness::closed};
  } else {
    out.branch = 2;
    out.ball = Ball{x + r_prime * (y - x) / d, r_prime, Closedness::closed};
  }
  const bool holds_x = (x - out.ball.center).norm() <= r_prime + 1e-12 * detail::scale_of(x);
  out.verified = holds_x && set.project(out.ball.center).distance >= r_prime - tol.tol_emptiness;
  if (!out.verified) out.error = "final ball failed the emptiness check";
  return out;
}

// ---------------------------------------------------------------------------
// Grid

std::size_t GridSpec::Axis::count() const {
  return static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

namespace {

double parse_number(const std::string& s, const std::string& whole) {
  double v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v))
    throw GeometryError("malformed grid spec '" + whole + "'");
  return v;
}

} // namespace

GridSpec GridSpec::parse(const std::string& text, int dimension) {
  GridSpec spec;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t cut = text.find('x', start);
    if (cut == std::string::npos) cut = text.size();
    const std::string part = text.substr(start, cut - start);
    const auto c1 = part.find(':');
    const auto c2 = c1 == std::string::npos ? c1 : part.find(':', c1 + 1);
    if (c2 == std::string::npos || part.find(':', c2 + 1) != std::string::npos)
      throw GeometryError("malformed grid spec '" + text + "' (expected lo:hi:step)");
    Axis a{parse_number(part.substr(0, c1), text), parse_number(part.substr(c1 + 1, c2 - c1 - 1), text),
           parse_number(part.substr(c2 + 1), text)};
    if (!(a.step > 0) || !(a.hi >= a.lo)) throw GeometryError("grid axis needs lo <= hi and step > 0");
    spec.axes.push_back(a);
    start = cut + 1;
  }
  if (spec.axes.size() == 1 && dimension > 1) spec.axes.assign(static_cast<std::size_t>(dimension), spec.axes[0]);
  if (static_cast<int>(spec.axes.size()) != dimension)
    throw GeometryError("grid spec has " + std::to_string(spec.axes.size()) + " axes, scene has dimension " +
                        std::to_string(dimension));
  return spec;
}

std::size_t GridSpec::size() const {
  std::size_t n = 1;
  for (const auto& a : axes) n *= a.count();
  return n;
}

Point GridSpec::point(std::size_t index) const {
  // The first axis varies slowest.
  Point p(static_cast<Eigen::Index>(axes.size()));
  for (std::size_t k = axes.size(); k-- > 0;) {
    const std::size_t c = axes[k].count();
    p[static_cast<Eigen::Index>(k)] = axes[k].at(index % c);
    index /= c;
  }
  return p;
}

RegionResult cover_region(const SetOracle& set, double r, const GridSpec& grid,
                          const CoverOptions& options, const Tolerances& tol) {
  if (static_cast<int>(grid.axes.size()) != set.dimension())
    throw GeometryError("cover_region: grid dimension does not match the set");
  RegionResult out;
  out.r = r;
  out.grid_points = grid.size();
  for (std::size_t i = 0; i < out.grid_points; ++i) {
    const Point x = grid.point(i);
    if (set.contains(x)) continue;
    CoverTrace t;
    try {
      t = cover_point(set, x, r, options, tol);
    } catch (const GeometryError& e) {
      t.x = x;
      t.error = e.what();
    }
    if (t.cover_case && t.verified && t.error.empty()) {
      ++out.case_counts[static_cast<std::size_t>(*t.cover_case)];
      ++out.verified;
    } else {
      out.failures.push_back({i, x, t.error.empty() ? "ball not verified" : t.error});
    }
    out.grid_indices.push_back(i);
    out.traces.push_back(std::move(t));
  }
  return out;
}

} // namespace proxgeo
