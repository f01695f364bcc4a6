#include "proxgeo/oracles.hpp"

#include "detail.hpp"
#include "proxgeo/sampling.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace proxgeo {

namespace detail {

std::vector<double> stratified(std::size_t count, std::uint64_t seed, double lo, double hi) {
  std::vector<double> t(count);
  const double u = seed == 0 ? 0.5 : sampling::seed_offset(seed);
  for (std::size_t i = 0; i < count; ++i)
    t[i] = lo + (hi - lo) * (static_cast<double>(i) + u) / static_cast<double>(count);
  return t;
}

std::vector<Point> orthogonal_complement(const Point& d) {
  const Eigen::Index n = d.size();
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(n, n);
  m.col(0) = d;
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(m);
  const Eigen::MatrixXd q = qr.householderQ();
  std::vector<Point> basis;
  for (Eigen::Index i = 1; i < n; ++i) basis.emplace_back(q.col(i));
  return basis;
}

double unit_sphere_area(int n) {
  return 2.0 * std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0);
}

void keep_nearest(Projection& best, bool& have, double distance, const Point& candidate) {
  if (!have) {
    best = {distance, candidate};
    have = true;
    return;
  }
  const double tie = 1e-15 * std::max(1.0, best.distance);
  if (distance < best.distance - tie ||
      (distance <= best.distance + tie && lexicographically_less(candidate, best.nearest))) {
    best = {distance, candidate};
  }
}

std::vector<UnitVector> dedupe(std::vector<UnitVector> dirs, double tol) {
  std::vector<UnitVector> out;
  for (auto& d : dirs) {
    const bool seen = std::any_of(out.begin(), out.end(), [&](const UnitVector& e) {
      return (e.dir() - d.dir()).norm() <= tol;
    });
    if (!seen) out.push_back(std::move(d));
  }
  return out;
}

} // namespace detail

namespace {

std::vector<Point> sphere_points(const Point& center, double radius, std::size_t count,
                                 std::uint64_t seed) {
  std::vector<Point> pts;
  pts.reserve(count);
  const int n = static_cast<int>(center.size());
  if (n == 2) {
    for (double a : detail::stratified(count, seed, 0.0, 2 * std::numbers::pi)) {
      Point p(2);
      p << center[0] + radius * std::cos(a), center[1] + radius * std::sin(a);
      pts.push_back(std::move(p));
    }
    return pts;
  }
  sampling::Halton h(n, seed);
  for (std::size_t i = 0; i < count; ++i)
    pts.push_back(center + radius * sampling::unit_sphere_point(h, i));
  return pts;
}

Polyline circle_polyline(const Point& center, double radius) {
  Polyline line;
  constexpr int kSegments = 256;
  for (int i = 0; i <= kSegments; ++i) {
    const double a = 2 * std::numbers::pi * i / kSegments;
    Point p(2);
    p << center[0] + radius * std::cos(a), center[1] + radius * std::sin(a);
    line.push_back(std::move(p));
  }
  return line;
}

} // namespace

// ---------------------------------------------------------------------------
// EmptySet

Capabilities EmptySet::capabilities() const { return {true, true, true, false}; }

bool EmptySet::contains(const Point& p) const {
  require_dimension(p, dimension_);
  return false;
}

Projection EmptySet::project(const Point&) const {
  throw GeometryError("projection onto the empty set");
}

// ---------------------------------------------------------------------------
// ClosedBall

ClosedBall::ClosedBall(Point center, double radius) : center_(std::move(center)), radius_(radius) {
  if (!(radius > 0) || !center_.allFinite()) throw GeometryError("disk needs a finite center and radius > 0");
}

Capabilities ClosedBall::capabilities() const { return {true, true, true, true}; }

bool ClosedBall::contains(const Point& p) const {
  require_dimension(p, dimension());
  return (p - center_).norm() <= radius_ + detail::rounding_slack(radius_ + detail::scale_of(center_));
}

bool ClosedBall::in_interior(const Point& p) const { return (p - center_).norm() < radius_; }

Projection ClosedBall::project(const Point& p) const {
  require_dimension(p, dimension());
  const Point v = p - center_;
  const double d = v.norm();
  if (d <= radius_) return {0.0, p};
  return {d - radius_, center_ + radius_ * (v / d)};
}

std::vector<UnitVector> ClosedBall::normal_generators(const Point& x) const {
  const Point v = x - center_;
  if (v.norm() == 0) return {};
  return {UnitVector::normalized(v)};
}

std::optional<std::vector<Point>> ClosedBall::parametrized_boundary(std::size_t count,
                                                                    std::uint64_t seed,
                                                                    const Window&) const {
  return sphere_points(center_, radius_, count, seed);
}

double ClosedBall::boundary_measure(const Window&) const {
  return detail::unit_sphere_area(dimension()) * std::pow(radius_, dimension() - 1);
}

OraclePtr ClosedBall::closure_of_interior() const { return std::make_shared<ClosedBall>(*this); }

std::vector<Polyline> ClosedBall::outline(const Window&) const {
  if (dimension() != 2) return {};
  return {circle_polyline(center_, radius_)};
}

// ---------------------------------------------------------------------------
// ClosedHalfspace

ClosedHalfspace::ClosedHalfspace(Point normal, double offset) {
  const double n = normal.norm();
  if (!(n > 0) || !std::isfinite(offset)) throw GeometryError("halfspace needs a nonzero normal");
  normal_ = normal / n;
  offset_ = offset / n;
}

Capabilities ClosedHalfspace::capabilities() const { return {true, true, true, true}; }

bool ClosedHalfspace::contains(const Point& p) const {
  require_dimension(p, dimension());
  return normal_.dot(p) <= offset_ + detail::rounding_slack(detail::scale_of(p));
}

bool ClosedHalfspace::in_interior(const Point& p) const { return normal_.dot(p) < offset_; }

Projection ClosedHalfspace::project(const Point& p) const {
  require_dimension(p, dimension());
  const double excess = normal_.dot(p) - offset_;
  if (excess <= 0) return {0.0, p};
  return {excess, p - excess * normal_};
}

std::vector<UnitVector> ClosedHalfspace::normal_generators(const Point&) const {
  return {UnitVector::normalized(normal_)};
}

std::optional<std::vector<Point>> ClosedHalfspace::parametrized_boundary(std::size_t count,
                                                                         std::uint64_t seed,
                                                                         const Window& window) const {
  std::vector<Point> pts;
  if (dimension() == 2) {
    Point dir(2);
    dir << -normal_[1], normal_[0];
    const auto line = LineSet::line(offset_ * normal_, dir);
    return line.parametrized_boundary(count, seed, window);
  }
  sampling::Halton h(dimension(), seed);
  for (std::uint64_t i = 0; pts.size() < count && i < 64 * count; ++i) {
    Point u = h.at(i);
    for (int k = 0; k < dimension(); ++k)
      u[k] = window.bounds[k].first + u[k] * (window.bounds[k].second - window.bounds[k].first);
    Point q = u - (normal_.dot(u) - offset_) * normal_;
    if (window.contains(q)) pts.push_back(std::move(q));
  }
  return pts;
}

double ClosedHalfspace::boundary_measure(const Window& window) const {
  if (dimension() == 2) {
    Point dir(2);
    dir << -normal_[1], normal_[0];
    return LineSet::line(offset_ * normal_, dir).boundary_measure(window);
  }
  return std::pow(window.diameter(), dimension() - 1);
}

OraclePtr ClosedHalfspace::closure_of_interior() const {
  return std::make_shared<ClosedHalfspace>(*this);
}

std::vector<Polyline> ClosedHalfspace::outline(const Window& window) const {
  if (dimension() != 2) return {};
  Point dir(2);
  dir << -normal_[1], normal_[0];
  return LineSet::line(offset_ * normal_, dir).outline(window);
}

// ---------------------------------------------------------------------------
// LineSet

LineSet::LineSet(Point origin, Point direction, double length, bool infinite)
    : origin_(std::move(origin)), direction_(std::move(direction)), length_(length),
      infinite_(infinite) {}

LineSet LineSet::segment(Point a, Point b) {
  const Point d = b - a;
  const double len = d.norm();
  if (a.size() != b.size() || !(len > 0)) throw GeometryError("segment needs two distinct endpoints");
  return LineSet(std::move(a), d / len, len, false);
}

LineSet LineSet::line(Point through, Point direction) {
  const double len = direction.norm();
  if (through.size() != direction.size() || !(len > 0))
    throw GeometryError("line needs a nonzero direction");
  return LineSet(std::move(through), direction / len, kInfinity, true);
}

Capabilities LineSet::capabilities() const { return {true, true, true, true}; }

double LineSet::clamp_parameter(double t) const {
  return infinite_ ? t : std::clamp(t, 0.0, length_);
}

bool LineSet::contains(const Point& p) const {
  require_dimension(p, dimension());
  return project(p).distance <= kThinMembershipSlack * detail::scale_of(p);
}

Projection LineSet::project(const Point& p) const {
  require_dimension(p, dimension());
  const double t = clamp_parameter(direction_.dot(p - origin_));
  Point q = origin_ + t * direction_;
  return {(p - q).norm(), std::move(q)};
}

std::vector<UnitVector> LineSet::normal_generators(const Point& x) const {
  std::vector<UnitVector> gens;
  for (const Point& b : detail::orthogonal_complement(direction_)) {
    gens.push_back(UnitVector::normalized(b));
    gens.push_back(UnitVector::normalized(-b));
  }
  if (!infinite_) {
    const double t = direction_.dot(x - origin_);
    const double tol = 1e-9 * std::max(1.0, length_);
    if (t <= tol) gens.push_back(UnitVector::normalized(-direction_));
    if (t >= length_ - tol) gens.push_back(UnitVector::normalized(direction_));
  }
  return gens;
}

std::pair<double, double> LineSet::clipped_range(const Window& window) const {
  double lo = infinite_ ? -kInfinity : 0.0;
  double hi = infinite_ ? kInfinity : length_;
  for (int i = 0; i < dimension(); ++i) {
    const auto [wlo, whi] = window.bounds[static_cast<std::size_t>(i)];
    if (direction_[i] == 0) {
      if (origin_[i] < wlo || origin_[i] > whi) return {1.0, 0.0};
      continue;
    }
    double a = (wlo - origin_[i]) / direction_[i];
    double b = (whi - origin_[i]) / direction_[i];
    if (a > b) std::swap(a, b);
    lo = std::max(lo, a);
    hi = std::min(hi, b);
  }
  return {lo, hi};
}

std::optional<std::vector<Point>> LineSet::parametrized_boundary(std::size_t count,
                                                                 std::uint64_t seed,
                                                                 const Window& window) const {
  std::vector<Point> pts;
  if (count == 0) return pts;
  auto [lo, hi] = window.dimension() == dimension() ? clipped_range(window)
                                                     : std::pair{0.0, length_};
  if (!std::isfinite(lo) || !std::isfinite(hi))
    throw GeometryError("line boundary sampling needs a bounded window");
  if (lo > hi) return pts;
  std::vector<double> ts;
  if (!infinite_ && count >= 2) {
    // Segments keep both endpoints so thin-boundary distances are attained.
    for (std::size_t i = 0; i < count; ++i)
      ts.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1));
  } else {
    ts = detail::stratified(count, seed, lo, hi);
  }
  for (double t : ts) pts.push_back(origin_ + t * direction_);
  return pts;
}

double LineSet::boundary_measure(const Window& window) const {
  auto [lo, hi] = window.dimension() == dimension() ? clipped_range(window)
                                                     : std::pair{0.0, length_};
  if (!std::isfinite(lo) || !std::isfinite(hi)) return window.diameter();
  return std::max(0.0, hi - lo);
}

OraclePtr LineSet::closure_of_interior() const { return std::make_shared<EmptySet>(dimension()); }

std::vector<Polyline> LineSet::outline(const Window& window) const {
  if (dimension() != 2) return {};
  auto [lo, hi] = clipped_range(window);
  if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi)) return {};
  return {Polyline{origin_ + lo * direction_, origin_ + hi * direction_}};
}

// ---------------------------------------------------------------------------
// ComplementOfOpenBalls

ComplementOfOpenBalls::ComplementOfOpenBalls(std::vector<Ball> balls) : balls_(std::move(balls)) {
  if (balls_.empty()) throw GeometryError("complement_of_balls needs at least one ball");
  for (auto& b : balls_) {
    if (!(b.radius > 0) || b.center.size() != balls_.front().center.size())
      throw GeometryError("complement_of_balls: invalid ball");
    b.closedness = Closedness::open;
  }
}

int ComplementOfOpenBalls::dimension() const {
  return static_cast<int>(balls_.front().center.size());
}

Capabilities ComplementOfOpenBalls::capabilities() const { return {true, true, true, true}; }

bool ComplementOfOpenBalls::contains(const Point& p) const {
  require_dimension(p, dimension());
  return std::none_of(balls_.begin(), balls_.end(), [&](const Ball& b) {
    return (p - b.center).norm() < b.radius - detail::rounding_slack(b.radius + detail::scale_of(b.center));
  });
}

bool ComplementOfOpenBalls::in_interior(const Point& p) const {
  return std::all_of(balls_.begin(), balls_.end(),
                     [&](const Ball& b) { return (p - b.center).norm() > b.radius; });
}

bool ComplementOfOpenBalls::covered_by_other(const Point& p, std::size_t skip, double slack) const {
  for (std::size_t j = 0; j < balls_.size(); ++j) {
    if (j == skip) continue;
    if ((p - balls_[j].center).norm() < balls_[j].radius - slack) return true;
  }
  return false;
}

Projection ComplementOfOpenBalls::project(const Point& p) const {
  require_dimension(p, dimension());
  if (contains(p)) return {0.0, p};
  const int n = dimension();
  const double slack = 1e-12 * detail::scale_of(p);
  Projection best;
  bool have = false;

  auto admissible = [&](const Point& q, std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < balls_.size(); ++k) {
      if (k == i || k == j) continue;
      if ((q - balls_[k].center).norm() < balls_[k].radius - slack) return false;
    }
    return true;
  };

  // Radial exits through a single sphere.
  for (std::size_t i = 0; i < balls_.size(); ++i) {
    Point v = p - balls_[i].center;
    if (v.norm() == 0) {
      v = Point::Zero(n);
      v[0] = -1.0;
    }
    const Point q = balls_[i].center + balls_[i].radius * v.normalized();
    if (admissible(q, i, i)) detail::keep_nearest(best, have, (p - q).norm(), q);
  }
  // Nearest points on pairwise sphere intersections.
  for (std::size_t i = 0; i < balls_.size(); ++i) {
    for (std::size_t j = i + 1; j < balls_.size(); ++j) {
      const Point& ci = balls_[i].center;
      const double ri = balls_[i].radius, rj = balls_[j].radius;
      const Point axis = balls_[j].center - ci;
      const double dist = axis.norm();
      if (!(dist > std::abs(ri - rj)) || !(dist < ri + rj)) continue;
      const Point u = axis / dist;
      const double a = (dist * dist + ri * ri - rj * rj) / (2 * dist);
      const double h = std::sqrt(std::max(0.0, ri * ri - a * a));
      const Point m = ci + a * u;
      const Point v = (p - m) - (p - m).dot(u) * u;
      std::vector<Point> dirs;
      if (v.norm() > 1e-300) {
        dirs.push_back(v.normalized());
      } else {
        // p on the axis: the whole intersection sphere is equidistant.
        for (const auto& w : detail::orthogonal_complement(u)) {
          dirs.push_back(w);
          dirs.push_back(-w);
        }
      }
      for (const auto& w : dirs) {
        const Point q = m + h * w;
        if (admissible(q, i, j)) detail::keep_nearest(best, have, (p - q).norm(), q);
      }
    }
  }
  if (have) return best;

  // Nearest point lies on three or more spheres: march rays out of the union.
  sampling::Halton h(n);
  for (std::uint64_t k = 0; k < 4096; ++k) {
    const Point u = sampling::unit_sphere_point(h, k);
    double t = 0.0;
    for (std::size_t iter = 0; iter <= balls_.size() + 1; ++iter) {
      const Point q = p + t * u;
      double exit = t;
      for (const auto& b : balls_) {
        const Point w = q - b.center;
        if (w.norm() >= b.radius) continue;
        const Point w0 = p - b.center;
        const double bq = w0.dot(u);
        const double cq = w0.squaredNorm() - b.radius * b.radius;
        exit = std::max(exit, -bq + std::sqrt(std::max(0.0, bq * bq - cq)));
      }
      if (exit == t) break;
      t = exit;
    }
    detail::keep_nearest(best, have, t, p + t * u);
  }
  return best;
}

std::vector<UnitVector> ComplementOfOpenBalls::normal_generators(const Point& x) const {
  std::vector<UnitVector> gens;
  for (const auto& b : balls_) {
    const Point v = b.center - x;
    if (std::abs(v.norm() - b.radius) <= 1e-9 * std::max(1.0, b.radius))
      gens.push_back(UnitVector::normalized(v));
  }
  return detail::dedupe(std::move(gens));
}

std::optional<std::vector<Point>> ComplementOfOpenBalls::parametrized_boundary(
    std::size_t count, std::uint64_t seed, const Window&) const {
  const int n = dimension();
  std::vector<double> weights;
  for (const auto& b : balls_) weights.push_back(std::pow(b.radius, n - 1));
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  std::vector<Point> pts;
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < balls_.size(); ++i) {
    std::size_t share = i + 1 == balls_.size()
                            ? count - assigned
                            : static_cast<std::size_t>(std::llround(count * weights[i] / total));
    share = std::min(share, count - assigned);
    assigned += share;
    for (auto& q : sphere_points(balls_[i].center, balls_[i].radius, share, seed + 7919 * i))
      if (!covered_by_other(q, i, 1e-12)) pts.push_back(std::move(q));
  }
  return pts;
}

double ComplementOfOpenBalls::boundary_measure(const Window&) const {
  double m = 0;
  for (const auto& b : balls_)
    m += detail::unit_sphere_area(dimension()) * std::pow(b.radius, dimension() - 1);
  return m;
}

OraclePtr ComplementOfOpenBalls::closure_of_interior() const {
  return std::make_shared<ComplementOfOpenBalls>(*this);
}

std::vector<Polyline> ComplementOfOpenBalls::outline(const Window&) const {
  if (dimension() != 2) return {};
  std::vector<Polyline> lines;
  for (std::size_t i = 0; i < balls_.size(); ++i) {
    Polyline current;
    for (const Point& q : circle_polyline(balls_[i].center, balls_[i].radius)) {
      if (covered_by_other(q, i, 1e-12)) {
        if (current.size() > 1) lines.push_back(std::move(current));
        current.clear();
      } else {
        current.push_back(q);
      }
    }
    if (current.size() > 1) lines.push_back(std::move(current));
  }
  return lines;
}

// ---------------------------------------------------------------------------
// UnionOracle

UnionOracle::UnionOracle(std::vector<OraclePtr> parts, std::string kind)
    : parts_(std::move(parts)), kind_(std::move(kind)) {
  if (parts_.empty()) throw GeometryError("union needs at least one part");
  for (const auto& p : parts_)
    if (!p || p->dimension() != parts_.front()->dimension())
      throw GeometryError("union parts must share the ambient dimension");
}

int UnionOracle::dimension() const { return parts_.front()->dimension(); }

Capabilities UnionOracle::capabilities() const {
  Capabilities c{true, true, true, true};
  for (const auto& p : parts_) {
    const auto pc = p->capabilities();
    c.exact_projection &= pc.exact_projection;
    c.analytic_normals &= pc.analytic_normals;
    c.interior_membership &= pc.interior_membership;
    c.closure_of_interior_available &= pc.closure_of_interior_available;
  }
  return c;
}

bool UnionOracle::contains(const Point& p) const {
  return std::any_of(parts_.begin(), parts_.end(), [&](const OraclePtr& s) { return s->contains(p); });
}

Projection UnionOracle::project(const Point& p) const {
  Projection best;
  bool have = false;
  for (const auto& s : parts_) {
    if (s->empty()) continue;
    auto pr = s->project(p);
    detail::keep_nearest(best, have, pr.distance, pr.nearest);
  }
  if (!have) throw GeometryError("projection onto the empty set");
  return best;
}

bool UnionOracle::in_interior(const Point& p) const {
  return std::any_of(parts_.begin(), parts_.end(),
                     [&](const OraclePtr& s) { return s->in_interior(p); });
}

std::vector<UnitVector> UnionOracle::normal_generators(const Point& x) const {
  const double touch = 1e-9 * detail::scale_of(x);
  std::vector<const SetOracle*> touching;
  for (const auto& s : parts_)
    if (!s->empty() && s->project(x).distance <= touch) touching.push_back(s.get());
  if (touching.size() == 1) return touching.front()->normal_generators(x);

  // At a junction the cone is the intersection of the parts' cones; keep the
  // parts' generators that stay normal to every other touching part.
  const double step = 1e-6 * detail::scale_of(x);
  std::vector<UnitVector> gens;
  for (const SetOracle* s : touching) {
    for (auto& g : s->normal_generators(x)) {
      const Point probe = x + step * g.dir();
      const bool normal_to_all = std::all_of(touching.begin(), touching.end(), [&](const SetOracle* o) {
        return o == s || o->project(probe).distance >= step * (1 - 1e-2);
      });
      if (normal_to_all) gens.push_back(std::move(g));
    }
  }
  return detail::dedupe(std::move(gens));
}

std::optional<BoundaryClass> UnionOracle::boundary_class(const Point& x) const {
  const double touch = 1e-9 * detail::scale_of(x);
  bool any = false;
  for (const auto& s : parts_) {
    if (s->empty() || s->project(x).distance > touch) continue;
    const auto c = s->boundary_class(x);
    if (!c) return std::nullopt;
    if (*c == BoundaryClass::InteriorBoundary) return c;
    any = true;
  }
  if (!any) return std::nullopt;
  return BoundaryClass::ThinBoundary;
}

std::optional<std::vector<Point>> UnionOracle::parametrized_boundary(std::size_t count,
                                                                     std::uint64_t seed,
                                                                     const Window& window) const {
  std::vector<double> weights;
  for (const auto& s : parts_) weights.push_back(s->boundary_measure(window));
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(total > 0)) return std::vector<Point>{};

  // Largest-remainder split of the budget.
  std::vector<std::size_t> share(parts_.size());
  std::vector<std::pair<double, std::size_t>> rema;
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    const double exact = count * weights[i] / total;
    share[i] = static_cast<std::size_t>(std::floor(exact));
    assigned += share[i];
    rema.emplace_back(exact - std::floor(exact), i);
  }
  std::stable_sort(rema.begin(), rema.end(), [](auto a, auto b) { return a.first > b.first; });
  for (std::size_t k = 0; assigned < count; ++k, ++assigned) ++share[rema[k % rema.size()].second];

  const bool can_filter = capabilities().interior_membership;
  std::vector<Point> pts;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    auto part = parts_[i]->parametrized_boundary(share[i], seed + 104729 * i, window);
    if (!part) return std::nullopt;
    for (auto& q : *part) {
      bool inside_other = false;
      if (can_filter)
        for (std::size_t j = 0; j < parts_.size() && !inside_other; ++j)
          inside_other = j != i && parts_[j]->in_interior(q);
      if (!inside_other) pts.push_back(std::move(q));
    }
  }
  return pts;
}

double UnionOracle::boundary_measure(const Window& window) const {
  double m = 0;
  for (const auto& s : parts_) m += s->boundary_measure(window);
  return m;
}

OraclePtr UnionOracle::closure_of_interior() const {
  std::vector<OraclePtr> closures;
  for (const auto& s : parts_) {
    auto c = s->closure_of_interior();
    if (!c) return nullptr;
    if (!c->empty()) closures.push_back(std::move(c));
  }
  if (closures.empty()) return std::make_shared<EmptySet>(dimension());
  if (closures.size() == 1) return closures.front();
  return std::make_shared<UnionOracle>(std::move(closures));
}

bool UnionOracle::regular_closed() const {
  return std::all_of(parts_.begin(), parts_.end(),
                     [](const OraclePtr& s) { return s->regular_closed(); });
}

std::vector<Polyline> UnionOracle::outline(const Window& window) const {
  std::vector<Polyline> lines;
  for (const auto& s : parts_)
    for (auto& l : s->outline(window)) lines.push_back(std::move(l));
  return lines;
}

} // namespace proxgeo
