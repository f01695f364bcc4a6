#include "proxgeo/gallery.hpp"
#include "proxgeo/oracles.hpp"
#include "proxgeo/sampling.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>

using namespace proxgeo;
using testsupport::vec;

namespace {

const Window kWindow = Window::cube(2, -3, 3);

// Projection consistency on a lattice: dist = 0 iff contains, nearest in S,
// |p - nearest| = dist.
void check_projection_consistency(const SetOracle& s, const Window& w, double step) {
  for (double x = w.bounds[0].first; x <= w.bounds[0].second; x += step) {
    for (double y = w.bounds[1].first; y <= w.bounds[1].second; y += step) {
      const Point p = vec(x, y);
      const Projection pr = s.project(p);
      CHECK(s.contains(pr.nearest));
      CHECK((p - pr.nearest).norm() == doctest::Approx(pr.distance).epsilon(1e-12));
      CHECK((pr.distance <= 1e-9) == s.contains(p));
    }
  }
}

} // namespace

TEST_CASE("closed disk membership and projection") {
  const ClosedBall disk(vec(0, 0), 1.0);
  CHECK(disk.contains(vec(0.5, 0)));
  CHECK_FALSE(disk.contains(vec(2, 0)));
  const auto pr = disk.project(vec(3, 4));
  CHECK(pr.distance == doctest::Approx(4.0));
  CHECK(pr.nearest[0] == doctest::Approx(0.6));
  CHECK(pr.nearest[1] == doctest::Approx(0.8));
  CHECK_THROWS_AS(disk.contains(vec(1, 2, 3)), GeometryError);
  CHECK_THROWS_AS(ClosedBall(vec(0, 0), -1.0), GeometryError);
  check_projection_consistency(disk, kWindow, 0.37);
}

TEST_CASE("line projection drops vertically") {
  const auto line = LineSet::line(vec(0, 0), vec(1, 0));
  const auto pr = line.project(vec(2, -3));
  CHECK(pr.distance == doctest::Approx(3.0));
  CHECK(pr.nearest[0] == doctest::Approx(2.0));
  CHECK(pr.nearest[1] == doctest::Approx(0.0));
  CHECK(line.contains(vec(-7, 0)));
  CHECK_FALSE(line.contains(vec(0, 1e-6)));
}

TEST_CASE("segment normals include the endpoint directions") {
  const auto seg = LineSet::segment(vec(1, 0), vec(2, 0));
  const auto mid = seg.normal_generators(vec(1.5, 0));
  CHECK(mid.size() == 2);
  const auto end = seg.normal_generators(vec(2, 0));
  CHECK(end.size() == 3);
  bool has_outward = false;
  for (const auto& g : end) has_outward |= (g.dir() - vec(1, 0)).norm() < 1e-12;
  CHECK(has_outward);
  CHECK(seg.project(vec(3, 1)).distance == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("halfspace projection and normalization of the normal") {
  const ClosedHalfspace h(vec(0, 2), 4); // y <= 2
  CHECK(h.contains(vec(5, 2)));
  CHECK_FALSE(h.contains(vec(5, 2.1)));
  CHECK(h.project(vec(1, 5)).distance == doctest::Approx(3.0));
  check_projection_consistency(h, kWindow, 0.41);
}

TEST_CASE("example 2 projection picks the circle over the segment") {
  const auto s = make_gallery_set("example2");
  CHECK(s->contains(vec(1.5, 0)));
  const auto pr = s->project(vec(1.5, 1));
  // Segment distance is 1, circle distance sqrt(3.25) - 1.
  const double circle = std::sqrt(3.25) - 1;
  CHECK(circle < 1.0);
  CHECK(pr.distance == doctest::Approx(circle).epsilon(1e-12));
  CHECK(pr.nearest[0] == doctest::Approx(1.5 / std::sqrt(3.25)).epsilon(1e-12));
  CHECK(pr.nearest[1] == doctest::Approx(1 / std::sqrt(3.25)).epsilon(1e-12));
  check_projection_consistency(*s, kWindow, 0.29);
}

TEST_CASE("union ties resolve to the lexicographically smallest candidate") {
  // Two unit disks at (±2, 0); the origin is equidistant.
  const UnionOracle u({std::make_shared<ClosedBall>(vec(2, 0), 1.0), std::make_shared<ClosedBall>(vec(-2, 0), 1.0)});
  const auto pr = u.project(vec(0, 0));
  CHECK(pr.distance == doctest::Approx(1.0));
  CHECK(pr.nearest[0] == doctest::Approx(-1.0));
}

TEST_CASE("example 1 projection agrees with a dense-scan reference") {
  const auto s = make_gallery_set("example1");
  const sampling::Halton h(2, 11);
  for (std::uint64_t i = 0; i < 300; ++i) {
    const Point u = h.at(i);
    const Point p = vec(-6 + 12 * u[0], -8 + 16 * u[1]);
    const double ref = std::min(
        testsupport::curve_distance([](double t) { return vec(t, std::exp(t)); }, p, -40, 4),
        testsupport::curve_distance([](double t) { return vec(t, -std::exp(t)); }, p, -40, 4));
    const auto pr = s->project(p);
    CHECK(pr.distance <= ref + 1e-9);
    CHECK(pr.distance >= ref - 1e-6);
    CHECK(std::abs(std::abs(pr.nearest[1]) - std::exp(pr.nearest[0])) < 1e-12 * std::max(1.0, std::abs(pr.nearest[1])));
  }
}

TEST_CASE("cusp oracles match a dense-scan reference") {
  const double c = 1.0;
  const CuspWithWhiskers whiskers(c);
  const CuspRegion region(c);
  const sampling::Halton h(2, 5);
  for (std::uint64_t i = 0; i < 300; ++i) {
    const Point u = h.at(i);
    const Point p = vec(-2 + 4 * u[0], -2 + 4 * u[1]);
    auto up = [&](double t) { return vec(t, c * t * t); };
    auto down = [&](double t) { return vec(t, -c * t * t); };
    const bool in_region = p[0] <= 0 && std::abs(p[1]) <= c * p[0] * p[0];

    const double ref_w = in_region ? 0.0
                                   : std::min(testsupport::curve_distance(up, p, -5, 5),
                                              testsupport::curve_distance(down, p, -5, 5));
    CHECK(whiskers.project(p).distance == doctest::Approx(ref_w).epsilon(1e-7));

    const double ref_r = in_region ? 0.0
                                   : std::min(testsupport::curve_distance(up, p, -5, 0),
                                              testsupport::curve_distance(down, p, -5, 0));
    CHECK(region.project(p).distance == doctest::Approx(ref_r).epsilon(1e-7));
  }
  CHECK(whiskers.contains(vec(0.5, 0.25)));
  CHECK_FALSE(whiskers.contains(vec(0.5, 0.0)));
  CHECK(whiskers.boundary_class(vec(0.5, 0.25)) == BoundaryClass::ThinBoundary);
  CHECK(whiskers.boundary_class(vec(-0.5, 0.25)) == BoundaryClass::InteriorBoundary);
}

TEST_CASE("complement of balls projects onto spheres and their intersections") {
  const ComplementOfOpenBalls s({{vec(-0.8, 0), 1.5, Closedness::open}, {vec(0.8, 0), 1.5, Closedness::open}});
  CHECK_FALSE(s.contains(vec(0, 0)));
  CHECK(s.contains(vec(3, 0)));
  // The origin is nearest to the two intersection points (0, ±sqrt(1.5^2 - 0.8^2)).
  const double h = std::sqrt(1.5 * 1.5 - 0.8 * 0.8);
  const auto pr = s.project(vec(0, 0));
  CHECK(pr.distance == doctest::Approx(h).epsilon(1e-12));
  CHECK(pr.nearest[1] == doctest::Approx(-h));

  // Reference: the two corner points plus dense samples of the uncovered arcs.
  const sampling::Halton hal(2, 3);
  for (std::uint64_t i = 0; i < 200; ++i) {
    const Point u = hal.at(i);
    const Point p = vec(-2.3 + 4.6 * u[0], -1.5 + 3 * u[1]);
    if (s.contains(p)) continue;
    double ref = std::min((p - vec(0, h)).norm(), (p - vec(0, -h)).norm());
    for (int b = 0; b < 2; ++b) {
      const Point c = b == 0 ? vec(-0.8, 0) : vec(0.8, 0);
      const Point other = b == 0 ? vec(0.8, 0) : vec(-0.8, 0);
      for (int k = 0; k < 20000; ++k) {
        const double a = 2 * std::numbers::pi * k / 20000;
        const Point q = c + 1.5 * vec(std::cos(a), std::sin(a));
        if ((q - other).norm() < 1.5 - 1e-12) continue;
        ref = std::min(ref, (q - p).norm());
      }
    }
    CHECK(s.project(p).distance == doctest::Approx(ref).epsilon(1e-6));
  }
  check_projection_consistency(s, kWindow, 0.31);
}

TEST_CASE("cl(int S) companions are subsets of S") {
  for (const auto& id : {"example1", "example2", "example3_surrogate", "disk", "halfspace", "line", "segment",
                         "complement_of_balls", "simplex_ball_complement"}) {
    CAPTURE(id);
    const auto s = make_gallery_set(id);
    const auto cl = s->closure_of_interior();
    REQUIRE(cl);
    if (cl->empty()) continue;
    const sampling::Halton h(s->dimension(), 7);
    const double lo = -3, hi = 3;
    for (std::uint64_t i = 0; i < 2000; ++i) {
      const Point p = (lo + (hi - lo) * h.at(i).array()).matrix();
      if (cl->contains(p)) CHECK(s->contains(p));
    }
    // Boundary of cl(int S) stays within tol of bdry S.
    const Window w = Window::cube(s->dimension(), -3, 3);
    if (auto pts = cl->parametrized_boundary(200, 0, w))
      for (const auto& p : *pts) CHECK(s->project(p).distance <= 1e-9);
  }
}

TEST_CASE("regular closed flags") {
  CHECK(make_gallery_set("disk")->regular_closed());
  CHECK(make_gallery_set("complement_of_balls")->regular_closed());
  CHECK_FALSE(make_gallery_set("example1")->regular_closed());
  CHECK_FALSE(make_gallery_set("example2")->regular_closed());
  CHECK_FALSE(make_gallery_set("example3_surrogate")->regular_closed());
}

TEST_CASE("disk in higher dimensions") {
  const ClosedBall b(Point::Zero(4), 2.0);
  Point p = Point::Constant(4, 2.0);
  const auto pr = b.project(p);
  CHECK(pr.distance == doctest::Approx(4.0 - 2.0));
  CHECK(pr.nearest.norm() == doctest::Approx(2.0));
  const auto pts = *b.parametrized_boundary(50, 3, Window::cube(4, -3, 3));
  for (const auto& q : pts) CHECK(q.norm() == doctest::Approx(2.0).epsilon(1e-12));
}
