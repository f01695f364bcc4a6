#include "proxgeo/gallery.hpp"
#include "proxgeo/oracles.hpp"
#include "proxgeo/regularity.hpp"
#include "proxgeo/sphere_conditions.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace proxgeo;
using testsupport::vec;

namespace {

const Window kWindow = Window::cube(2, -4, 4);

OraclePtr disk_segment(const Point& center, const Point& a, const Point& b) {
  return std::make_shared<UnionOracle>(std::vector<OraclePtr>{
      std::make_shared<ClosedBall>(center, 1.0), std::make_shared<LineSet>(LineSet::segment(a, b))});
}

} // namespace

TEST_CASE("r_S examples") {
  CHECK(r_S_distance(*disk_segment(vec(0, 0), vec(2, 0), vec(3, 0)), kWindow) ==
        doctest::Approx(1.0).epsilon(1e-6));
  CHECK(r_S_distance(*make_gallery_set("example2"), kWindow) <= 1e-3);
  CHECK(std::isinf(r_S_distance(*make_gallery_set("disk"), kWindow)));
  CHECK_THROWS_AS(r_S_distance(GenericView(make_gallery_set("disk")), kWindow), GeometryError);
}

TEST_CASE("r_S is invariant under rigid motions") {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> angle(0, 2 * std::numbers::pi);
  std::uniform_real_distribution<double> shift(-0.5, 0.5);
  for (int trial = 0; trial < 8; ++trial) {
    const double a = angle(rng);
    Eigen::Matrix2d rot;
    rot << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
    const Point t = vec(shift(rng), shift(rng));
    const auto s = disk_segment(t, rot * vec(2, 0) + t, rot * vec(3, 0) + t);
    CHECK(r_S_distance(*s, kWindow) == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("prox_radius_estimate") {
  CHECK(prox_radius_estimate(1, 2, 1) == 0.25);
  CHECK(prox_radius_estimate(0.1, 5, 10) == 0.1);
  CHECK_THROWS_AS(prox_radius_estimate(1, 1, 0), GeometryError);
  CHECK_THROWS_AS(prox_radius_estimate(-1, 1, 1), GeometryError);
  CHECK_THROWS_AS(prox_radius_estimate(1, 0, 1), GeometryError);
}

TEST_CASE("make_estimate invariant") {
  const auto e = make_estimate(1, 1, 1);
  REQUIRE(e.r_out);
  CHECK(*e.r_out == 0.25);
  CHECK_FALSE(make_estimate(1, 1, 0).r_out);
  const auto inf = make_estimate(2, 3, kInfinity);
  REQUIRE(inf.r_out);
  CHECK(*inf.r_out == 2);
}

TEST_CASE("estimate on disk plus segment certifies prox-regularity") {
  const auto s = disk_segment(vec(0, 0), vec(2, 0), vec(3, 0));
  const double rs = r_S_distance(*s, kWindow);
  const auto e = make_estimate(1, 1, rs);
  REQUIRE(e.r_out);
  CHECK(*e.r_out == doctest::Approx(0.25).epsilon(1e-6));
  CHECK(check_condition(*s, Condition::ProxRegular, *e.r_out, kWindow).pass);
}

TEST_CASE("largest_passing_radius") {
  const auto cb = make_gallery_set("complement_of_balls");
  const auto rho = largest_passing_radius(*cb, Condition::ProxRegular, 0.1, 3.0, Window::cube(2, -3, 3));
  REQUIRE(rho);
  CHECK(*rho <= 1.5 + 1e-9);
  CHECK(*rho >= 1.5 - 0.01);
  CHECK_FALSE(largest_passing_radius(*make_gallery_set("example2"), Condition::Exterior, 0.01, 1.0, kWindow));
  CHECK_THROWS_AS(largest_passing_radius(*cb, Condition::Exterior, 1.0, 0.5, kWindow), GeometryError);
}
