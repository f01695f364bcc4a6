// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "proxgeo/covering.hpp"
#include "proxgeo/gallery.hpp"
#include "proxgeo/oracles.hpp"
#include "proxgeo/regularity.hpp"
#include "proxgeo/report.hpp"
#include "proxgeo/set_queries.hpp"
#include "proxgeo/sphere_conditions.hpp"
#include "test_support.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

using namespace proxgeo;
using testsupport::vec;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[" << what << "] ";
    }
  }
};

const Window kSquare3 = Window::cube(2, -3, 3);
const Window kExample1Window{{{-5, 5}, {-150, 150}}};

// 1. Tightness constants.
void tightness(Outcome& o) {
  constexpr double kRelTol = 1e-3;
  o.require(std::abs(tightness_formula(2, 1) - 0.577350) <= 1e-6, "formula n=2");
  o.require(std::abs(tightness_formula(3, 1) - 0.530330) <= 1e-6, "formula n=3");
  double prev_formula = 1e300, prev_measured = 1e300;
  for (int n = 2; n <= 10; ++n) {
    const auto row = tightness_row(n, 1.0);
    o.require(row.formula < prev_formula && row.formula > 0.5, "formula monotone n=" + std::to_string(n));
    prev_formula = row.formula;
    if (!row.measured) {
      o.require(false, "n=" + std::to_string(n) + " unmeasured: " + row.error);
      continue;
    }
    o.require(row.rel_error() <= kRelTol, "n=" + std::to_string(n) + " rel error " + std::to_string(row.rel_error()));
    o.require(*row.measured < prev_measured && *row.measured > 0.5, "measured monotone n=" + std::to_string(n));
    prev_measured = *row.measured;
  }
}

// 2. Simplex geometry against direct summation.
void simplex(Outcome& o) {
  constexpr double kRelTol = 1e-10;
  for (int n = 2; n <= 25; ++n) {
    const auto cfg = simplex_centers(n, 1.0);
    const double scale = n / std::sqrt(static_cast<double>(n) * (n - 1));
    const double target = n / std::sqrt(static_cast<double>(n) * n - 1);
    for (int i = 0; i <= n; ++i) {
      const double direct = scale * std::sqrt(static_cast<double>(i) / (i + 1) + testsupport::tail_sum(i, n));
      const double norm = cfg.centers[i].norm();
      o.require(std::abs(norm - target) <= kRelTol * target && std::abs(direct - target) <= kRelTol * target,
                "norm n=" + std::to_string(n));
    }
    const double side = (cfg.centers[0] - cfg.centers[1]).norm();
    const double direct_side = scale * std::sqrt(2 * (static_cast<double>(n) / (n + 1)) +
                                                 2 * (1.0 / (n + 1) - testsupport::tail_sum(n, n)));
    o.require(std::abs(side - direct_side) <= kRelTol * direct_side, "side n=" + std::to_string(n));
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        o.require(std::abs((cfg.centers[i] - cfg.centers[j]).norm() - side) <= kRelTol * side,
                  "equidistant n=" + std::to_string(n));
  }
}

// 3. Covering soundness on analytic scenes.
void covering(Outcome& o) {
  constexpr double kDistTol = 1e-7;
  constexpr std::size_t kMinPoints = 10000;
  struct Scenario {
    const char* id;
    const char* grid;
  };
  const double r = 1.0;
  CoverOptions opt;
  opt.claim1_samples = 10000;
  for (const auto& sc : {Scenario{"disk", "-3:3:0.05"}, Scenario{"line", "-2:2:0.033"},
                         Scenario{"halfspace", "-3:3:0.04"}, Scenario{"complement_of_balls", "-3:3:0.03"}}) {
    const auto s = make_gallery_set(sc.id);
    const auto res = cover_region(*s, r, GridSpec::parse(sc.grid, 2), opt);
    o.require(res.traces.size() >= kMinPoints, std::string(sc.id) + " has " + std::to_string(res.traces.size()) + " points");
    o.require(res.all_verified(), std::string(sc.id) + " failures " + std::to_string(res.failures.size()));
    for (const auto& t : res.traces) {
      const bool ok = t.ball.radius == r / 2 && s->project(t.ball.center).distance >= r / 2 - kDistTol &&
                      (t.x - t.ball.center).norm() <= r / 2 + 1e-12 && t.claim1.value_or(true) &&
                      t.claim2.value_or(true) && t.claim3.value_or(true);
      if (!ok) {
        o.require(false, std::string(sc.id) + " trace at grid point");
        break;
      }
    }
  }
}

// 4. Example 1.
void example1(Outcome& o) {
  const auto s = make_gallery_set("example1");
  const double anchor = 3 * std::sqrt(3.0) / 2;
  const double t_star = -std::log(std::sqrt(2.0));
  const CheckOptions opt{2000, 16, 0};
  o.require(check_condition(*s, Condition::Exterior, anchor * (1 - 1e-3), kExample1Window, opt).pass,
            "exterior at 0.999 anchor");
  const auto fail = check_condition(*s, Condition::Exterior, anchor * 1.1, kExample1Window, opt);
  double closest = 1e300;
  for (const auto& w : fail.witnesses) closest = std::min(closest, std::abs(w.point[0] - t_star));
  o.require(!fail.pass && closest <= 0.05, "exterior at 1.1 anchor, closest witness " + std::to_string(closest));
  for (double r : {0.5, 1.0}) {
    const auto rep = check_condition(*s, Condition::ExtendedExterior, r, kExample1Window, opt);
    bool thin = false;
    for (const auto& w : rep.witnesses) thin |= classify_boundary(*s, w.point, 1e-3) == BoundaryClass::ThinBoundary;
    o.require(!rep.pass && thin, "extended at r=" + std::to_string(r));
  }
}

// 5. Example 2.
void example2(Outcome& o) {
  const auto s = make_gallery_set("example2");
  const CheckOptions opt{2000, 16, 42};
  for (double r : {0.5, 0.1, 0.01}) {
    const auto rep = check_condition(*s, Condition::Exterior, r, kSquare3, opt);
    bool on_segment = false, near = !rep.witnesses.empty();
    for (const auto& w : rep.witnesses) {
      near &= (w.point - vec(1, 0)).norm() <= 2 * r;
      on_segment |= std::abs(w.point[1]) <= 1e-12 && w.point[0] >= 1 && w.point[0] <= 2 &&
                    (w.point - vec(1, 0)).norm() <= 2 * r;
    }
    o.require(!rep.pass && near && on_segment, "exterior at r=" + std::to_string(r));
  }
  for (double r : {0.5, 0.1, 0.01, 10.0})
    o.require(closure_inheritance_check(*s, r, kSquare3, opt).consistent, "inheritance r=" + std::to_string(r));
  o.require(check_condition(*s->closure_of_interior(), Condition::Exterior, 10, kSquare3, opt).pass,
            "closure exterior at r=10");
}

// 6. Example 3 surrogate.
void example3(Outcome& o) {
  const auto s = make_gallery_set("example3_surrogate");
  o.require(check_condition(*s, Condition::Exterior, 0.2, kSquare3).pass, "exterior at 0.2");
  o.require(!check_condition(*s, Condition::ExtendedExterior, 0.2, kSquare3).pass, "extended fails");
  const auto res = cover_region(*s, 0.2, GridSpec::parse("0:6:0.1x-1:1:0.05", 2));
  bool flagged = false;
  for (const auto& f : res.failures) flagged |= f.error.find("extended-condition-violated") != std::string::npos;
  o.require(flagged, "cover_point reports extended-condition-violated");
}

// 7. Regular-closed construction.
void regular_closed(Outcome& o) {
  const auto disk = make_gallery_set("disk");
  const double r = 1.0, rp = 0.4;
  const auto grid = GridSpec::parse("-3:3:0.1", 2);
  std::size_t count = 0;
  for (std::size_t i = 0; i < grid.size() && count < 1000; ++i) {
    const Point x = grid.point(i);
    if (disk->contains(x)) continue;
    ++count;
    const auto t = cover_point_regular_closed(*disk, x, r, rp);
    const bool ok = t.verified && t.ball.radius == rp && (x - t.ball.center).norm() <= rp + 1e-12 &&
                    disk->project(t.ball.center).distance >= rp - 1e-9;
    if (!ok) {
      o.require(false, "point " + std::to_string(i));
      return;
    }
  }
  o.require(count == 1000, "exterior points " + std::to_string(count));
}

// 8. Regularity estimates.
void regularity(Outcome& o) {
  const Window w = Window::cube(2, -4, 4);
  const auto s = std::make_shared<UnionOracle>(std::vector<OraclePtr>{
      std::make_shared<ClosedBall>(vec(0, 0), 1.0), std::make_shared<LineSet>(LineSet::segment(vec(2, 0), vec(3, 0)))});
  const double rs = r_S_distance(*s, w);
  o.require(std::abs(rs - 1) <= 1e-6, "r_S = " + std::to_string(rs));
  const double est = prox_radius_estimate(1, 1, rs);
  o.require(std::abs(est - 0.25) <= 1e-6, "estimate");
  o.require(check_condition(*s, Condition::ProxRegular, 0.25, w, {2000, 16, 0}).pass, "prox-regular at 0.25");
  const double rs2 = r_S_distance(*make_gallery_set("example2"), w);
  o.require(rs2 <= 1e-3, "example 2 r_S = " + std::to_string(rs2));
}

// 9. Implication ladder.
void ladder(Outcome& o) {
  for (const auto& id : gallery_ids()) {
    if (id == "union") continue;
    const auto s = make_gallery_set(id);
    const Window w = id == "example1" ? kExample1Window : Window::cube(s->dimension(), -3, 3);
    for (double r : {0.1, 0.5, 1.0}) {
      const CheckOptions opt{2000, 16, 0};
      const bool prox = check_condition(*s, Condition::ProxRegular, r, w, opt).pass;
      const bool ext = check_condition(*s, Condition::ExtendedExterior, r, w, opt).pass;
      const bool ex = check_condition(*s, Condition::Exterior, r, w, opt).pass;
      o.require((!prox || ext) && (!ext || ex), id + " r=" + std::to_string(r));
    }
  }
}

// 10. Determinism of serialized reports.
void determinism(Outcome& o) {
  const auto s = make_gallery_set("example2");
  const CheckOptions opt{2000, 16, 42};
  const auto a = to_json(check_condition(*s, Condition::Exterior, 0.1, kSquare3, opt));
  const auto b = to_json(check_condition(*s, Condition::Exterior, 0.1, kSquare3, opt));
  o.require(a == b, "verify report");
  const auto disk = make_gallery_set("disk");
  const auto grid = GridSpec::parse("-2:2:0.1", 2);
  o.require(summary_json(cover_region(*disk, 1, grid)) == summary_json(cover_region(*disk, 1, grid)), "cover summary");
  std::vector<TightnessRow> rows1, rows2;
  for (int n = 2; n <= 4; ++n) {
    rows1.push_back(tightness_row(n, 1));
    rows2.push_back(tightness_row(n, 1));
  }
  o.require(tightness_csv(rows1) == tightness_csv(rows2), "tightness csv");
}

} // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"tightness constants", tightness},
      {"simplex geometry", simplex},
      {"covering soundness", covering},
      {"example 1 anchor and extended failure", example1},
      {"example 2 junction witnesses and inheritance", example2},
      {"example 3 surrogate", example3},
      {"regular-closed r' construction", regular_closed},
      {"regularity estimates", regularity},
      {"implication ladder", ladder},
      {"determinism", determinism},
  };
  int failed = 0, index = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    ++index;
    failed += !o.pass;
    std::printf("criterion %2d %-46s %s %s\n", index, name, o.pass ? "PASS" : "FAIL", o.detail.str().c_str());
  }
  std::printf("%d of %d criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
