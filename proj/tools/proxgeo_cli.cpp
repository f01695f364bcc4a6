// proxgeo: verify sphere conditions, cover complements with balls, and
// reproduce the simplex tightness configuration from the command line.
//
// Exit codes: 0 pass, 1 mathematical failure (witness found), 2 usage or input error.

#include "proxgeo/covering.hpp"
#include "proxgeo/gallery.hpp"
#include "proxgeo/regularity.hpp"
#include "proxgeo/report.hpp"
#include "proxgeo/scene.hpp"
#include "proxgeo/sphere_conditions.hpp"
#include "proxgeo/svg.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <sstream>

namespace {

using namespace proxgeo;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Config {
  std::string scene;
  std::string condition = "exterior";
  double radius = 0.0;
  double radius_prime = 0.0;
  std::size_t samples = 2000;
  std::size_t normal_budget = 16;
  std::string grid;
  std::uint64_t seed = 0;
  std::string json, svg, csv;
  std::string n = "2";
};

// Usage-level failures that are detected after option parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& path, const std::string& content) {
  if (path.empty())
    std::cout << content;
  else
    write_file_atomic(path, content);
}

CheckOptions check_options(const Config& c) {
  CheckOptions o;
  o.boundary_budget = c.samples;
  o.normal_budget = c.normal_budget;
  o.seed = c.seed;
  return o;
}

int run_verify(const Config& c, bool has_radius) {
  if (!has_radius) throw UsageError("verify needs --radius");
  const Scene scene = load_scene(c.scene);
  const Condition cond = parse_condition(c.condition);
  const auto report = check_condition(*scene.set, cond, c.radius, scene.window, check_options(c), scene.tolerances);
  emit(c.json, to_json(report));
  if (!c.json.empty()) {
    std::cout << to_string(cond) << " r=" << c.radius << ": ";
    if (!report.pass)
      std::cout << "FAIL (" << report.witnesses.size() << " witnesses)\n";
    else if (cond == Condition::Exterior)
      std::cout << "pass on " << report.samples_checked << " samples\n";
    else
      std::cout << "not refuted on " << report.samples_checked << " samples\n";
  }
  return report.pass ? kPass : kFail;
}

int run_cover(const Config& c, bool has_radius, bool has_prime) {
  if (!has_radius) throw UsageError("cover needs --radius");
  if (c.grid.empty()) throw UsageError("cover needs --grid");
  const Scene scene = load_scene(c.scene);
  if (!c.svg.empty() && scene.dimension != 2) throw UsageError("--svg needs a 2-D scene");
  const GridSpec grid = GridSpec::parse(c.grid, scene.dimension);
  CoverOptions options;
  options.seed = c.seed;

  if (has_prime) {
    if (!(c.radius_prime < c.radius / 2)) throw UsageError("--radius-prime must be below radius/2");
    if (!scene.set->regular_closed() || !scene.set->closure_of_interior())
      throw UsageError(scene.kind + " is not regular closed; --radius-prime does not apply");
    std::ostringstream lines;
    std::size_t total = 0, verified = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const Point x = grid.point(i);
      if (scene.set->contains(x)) continue;
      ++total;
      RegularClosedTrace t;
      try {
        t = cover_point_regular_closed(*scene.set, x, c.radius, c.radius_prime, options, scene.tolerances);
      } catch (const GeometryError& e) {
        t.error = e.what();
      }
      verified += t.verified ? 1 : 0;
      lines << to_json_line(t) << '\n';
    }
    if (!c.json.empty()) write_file_atomic(c.json, lines.str());
    std::cout << "{\"radius_prime\": " << c.radius_prime << ", \"exterior_points\": " << total
              << ", \"verified\": " << verified << "}\n";
    return verified == total ? kPass : kFail;
  }

  const RegionResult result = cover_region(*scene.set, c.radius, grid, options, scene.tolerances);
  if (!c.json.empty()) {
    std::ostringstream lines;
    for (const auto& t : result.traces) lines << to_json_line(t) << '\n';
    write_file_atomic(c.json, lines.str());
  }
  if (!c.svg.empty()) write_file_atomic(c.svg, render_cover_svg(*scene.set, scene.window, result));
  std::cout << summary_json(result);
  return result.all_verified() ? kPass : kFail;
}

std::pair<int, int> parse_n_range(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) throw UsageError("--n expects an integer or a range a..b, got '" + text + "'");
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = to_int(text);
    return {n, n};
  }
  return {to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
}

int run_tightness(const Config& c, bool has_radius) {
  const auto [lo, hi] = parse_n_range(c.n);
  if (lo < 2 || hi < lo) throw UsageError("--n range must satisfy 2 <= a <= b");
  const double r = has_radius ? c.radius : 1.0;
  if (!(r > 0)) throw UsageError("--radius must be positive");
  std::vector<TightnessRow> rows;
  bool ok = true;
  for (int n = lo; n <= hi; ++n) {
    rows.push_back(tightness_row(n, r));
    const auto& row = rows.back();
    if (!row.error.empty()) std::cerr << "n=" << n << ": " << row.error << '\n';
    ok = ok && row.measured && row.rel_error() <= 1e-3;
  }
  emit(c.csv, tightness_csv(rows));
  return ok ? kPass : kFail;
}

int run_estimate(const Config& c, bool has_radius, bool has_prime) {
  if (!has_prime) throw UsageError("estimate needs --radius-prime");
  const Scene scene = load_scene(c.scene);
  const CheckOptions options = check_options(c);
  double rho = c.radius;
  if (!has_radius) {
    const OraclePtr closure = scene.set->closure_of_interior();
    if (!closure) throw UsageError(scene.kind + ": no cl(int S) companion available");
    const auto found = largest_passing_radius(*closure, Condition::ProxRegular, 1e-3, 10.0, scene.window,
                                              options, scene.tolerances);
    if (!found) {
      std::cerr << "cl(int S) fails prox-regularity at every tested radius\n";
      return kFail;
    }
    rho = *found;
  }
  const double r_s = r_S_distance(*scene.set, scene.window, c.samples, c.seed, scene.tolerances);
  const RegularityEstimate est = make_estimate(rho, c.radius_prime, r_s);
  if (!est.r_out) {
    emit(c.json, to_json(est));
    return kFail;
  }
  const auto report =
      check_condition(*scene.set, Condition::ProxRegular, *est.r_out, scene.window, options, scene.tolerances);
  emit(c.json, to_json(report, est));
  return report.pass ? kPass : kFail;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proximal geometry toolkit: sphere conditions, ball covers, tightness sweeps"};
  app.require_subcommand(1);
  Config c;

  auto add_common = [&](CLI::App* sub, bool scene) {
    if (scene) sub->add_option("--scene", c.scene, "Scene JSON file")->required()->check(CLI::ExistingFile);
    sub->add_option("--seed", c.seed, "Sampling seed");
  };

  auto* verify = app.add_subcommand("verify", "Check a sphere condition on boundary samples");
  add_common(verify, true);
  verify->add_option("--condition", c.condition, "exterior|extended|prox_regular")
      ->check(CLI::IsMember({"exterior", "extended", "prox_regular"}));
  auto* v_radius = verify->add_option("--radius", c.radius, "Sphere radius r")->check(CLI::PositiveNumber);
  verify->add_option("--samples", c.samples, "Boundary sample budget")->check(CLI::PositiveNumber);
  verify->add_option("--normal-budget", c.normal_budget, "Normal probes per point")->check(CLI::PositiveNumber);
  verify->add_option("--json", c.json, "Report output path (stdout when omitted)");

  auto* cover = app.add_subcommand("cover", "Cover exterior grid points with closed r/2-balls");
  add_common(cover, true);
  auto* c_radius = cover->add_option("--radius", c.radius, "Sphere radius r")->check(CLI::PositiveNumber);
  auto* c_prime = cover->add_option("--radius-prime", c.radius_prime, "Use r'-balls (r' < r/2, regular closed sets)")
                      ->check(CLI::PositiveNumber);
  cover->add_option("--grid", c.grid, "lo:hi:step per axis, joined by 'x'");
  cover->add_option("--json", c.json, "JSON-lines trace output");
  cover->add_option("--svg", c.svg, "SVG rendering (2-D scenes)");

  auto* tight = app.add_subcommand("tightness", "Largest ball through the origin for the simplex configuration");
  add_common(tight, false);
  auto* t_radius = tight->add_option("--radius", c.radius, "Ball radius r (default 1)")->check(CLI::PositiveNumber);
  tight->add_option("--n", c.n, "Dimension n or range a..b");
  tight->add_option("--csv", c.csv, "CSV output path (stdout when omitted)");

  auto* estimate = app.add_subcommand("estimate", "Prox-regularity radius estimate min{rho, r', r_S/4}");
  add_common(estimate, true);
  auto* e_radius = estimate->add_option("--radius", c.radius, "rho for cl(int S); searched when omitted")
                       ->check(CLI::PositiveNumber);
  auto* e_prime = estimate->add_option("--radius-prime", c.radius_prime, "Extended condition radius r'")
                      ->check(CLI::PositiveNumber);
  estimate->add_option("--samples", c.samples, "Boundary sample budget")->check(CLI::PositiveNumber);
  estimate->add_option("--normal-budget", c.normal_budget, "Normal probes per point")->check(CLI::PositiveNumber);
  estimate->add_option("--json", c.json, "Report output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (verify->parsed()) return run_verify(c, v_radius->count() > 0);
    if (cover->parsed()) return run_cover(c, c_radius->count() > 0, c_prime->count() > 0);
    if (tight->parsed()) return run_tightness(c, t_radius->count() > 0);
    if (estimate->parsed()) return run_estimate(c, e_radius->count() > 0, e_prime->count() > 0);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const SceneError& e) {
    std::cerr << "scene error: " << e.what() << '\n';
    return kUsage;
  } catch (const GeometryError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
