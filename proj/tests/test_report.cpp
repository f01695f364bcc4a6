#include "proxgeo/gallery.hpp"
#include "proxgeo/report.hpp"
#include "proxgeo/scene.hpp"
#include "proxgeo/svg.hpp"
#include "test_support.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace proxgeo;
using testsupport::vec;
using nlohmann::json;

namespace {

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

TEST_CASE("scene parsing") {
  const auto sc = parse_scene(R"({"dimension": 2, "set": {"kind": "disk", "params": {"center": [1, 0], "radius": 2}},
                                  "window": [[-1, 4], [-3, 3]], "tolerances": {"tol_emptiness": 1e-8}})");
  CHECK(sc.dimension == 2);
  CHECK(sc.kind == "disk");
  CHECK(sc.set->contains(vec(2.9, 0)));
  CHECK(sc.window.bounds[0].first == -1);
  CHECK(sc.tolerances.tol_emptiness == 1e-8);

  const auto def = parse_scene(R"({"dimension": 2, "set": {"kind": "line"}})");
  CHECK(def.window.bounds.size() == 2);
  CHECK(def.window.bounds[1].second == 3);
}

TEST_CASE("scene errors") {
  const char* bad[] = {
      "not json",
      "[]",
      R"({"set": {"kind": "disk"}})",
      R"({"dimension": 2})",
      R"({"dimension": 2, "set": {"params": {}}})",
      R"({"dimension": 2, "set": {"kind": "disk", "params": {"radius": "one"}}})",
      R"({"dimension": 2, "set": {"kind": "disk", "params": {"colour": 1}}})",
      R"({"dimension": 3, "set": {"kind": "disk", "params": {"center": [0, 0]}}})",
      R"({"dimension": 2, "set": {"kind": "disk"}, "window": [[0, 1]]})",
      R"({"dimension": 2, "set": {"kind": "disk"}, "window": [[1, 0], [0, 1]]})",
      R"({"dimension": 2, "set": {"kind": "disk"}, "tolerances": {"tol_magic": 1}})",
      R"({"dimension": 2, "set": {"kind": "torus"}})",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_scene(text), SceneError);
  }
  CHECK_THROWS_AS(load_scene("/nonexistent/scene.json"), SceneError);
}

TEST_CASE("condition report JSON schema") {
  const auto s = make_gallery_set("example2");
  const auto rep = check_condition(*s, Condition::Exterior, 0.1, Window::cube(2, -3, 3), {500, 16, 42});
  const json j = json::parse(to_json(rep));
  for (const char* key : {"condition", "radius", "samples", "pass", "witnesses", "seed"}) CHECK(j.contains(key));
  CHECK(j.size() == 6);
  CHECK(j["condition"] == "exterior");
  CHECK(j["pass"] == false);
  CHECK(j["seed"] == 42);
  REQUIRE(!j["witnesses"].empty());
  for (const char* key : {"point", "dir", "reason"}) CHECK(j["witnesses"][0].contains(key));
  CHECK(to_json(rep) == to_json(rep));
}

TEST_CASE("estimate JSON writes infinity as null") {
  const json j = json::parse(to_json(make_estimate(1, 1, kInfinity)));
  CHECK(j["r_S"].is_null());
  CHECK(j["r_estimate"] == 1.0);
  const json k = json::parse(to_json(make_estimate(1, 1, 0)));
  CHECK(k["r_estimate"].is_null());

  ConditionReport rep;
  const json with = json::parse(to_json(rep, make_estimate(1, 2, 1)));
  CHECK(with["estimate"]["r_estimate"] == 0.25);
}

TEST_CASE("cover traces serialize to one line") {
  const auto disk = make_gallery_set("disk");
  const auto t = cover_point(*disk, vec(1.1, 0), 1.0);
  const std::string line = to_json_line(t);
  CHECK(line.find('\n') == std::string::npos);
  const json j = json::parse(line);
  CHECK(j["verified"] == true);
  CHECK(j["ball"]["radius"] == 0.5);
  CHECK(j["error"].is_null());

  const auto rc = cover_point_regular_closed(*disk, vec(2, 0), 1.0, 0.4);
  CHECK(json::parse(to_json_line(rc))["ball"]["radius"] == 0.4);

  const auto res = cover_region(*disk, 1.0, GridSpec::parse("-2:2:0.5", 2));
  const json sum = json::parse(summary_json(res));
  CHECK(sum["pass"] == true);
  CHECK(sum["ball_radius"] == 0.5);
  CHECK(sum["exterior_points"] == res.traces.size());
}

TEST_CASE("tightness CSV") {
  TightnessRow a{2, 1.0, tightness_formula(2, 1.0), 0.6, ""};
  TightnessRow b{3, 1.0, tightness_formula(3, 1.0), std::nullopt, "no"};
  const std::string csv = tightness_csv({a, b});
  std::istringstream in(csv);
  std::string header, row1, row2;
  std::getline(in, header);
  std::getline(in, row1);
  std::getline(in, row2);
  CHECK(header == "n,r,formula_value,measured_value,abs_error");
  CHECK(row1.rfind("2,", 0) == 0);
  CHECK(row2.find("nan,nan") != std::string::npos);
}

TEST_CASE("atomic writes replace the target and leave no temporary") {
  const auto dir = std::filesystem::temp_directory_path() / "proxgeo_report_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "out.json";
  write_file_atomic(path.string(), "first");
  write_file_atomic(path.string(), "second");
  CHECK(read_file(path) == "second");
  CHECK_FALSE(std::filesystem::exists(dir / "out.json.tmp"));
  CHECK_THROWS(write_file_atomic((dir / "missing" / "x.json").string(), "x"));
  std::filesystem::remove_all(dir);
}

TEST_CASE("svg rendering") {
  const auto disk = make_gallery_set("disk");
  const Window w = Window::cube(2, -2, 2);
  const auto res = cover_region(*disk, 1.0, GridSpec::parse("-2:2:0.5", 2));
  const std::string svg = render_cover_svg(*disk, w, res);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("<circle") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);

  GalleryParams p;
  p.dimension = 3;
  const auto ball3 = make_gallery_set("disk", p);
  const auto res3 = cover_region(*ball3, 1.0, GridSpec::parse("-2:2:2", 3));
  CHECK_THROWS_AS(render_cover_svg(*ball3, Window::cube(3, -2, 2), res3), GeometryError);
}
