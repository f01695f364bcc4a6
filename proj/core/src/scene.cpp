#include "proxgeo/scene.hpp"

#include "proxgeo/gallery.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace proxgeo {

namespace {

using nlohmann::json;

Point read_point(const json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw SceneError(std::string(what) + " must be a non-empty array");
  Point p(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw SceneError(std::string(what) + " must contain numbers");
    p[static_cast<Eigen::Index>(i)] = j[i].get<double>();
  }
  return p;
}

double read_number(const json& j, const char* what) {
  if (!j.is_number()) throw SceneError(std::string(what) + " must be a number");
  return j.get<double>();
}

OraclePtr build_set(const json& spec, int dimension) {
  if (!spec.is_object() || !spec.contains("kind") || !spec["kind"].is_string())
    throw SceneError("set needs a string field \"kind\"");
  const std::string kind = spec["kind"];
  const json params = spec.value("params", json::object());
  if (!params.is_object()) throw SceneError("set params must be an object");

  GalleryParams gp;
  gp.dimension = dimension;
  for (const auto& [key, value] : params.items()) {
    if (key == "center") gp.center = read_point(value, "center");
    else if (key == "radius" || key == "r") gp.radius = read_number(value, "radius");
    else if (key == "normal") gp.normal = read_point(value, "normal");
    else if (key == "offset") gp.offset = read_number(value, "offset");
    else if (key == "point") gp.point = read_point(value, "point");
    else if (key == "direction") gp.direction = read_point(value, "direction");
    else if (key == "a") gp.a = read_point(value, "a");
    else if (key == "b") gp.b = read_point(value, "b");
    else if (key == "c") gp.c = read_number(value, "c");
    else if (key == "n") {
      if (!value.is_number_integer()) throw SceneError("n must be an integer");
      gp.n = value.get<int>();
    } else if (key == "balls") {
      if (!value.is_array()) throw SceneError("balls must be an array");
      for (const auto& b : value) {
        if (!b.is_object() || !b.contains("center") || !b.contains("radius"))
          throw SceneError("each ball needs center and radius");
        gp.balls.push_back({read_point(b["center"], "ball center"), read_number(b["radius"], "ball radius"),
                            Closedness::open});
      }
    } else if (key == "parts") {
      if (!value.is_array() || value.empty()) throw SceneError("parts must be a non-empty array");
      for (const auto& part : value) gp.parts.push_back(build_set(part, dimension));
    } else {
      throw SceneError("unknown parameter '" + key + "' for kind '" + kind + "'");
    }
  }
  try {
    return make_gallery_set(kind, gp);
  } catch (const SceneError&) {
    throw;
  } catch (const GeometryError& e) {
    throw SceneError(e.what());
  }
}

} // namespace

Scene parse_scene(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw SceneError(std::string("scene is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw SceneError("scene must be a JSON object");
  if (!j.contains("dimension") || !j["dimension"].is_number_integer())
    throw SceneError("scene needs an integer \"dimension\"");
  if (!j.contains("set")) throw SceneError("scene needs a \"set\"");

  Scene scene;
  scene.dimension = j["dimension"].get<int>();
  if (scene.dimension < 1) throw SceneError("dimension must be at least 1");
  scene.kind = j["set"].value("kind", "");
  scene.set = build_set(j["set"], scene.dimension);
  if (scene.set->dimension() != scene.dimension)
    throw SceneError("set lives in R^" + std::to_string(scene.set->dimension()) + " but the scene declares R^" +
                     std::to_string(scene.dimension));

  if (j.contains("window")) {
    const json& w = j["window"];
    if (!w.is_array() || static_cast<int>(w.size()) != scene.dimension)
      throw SceneError("window needs one [lo,hi] pair per dimension");
    for (const auto& axis : w) {
      const Point b = read_point(axis, "window axis");
      if (b.size() != 2 || !(b[0] < b[1])) throw SceneError("window axis must be [lo,hi] with lo < hi");
      scene.window.bounds.emplace_back(b[0], b[1]);
    }
  } else {
    scene.window = Window::cube(scene.dimension, -3.0, 3.0);
  }

  if (j.contains("tolerances")) {
    const json& t = j["tolerances"];
    if (!t.is_object()) throw SceneError("tolerances must be an object");
    for (const auto& [key, value] : t.items()) {
      if (key == "tol_unit") scene.tolerances.tol_unit = read_number(value, key.c_str());
      else if (key == "tol_emptiness") scene.tolerances.tol_emptiness = read_number(value, key.c_str());
      else if (key == "tol_boundary") scene.tolerances.tol_boundary = read_number(value, key.c_str());
      else if (key == "max_bisection_iters") scene.tolerances.max_bisection_iters = static_cast<int>(read_number(value, key.c_str()));
      else if (key == "probe_budget") scene.tolerances.probe_budget = static_cast<int>(read_number(value, key.c_str()));
      else throw SceneError("unknown tolerance '" + key + "'");
    }
  }
  try {
    scene.tolerances.validate();
  } catch (const GeometryError& e) {
    throw SceneError(e.what());
  }
  return scene;
}

Scene load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SceneError("cannot open scene file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scene(buf.str());
}

} // namespace proxgeo
