#pragma once

#include "proxgeo/set_oracle.hpp"

#include <string>

namespace proxgeo {

/// Malformed or inconsistent scene description.
class SceneError : public GeometryError {
public:
  using GeometryError::GeometryError;
};

/// {"dimension": n, "set": {"kind": ..., "params": {...}}, "window": [[lo,hi],...],
///  "tolerances": {...}}
struct Scene {
  int dimension = 0;
  std::string kind;
  OraclePtr set;
  Window window;
  Tolerances tolerances;
};

Scene parse_scene(const std::string& json_text);
Scene load_scene(const std::string& path);

} // namespace proxgeo
