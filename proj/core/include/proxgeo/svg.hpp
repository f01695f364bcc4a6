#pragma once

#include "proxgeo/covering.hpp"
#include "proxgeo/set_oracle.hpp"

#include <string>

namespace proxgeo {

/// SVG drawing of a 2-D cover: set outline, traced grid points, case-colored
/// balls and failed points. Throws for other dimensions.
std::string render_cover_svg(const SetOracle& set, const Window& window, const RegionResult& result);

} // namespace proxgeo
