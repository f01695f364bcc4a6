#pragma once

#include "proxgeo/covering.hpp"
#include "proxgeo/gallery.hpp"
#include "proxgeo/regularity.hpp"
#include "proxgeo/sphere_conditions.hpp"

#include <string>
#include <vector>

namespace proxgeo {

/// {"condition","radius","samples","pass","witnesses":[{"point","dir","reason"}],"seed"}.
/// Infinite values serialize as null.
std::string to_json(const ConditionReport& report, int indent = 2);

/// Same report with an extra "estimate" block.
std::string to_json(const ConditionReport& report, const RegularityEstimate& estimate, int indent = 2);

/// {"rho","r_prime","r_S","r_estimate"}.
std::string to_json(const RegularityEstimate& estimate, int indent = 2);

/// One line, every intermediate of the construction.
std::string to_json_line(const CoverTrace& trace);
std::string to_json_line(const RegularClosedTrace& trace);

/// Per-case counts and failures of a region cover.
std::string summary_json(const RegionResult& result, int indent = 2);

/// Header "n,r,formula_value,measured_value,abs_error".
std::string tightness_csv(const std::vector<TightnessRow>& rows);

/// Writes through a temporary file in the same directory, then renames.
void write_file_atomic(const std::string& path, const std::string& content);

} // namespace proxgeo
