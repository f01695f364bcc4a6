#pragma once

#include "proxgeo/set_oracle.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace proxgeo {

/// A proximal normal direction at a boundary point with its realization evidence.
struct ProximalNormalCandidate {
  Point base;
  UnitVector dir;
  /// Constant of the proximal normal inequality, 1/(2 realized_radius).
  std::optional<double> sigma;
  /// Largest certified radius (factor-2 accurate); +inf when never refuted.
  std::optional<double> realized_radius;
};

enum class Condition { Exterior, ExtendedExterior, ProxRegular };

/// "exterior", "extended" or "prox_regular".
const char* to_string(Condition c);
Condition parse_condition(const std::string& name);

struct Witness {
  std::size_t sample_index = 0;
  Point point;
  Point dir; // empty when no normal was found
  std::string reason;
};

struct ConditionReport {
  Condition condition = Condition::Exterior;
  double radius = 0.0;
  std::size_t samples_checked = 0;
  bool pass = true;
  std::vector<Witness> witnesses; // sorted by sample index
  std::uint64_t seed = 0;
};

/// B(x + r zeta; r) ∩ S = ∅ up to tol_emptiness * max(1, r).
bool realized_by_sphere(const SetOracle& set, const Point& x, const UnitVector& zeta, double r,
                        const Tolerances& tol = {});
bool realized_by_sphere(const SetOracle& set, const Point& x, const Point& zeta, double r,
                        const Tolerances& tol = {});

/// Proximal normals at x. Exact generators for oracles with analytic normals,
/// otherwise directions of exterior probes that project back to (near) x.
/// `certify` runs the doubling search for realized_radius and sigma.
std::vector<ProximalNormalCandidate> sample_proximal_normals(const SetOracle& set, const Point& x,
                                                             std::size_t budget, std::uint64_t seed,
                                                             const Tolerances& tol = {},
                                                             bool certify = true);

struct CheckOptions {
  std::size_t boundary_budget = 2000;
  std::size_t normal_budget = 16;
  std::uint64_t seed = 0;
  /// Scale passed to classify_boundary.
  double classify_eps = 1e-3;
};

ConditionReport check_condition(const SetOracle& set, Condition condition, double r,
                                const Window& window, const CheckOptions& options = {},
                                const Tolerances& tol = {});

struct InheritanceReport {
  ConditionReport report_s;
  ConditionReport report_closure;
  bool consistent = true;
};

/// Exterior checks on S and on cl(int S); flags an observed "S passes, cl(int S) fails".
InheritanceReport closure_inheritance_check(const SetOracle& set, double r, const Window& window,
                                            const CheckOptions& options = {},
                                            const Tolerances& tol = {});

} // namespace proxgeo
