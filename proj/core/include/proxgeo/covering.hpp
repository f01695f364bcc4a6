#pragma once

#include "proxgeo/set_oracle.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace proxgeo {

enum class CoverCase { Case1, Case2, Case3_y_eq_x, Case3_y_near, Case3_y_far };

const char* to_string(CoverCase c);

/// Audit record of one closed r/2-ball construction around an exterior point.
struct CoverTrace {
  Point x;
  std::optional<CoverCase> cover_case; // empty when the construction failed early
  Point s0;
  double r0 = 0.0;
  std::optional<double> eps;
  std::optional<Point> z_eps, s_eps, y_eps;
  std::optional<Point> zeta0, zeta_eps;
  std::optional<double> r_eps;
  Ball ball;
  bool verified = false;

  // Runtime checks of the proof's intermediate claims (only set where they apply).
  std::optional<bool> claim1;
  std::optional<bool> claim2;
  std::optional<bool> claim3;
  std::optional<bool> case2_lemma;

  std::string error; // empty on success
};

struct CoverOptions {
  /// Normal-search budget for oracles without analytic normals.
  std::size_t normal_budget = 64;
  /// Low-discrepancy samples for the Claim-1 containment check.
  std::size_t claim1_samples = 10000;
  std::uint64_t seed = 0;
  /// Halvings of eps allowed when the interior probe fails.
  int max_eps_halvings = 8;
};

/// r_eps = r0^2 d / (d^2 + r0^2 - r^2); requires d >= r.
double r_epsilon(double r0, double d, double r);

/// Sampled check that B(x + r_eps u; r_eps) ⊂ B(x; r0) ∪ B(y; r), u = (y - x)/|y - x|.
bool verify_claim1(const Point& x, double r0, const Point& y, double r, double r_eps,
                   std::size_t samples, std::uint64_t seed = 0);

/// Closed ball of radius r/2 containing x and contained in S^c. Failures are
/// reported through CoverTrace::error and verified = false; a point inside S throws.
CoverTrace cover_point(const SetOracle& set, const Point& x, double r,
                       const CoverOptions& options = {}, const Tolerances& tol = {});

struct RegularClosedTrace {
  CoverTrace upstream; // construction on cl(int S); its ball center is y_x
  int branch = 0;      // 1: ball around y_x, 2: ball shifted from x toward y_x
  Ball ball;           // radius r'
  bool verified = false;
  std::string error;
};

/// Ball of radius r' < r/2 around x for regular closed S, built from the r/2-ball on cl(int S).
RegularClosedTrace cover_point_regular_closed(const SetOracle& set, const Point& x, double r,
                                              double r_prime, const CoverOptions& options = {},
                                              const Tolerances& tol = {});

/// Axis-aligned lattice; spec "lo:hi:step" per axis, axes joined by 'x'. A single
/// axis spec is repeated over every dimension.
struct GridSpec {
  struct Axis {
    double lo, hi, step;
    std::size_t count() const;
    double at(std::size_t i) const { return lo + static_cast<double>(i) * step; }
  };
  std::vector<Axis> axes;

  static GridSpec parse(const std::string& text, int dimension);
  std::size_t size() const;
  Point point(std::size_t index) const;
};

struct CoverFailure {
  std::size_t grid_index;
  Point x;
  std::string error;
};

struct RegionResult {
  double r = 0.0;
  std::size_t grid_points = 0;
  std::vector<std::size_t> grid_indices; // grid index of each trace
  std::vector<CoverTrace> traces;        // one per exterior grid point, grid order
  std::array<std::size_t, 5> case_counts{};
  std::size_t verified = 0;
  std::vector<CoverFailure> failures;

  bool all_verified() const { return failures.empty() && verified == traces.size(); }
};

RegionResult cover_region(const SetOracle& set, double r, const GridSpec& grid,
                          const CoverOptions& options = {}, const Tolerances& tol = {});

} // namespace proxgeo
