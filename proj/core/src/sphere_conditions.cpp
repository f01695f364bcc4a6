#include "proxgeo/sphere_conditions.hpp"

#include "detail.hpp"
#include "proxgeo/sampling.hpp"
#include "proxgeo/set_queries.hpp"

#include <algorithm>
#include <cmath>

namespace proxgeo {

namespace {

constexpr double kDoublingCapExponent = 40;

} // namespace

const char* to_string(Condition c) {
  switch (c) {
  case Condition::Exterior: return "exterior";
  case Condition::ExtendedExterior: return "extended";
  case Condition::ProxRegular: return "prox_regular";
  }
  return "exterior";
}

Condition parse_condition(const std::string& name) {
  if (name == "exterior") return Condition::Exterior;
  if (name == "extended") return Condition::ExtendedExterior;
  if (name == "prox_regular") return Condition::ProxRegular;
  throw GeometryError("unknown condition '" + name + "' (expected exterior|extended|prox_regular)");
}

bool realized_by_sphere(const SetOracle& set, const Point& x, const UnitVector& zeta, double r,
                        const Tolerances& tol) {
  if (!(r > 0)) throw GeometryError("realized_by_sphere: radius must be positive");
  require_dimension(x, set.dimension());
  if (zeta.size() != x.size()) throw GeometryError("realized_by_sphere: direction dimension mismatch");
  if (set.empty()) return true;
  const Point center = x + r * zeta.dir();
  return set.project(center).distance >= r - tol.tol_emptiness * std::max(1.0, r);
}

bool realized_by_sphere(const SetOracle& set, const Point& x, const Point& zeta, double r,
                        const Tolerances& tol) {
  return realized_by_sphere(set, x, UnitVector::normalized(zeta), r, tol);
}

std::vector<ProximalNormalCandidate> sample_proximal_normals(const SetOracle& set, const Point& x,
                                                             std::size_t budget, std::uint64_t seed,
                                                             const Tolerances& tol, bool certify) {
  if (budget == 0) throw GeometryError("sample_proximal_normals: budget must be at least 1");
  require_dimension(x, set.dimension());
  const double step = 10 * tol.tol_boundary * detail::scale_of(x);

  std::vector<ProximalNormalCandidate> out;
  if (set.capabilities().analytic_normals) {
    for (auto& g : set.normal_generators(x)) out.push_back({x, std::move(g), {}, {}});
  } else {
    const int n = set.dimension();
    sampling::Halton h(n, seed);
    std::vector<UnitVector> seen;
    for (std::size_t i = 0; i < budget; ++i) {
      const Point q = x + step * sampling::unit_sphere_point(h, i);
      if (set.contains(q)) continue;
      const Projection pr = set.project(q);
      if ((pr.nearest - x).norm() > step || !(pr.distance > 0)) continue;
      UnitVector dir = UnitVector::normalized(q - pr.nearest);
      const bool dup = std::any_of(seen.begin(), seen.end(), [&](const UnitVector& s) {
        return (s.dir() - dir.dir()).norm() <= 1e-6;
      });
      if (dup) continue;
      seen.push_back(dir);
      out.push_back({pr.nearest, std::move(dir), {}, {}});
    }
  }

  if (certify) {
    const double cap = std::ldexp(step, static_cast<int>(kDoublingCapExponent));
    for (auto& c : out) {
      double rho = step;
      if (!realized_by_sphere(set, c.base, c.dir, rho, tol)) continue;
      while (rho < cap && realized_by_sphere(set, c.base, c.dir, 2 * rho, tol)) rho *= 2;
      if (rho >= cap) {
        c.realized_radius = kInfinity;
        c.sigma = 0.0;
      } else {
        c.realized_radius = rho;
        c.sigma = 1 / (2 * rho);
      }
    }
  }
  return out;
}

ConditionReport check_condition(const SetOracle& set, Condition condition, double r,
                                const Window& window, const CheckOptions& options,
                                const Tolerances& tol) {
  if (!(r > 0)) throw GeometryError("check_condition: radius must be positive");
  if (options.boundary_budget == 0 || options.normal_budget == 0)
    throw GeometryError("check_condition: budgets must be at least 1");
  tol.validate();

  ConditionReport report;
  report.condition = condition;
  report.radius = r;
  report.seed = options.seed;

  const auto samples = boundary_sample(set, options.boundary_budget, options.seed, window, tol);
  report.samples_checked = samples.size();

  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Point& x = samples[i];
    const auto normals =
        sample_proximal_normals(set, x, options.normal_budget, options.seed + i, tol, false);
    if (normals.empty()) {
      report.witnesses.push_back({i, x, Point(), "no-normal-found"});
      continue;
    }

    bool need_all = condition == Condition::ProxRegular;
    if (condition == Condition::ExtendedExterior) {
      try {
        need_all = classify_boundary(set, x, options.classify_eps, tol) == BoundaryClass::ThinBoundary;
      } catch (const GeometryError& e) {
        report.witnesses.push_back({i, x, Point(), std::string("classification-failed: ") + e.what()});
        continue;
      }
    }

    const ProximalNormalCandidate* unrealized = nullptr;
    bool any_realized = false;
    for (const auto& c : normals) {
      if (realized_by_sphere(set, c.base, c.dir, r, tol)) {
        any_realized = true;
      } else if (!unrealized) {
        unrealized = &c;
        if (need_all) break;
      }
    }
    if (need_all && unrealized)
      report.witnesses.push_back({i, x, unrealized->dir.dir(), "normal-not-realized"});
    else if (!need_all && !any_realized)
      report.witnesses.push_back({i, x, normals.front().dir.dir(), "no-realized-normal"});
  }

  std::stable_sort(report.witnesses.begin(), report.witnesses.end(),
                   [](const Witness& a, const Witness& b) { return a.sample_index < b.sample_index; });
  report.pass = report.witnesses.empty();
  return report;
}

InheritanceReport closure_inheritance_check(const SetOracle& set, double r, const Window& window,
                                            const CheckOptions& options, const Tolerances& tol) {
  const OraclePtr closure = set.closure_of_interior();
  if (!closure) throw GeometryError(set.kind() + ": no cl(int S) companion available");
  InheritanceReport out;
  out.report_s = check_condition(set, Condition::Exterior, r, window, options, tol);
  out.report_closure = check_condition(*closure, Condition::Exterior, r, window, options, tol);
  out.consistent = !(out.report_s.pass && !out.report_closure.pass);
  return out;
}

} // namespace proxgeo
