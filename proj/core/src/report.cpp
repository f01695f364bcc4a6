#include "proxgeo/report.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace proxgeo {

namespace {

using nlohmann::json;

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json array(const Point& p) {
  json a = json::array();
  for (Eigen::Index i = 0; i < p.size(); ++i) a.push_back(number(p[i]));
  return a;
}

template <class T>
json optional_point(const std::optional<T>& p) {
  return p ? array(*p) : json(nullptr);
}

json optional_number(const std::optional<double>& v) { return v ? number(*v) : json(nullptr); }

json optional_flag(const std::optional<bool>& v) { return v ? json(*v) : json(nullptr); }

json report_object(const ConditionReport& report) {
  json w = json::array();
  for (const auto& wit : report.witnesses)
    w.push_back({{"point", array(wit.point)}, {"dir", array(wit.dir)}, {"reason", wit.reason}});
  return {{"condition", to_string(report.condition)},
          {"radius", number(report.radius)},
          {"samples", report.samples_checked},
          {"pass", report.pass},
          {"witnesses", std::move(w)},
          {"seed", report.seed}};
}

json estimate_object(const RegularityEstimate& e) {
  return {{"rho", number(e.rho)},
          {"r_prime", number(e.r_prime)},
          {"r_S", number(e.r_S)},
          {"r_estimate", optional_number(e.r_out)}};
}

json ball_object(const Ball& b) {
  return {{"center", array(b.center)},
          {"radius", number(b.radius)},
          {"closed", b.closedness == Closedness::closed}};
}

json trace_object(const CoverTrace& t) {
  return {{"x", array(t.x)},
          {"case", t.cover_case ? json(to_string(*t.cover_case)) : json(nullptr)},
          {"s0", array(t.s0)},
          {"r0", number(t.r0)},
          {"eps", optional_number(t.eps)},
          {"z_eps", optional_point(t.z_eps)},
          {"s_eps", optional_point(t.s_eps)},
          {"y_eps", optional_point(t.y_eps)},
          {"zeta0", optional_point(t.zeta0)},
          {"zeta_eps", optional_point(t.zeta_eps)},
          {"r_eps", optional_number(t.r_eps)},
          {"ball", ball_object(t.ball)},
          {"verified", t.verified},
          {"claim1", optional_flag(t.claim1)},
          {"claim2", optional_flag(t.claim2)},
          {"claim3", optional_flag(t.claim3)},
          {"case2_lemma", optional_flag(t.case2_lemma)},
          {"error", t.error.empty() ? json(nullptr) : json(t.error)}};
}

std::string dump(const json& j, int indent) { return j.dump(indent) + "\n"; }

} // namespace

std::string to_json(const ConditionReport& report, int indent) {
  return dump(report_object(report), indent);
}

std::string to_json(const ConditionReport& report, const RegularityEstimate& estimate, int indent) {
  json j = report_object(report);
  j["estimate"] = estimate_object(estimate);
  return dump(j, indent);
}

std::string to_json(const RegularityEstimate& estimate, int indent) {
  return dump(estimate_object(estimate), indent);
}

std::string to_json_line(const CoverTrace& trace) { return trace_object(trace).dump(); }

std::string to_json_line(const RegularClosedTrace& trace) {
  json j = {{"upstream", trace_object(trace.upstream)},
            {"branch", trace.branch},
            {"ball", ball_object(trace.ball)},
            {"verified", trace.verified},
            {"error", trace.error.empty() ? json(nullptr) : json(trace.error)}};
  return j.dump();
}

std::string summary_json(const RegionResult& result, int indent) {
  json cases = json::object();
  for (std::size_t k = 0; k < result.case_counts.size(); ++k)
    cases[to_string(static_cast<CoverCase>(k))] = result.case_counts[k];
  json failures = json::array();
  for (const auto& f : result.failures)
    failures.push_back({{"grid_index", f.grid_index}, {"x", array(f.x)}, {"error", f.error}});
  json j = {{"radius", number(result.r)},
            {"ball_radius", number(result.r / 2)},
            {"grid_points", result.grid_points},
            {"exterior_points", result.traces.size()},
            {"verified", result.verified},
            {"cases", std::move(cases)},
            {"failures", std::move(failures)},
            {"pass", result.all_verified()}};
  return dump(j, indent);
}

std::string tightness_csv(const std::vector<TightnessRow>& rows) {
  std::ostringstream out;
  out.precision(17);
  out << "n,r,formula_value,measured_value,abs_error\n";
  for (const auto& row : rows) {
    out << row.n << ',' << row.r << ',' << row.formula << ',';
    if (row.measured)
      out << *row.measured << ',' << row.abs_error();
    else
      out << "nan,nan";
    out << '\n';
  }
  return out.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
    out << content;
    if (!out.flush()) throw std::runtime_error("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw std::runtime_error("cannot move output into '" + path + "': " + ec.message());
  }
}

} // namespace proxgeo
