#include "proxgeo/svg.hpp"

#include <array>
#include <cstdio>
#include <sstream>

namespace proxgeo {

namespace {

constexpr std::array<const char*, 5> kCaseColors = {"#4c72b0", "#55a868", "#8172b2", "#ccb974", "#64b5cd"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

} // namespace

std::string render_cover_svg(const SetOracle& set, const Window& window, const RegionResult& result) {
  if (set.dimension() != 2 || window.dimension() != 2)
    throw GeometryError("SVG output is only available for 2-D scenes");
  const auto [xlo, xhi] = window.bounds[0];
  const auto [ylo, yhi] = window.bounds[1];
  const double w = xhi - xlo, h = yhi - ylo;
  const double px = 800.0 / std::max(w, h);
  auto X = [&](double x) { return fmt((x - xlo) * px); };
  auto Y = [&](double y) { return fmt((yhi - y) * px); };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w * px) << "\" height=\"" << fmt(h * px)
    << "\" viewBox=\"0 0 " << fmt(w * px) << ' ' << fmt(h * px) << "\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  s << "<g fill=\"none\" stroke-width=\"0.6\" stroke-opacity=\"0.35\">\n";
  for (std::size_t i = 0; i < result.traces.size(); ++i) {
    const auto& t = result.traces[i];
    if (!t.cover_case || !t.verified) continue;
    s << "<circle cx=\"" << X(t.ball.center[0]) << "\" cy=\"" << Y(t.ball.center[1]) << "\" r=\""
      << fmt(t.ball.radius * px) << "\" stroke=\"" << kCaseColors[static_cast<std::size_t>(*t.cover_case)]
      << "\"/>\n";
  }
  s << "</g>\n<g fill=\"#555\">\n";
  for (const auto& t : result.traces)
    s << "<circle cx=\"" << X(t.x[0]) << "\" cy=\"" << Y(t.x[1]) << "\" r=\"0.8\"/>\n";
  s << "</g>\n<g fill=\"none\" stroke=\"black\" stroke-width=\"2\">\n";
  for (const auto& line : set.outline(window)) {
    s << "<polyline points=\"";
    for (const auto& p : line) s << X(p[0]) << ',' << Y(p[1]) << ' ';
    s << "\"/>\n";
  }
  s << "</g>\n<g stroke=\"#d62728\" stroke-width=\"1.5\">\n";
  for (const auto& f : result.failures) {
    const double cx = (f.x[0] - xlo) * px, cy = (yhi - f.x[1]) * px;
    s << "<line x1=\"" << fmt(cx - 3) << "\" y1=\"" << fmt(cy - 3) << "\" x2=\"" << fmt(cx + 3) << "\" y2=\""
      << fmt(cy + 3) << "\"/><line x1=\"" << fmt(cx - 3) << "\" y1=\"" << fmt(cy + 3) << "\" x2=\""
      << fmt(cx + 3) << "\" y2=\"" << fmt(cy - 3) << "\"/>\n";
  }
  s << "</g>\n</svg>\n";
  return s.str();
}

} // namespace proxgeo
