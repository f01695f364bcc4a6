#pragma once

// Independent reference computations used as test oracles. Nothing here calls
// into the library's projection or sampling code.

#include "proxgeo/types.hpp"

#include <cmath>
#include <functional>
#include <numbers>

namespace testsupport {

inline proxgeo::Point vec(double x, double y) {
  proxgeo::Point p(2);
  p << x, y;
  return p;
}

inline proxgeo::Point vec(double x, double y, double z) {
  proxgeo::Point p(3);
  p << x, y, z;
  return p;
}

/// Golden-section minimum of a unimodal f on [a, b].
inline double golden_min(const std::function<double(double)>& f, double a, double b, int iters = 200) {
  const double g = (std::sqrt(5.0) - 1) / 2;
  double c = b - g * (b - a), d = a + g * (b - a);
  for (int i = 0; i < iters; ++i) {
    if (f(c) < f(d))
      b = d;
    else
      a = c;
    c = b - g * (b - a);
    d = a + g * (b - a);
  }
  return 0.5 * (a + b);
}

/// min over t in [lo, hi] of |curve(t) - p| by a dense scan and golden refinement.
inline double curve_distance(const std::function<proxgeo::Point(double)>& curve, const proxgeo::Point& p,
                             double lo, double hi, int scan = 20000) {
  auto f = [&](double t) { return (curve(t) - p).norm(); };
  double best_t = lo, best = f(lo);
  const double h = (hi - lo) / scan;
  for (int i = 1; i <= scan; ++i) {
    const double t = lo + i * h;
    const double v = f(t);
    if (v < best) {
      best = v;
      best_t = t;
    }
  }
  const double t = golden_min(f, std::max(lo, best_t - h), std::min(hi, best_t + h));
  return std::min(best, f(t));
}

/// Sum_{k=i+1}^{n} 1/(k(k+1)) by direct summation.
inline double tail_sum(int i, int n) {
  double s = 0;
  for (int k = n; k >= i + 1; --k) s += 1.0 / (static_cast<double>(k) * (k + 1));
  return s;
}

} // namespace testsupport
