#include "proxgeo/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace proxgeo {

void Tolerances::validate() const {
  if (!(tol_unit > 0) || !(tol_emptiness > 0) || !(tol_boundary > 0) || probe_budget <= 0)
    throw GeometryError("tolerances must be strictly positive");
  if (max_bisection_iters < 32)
    throw GeometryError("max_bisection_iters must be at least 32");
}

UnitVector UnitVector::normalized(const Point& v) {
  const double n = v.norm();
  if (!(n > 0) || !std::isfinite(n))
    throw GeometryError("cannot normalize a zero or non-finite direction");
  return UnitVector(v / n);
}

UnitVector UnitVector::from_unit(Point v, double tol) {
  if (std::abs(v.norm() - 1.0) > tol)
    throw GeometryError("vector is not of unit length");
  return UnitVector(std::move(v));
}

bool Ball::contains(const Point& p, double slack) const {
  const double d = (p - center).norm();
  return closedness == Closedness::closed ? d <= radius + slack : d < radius + slack;
}

bool Window::contains(const Point& p, double slack) const {
  if (p.size() != dimension()) return false;
  for (int i = 0; i < dimension(); ++i)
    if (p[i] < bounds[i].first - slack || p[i] > bounds[i].second + slack) return false;
  return true;
}

double Window::diameter() const {
  double s = 0;
  for (auto [lo, hi] : bounds) s += (hi - lo) * (hi - lo);
  return std::sqrt(s);
}

Window Window::cube(int dimension, double lo, double hi) {
  Window w;
  w.bounds.assign(static_cast<std::size_t>(dimension), {lo, hi});
  return w;
}

void require_dimension(const Point& p, int dimension) {
  if (p.size() != dimension)
    throw GeometryError("dimension mismatch: point has " + std::to_string(p.size()) +
                        " coordinates, set lives in R^" + std::to_string(dimension));
  if (!p.allFinite()) throw GeometryError("point has non-finite coordinates");
}

bool lexicographically_less(const Point& a, const Point& b) {
  for (Eigen::Index i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return a.size() < b.size();
}

namespace sampling {

namespace {

constexpr int kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59,
                           61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131,
                           137, 139, 149, 151, 157, 163, 167, 173, 179, 181, 191, 193, 197, 199,
                           211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281};
constexpr int kPrimeCount = sizeof(kPrimes) / sizeof(kPrimes[0]);

// Inverse of the standard normal CDF (Acklam's rational approximation).
double inverse_normal_cdf(double p) {
  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00,  2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  p = std::clamp(p, 1e-15, 1.0 - 1e-15);
  if (p < 0.02425) {
    const double q = std::sqrt(-2 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
  }
  if (p > 1 - 0.02425) {
    const double q = std::sqrt(-2 * std::log(1 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1);
}

} // namespace

double radical_inverse(std::uint64_t index, int base) {
  double result = 0.0;
  double f = 1.0 / base;
  while (index > 0) {
    result += f * static_cast<double>(index % static_cast<std::uint64_t>(base));
    index /= static_cast<std::uint64_t>(base);
    f /= base;
  }
  return result;
}

Halton::Halton(int dimension, std::uint64_t seed) : dimension_(dimension) {
  if (dimension < 1 || dimension > kPrimeCount)
    throw GeometryError("Halton dimension out of range");
  shift_.assign(static_cast<std::size_t>(dimension), 0.0);
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (auto& s : shift_) s = u(rng);
  }
}

Point Halton::at(std::uint64_t index) const {
  Point p(dimension_);
  // Index 0 is the origin of every radical inverse; skip it.
  for (int i = 0; i < dimension_; ++i) {
    double v = radical_inverse(index + 1, kPrimes[i]) + shift_[static_cast<std::size_t>(i)];
    p[i] = v - std::floor(v);
  }
  return p;
}

Point unit_sphere_point(const Halton& h, std::uint64_t index) {
  const Point u = h.at(index);
  const int n = h.dimension();
  if (n == 1) return Point::Constant(1, u[0] < 0.5 ? -1.0 : 1.0);
  if (n == 2) {
    const double a = 2 * std::numbers::pi * u[0];
    Point d(2);
    d << std::cos(a), std::sin(a);
    return d;
  }
  Point g(n);
  for (int i = 0; i < n; ++i) g[i] = inverse_normal_cdf(u[i]);
  const double norm = g.norm();
  if (norm == 0) {
    g.setZero();
    g[0] = 1;
    return g;
  }
  return g / norm;
}

Point unit_ball_point(const Halton& h, std::uint64_t index) {
  const int n = h.dimension();
  const Point u = h.at(index);
  Point dir(n);
  if (n == 1) {
    dir[0] = 2 * u[0] - 1;
    return dir;
  }
  if (n == 2) {
    const double a = 2 * std::numbers::pi * u[0];
    const double rad = std::sqrt(u[1]);
    dir << rad * std::cos(a), rad * std::sin(a);
    return dir;
  }
  // Rejection from the cube keeps the low-discrepancy structure in low n.
  if (n <= 4) {
    for (std::uint64_t k = 0;; ++k) {
      const Point q = 2.0 * h.at(index * 64 + k).array() - 1.0;
      if (q.squaredNorm() < 1.0) return q;
    }
  }
  Point g(n);
  for (int i = 0; i < n; ++i) g[i] = inverse_normal_cdf(u[i]);
  g /= g.norm();
  // Radial coordinate from the next unused prime base.
  const int base = n < kPrimeCount ? kPrimes[n] : 283;
  const double rad = std::pow(radical_inverse(index + 1, base), 1.0 / n);
  return g * rad;
}

double seed_offset(std::uint64_t seed, std::uint64_t stream) {
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + stream);
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

} // namespace sampling
} // namespace proxgeo
