#pragma once

#include "proxgeo/types.hpp"

#include <cstdint>

namespace proxgeo::sampling {

/// Radical inverse of `index` in the given prime base.
double radical_inverse(std::uint64_t index, int base);

/// Low-discrepancy Halton sequence in [0,1)^dim with an optional
/// Cranley-Patterson rotation derived from `seed` (seed 0 = no rotation).
class Halton {
public:
  Halton(int dimension, std::uint64_t seed = 0);

  Point at(std::uint64_t index) const;
  int dimension() const { return dimension_; }

private:
  int dimension_;
  std::vector<double> shift_;
};

/// Uniform-ish low-discrepancy point in the open unit ball of R^n for index i.
Point unit_ball_point(const Halton& h, std::uint64_t index);

/// Low-discrepancy unit direction in R^n for index i (uses n Halton coordinates).
Point unit_sphere_point(const Halton& h, std::uint64_t index);

/// Scalar in [0,1) drawn deterministically from a seed (used as a stratification offset).
double seed_offset(std::uint64_t seed, std::uint64_t stream = 0);

} // namespace proxgeo::sampling
