#pragma once

#include <cstdint>
#include <random>

#include "hbloch/complex_point.hpp"

namespace hbloch {

/// Seeded sampler for identity checks. Uniforms are (x >> 11) * 2^-53 from
/// mt19937_64; disk points use radius sqrt(u) so they are area-uniform.
class DiskSampler {
 public:
  explicit DiskSampler(std::uint64_t seed = 0) : gen_(seed) {}

  /// Uniform in [0, 1).
  double uniform();
  /// Area-uniform point of the disk |z| < max_radius (max_radius in (0, 1]).
  ComplexPoint point(double max_radius = 1.0);
  /// Uniform point of the disk of radius max_radius as a raw value.
  cplx value(double max_radius = 1.0) { return point(max_radius).value(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace hbloch
