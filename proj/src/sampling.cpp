#include "hbloch/sampling.hpp"

#include <cmath>
#include <numbers>

#include "hbloch/errors.hpp"

namespace hbloch {

double DiskSampler::uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

ComplexPoint DiskSampler::point(double max_radius) {
  if (!(max_radius > 0.0 && max_radius <= 1.0)) throw DomainError("DiskSampler: max_radius must lie in (0, 1]");
  const double r = std::sqrt(uniform()) * max_radius;
  const double theta = 2.0 * std::numbers::pi * uniform();
  return ComplexPoint::polar(1.0 - r, theta);
}

}  // namespace hbloch
