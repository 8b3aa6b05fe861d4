#include "hbloch/complex_point.hpp"

#include <cmath>
#include <string>

#include "hbloch/errors.hpp"

namespace hbloch {

NotSensePreserving::NotSensePreserving(std::complex<double> where, double jacobian)
    : Error("map is not sense-preserving at z = (" + std::to_string(where.real()) + ", " +
            std::to_string(where.imag()) + "), J = " + std::to_string(jacobian)),
      where_(where),
      jacobian_(jacobian) {}

UndefinedDilatation::UndefinedDilatation(std::complex<double> where)
    : Error("dilatation undefined: h'(z) vanishes at z = (" + std::to_string(where.real()) + ", " +
            std::to_string(where.imag()) + ")"),
      where_(where) {}

ComplexPoint ComplexPoint::polar(double one_minus_r, double theta) {
  if (!(one_minus_r > 0.0 && one_minus_r <= 1.0)) {
    throw DomainError("ComplexPoint::polar: one_minus_r must lie in (0, 1]");
  }
  return ComplexPoint(std::polar(1.0 - one_minus_r, theta), one_minus_r);
}

ComplexPoint ComplexPoint::from_value(cplx z) {
  const double d = 1.0 - std::abs(z);
  if (!(d > 0.0)) {
    throw DomainError("ComplexPoint::from_value: point is not in the open unit disk");
  }
  return ComplexPoint(z, d);
}

ComplexPoint ComplexPoint::with_distance(cplx z, double one_minus_r) {
  if (!(one_minus_r > 0.0 && one_minus_r <= 1.0)) {
    throw DomainError("ComplexPoint::with_distance: one_minus_r must lie in (0, 1]");
  }
  return ComplexPoint(z, one_minus_r);
}

}  // namespace hbloch
