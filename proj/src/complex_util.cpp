#include "hbloch/complex_util.hpp"

#include <cmath>

namespace hbloch {

cplx expm1(cplx x) {
  const double a = x.real();
  const double b = x.imag();
  const double s = std::sin(0.5 * b);
  return {std::expm1(a) * std::cos(b) - 2.0 * s * s, std::exp(a) * std::sin(b)};
}

cplx exprel(cplx x) {
  if (x == cplx{0.0, 0.0}) return {1.0, 0.0};
  return expm1(x) / x;
}

cplx pow_one_minus(cplx z, double alpha) { return std::exp(alpha * std::log(1.0 - z)); }

cplx power_primitive(cplx z, double alpha) {
  // ((1-z)^{1-alpha} - 1)/(alpha - 1) = -L * exprel((1 - alpha) L), L = Log(1 - z).
  const cplx L = std::log(1.0 - z);
  return -L * exprel((1.0 - alpha) * L);
}

}  // namespace hbloch
