#pragma once

#include <complex>

namespace hbloch {

using cplx = std::complex<double>;

/// exp(x) - 1 without cancellation for small |x|.
cplx expm1(cplx x);

/// (exp(x) - 1) / x, continuous through x = 0.
cplx exprel(cplx x);

/// (1 - z)^alpha on the principal branch.
cplx pow_one_minus(cplx z, double alpha);

/// int_0^z (1 - s)^{-alpha} ds: ((1-z)^{1-alpha} - 1)/(alpha - 1), and
/// -log(1 - z) at alpha = 1. Continuous in alpha through 1.
cplx power_primitive(cplx z, double alpha);

}  // namespace hbloch
