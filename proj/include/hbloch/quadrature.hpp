#pragma once

#include <complex>
#include <functional>

namespace hbloch {

using cplx = std::complex<double>;

/// F(z) - F(0) = z * int_0^1 F'(s z) ds by adaptive Gauss-Kronrod (15/31 nodes)
/// along the segment [0, z].
cplx radial_primitive(const std::function<cplx(cplx)>& derivative, cplx z,
                      double rel_tol = 1e-13);

/// (1/2pi) int_0^{2pi} g(r e^{i theta}) d theta by the n-point trapezoid rule.
double circle_mean(const std::function<double(cplx)>& g, double r, int n);

/// int_a^b f(x) dx for a real integrand (adaptive Gauss-Kronrod).
double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-13);

}  // namespace hbloch
