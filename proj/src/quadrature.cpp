#include "hbloch/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <numbers>

namespace hbloch {

namespace {
constexpr unsigned kMaxDepth = 15;
}

cplx radial_primitive(const std::function<cplx(cplx)>& derivative, cplx z, double rel_tol) {
  if (z == cplx{0.0, 0.0}) return {0.0, 0.0};
  auto integrand = [&](double s) { return derivative(s * z); };
  const cplx mean = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      integrand, 0.0, 1.0, kMaxDepth, rel_tol);
  return z * mean;
}

double circle_mean(const std::function<double(cplx)>& g, double r, int n) {
  double acc = 0.0;
  for (int k = 0; k < n; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    acc += g(std::polar(r, theta));
  }
  return acc / static_cast<double>(n);
}

double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol) {
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, kMaxDepth, rel_tol);
}

}  // namespace hbloch
