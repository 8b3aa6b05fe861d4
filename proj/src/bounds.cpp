#include "hbloch/bounds.hpp"

#include <cmath>
#include <numbers>

#include "hbloch/errors.hpp"

namespace hbloch {

void BoundContext::validate() const {
  if (!(nu > 0.0)) throw DomainError("BoundContext: nu must be > 0");
  if (!(beta_star >= 0.0)) throw DomainError("BoundContext: beta_star must be >= 0");
  if (!(omega0 >= 0.0 && omega0 < 1.0)) throw DomainError("BoundContext: omega0 must lie in [0, 1)");
}

double BoundContext::dilatation_factor() const { return std::sqrt((1.0 + omega0) / (1.0 - omega0)); }

double h_nu_radial(double nu, double r) {
  if (!(nu > 0.0)) throw DomainError("h_nu_radial: nu must be > 0");
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("h_nu_radial: r must lie in [0, 1)");
  const double L = std::log1p(-r);
  const double x = (0.5 - nu) * L;
  if (x == 0.0) return -L;
  return -L * std::expm1(x) / x;
}

double growth_bound(const BoundContext& ctx, double r) {
  ctx.validate();
  return ctx.beta_star * ctx.dilatation_factor() * h_nu_radial(ctx.nu, r);
}

double uniform_growth_cap(const BoundContext& ctx) {
  ctx.validate();
  if (!(ctx.nu < 0.5)) throw DomainError("uniform_growth_cap: requires nu < 1/2");
  return ctx.beta_star * ctx.dilatation_factor() / (0.5 - ctx.nu);
}

double coeff_bound(const BoundContext& ctx, int n) {
  ctx.validate();
  if (n < 1) throw DomainError("coeff_bound: n must be >= 1");
  if (n == 1) return ctx.beta_star / std::sqrt(1.0 - ctx.omega0 * ctx.omega0);
  const double nu = ctx.nu;
  return ctx.beta_star * std::pow(std::numbers::e / (2.0 * nu + 1.0), nu + 0.5) * ctx.dilatation_factor() *
         std::pow(static_cast<double>(n) + 2.0 * nu, nu - 0.5);
}

double coeff_bound_at_radius(const BoundContext& ctx, int n, double r) {
  ctx.validate();
  if (n < 1) throw DomainError("coeff_bound_at_radius: n must be >= 1");
  if (!(r > 0.0 && r < 1.0)) throw DomainError("coeff_bound_at_radius: r must lie in (0, 1)");
  return ctx.beta_star / static_cast<double>(n) * ctx.dilatation_factor() * std::pow(r, 1.0 - n) *
         std::pow(1.0 - r * r, -(ctx.nu + 0.5));
}

double coeff_bound_optimal_radius(double nu, int n) {
  if (n < 2) throw DomainError("coeff_bound_optimal_radius: n must be >= 2");
  return std::sqrt((n - 1.0) / (n + 2.0 * nu));
}

double phi_nu(double nu, double x) {
  if (!(nu > 0.0)) throw DomainError("phi_nu: nu must be > 0");
  if (!(x >= 2.0)) throw DomainError("phi_nu: x must be >= 2");
  const double c = 2.0 * nu + 1.0;
  // (1 + c/(x-1))^{(x-1)/c} via log1p keeps the x -> infinity limit accurate.
  const double inner = std::exp((x - 1.0) / c * std::log1p(c / (x - 1.0)));
  return std::pow(inner, nu + 0.5) * (1.0 + 2.0 * nu / x);
}

double psi_nu(double nu, double x) {
  const double a = 2.0 * nu - 1.0;
  return a * a * x * x + 8.0 * (nu - nu * nu) * x + 8.0 * nu * nu;
}

}  // namespace hbloch
