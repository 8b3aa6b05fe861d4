#pragma once

namespace hbloch {

/// Inputs of the growth and coefficient estimates: an upper bound for
/// beta*_nu(f) and |omega_f(0)|.
struct BoundContext {
  double nu = 1.0;
  double beta_star = 1.0;
  double omega0 = 0.0;

  /// Throws DomainError unless nu > 0, beta_star >= 0 and 0 <= omega0 < 1.
  void validate() const;
  /// sqrt((1 + omega0)/(1 - omega0)).
  double dilatation_factor() const;
};

/// h_nu(r): -log(1 - r) at nu = 1/2, ((1 - r)^{1/2 - nu} - 1)/(nu - 1/2)
/// otherwise; evaluated through expm1 so it is smooth across nu = 1/2.
double h_nu_radial(double nu, double r);

/// beta* sqrt((1 + w0)/(1 - w0)) h_nu(r): bound for max{|h(z) - a_0|, |g(z)|}, |z| = r.
double growth_bound(const BoundContext& ctx, double r);

/// Uniform cap beta* sqrt((1 + w0)/(1 - w0)) / (1/2 - nu), valid for nu < 1/2.
double uniform_growth_cap(const BoundContext& ctx);

/// Bound for max{|a_n|, |b_n|}: beta*/sqrt(1 - w0^2) at n = 1, and
/// beta* (e/(2nu+1))^{nu+1/2} sqrt((1+w0)/(1-w0)) (n + 2nu)^{nu-1/2} for n >= 2.
double coeff_bound(const BoundContext& ctx, int n);

/// Pre-optimization bound (beta*/n) sqrt(...) r^{1-n} (1 - r^2)^{-(nu+1/2)}.
double coeff_bound_at_radius(const BoundContext& ctx, int n, double r);

/// Radius sqrt((n - 1)/(n + 2nu)) minimizing coeff_bound_at_radius.
double coeff_bound_optimal_radius(double nu, int n);

/// [(1 + (2nu+1)/(x-1))^{(x-1)/(2nu+1)}]^{nu+1/2} (1 + 2nu/x), x >= 2.
double phi_nu(double nu, double x);

/// (2nu - 1)^2 x^2 + 8(nu - nu^2) x + 8 nu^2.
double psi_nu(double nu, double x);

}  // namespace hbloch
