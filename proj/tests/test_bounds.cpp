#include "doctest.h"

#include <cmath>
#include <numbers>

#include "hbloch/bounds.hpp"
#include "hbloch/catalog.hpp"
#include "hbloch/errors.hpp"
#include "hbloch/sampling.hpp"

using namespace hbloch;

TEST_CASE("h_nu_radial") {
  CHECK(h_nu_radial(0.5, 1.0 - 1.0 / std::numbers::e) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(h_nu_radial(1.0, 0.75) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(h_nu_radial(2.0, 0.0) == 0.0);
  const double want = -std::log(0.1);
  CHECK(std::abs(h_nu_radial(0.5 + 1e-7, 0.9) - want) < 1e-5);
  CHECK(std::abs(h_nu_radial(0.5 - 1e-7, 0.9) - want) < 1e-5);
  // continuity across the removable point: first-order term (nu - 1/2) L^2 / 2
  const double L = std::log(0.1);
  const double dnu = 1e-10;
  CHECK(h_nu_radial(0.5 + dnu, 0.9) == doctest::Approx(want + dnu * L * L / 2.0).epsilon(1e-14));
  CHECK_THROWS_AS(h_nu_radial(1.0, 1.0), DomainError);

  for (double nu : {0.3, 0.5, 1.0, 3.0})
    for (int i = 0; i < 19; ++i) CHECK(h_nu_radial(nu, 0.05 * (i + 1)) > h_nu_radial(nu, 0.05 * i));
  for (double r : {0.1, 0.5, 0.9, 0.999})
    for (double nu = 0.1; nu < 5.0; nu += 0.1) CHECK(h_nu_radial(nu + 0.1, r) > h_nu_radial(nu, r));
}

TEST_CASE("growth_bound") {
  for (double r : {0.0, 0.3, 0.9}) CHECK(growth_bound({1.5, 1.0, 0.0}, r) == h_nu_radial(1.5, r));

  const BoundContext ctx{1.0, std::pow(2.0, 1.5), 0.0};
  const HarmonicMap f = make_f_nu_t(1.0, 0.0);
  for (double x : {0.5, 0.9, 0.99}) CHECK(std::abs(f.h.value(x)) <= growth_bound(ctx, x));

  const BoundContext low{0.3, 2.0, 0.4};
  const double cap = uniform_growth_cap(low);
  CHECK(cap == doctest::Approx(2.0 * std::sqrt(1.4 / 0.6) / 0.2));
  for (double r : {0.5, 0.99, 1.0 - 1e-12}) CHECK(growth_bound(low, r) <= cap);
  CHECK_THROWS_AS(uniform_growth_cap({0.5, 1.0, 0.0}), DomainError);
}

TEST_CASE("growth bound holds on samples") {
  for (double t : {0.0, 0.5}) {
    const double nu = 0.3;
    const HarmonicMap f = make_f_nu_t(nu, t);
    MapParams p;
    p.nu = nu;
    p.t = t;
    const auto ctx = proven_beta_star("f_nu_t", p);
    REQUIRE(ctx.has_value());
    DiskSampler s(3);
    const double cap = uniform_growth_cap(*ctx);
    for (int i = 0; i < 1000; ++i) {
      const cplx z = s.value();
      const double r = std::abs(z);
      const double m = std::max(std::abs(f.h.value(z) - f.h.value(0.0)), std::abs(f.g.value(z)));
      CHECK(m <= growth_bound(*ctx, r) * (1.0 + 1e-12));
      CHECK(std::abs(f.h.value(z)) <= cap + std::abs(f.h.value(0.0)));
    }
  }
}

TEST_CASE("coeff_bound") {
  CHECK(coeff_bound({1.0, 3.0, 0.0}, 1) == 3.0);
  CHECK(coeff_bound({1.0, 3.0, 0.6}, 1) == doctest::Approx(3.0 / 0.8));
  CHECK_THROWS_AS(coeff_bound({1.0, 1.0, 0.0}, 0), DomainError);

  for (double nu : {0.5, 2.0})
    for (int n : {2, 5, 50}) {
      const BoundContext ctx{nu, 1.7, 0.3};
      const double r = coeff_bound_optimal_radius(nu, n);
      CHECK(r == doctest::Approx(std::sqrt((n - 1.0) / (n + 2.0 * nu))));
      const double at_r = coeff_bound_at_radius(ctx, n, r);
      const double rearranged = coeff_bound(ctx, n) * phi_nu(nu, n) / std::exp(nu + 0.5);
      CHECK(at_r == doctest::Approx(rearranged).epsilon(1e-10));
      CHECK(at_r <= coeff_bound(ctx, n));
      CHECK(coeff_bound_at_radius(ctx, n, r * 0.99) > at_r);
      CHECK(coeff_bound_at_radius(ctx, n, std::min(0.999, r * 1.01)) > at_r);
    }
}

TEST_CASE("coefficients stay under the bound") {
  auto check = [](const std::string& name, const MapParams& p) {
    const HarmonicMap f = make_by_name(name, p, 64);
    const auto ctx = proven_beta_star(name, p);
    REQUIRE(ctx.has_value());
    const auto a = f.series_h(64);
    const auto b = f.series_g(64);
    for (int n = 1; n <= 64; ++n) {
      const double bound = coeff_bound(*ctx, n);
      CHECK_MESSAGE(std::abs(a[n]) <= bound, name << " n=" << n);
      CHECK_MESSAGE(std::abs(b[n]) <= bound, name << " n=" << n);
    }
  };
  for (double nu : {0.5, 1.0, 2.0})
    for (double t : {0.0, 0.5}) {
      MapParams p;
      p.nu = nu;
      p.t = t;
      check("f_nu_t", p);
    }
  for (double nu : {0.5, 1.0, 2.0}) {
    MapParams p;
    p.nu = nu;
    p.b1 = cplx{0.3, 0.2};
    check("thm33", p);
  }
}

TEST_CASE("phi_nu") {
  for (double nu : {0.5, 1.0, 3.0}) {
    CHECK(std::abs(phi_nu(nu, 1e6) / std::exp(nu + 0.5) - 1.0) < 1e-4);
    CHECK(phi_nu(nu, 2.0) > 0.0);
    for (double x = 2.0; x <= 50.0; x += 0.5) CHECK(phi_nu(nu, x + 0.5) > phi_nu(nu, x));
  }
  CHECK_THROWS_AS(phi_nu(1.0, 1.5), DomainError);
}

TEST_CASE("psi_nu") {
  for (double x : {2.0, 3.0, 10.0}) CHECK(psi_nu(0.5, x) == doctest::Approx(2.0 * x + 2.0));
  CHECK(psi_nu(0.5, 2.0) == doctest::Approx(6.0));
  for (double nu : {0.1, 1.0, 2.5, 5.0}) CHECK(psi_nu(nu, 2.0) == doctest::Approx(4.0 * (2.0 * nu * nu + 1.0)));
  for (double nu : {0.1, 0.5, 1.0, 5.0})
    for (double x = 2.0; x <= 100.0; x += 0.25) CHECK(psi_nu(nu, x) > 0.0);
}
