#include "doctest.h"

#include <cmath>
#include <numbers>

#include "hbloch/bohr.hpp"
#include "hbloch/catalog.hpp"
#include "hbloch/complex_point.hpp"
#include "hbloch/errors.hpp"
#include "hbloch/sampling.hpp"
#include "hbloch/seminorm.hpp"

using namespace hbloch;

namespace {

MapParams default_params(const CatalogEntry& e) {
  MapParams p;
  for (const auto& spec : e.params) {
    if (spec.name == "nu") p.nu = 1.5;
    if (spec.name == "mu") p.mu = 5.5;
    if (spec.name == "t") p.t = 0.6;
    if (spec.name == "b1") p.b1 = cplx{0.2, -0.1};
    if (spec.name == "a") p.a = cplx{2.0, 1.0};
  }
  return p;
}

}  // namespace

TEST_CASE("ComplexPoint keeps its boundary distance") {
  for (int j : {0, 5, 20, 40}) {
    const double d = std::ldexp(1.0, -j);
    const auto z = ComplexPoint::polar(d, 0.7);
    CHECK(std::abs(std::abs(z.value()) - (1.0 - d)) <= 1e-15);
    CHECK(z.one_minus_r() == d);
  }
  CHECK_THROWS_AS(ComplexPoint::from_value({1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(ComplexPoint::polar(0.0, 0.0), DomainError);
}

TEST_CASE("catalog: series generators match closed forms") {
  DiskSampler s(42);
  for (const auto& e : catalog_entries()) {
    if (!e.has_series) continue;
    const HarmonicMap f = make_by_name(e.name, default_params(e));
    const auto sh = f.series_h(kDefaultTruncation);
    const auto sg = f.series_g(kDefaultTruncation);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const cplx z = s.value(0.5);
      worst = std::max(worst, std::abs(series_eval(sh, z) - f.h.value(z)));
      worst = std::max(worst, std::abs(series_eval(sg, z) - f.g.value(z)));
    }
    CHECK_MESSAGE(worst < 1e-9, e.name);
  }
}

TEST_CASE("catalog: canonical decomposition has g(0) = 0") {
  for (const auto& e : catalog_entries()) {
    const HarmonicMap f = make_by_name(e.name, default_params(e));
    CHECK_MESSAGE(std::abs(f.g.value(0.0)) < 1e-14, e.name);
  }
}

TEST_CASE("catalog: f_nu_t dilatation") {
  DiskSampler s(1);
  for (double nu : {0.5, 1.0, 3.0}) {
    for (double t : {0.0, 0.3, 0.8}) {
      const HarmonicMap f = make_f_nu_t(nu, t);
      CHECK(std::abs(dilatation(f, ComplexPoint::from_value(0.0)) - t) < 1e-15);
      for (int i = 0; i < 10; ++i) {
        const auto z = s.point();
        CHECK(std::abs(dilatation(f, z) - (t + (1.0 - t) * z.value())) < 1e-12);
      }
    }
  }
}

TEST_CASE("catalog: example22 Jacobian along the radius") {
  const double nu = 1.0;
  const double mu = 4.0;
  const HarmonicMap F = make_example22_sum(mu, nu);
  for (int j = 1; j <= 30; ++j) {
    const auto z = ComplexPoint::polar(std::ldexp(1.0, -j), 0.0);
    const double x = z.radius();
    const double d = z.one_minus_r();
    const double lhs = std::pow(z.one_minus_r_squared(), 2.0 * nu) * std::abs(jacobian(F, z));
    const double rhs = std::pow(1.0 + x, 2.0 * nu) * (2.0 + std::pow(d, mu)) / std::pow(d, mu - 2.0 * nu);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
  }
}

TEST_CASE("catalog: exp-Cayley diverges in every B(nu)") {
  const HarmonicMap f = make_exp_cayley();
  for (double nu : {0.5, 2.0, 5.0}) CHECK(estimate_beta(f, nu).verdict == Verdict::divergent);
}

TEST_CASE("catalog: example32 h'") {
  const HarmonicMap f = make_example32(0.0);
  DiskSampler s(8);
  for (int i = 0; i < 50; ++i) {
    const cplx z = s.value(0.95);
    const cplx sm = std::sqrt(1.0 - z);
    const cplx want = ((1.0 + 2.0 * z) * sm + std::sqrt(1.0 + z)) / ((1.0 - z * z) * sm);
    CHECK(std::abs(f.h.d1(z) - want) <= 1e-9 * std::max(1.0, std::abs(want)));
  }
}

TEST_CASE("catalog: remark34 f1 on the real axis") {
  const HarmonicMap f = make_remark34(1);
  for (double x : {-0.9, -0.3, 0.0, 0.4, 0.99}) {
    const cplx v = f(x);
    CHECK(std::abs(v.imag()) < 1e-14);
    CHECK(v.real() == doctest::Approx(x + 2.0 * std::log(std::abs(1.0 - x))));
  }
}

TEST_CASE("catalog: thm33 pre-Schwarzian") {
  DiskSampler s(9);
  for (double nu : {0.5, 1.0, 2.0}) {
    const HarmonicMap f = make_thm33_family(nu, cplx{0.3, 0.1});
    for (int i = 0; i < 30; ++i) {
      const auto z = s.point(0.9);
      const cplx want = nu / (1.0 - z.value() * z.value());
      CHECK(std::abs(pre_schwarzian(f, z) - want) <= 1e-10 * std::abs(want));
    }
  }
}

TEST_CASE("catalog: thm6 extremal") {
  const double nu = 2.0;
  const HarmonicMap f = make_thm6_extremal(nu);
  const auto est = estimate_beta(f, nu);
  CHECK(est.verdict == Verdict::finite);
  CHECK(est.value == doctest::Approx(1.0).epsilon(1e-9));

  const double r = r3_formula(nu);
  CHECK(r == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-14));
  const auto m = majorant_sum(f.series_h(kDefaultTruncation), r, f.envelope_h);
  CHECK(std::abs(m.sum - 1.0) < 1e-8);
  const double closed = (std::pow(1.0 - r * r, 1.0 - nu) - 1.0) / (2.0 * (nu - 1.0));
  CHECK(closed == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("catalog: example53 dilatation") {
  for (double t : {0.5, 0.7, 0.9}) {
    const HarmonicMap f = make_example53(t);
    const auto z = ComplexPoint::from_value({0.2, -0.4});
    CHECK(std::abs(dilatation(f, z) - ((1.0 - t) * z.value() + t)) < 1e-12);
  }
}

TEST_CASE("catalog: parameter validation") {
  CHECK_THROWS_AS(make_f_nu_t(0.0, 0.5), DomainError);
  CHECK_THROWS_AS(make_f_nu_t(1.0, 1.0), DomainError);
  CHECK_THROWS_AS(make_example22(3.0, 1.0), DomainError);
  CHECK_THROWS_AS(make_thm6_extremal(1.0), DomainError);
  CHECK_THROWS_AS(make_example53(0.3), DomainError);
  CHECK_THROWS_AS(make_remark34(3), DomainError);
  CHECK_THROWS_AS(make_by_name("nope", {}), DomainError);
  CHECK_THROWS_AS(make_by_name("h_nu", {}), DomainError);
}

TEST_CASE("catalog: proven beta-star envelopes") {
  MapParams p;
  p.nu = 1.0;
  p.t = 0.5;
  const auto ctx = proven_beta_star("f_nu_t", p);
  REQUIRE(ctx.has_value());
  CHECK(ctx->beta_star == doctest::Approx(std::pow(2.0, 1.5) * std::sqrt(1.5)));
  CHECK_FALSE(proven_beta_star("exp_cayley", {}).has_value());
}
