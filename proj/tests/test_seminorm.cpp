#include "doctest.h"

#include <cmath>

#include "hbloch/catalog.hpp"
#include "hbloch/errors.hpp"
#include "hbloch/grid_kernel.hpp"
#include "hbloch/invariance.hpp"
#include "hbloch/sampling.hpp"
#include "hbloch/seminorm.hpp"

using namespace hbloch;

namespace {

HarmonicMap swap_parts(const HarmonicMap& f) {
  HarmonicMap s;
  s.name = "conj_" + f.name;
  s.h = f.g;
  s.g = f.h;
  return s;
}

HarmonicMap only_h(const HarmonicMap& f) {
  HarmonicMap s;
  s.name = f.name + "_h";
  s.h = f.h;
  s.g = zero_part();
  return s;
}

HarmonicMap only_g(const HarmonicMap& f) {
  HarmonicMap s;
  s.name = f.name + "_g";
  s.h = f.g;
  s.g = zero_part();
  return s;
}

std::vector<LadderEntry> ladder_of(const std::function<double(int)>& v, int J = 40) {
  std::vector<LadderEntry> out;
  for (int j = 0; j <= J; ++j) {
    const double d = std::ldexp(1.0, -j);
    out.push_back({1.0 - d, d, v(j), 0.0});
  }
  return out;
}

}  // namespace

TEST_CASE("jacobian") {
  DiskSampler s(2);
  const HarmonicMap id = make_identity();
  const HarmonicMap ex = make_example22(5.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    const auto z = s.point();
    CHECK(jacobian(id, z) == 1.0);
    CHECK(jacobian(ex, z) == 0.0);
  }
  CHECK(jacobian(make_f_nu_t(1.0, 0.5), ComplexPoint::from_value(0.0)) == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("dilatation") {
  const HarmonicMap f = make_thm33_family(1.0, 0.0);
  CHECK(dilatation(f, ComplexPoint::from_value({0.1, 0.5})) == cplx(0.0, 0.0));
  CHECK_THROWS_AS(dilatation(make_constant(1.0), ComplexPoint::from_value(0.5)), UndefinedDilatation);
}

TEST_CASE("beta_weight") {
  CHECK(beta_weight(ComplexPoint::from_value(0.0), 2.5) == 1.0);
  for (double d : {0.5, 1e-3, 1e-9}) CHECK(beta_weight(ComplexPoint::polar(d, 1.0), 0.0) == 1.0);

  const auto z = ComplexPoint::polar(std::ldexp(1.0, -40), 0.3);
  const long double d = std::ldexp(1.0L, -40);
  const long double want = std::pow(d * (2.0L - d), 3.0L);
  const double got = beta_weight(z, 3.0);
  CHECK(got > 0.0);
  CHECK(std::abs(static_cast<long double>(got) - want) / want < 1e-12L);
}

TEST_CASE("estimate_beta on simple maps") {
  const auto e = estimate_beta(make_identity(), 1.0);
  CHECK(e.verdict == Verdict::finite);
  CHECK(e.value == doctest::Approx(1.0));
  CHECK(std::abs(e.argmax.value()) == 0.0);

  for (double nu : {0.5, 1.0, 2.0}) CHECK(estimate_beta(make_h_nu(nu), nu).verdict == Verdict::divergent);

  const HarmonicMap f = make_f_nu_t(1.0, 0.0);
  CHECK(estimate_beta(f, 1.5).verdict == Verdict::finite);
  // excess weight (1-r)^{-0.1} grows only 2^{0.1} per rung, so V_max must drop for a divergent verdict
  GridConfig low;
  low.divergence_cap = 10.0;
  CHECK(estimate_beta(f, 1.4, low).verdict == Verdict::divergent);
  CHECK(estimate_beta(f, 1.4).verdict == Verdict::inconclusive);
}

TEST_CASE("estimate_beta_star") {
  for (double nu : {0.5, 1.0, 2.0})
    for (double t : {0.0, 0.5}) {
      const auto e = estimate_beta_star(make_f_nu_t(nu, t), nu);
      CHECK(e.verdict == Verdict::finite);
      // ladder estimates may overshoot the exact bound by the Jacobian's rounding near |z| = 1
      CHECK(e.value <= std::pow(2.0, nu + 0.5) * std::sqrt(1.0 + t) * (1.0 + 1e-3));
    }
  const auto e53 = estimate_beta_star(make_example53(0.5), 1.0);
  CHECK(e53.verdict == Verdict::finite);
  CHECK(std::abs(e53.value - 1.0) < 1e-3);
  CHECK(estimate_beta_star(make_example22_sum(4.0, 1.0), 1.0).verdict == Verdict::divergent);
}

TEST_CASE("pre_schwarzian") {
  DiskSampler s(4);
  const HarmonicMap a = make_h_nu(1.5);
  for (int i = 0; i < 20; ++i) {
    const auto z = s.point(0.99);
    const cplx want = a.h.d2(z.value()) / a.h.d1(z.value());
    CHECK(std::abs(pre_schwarzian(a, z) - want) <= 1e-12 * std::abs(want));
  }

  // Wirtinger derivative of log J by central differences
  const HarmonicMap f = make_f_nu_t(1.0, 0.3);
  const double step = 1e-4;
  auto logJ = [&](cplx z) { return std::log(jacobian(f, z)); };
  for (int i = 0; i < 100; ++i) {
    const cplx z = s.value(0.8);
    const double dx = (logJ(z + step) - logJ(z - step)) / (2.0 * step);
    const double dy = (logJ(z + cplx(0.0, step)) - logJ(z - cplx(0.0, step))) / (2.0 * step);
    const cplx want = 0.5 * cplx(dx, -dy);
    CHECK(std::abs(pre_schwarzian(f, ComplexPoint::from_value(z)) - want) < 1e-5 * std::max(1.0, std::abs(want)));
  }

  CHECK_THROWS_AS(pre_schwarzian(make_example22(5.0, 1.0), ComplexPoint::from_value(0.5)), NotSensePreserving);
}

TEST_CASE("estimate_pre_schwarzian_norm") {
  for (double nu : {0.5, 1.0, 2.0}) {
    const HarmonicMap f = make_thm33_family(nu, cplx{0.2, 0.0});
    const auto e = estimate_pre_schwarzian_norm(f);
    CHECK(e.verdict == Verdict::finite);
    CHECK(std::abs(e.value - nu) < 1e-3);
    const auto ea = estimate_pre_schwarzian_norm(affine_compose(f, {cplx{2.0, 1.0}, cplx{0.5, -0.3}}));
    CHECK(ea.value == doctest::Approx(e.value).epsilon(1e-9));
  }
  CHECK(estimate_pre_schwarzian_norm(make_example32_outer()).verdict == Verdict::divergent);
  CHECK_THROWS_AS(estimate_pre_schwarzian_norm(make_example22(5.0, 1.0)), NotSensePreserving);
}

TEST_CASE("classify_divergence") {
  const GridConfig cfg;
  CHECK(classify_divergence(ladder_of([](int) { return 3.0; }), cfg) == Verdict::finite);
  CHECK(classify_divergence(ladder_of([](int j) { return std::pow(2.0, j / 2.0); }), cfg) == Verdict::divergent);
  CHECK(classify_divergence(ladder_of([](int j) { return double(j); }), cfg) == Verdict::inconclusive);
  CHECK(classify_divergence(ladder_of([](int) { return 1.0; }), cfg, true) == Verdict::divergent);
  CHECK_THROWS_AS(classify_divergence({}, cfg), DomainError);
}

TEST_CASE("GridConfig validation") {
  GridConfig c;
  CHECK_NOTHROW(c.validate());
  c.ladder_depth = 7;
  CHECK_THROWS_AS(c.validate(), DomainError);
  c = {};
  c.angular_samples = 63;
  CHECK_THROWS_AS(c.validate(), DomainError);
  c = {};
  c.rungs_required = 2;
  CHECK_THROWS_AS(c.validate(), DomainError);
  c = {};
  c.divergence_growth = 0.0;
  CHECK_THROWS_AS(c.validate(), DomainError);
}

TEST_CASE("parallel scan reproduces the serial reference bit for bit") {
  const HarmonicMap f = make_f_nu_t(1.0, 0.5);
  const DiskFunctional fn = [&](const ComplexPoint& z) {
    return beta_weight(z, 1.0) * std::sqrt(std::abs(jacobian(f, z)));
  };
  GridConfig cfg;
  const auto a = scan_ladder_serial(fn, cfg);
  const auto b = scan_ladder_parallel(fn, cfg);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].value == b[i].value);
    CHECK(a[i].theta == b[i].theta);
    CHECK(a[i].one_minus_r == b[i].one_minus_r);
  }
  cfg.parallel = false;
  const auto s = estimate_beta_star(f, 1.0, cfg);
  cfg.parallel = true;
  const auto p = estimate_beta_star(f, 1.0, cfg);
  CHECK(s.value == p.value);
  CHECK(s.verdict == p.verdict);
}

TEST_CASE("conjugation symmetry") {
  for (const auto& f : {make_f_nu_t(1.0, 0.5), make_example53(0.7), make_remark34(1)}) {
    const HarmonicMap c = swap_parts(f);
    for (double nu : {0.5, 1.0}) {
      CHECK(std::abs(estimate_beta(f, nu).value - estimate_beta(c, nu).value) <=
            1e-12 * estimate_beta(f, nu).value);
      CHECK(std::abs(estimate_beta_star(f, nu).value - estimate_beta_star(c, nu).value) <=
            1e-12 * std::max(1.0, estimate_beta_star(f, nu).value));
    }
  }
}

TEST_CASE("beta of the sum is bracketed by the parts") {
  for (const auto& f : {make_f_nu_t(1.0, 0.5), make_example53(0.6), make_thm33_family(1.0, cplx{0.4, 0.0})}) {
    const double nu = 1.5;
    const auto bf = estimate_beta(f, nu);
    const auto bh = estimate_beta(only_h(f), nu);
    const auto bg = estimate_beta(only_g(f), nu);
    REQUIRE(bf.verdict == Verdict::finite);
    CHECK(bf.value >= std::max(bh.value, bg.value) * (1.0 - 1e-9));
    CHECK(bf.value <= (bh.value + bg.value) * (1.0 + 1e-9));
  }
}

TEST_CASE("beta-star never exceeds beta") {
  for (const auto& f : {make_f_nu_t(0.5, 0.3), make_example53(0.8), make_half_plane(), make_thm6_extremal(2.0)})
    for (double nu : {0.5, 1.0, 2.0}) CHECK(estimate_beta_star(f, nu).value <= estimate_beta(f, nu).value * (1.0 + 1e-12));
}

TEST_CASE("pointwise derivative bounds for f_nu_t") {
  const double nu = 1.0;
  const double t = 0.5;
  const HarmonicMap f = make_f_nu_t(nu, t);
  const double bs = estimate_beta_star(f, nu).value;
  DiskSampler s(12);
  for (int i = 0; i < 200; ++i) {
    const auto z = s.point();
    const double hp = std::abs(f.h.d1(z.value()));
    const double w = std::abs(dilatation(f, z));
    const double weight = std::pow(z.one_minus_r_squared(), nu);
    CHECK(hp <= bs / (weight * std::sqrt(1.0 - w * w)) * (1.0 + 1e-9));
    CHECK(hp <= bs * std::sqrt((1.0 + t) / (1.0 - t)) / std::pow(z.one_minus_r_squared(), nu + 0.5) * (1.0 + 1e-9));
  }
}
