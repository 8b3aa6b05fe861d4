#include "doctest.h"

#include <chrono>
#include <cmath>
#include <numbers>

#include "hbloch/bohr.hpp"
#include "hbloch/catalog.hpp"
#include "hbloch/errors.hpp"
#include "json.hpp"

using namespace hbloch;
using std::numbers::pi;

TEST_CASE("F_k") {
  CHECK(eval_F_k(1, 1.0 - 1.0 / std::numbers::e) == doctest::Approx(1.0).epsilon(1e-15));
  const double l2 = std::log(2.0);
  CHECK(eval_F_k(0, 0.5) == doctest::Approx(pi * pi / 12.0 - l2 * l2 / 2.0).epsilon(1e-15));
  CHECK(eval_F_k(2, 0.5) == doctest::Approx(0.5 * (l2 + 1.0)).epsilon(1e-15));
  CHECK(eval_F_k(0, 0.0) == 0.0);
  CHECK(eval_F_k(3, 0.0) == 0.0);

  // reflection branch agrees with the raw series where they meet
  double raw = 0.0;
  double rn = 1.0;
  for (int n = 1; n < 2000; ++n) {
    rn *= 0.9;
    raw += rn / (double(n) * n);
  }
  CHECK(eval_F_k(0, 0.9) == doctest::Approx(raw).epsilon(1e-14));
  CHECK(eval_F_k(0, std::nextafter(0.9, 1.0)) == doctest::Approx(raw).epsilon(1e-13));
  CHECK(eval_F_k(0, 1.0 - 1e-12) == doctest::Approx(pi * pi / 6.0).epsilon(1e-9));

  // F_k' = (1/k) sum_{j=1}^k (1-r)^{-j} for k >= 1
  for (int k : {1, 2, 3, 5}) {
    const double r = 0.6;
    const double h = 1e-6;
    double want = 0.0;
    for (int j = 1; j <= k; ++j) want += std::pow(1.0 - r, -j);
    want /= k;
    CHECK((eval_F_k(k, r + h) - eval_F_k(k, r - h)) / (2.0 * h) == doctest::Approx(want).epsilon(1e-8));
  }
  CHECK_THROWS_AS(eval_F_k(-1, 0.5), DomainError);
  CHECK_THROWS_AS(eval_F_k(1, 1.0), DomainError);
}

TEST_CASE("M_p and interval index") {
  CHECK(big_M_p(1.0) == 2.0);
  CHECK(big_M_p(2.0) == 1.0);
  CHECK(big_M_p(4.0) == 1.0);
  CHECK(big_M_p(1.5) == doctest::Approx(std::pow(2.0, 1.0 / 3.0)));
  CHECK_THROWS_AS(big_M_p(0.5), DomainError);
  CHECK(interval_index(0.5) == 0);
  CHECK(interval_index(0.51) == 1);
  CHECK(interval_index(1.0) == 1);
  CHECK(interval_index(3.0) == 5);
}

TEST_CASE("equation_lhs") {
  CHECK(equation_lhs(BohrEquation::e5(1.3), 1e-12) == doctest::Approx(6.0));
  CHECK(std::abs(equation_lhs(BohrEquation::e6(1), 0.553567)) < 3e-6);
  for (double r = 0.05; r < 1.0; r += 0.05)
    CHECK(equation_lhs(BohrEquation::e9(1.7, 2.0), r) == equation_lhs(BohrEquation::e5(1.7), r));

  // w0 = 0 specializations
  for (double r = 0.05; r < 1.0; r += 0.1) {
    const double p = 1.5;
    const double M = big_M_p(p);
    const double nu = 1.2;
    const double a = equation_lhs(BohrEquation::t8a(nu, p, 0.0), r);
    CHECK(a == doctest::Approx(3.0 * std::pow(1.0 - r * r, 2.0 * nu + 1.0) - M * pi * pi * r * r).epsilon(1e-14));
    const double b = equation_lhs(BohrEquation::t8b(2, p, 0.0), r);
    CHECK(b == doctest::Approx((1.0 - r) - 2.0 * M * r * eval_F_k(3, r)).epsilon(1e-14));
  }
}

TEST_CASE("solve reproduces the table") {
  const auto t0 = std::chrono::steady_clock::now();
  const double r1s[] = {0.779697, 0.614883, 0.546679, 0.503190, 0.471528, 0.446818, 0.426678};
  const double nus[] = {1e-12, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0};
  for (int i = 0; i < 7; ++i) CHECK(std::abs(r1(nus[i]) - r1s[i]) <= 1e-5);
  const double r2s[] = {0.586028, 0.553567, 0.522089, 0.492552, 0.465403, 0.440723};
  for (int k = 0; k < 6; ++k) CHECK(std::abs(r2(k) - r2s[k]) <= 1e-5);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(secs < 1.0);

  const auto rr = solve(BohrEquation::e6(3));
  CHECK(rr.lo < rr.root);
  CHECK(rr.root < rr.hi);
  CHECK(rr.hi - rr.lo < 1e-14);
  CHECK(std::abs(rr.residual) < 1e-10);
}

TEST_CASE("closed forms") {
  CHECK(std::abs(r1(0.5) - std::sqrt(6.0 / (6.0 + pi * pi))) < 1e-10);
  const double q = 12.0 + pi * pi;
  CHECK(std::abs(r1(1.0) - std::sqrt((q - std::sqrt(q * q - 144.0)) / 12.0)) < 1e-10);
  CHECK(std::abs(r1(1e-12) - std::sqrt(6.0) / pi) < 1e-9);
  CHECK(std::abs(solve(BohrEquation::e9(1.3, 2.0)).root - r1(1.3)) < 1e-12);
}

TEST_CASE("bohr_radius") {
  CHECK(bohr_radius(0.5) == doctest::Approx(0.614883).epsilon(1e-5));
  CHECK(bohr_radius(1.0) == doctest::Approx(0.553567).epsilon(1e-5));
  CHECK(std::abs(bohr_radius(2.0) - 0.492552) < 1e-5);
  CHECK_THROWS_AS(bohr_radius(0.0), DomainError);
}

TEST_CASE("r1 decreases and every lhs changes sign once") {
  double prev = 2.0;
  for (int i = 1; i <= 30; ++i) {
    const double v = r1(0.1 * i);
    CHECK(v < prev);
    prev = v;
  }
  for (const auto& eq : {BohrEquation::e5(0.7), BohrEquation::e6(4), BohrEquation::e9(2.0, 1.0),
                         BohrEquation::t7b(2, 1.5), BohrEquation::t8a(1.0, 1.0, 0.5), BohrEquation::t8b(3, 2.0, 0.2)}) {
    int changes = 0;
    double last = equation_lhs(eq, 1e-4);
    CHECK(last > 0.0);
    for (int i = 2; i < 10000; ++i) {
      const double v = equation_lhs(eq, i * 1e-4);
      if ((v > 0.0) != (last > 0.0)) ++changes;
      last = v;
    }
    CHECK_MESSAGE(changes == 1, to_string(eq.kind));
  }
}

TEST_CASE("r3") {
  CHECK(r3(1.0) == kR3Cap);
  CHECK(r3(2.0) == kR3Cap);
  CHECK(r3_formula(2.0) == doctest::Approx(std::sqrt(2.0 / 3.0)));
  CHECK(std::abs(r3_crossing() - 5.772240) < 1e-3);
  double prev = 1.0;
  for (double nu = 1.5; nu < 200.0; nu *= 1.5) {
    const double v = r3_formula(nu);
    CHECK(v < prev);
    prev = v;
  }
  CHECK(r3_formula(1e6) < 0.01);
  CHECK_THROWS_AS(r3(0.9), DomainError);
}

TEST_CASE("majorant and p-Bohr sums") {
  const auto g = TruncatedSeries::geometric(200);
  CHECK(majorant_sum(g, 1.0 / 3.0).sum == doctest::Approx(1.5).epsilon(1e-15));
  const auto withtail = majorant_sum(TruncatedSeries::geometric(20), 1.0 / 3.0, CoefficientEnvelope{1.0, 0.0});
  REQUIRE(withtail.tail_bound.has_value());
  CHECK(withtail.sum + *withtail.tail_bound >= 1.5 - 1e-15);
  CHECK(majorant_sum(TruncatedSeries::zero(10), 0.7).sum == 0.0);
  CHECK_FALSE(majorant_sum(g, 0.5).tail_bound.has_value());

  const auto a = binomial_series(-1.5, 40);
  for (double p : {1.0, 2.0, 3.5}) {
    CHECK(p_bohr_sum(a, TruncatedSeries::zero(40), p, 0.4).sum == doctest::Approx(majorant_sum(a, 0.4).sum));
    const double want = 1.0 + std::pow(2.0, 1.0 / p) * (majorant_sum(a, 0.4).sum - 1.0);
    CHECK(p_bohr_sum(a, a, p, 0.4).sum == doctest::Approx(want).epsilon(1e-14));
  }
  const HarmonicMap hp = make_half_plane();
  for (double r : {1e-6, 0.01, 0.5}) CHECK(p_bohr_sum(hp.series_h(512), hp.series_g(512), 1.0, r).sum > 1.0);
}

TEST_CASE("membership") {
  const HarmonicMap f = make_thm6_extremal(2.0);
  const auto rep = verify_bohr_membership(f, 2.0, 1.0, BohrTheorem::analytic);
  CHECK(rep.precondition_ok);
  CHECK(rep.holds);
  CHECK(std::abs(rep.radius - 0.492552) < 1e-5);
  REQUIRE(rep.sum.tail_bound.has_value());
  CHECK(rep.sum.sum <= 1.0 + *rep.sum.tail_bound);

  for (double r : {0.0, 0.4, 0.95}) CHECK(majorant_sum(make_constant(1.0).series_h(32), r).sum == 1.0);

  const auto e53 = verify_bohr_membership(make_example53(0.7), 1.0, 1.0, BohrTheorem::jacobian);
  CHECK(e53.precondition_ok);
  CHECK(e53.omega0 == doctest::Approx(0.7));
  CHECK(e53.radius == doctest::Approx(jacobian_bohr_radius(1.0, 1.0, 0.7)));
  CHECK(e53.holds);

  // an unnormalized map fails the precondition and claims nothing
  const auto big = verify_bohr_membership(make_f_nu_t(1.0, 0.0), 1.0, 1.0, BohrTheorem::harmonic);
  CHECK_FALSE(big.precondition_ok);
  CHECK_FALSE(big.holds);
}

TEST_CASE("table emission") {
  const auto rows = emit_table();
  REQUIRE(rows.size() == 6);
  CHECK(rows[4].r2 == doctest::Approx(0.465403).epsilon(1e-5));
  CHECK(std::abs(rows[4].r1_left - 0.471528) < 1e-5);
  CHECK(std::abs(rows[4].r1_right - 0.446818) < 1e-5);
  CHECK(std::abs(rows[5].r2 - 0.440723) < 1e-5);
  CHECK(std::abs(rows[5].r1_right - 0.426678) < 1e-5);

  const std::string csv = table_csv(rows);
  CHECK(csv.rfind("interval,r1_left,r1_right,r2,r_left,r_right\n", 0) == 0);
  CHECK(csv.find("\"(2,5/2]\",0.471528,0.446818,0.465403,0.471528,0.465403") != std::string::npos);
  CHECK(table_csv(emit_table()) == csv);

  const auto j = nlohmann::json::parse(table_json(rows));
  REQUIRE(j.size() == 6);
  CHECK(j[3]["interval"] == "(3/2,2]");
  CHECK(j[3]["r2"].get<double>() == doctest::Approx(0.492552));

  const auto dense = emit_table(true);
  CHECK(table_csv(dense, true).find(",nu_switch\n") != std::string::npos);
  CHECK_FALSE(dense[0].nu_switch.has_value());
  REQUIRE(dense[1].nu_switch.has_value());
  CHECK(r1(*dense[1].nu_switch) == doctest::Approx(r2(1)).epsilon(1e-9));
}

TEST_CASE("equation validation") {
  CHECK_THROWS_AS(BohrEquation::e6(-1).validate(), DomainError);
  CHECK_THROWS_AS(BohrEquation::e9(1.0, 0.5).validate(), DomainError);
  CHECK_THROWS_AS(solve(BohrEquation::e9(1.0, 0.5)), DomainError);
  CHECK_THROWS_AS(BohrEquation::t8a(1.0, 1.0, 1.0).validate(), DomainError);
  CHECK_THROWS_AS(parse_bohr_kind("E7"), DomainError);
  CHECK(parse_bohr_kind("t8b") == BohrKind::T8B);
}
