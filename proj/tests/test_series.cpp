#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "hbloch/quadrature.hpp"
#include "hbloch/series.hpp"

using namespace hbloch;

namespace {

TruncatedSeries from_reals(std::initializer_list<double> xs) {
  std::vector<cplx> c;
  for (double x : xs) c.emplace_back(x, 0.0);
  return TruncatedSeries(c);
}

TruncatedSeries random_series(std::mt19937_64& rng, int order) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cplx> c(order + 1);
  for (auto& x : c) x = {u(rng), u(rng)};
  return TruncatedSeries(c);
}

double max_diff(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  double m = 0.0;
  for (int i = 0; i <= n; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("series: construction") {
  CHECK(TruncatedSeries::zero(7).coeffs().size() == 8);
  CHECK(TruncatedSeries::identity(3)[1] == cplx(1.0, 0.0));
  CHECK(TruncatedSeries::identity(3)[0] == cplx(0.0, 0.0));
  CHECK(TruncatedSeries::unit(4)[0] == cplx(1.0, 0.0));
  CHECK_THROWS(TruncatedSeries(std::vector<cplx>{}));
}

TEST_CASE("series: add and subtract") {
  const auto s = series_add(from_reals({1, 2}), from_reals({3, 4}));
  CHECK(s[0].real() == 4.0);
  CHECK(s[1].real() == 6.0);
  const auto p = from_reals({0.5, -1.25, 3});
  CHECK(max_diff(series_add(p, TruncatedSeries::zero(2)), p) == 0.0);

  const auto L = log_one_minus_z_series(20);
  const auto sum = series_add(L, series_scale(L, -1.0));
  for (auto c : sum.coeffs()) CHECK(c == cplx(0.0, 0.0));
}

TEST_CASE("series: Cauchy product") {
  const auto g = TruncatedSeries::geometric(30);
  const auto g2 = series_mul(g, g);
  for (int n = 0; n <= 30; ++n) CHECK(g2[n].real() == doctest::Approx(n + 1.0));

  const auto p = from_reals({2, -1, 0.5, 7});
  CHECK(max_diff(series_mul(p, TruncatedSeries::unit(3)), p) == 0.0);

  const auto a = binomial_series(-0.5, 32);
  const auto b = binomial_series(-1.0, 32);
  CHECK(max_diff(series_mul(a, a), b) < 1e-12);
}

TEST_CASE("series: product is associative and commutative") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 10; ++rep) {
    const auto a = random_series(rng, 24);
    const auto b = random_series(rng, 24);
    const auto c = random_series(rng, 24);
    CHECK(max_diff(series_mul(a, b), series_mul(b, a)) < 1e-12);
    CHECK(max_diff(series_mul(series_mul(a, b), c), series_mul(a, series_mul(b, c))) < 1e-12);
  }
}

TEST_CASE("series: binomial exponents add") {
  for (double al : {0.5, -0.5, 1.5, -1.5, 2.7})
    for (double be : {0.5, -0.5, 1.5, -1.5, 2.7}) {
      const auto lhs = series_mul(binomial_series(al, 64), binomial_series(be, 64));
      const auto rhs = binomial_series(al + be, 64);
      double rel = 0.0;
      for (int n = 0; n <= 64; ++n) rel = std::max(rel, std::abs(lhs[n] - rhs[n]) / std::max(1.0, std::abs(rhs[n])));
      CHECK_MESSAGE(rel < 1e-10, "alpha=" << al << " beta=" << be);
    }
}

TEST_CASE("series: derivative and antiderivative") {
  const auto d = series_derivative(TruncatedSeries::identity(5));
  CHECK(d[0] == cplx(1.0, 0.0));
  for (int n = 1; n <= d.order(); ++n) CHECK(d[n] == cplx(0.0, 0.0));

  const auto dl = series_derivative(log_one_minus_z_series(40));
  for (int n = 0; n < 40; ++n) CHECK(dl[n].real() == doctest::Approx(1.0).epsilon(1e-15));

  std::mt19937_64 rng(3);
  auto s = random_series(rng, 30);
  std::vector<cplx> c(s.coeffs().begin(), s.coeffs().end());
  c[0] = 0.0;
  s = TruncatedSeries(c);
  const auto back = series_antiderivative(series_derivative(s));
  for (int n = 0; n <= 30; ++n) CHECK(std::abs(back[n] - s[n]) <= 1e-15 * std::max(1.0, std::abs(s[n])));
}

TEST_CASE("series: binomial generator") {
  const auto one = binomial_series(1.0, 6);
  CHECK(one[0].real() == 1.0);
  CHECK(one[1].real() == -1.0);
  for (int n = 2; n <= 6; ++n) CHECK(one[n] == cplx(0.0, 0.0));
  const auto geo = binomial_series(-1.0, 20);
  for (auto c : geo.coeffs()) CHECK(c.real() == 1.0);

  // ((1-z^2)^{1-nu} - 1)/(2(nu-1)) at nu = 3 has z^2 coefficient 1/2
  const double nu = 3.0;
  const auto b = substitute_z_squared(binomial_series(1.0 - nu, 10));
  CHECK(b[2].real() / (2.0 * (nu - 1.0)) == doctest::Approx(0.5));
}

TEST_CASE("series: -log(1-z)") {
  const auto L = log_one_minus_z_series(3);
  CHECK(L[0].real() == 0.0);
  CHECK(L[1].real() == 1.0);
  CHECK(L[2].real() == 0.5);
  CHECK(L[3].real() == doctest::Approx(1.0 / 3.0));
  const double r = 1.0 - 1.0 / std::numbers::e;
  CHECK(std::abs(series_eval(log_one_minus_z_series(200), r) - 1.0) < 1e-6);
}

TEST_CASE("series: z -> z^2") {
  const auto s = substitute_z_squared(TruncatedSeries::identity(6));
  CHECK(s[2].real() == 1.0);
  CHECK(s[1].real() == 0.0);
  const auto l2 = substitute_z_squared(log_one_minus_z_series(10));
  CHECK(l2[2].real() == 1.0);
  CHECK(l2[3].real() == 0.0);
  CHECK(l2[4].real() == 0.5);
  const auto e = substitute_z_squared(binomial_series(-1.0, 10));
  for (int n = 0; n <= e.order(); ++n) CHECK(e[n].real() == (n % 2 == 0 ? 1.0 : 0.0));
}

TEST_CASE("series: evaluation") {
  const auto p = from_reals({3.5, 1, 1});
  CHECK(series_eval(p, 0.0) == cplx(3.5, 0.0));
  CHECK(std::abs(series_eval(TruncatedSeries::geometric(60), 0.5) - 2.0) < 1e-12);
}

TEST_CASE("series: envelope tail") {
  CoefficientEnvelope env{1.0, 0.0};
  // sum_{n>10} r^n at r = 1/2 is 2^-10
  CHECK(env.tail_bound(10, 0.5) >= std::pow(0.5, 10) * (1.0 - 1e-12));
  CHECK(std::isinf(env.tail_bound(10, 1.0)));
}

TEST_CASE("series: Parseval on circles") {
  std::mt19937_64 rng(5);
  const int N = 32;
  const auto s = random_series(rng, N);
  const auto ds = series_derivative(s);
  for (double r : {0.3, 0.7, 0.9}) {
    double rhs = 0.0;
    for (int n = 1; n <= N; ++n) rhs += n * n * std::norm(s[n]) * std::pow(r, 2 * (n - 1));
    const double lhs = circle_mean([&](cplx z) { return std::norm(series_eval(ds, z)); }, r, 4 * N);
    CHECK(std::abs(lhs - rhs) <= 1e-8 * std::max(1.0, rhs));
  }
}
