#include "hbloch/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "hbloch/errors.hpp"

namespace hbloch {

TruncatedSeries::TruncatedSeries(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw DomainError("TruncatedSeries: coefficient list must hold at least c_0");
  }
}

TruncatedSeries TruncatedSeries::zero(int order) {
  if (order < 0) throw DomainError("TruncatedSeries: order must be >= 0");
  return TruncatedSeries(std::vector<cplx>(static_cast<std::size_t>(order) + 1));
}

TruncatedSeries TruncatedSeries::unit(int order) {
  auto c = std::vector<cplx>(static_cast<std::size_t>(std::max(order, 0)) + 1);
  c[0] = 1.0;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::identity(int order) {
  auto c = std::vector<cplx>(static_cast<std::size_t>(std::max(order, 0)) + 1);
  if (order >= 1) c[1] = 1.0;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::geometric(int order) {
  return TruncatedSeries(std::vector<cplx>(static_cast<std::size_t>(std::max(order, 0)) + 1, 1.0));
}

double CoefficientEnvelope::at(int n) const {
  return scale * std::pow(static_cast<double>(n) + 1.0, exponent);
}

double CoefficientEnvelope::tail_bound(int order, double r) const {
  if (scale == 0.0 || r == 0.0) return 0.0;
  // Term ratio for n > order is ((n+2)/(n+1))^exponent r, maximal at n = order + 1
  // when exponent >= 0 and bounded by r otherwise.
  const double n1 = static_cast<double>(order) + 1.0;
  const double q = exponent > 0.0 ? std::pow((n1 + 2.0) / (n1 + 1.0), exponent) * r : r;
  if (q >= 1.0) return std::numeric_limits<double>::infinity();
  return scale * std::pow(n1 + 1.0, exponent) * std::pow(r, n1) / (1.0 - q);
}

namespace {

int min_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  return std::min(a.order(), b.order());
}

}  // namespace

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = min_order(a, b);
  std::vector<cplx> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) c[i] = a[i] + b[i];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = min_order(a, b);
  std::vector<cplx> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) c[i] = a[i] - b[i];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_scale(const TruncatedSeries& a, cplx factor) {
  std::vector<cplx> c(a.coeffs().begin(), a.coeffs().end());
  for (auto& x : c) x *= factor;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = min_order(a, b);
  std::vector<cplx> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    cplx acc{0.0, 0.0};
    for (int j = 0; j <= k; ++j) acc += a[j] * b[k - j];
    c[k] = acc;
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_derivative(const TruncatedSeries& a) {
  if (a.order() == 0) return TruncatedSeries::zero(0);
  std::vector<cplx> c(static_cast<std::size_t>(a.order()));
  for (int n = 0; n < a.order(); ++n) c[n] = static_cast<double>(n + 1) * a[n + 1];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries series_antiderivative(const TruncatedSeries& a) {
  std::vector<cplx> c(static_cast<std::size_t>(a.order()) + 2);
  for (int n = 0; n <= a.order(); ++n) c[n + 1] = a[n] / static_cast<double>(n + 1);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries binomial_series(double alpha, int order) {
  if (order < 0) throw DomainError("binomial_series: order must be >= 0");
  std::vector<cplx> c(static_cast<std::size_t>(order) + 1);
  double cur = 1.0;
  c[0] = cur;
  for (int n = 0; n < order; ++n) {
    cur *= (static_cast<double>(n) - alpha) / static_cast<double>(n + 1);
    c[n + 1] = cur;
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries log_one_minus_z_series(int order) {
  if (order < 0) throw DomainError("log_one_minus_z_series: order must be >= 0");
  std::vector<cplx> c(static_cast<std::size_t>(order) + 1);
  for (int n = 1; n <= order; ++n) c[n] = 1.0 / static_cast<double>(n);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries substitute_z_squared(const TruncatedSeries& a, int cap) {
  int n = 2 * a.order();
  if (cap >= 0) n = std::min(n, cap);
  std::vector<cplx> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; 2 * k <= n; ++k) c[2 * k] = a[k];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries substitute_scaled(const TruncatedSeries& a, cplx lambda) {
  std::vector<cplx> c(a.coeffs().begin(), a.coeffs().end());
  cplx p{1.0, 0.0};
  for (auto& x : c) {
    x *= p;
    p *= lambda;
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries truncate(const TruncatedSeries& a, int order) {
  const int n = std::max(0, std::min(order, a.order()));
  return TruncatedSeries(std::vector<cplx>(a.coeffs().begin(), a.coeffs().begin() + n + 1));
}

cplx series_eval(const TruncatedSeries& a, cplx z) {
  cplx acc{0.0, 0.0};
  for (int n = a.order(); n >= 0; --n) acc = acc * z + a[n];
  return acc;
}

}  // namespace hbloch
