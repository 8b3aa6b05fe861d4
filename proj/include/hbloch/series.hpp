#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace hbloch {

using cplx = std::complex<double>;

inline constexpr int kDefaultTruncation = 512;

/// Taylor coefficients c_0..c_N of an analytic function, truncated at order N.
///
/// Binary operations truncate to the smaller order of their operands; nothing
/// is ever zero-padded past the order a series actually knows.
class TruncatedSeries {
 public:
  /// Zero series of order 0.
  TruncatedSeries() : coeffs_(1, cplx{0.0, 0.0}) {}
  explicit TruncatedSeries(std::vector<cplx> coeffs);

  static TruncatedSeries zero(int order);
  /// (1, 0, 0, ...): multiplicative unit.
  static TruncatedSeries unit(int order);
  /// (0, 1, 0, ...): the identity map z.
  static TruncatedSeries identity(int order);
  /// (1, 1, 1, ...): 1/(1 - z).
  static TruncatedSeries geometric(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const cplx> coeffs() const { return coeffs_; }
  cplx operator[](std::size_t n) const { return coeffs_[n]; }

 private:
  std::vector<cplx> coeffs_;
};

/// |c_n| <= scale * (n + 1)^exponent for every n, including n past the
/// stored order. Used to certify majorant-sum tails.
struct CoefficientEnvelope {
  double scale = 0.0;
  double exponent = 0.0;

  double at(int n) const;
  /// Upper bound for sum_{n > order} scale (n+1)^exponent r^n; +inf if the
  /// geometric majorant does not converge at this order.
  double tail_bound(int order, double r) const;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_scale(const TruncatedSeries& a, cplx factor);
/// Cauchy product, c_n = sum_{j<=n} a_j b_{n-j}, truncated at min order.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
/// c_n <- (n+1) c_{n+1}; order drops by one (order-0 input gives the zero series).
TruncatedSeries series_derivative(const TruncatedSeries& a);
/// c_0 = 0, c_{n+1} = a_n / (n+1); order grows by one.
TruncatedSeries series_antiderivative(const TruncatedSeries& a);

/// Coefficients of (1 - z)^alpha via c_{n+1} = c_n (n - alpha) / (n + 1).
TruncatedSeries binomial_series(double alpha, int order);
/// Coefficients (0, 1, 1/2, ..., 1/N) of -log(1 - z).
TruncatedSeries log_one_minus_z_series(int order);

/// a(z^2): b_{2n} = a_n, odd coefficients zero. The result has order
/// min(2N, cap) when cap >= 0, otherwise 2N.
TruncatedSeries substitute_z_squared(const TruncatedSeries& a, int cap = -1);
/// a(lambda z): c_n lambda^n.
TruncatedSeries substitute_scaled(const TruncatedSeries& a, cplx lambda);
/// Restrict to order min(order, a.order()).
TruncatedSeries truncate(const TruncatedSeries& a, int order);

/// Horner evaluation of sum c_n z^n.
cplx series_eval(const TruncatedSeries& a, cplx z);

}  // namespace hbloch
