#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>

#include "hbloch/series.hpp"

namespace hbloch {

using cplx = std::complex<double>;
using ComplexFn = std::function<cplx(cplx)>;

/// Value and first two derivatives of an analytic function on the disk.
struct AnalyticPart {
  ComplexFn value;
  ComplexFn d1;
  ComplexFn d2;
};

/// Every parameter symbol a catalog entry may carry. Unused ones stay empty.
struct MapParams {
  std::optional<double> nu;
  std::optional<double> t;
  std::optional<double> mu;
  std::optional<double> theta;
  std::optional<cplx> eps;
  std::optional<cplx> b1;
  std::optional<cplx> a;
  std::optional<cplx> b;
  std::optional<cplx> alpha;
  std::optional<int> which;
};

/// f = h + conj(g) with g(0) = 0.
///
/// The optional members are closed forms a constructor may supply where the
/// generic formula would overflow or cancel catastrophically:
///   - jacobian: |h'|^2 - |g'|^2 computed without subtracting two huge squares;
///   - h_log_derivative: h''/h' when h' itself overflows;
///   - series_h / series_g: Taylor coefficients at a requested order;
///   - envelope_h / envelope_g: coefficient bounds for majorant tails.
struct HarmonicMap {
  std::string name;
  MapParams params;
  AnalyticPart h;
  AnalyticPart g;

  std::function<double(cplx)> jacobian;
  ComplexFn h_log_derivative;
  std::function<TruncatedSeries(int)> series_h;
  std::function<TruncatedSeries(int)> series_g;
  std::optional<CoefficientEnvelope> envelope_h;
  std::optional<CoefficientEnvelope> envelope_g;

  bool has_series() const { return static_cast<bool>(series_h) && static_cast<bool>(series_g); }
  /// f(z) = h(z) + conj(g(z)).
  cplx operator()(cplx z) const { return h.value(z) + std::conj(g.value(z)); }
};

/// The zero analytic function (g-part of analytic maps).
AnalyticPart zero_part();

}  // namespace hbloch
