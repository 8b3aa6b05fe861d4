#pragma once

#include <complex>

namespace hbloch {

using cplx = std::complex<double>;

/// A point of the open unit disk that keeps 1 - |z| as its own field, so
/// weights (1 - |z|^2)^nu stay accurate when |z| rounds to 1.
class ComplexPoint {
 public:
  ComplexPoint() = default;

  /// z = (1 - one_minus_r) e^{i theta}; one_minus_r must lie in (0, 1].
  static ComplexPoint polar(double one_minus_r, double theta);

  /// Builds the point from its value; |z| < 1 is required.
  static ComplexPoint from_value(cplx z);

  /// Value with an externally known boundary distance (e.g. an image under a
  /// disk automorphism computed in cancellation-free form).
  static ComplexPoint with_distance(cplx z, double one_minus_r);

  cplx value() const { return value_; }
  double one_minus_r() const { return one_minus_r_; }
  double radius() const { return 1.0 - one_minus_r_; }

  /// 1 - |z|^2 = d (2 - d) with d = 1 - |z|.
  double one_minus_r_squared() const { return one_minus_r_ * (2.0 - one_minus_r_); }

 private:
  ComplexPoint(cplx z, double d) : value_(z), one_minus_r_(d) {}

  cplx value_{0.0, 0.0};
  double one_minus_r_ = 1.0;
};

}  // namespace hbloch
