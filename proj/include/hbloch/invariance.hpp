#pragma once

#include <string>

#include "hbloch/complex_point.hpp"
#include "hbloch/harmonic_map.hpp"

namespace hbloch {

/// A(w) = a w + b conj(w).
struct AffineParams {
  cplx a{1.0, 0.0};
  cplx b{0.0, 0.0};
};

/// phi_alpha(z) = (z + alpha)/(1 + conj(alpha) z), |alpha| < 1.
class AutomorphismParam {
 public:
  explicit AutomorphismParam(cplx alpha);
  cplx alpha() const { return alpha_; }

  cplx operator()(cplx z) const;
  cplx derivative(cplx z) const;
  cplx second_derivative(cplx z) const;

  /// Image point with 1 - |phi(z)| from
  /// 1 - |phi(z)|^2 = (1 - |alpha|^2)(1 - |z|^2)/|1 + conj(alpha) z|^2.
  ComplexPoint apply(const ComplexPoint& z) const;

 private:
  cplx alpha_;
};

/// Analytic self-map of the disk used as a subordination inner function.
struct InnerMap {
  enum class Kind { automorphism, power, scaled, custom };

  Kind kind = Kind::custom;
  std::string tag;
  ComplexFn value;
  ComplexFn d1;
  ComplexFn d2;
  /// phi(0) = 0: subordination f < F rather than f <= F.
  bool normalized = false;

  static InnerMap automorphism(cplx alpha);
  static InnerMap power(int n);
  /// z -> c z, |c| <= 1.
  static InnerMap scaled(cplx c);
  /// Arbitrary phi; passes the sampled screen or throws InvalidInnerMap.
  static InnerMap custom(std::string tag, ComplexFn value, ComplexFn d1, ComplexFn d2);
};

/// Sampled check that |phi| < 1 and (1 - |z|^2)|phi'| <= 1 - |phi|^2 on a
/// polar grid (radii 1 - 2^{-j}, j <= 20, 64 angles). Throws InvalidInnerMap.
void screen_inner_map(const InnerMap& phi);

/// A o f = (a h + b g) + conj(conj(a) g + conj(b) h), constants moved so g(0) = 0.
HarmonicMap affine_compose(const HarmonicMap& f, const AffineParams& A);

/// f o phi_alpha via the chain rule.
HarmonicMap automorphism_compose(const HarmonicMap& f, const AutomorphismParam& alpha);

struct Subordination {
  HarmonicMap map;
  /// True when phi(0) = 0 (f < F); false for f <= F.
  bool strict = false;
};

/// f = F o phi. Screens phi first; evaluating outside the disk throws InvalidInnerMap.
Subordination subordinate(const HarmonicMap& F, const InnerMap& phi);

/// Inputs to f_eps = log(H' + eps G') + conj(g_eps) with g_eps' = omega h_eps'.
/// H_prime / G_prime carry (H', H'', H''') and (G', G'', G''').
struct Thm31Input {
  AnalyticPart H_prime;
  AnalyticPart G_prime;
  cplx eps{0.0, 0.0};
  ComplexFn omega;
  ComplexFn omega_prime;
  /// Declared sup |omega|.
  double omega_bound = 0.0;
};

/// Builds f_eps. Throws DomainError if |eps| > 1, if H' + eps G' vanishes on
/// the sampled grid, or if |omega| exceeds its declared bound there. The
/// logarithm is continued along radii from Log(H'(0) + eps G'(0)).
HarmonicMap make_thm31_map(const Thm31Input& in);

}  // namespace hbloch
