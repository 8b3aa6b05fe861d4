#pragma once

#include <string>
#include <vector>

#include "hbloch/complex_point.hpp"
#include "hbloch/grid_kernel.hpp"
#include "hbloch/harmonic_map.hpp"

namespace hbloch {

enum class Verdict { finite, divergent, inconclusive };

std::string to_string(Verdict v);

struct LadderEntry {
  double radius = 0.0;
  double one_minus_r = 1.0;
  double value = 0.0;
  double theta = 0.0;
};

/// Estimated supremum of a weighted quantity over the disk.
struct SupEstimate {
  /// Largest ladder value (+inf if a sample overflowed).
  double value = 0.0;
  ComplexPoint argmax;
  std::vector<LadderEntry> ladder;
  Verdict verdict = Verdict::inconclusive;
  bool overflowed = false;
};

/// Divergent iff a sample overflowed, or the last m ratios all exceed
/// 1 + eps_d and the last value exceeds V_max. Finite iff the last m ratios
/// all stay below 1 + eps_d / 10. Otherwise inconclusive.
Verdict classify_divergence(const std::vector<LadderEntry>& ladder, const GridConfig& cfg,
                            bool overflowed = false);

/// J_f = |h'|^2 - |g'|^2 (or the map's closed form when it has one).
double jacobian(const HarmonicMap& f, cplx z);
inline double jacobian(const HarmonicMap& f, const ComplexPoint& z) { return jacobian(f, z.value()); }

/// omega = g'/h'. Throws UndefinedDilatation where h' = 0.
cplx dilatation(const HarmonicMap& f, const ComplexPoint& z);

/// (1 - |z|^2)^nu from the stored boundary distance.
double beta_weight(const ComplexPoint& z, double nu);

/// P_f = h''/h' - conj(omega) omega' / (1 - |omega|^2).
/// Throws NotSensePreserving unless J_f(z) > 0.
cplx pre_schwarzian(const HarmonicMap& f, const ComplexPoint& z);

/// sup (1 - |z|^2)^nu (|h'| + |g'|).
SupEstimate estimate_beta(const HarmonicMap& f, double nu, const GridConfig& cfg = {});

/// sup (1 - |z|^2)^nu sqrt(|J_f|).
SupEstimate estimate_beta_star(const HarmonicMap& f, double nu, const GridConfig& cfg = {});

/// sup (1 - |z|^2) |P_f|. Throws NotSensePreserving at the first failing sample.
SupEstimate estimate_pre_schwarzian_norm(const HarmonicMap& f, const GridConfig& cfg = {});

/// Shared driver: scan the ladder for an arbitrary functional and classify.
SupEstimate estimate_sup(const DiskFunctional& functional, const GridConfig& cfg);

}  // namespace hbloch
