#pragma once

#include <functional>
#include <vector>

#include "hbloch/complex_point.hpp"

namespace hbloch {

/// Radial ladder r_j = 1 - 2^{-j} (j = 0..ladder_depth, j = 0 being the
/// origin) crossed with an angular grid, plus golden-section refinement in
/// theta around each rung's coarse argmax.
struct GridConfig {
  int ladder_depth = 40;
  int angular_samples = 256;
  int refine_iters = 30;
  double divergence_growth = 0.01;
  double divergence_cap = 1e6;
  int rungs_required = 5;
  /// Evaluate cells with OpenMP; results are identical either way.
  bool parallel = true;

  /// Throws DomainError unless 8 <= ladder_depth <= 52, angular_samples >= 64,
  /// divergence_growth > 0, rungs_required >= 3 and refine_iters >= 0.
  void validate() const;
};

/// Quantity whose supremum over the disk is being estimated. Non-finite
/// results mark an overflowed sample. May throw to abort the scan.
using DiskFunctional = std::function<double(const ComplexPoint&)>;

struct RungSample {
  double one_minus_r = 1.0;
  double value = 0.0;
  double theta = 0.0;
  bool overflow = false;
};

/// Reference implementation: plain nested loops, rung by rung.
std::vector<RungSample> scan_ladder_serial(const DiskFunctional& f, const GridConfig& cfg);

/// OpenMP implementation. Cells are evaluated concurrently into fixed slots
/// and reduced in index order, so the output is bit-identical to the serial
/// scan. The first exception in serial order is rethrown.
std::vector<RungSample> scan_ladder_parallel(const DiskFunctional& f, const GridConfig& cfg);

/// Dispatches on cfg.parallel.
std::vector<RungSample> scan_ladder(const DiskFunctional& f, const GridConfig& cfg);

}  // namespace hbloch
