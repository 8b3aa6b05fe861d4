#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hbloch/grid_kernel.hpp"
#include "hbloch/harmonic_map.hpp"

namespace hbloch {

struct CheckResult {
  std::string name;
  bool passed = false;
  /// Inputs and measured values, enough to reproduce the check.
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  GridConfig grid;
  /// Random points per identity check.
  int samples = 1000;
};

/// "invariance", "inclusions", "bounds", "bohr", "all".
const std::vector<std::string>& verify_suite_names();

/// Runs a suite; results sorted by check name. Throws DomainError for unknown suites.
std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opts);

struct NamedMap {
  std::string label;
  HarmonicMap map;
};

/// One instance of every catalog entry, with fixed representative parameters.
std::vector<NamedMap> representative_maps(int order = 64);

}  // namespace hbloch
