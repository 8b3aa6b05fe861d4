#include "hbloch/grid_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>

#include "hbloch/errors.hpp"

namespace hbloch {

void GridConfig::validate() const {
  if (ladder_depth < 8 || ladder_depth > 52) throw DomainError("GridConfig: ladder_depth must lie in [8, 52]");
  if (angular_samples < 64) throw DomainError("GridConfig: angular_samples must be >= 64");
  if (refine_iters < 0) throw DomainError("GridConfig: refine_iters must be >= 0");
  if (!(divergence_growth > 0.0)) throw DomainError("GridConfig: divergence_growth must be > 0");
  if (!(divergence_cap > 0.0)) throw DomainError("GridConfig: divergence_cap must be > 0");
  if (rungs_required < 3) throw DomainError("GridConfig: rungs_required must be >= 3");
}

namespace {

constexpr double kInvPhi = 0.6180339887498948482;
constexpr int kMaxRefineIters = 120;

double rung_distance(int j) { return std::ldexp(1.0, -j); }

double grid_theta(int k, int n) {
  return 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
}

/// Golden-section iterations: at least cfg.refine_iters, and enough to shrink
/// the bracket below an eighth of the boundary distance.
int refine_iterations(const GridConfig& cfg, double half_width, double d) {
  const double needed = std::ceil(std::log(2.0 * half_width / (0.125 * d)) / std::log(1.0 / kInvPhi));
  return std::min(kMaxRefineIters, std::max(cfg.refine_iters, static_cast<int>(needed)));
}

/// Reduces one rung's coarse samples and refines around the argmax.
RungSample finish_rung(const DiskFunctional& f, const GridConfig& cfg, int j, const double* coarse) {
  const int n = cfg.angular_samples;
  RungSample out;
  out.one_minus_r = rung_distance(j);
  int best = 0;
  for (int k = 0; k < n; ++k) {
    if (!std::isfinite(coarse[k])) {
      out.overflow = true;
      out.value = INFINITY;
      out.theta = grid_theta(k, n);
      return out;
    }
    if (coarse[k] > coarse[best]) best = k;
  }
  out.value = coarse[best];
  out.theta = grid_theta(best, n);
  if (j == 0) return out;

  const double d = out.one_minus_r;
  const double half = 2.0 * std::numbers::pi / static_cast<double>(n);
  double a = out.theta - half;
  double b = out.theta + half;
  auto eval = [&](double theta) {
    const double v = f(ComplexPoint::polar(d, theta));
    if (!std::isfinite(v)) {
      out.overflow = true;
      out.value = INFINITY;
      out.theta = theta;
    } else if (!out.overflow && v > out.value) {
      out.value = v;
      out.theta = theta;
    }
    return v;
  };
  double c = b - (b - a) * kInvPhi;
  double e = a + (b - a) * kInvPhi;
  double fc = eval(c);
  double fe = eval(e);
  const int iters = refine_iterations(cfg, half, d);
  for (int it = 0; it < iters && !out.overflow; ++it) {
    if (fc > fe) {
      b = e;
      e = c;
      fe = fc;
      c = b - (b - a) * kInvPhi;
      fc = eval(c);
    } else {
      a = c;
      c = e;
      fc = fe;
      e = a + (b - a) * kInvPhi;
      fe = eval(e);
    }
  }
  return out;
}

}  // namespace

std::vector<RungSample> scan_ladder_serial(const DiskFunctional& f, const GridConfig& cfg) {
  cfg.validate();
  const int n = cfg.angular_samples;
  std::vector<RungSample> out;
  out.reserve(static_cast<std::size_t>(cfg.ladder_depth) + 1);
  std::vector<double> coarse(static_cast<std::size_t>(n));
  for (int j = 0; j <= cfg.ladder_depth; ++j) {
    const double d = rung_distance(j);
    for (int k = 0; k < n; ++k) coarse[k] = f(ComplexPoint::polar(d, grid_theta(k, n)));
    out.push_back(finish_rung(f, cfg, j, coarse.data()));
  }
  return out;
}

std::vector<RungSample> scan_ladder_parallel(const DiskFunctional& f, const GridConfig& cfg) {
  cfg.validate();
  const int n = cfg.angular_samples;
  const int rungs = cfg.ladder_depth + 1;
  const long cells = static_cast<long>(rungs) * n;
  std::vector<double> coarse(static_cast<std::size_t>(cells));
  std::vector<std::exception_ptr> coarse_err(static_cast<std::size_t>(cells));

#pragma omp parallel for schedule(static)
  for (long idx = 0; idx < cells; ++idx) {
    const int j = static_cast<int>(idx / n);
    const int k = static_cast<int>(idx % n);
    try {
      coarse[idx] = f(ComplexPoint::polar(rung_distance(j), grid_theta(k, n)));
    } catch (...) {
      coarse_err[idx] = std::current_exception();
    }
  }

  std::vector<RungSample> out(static_cast<std::size_t>(rungs));
  std::vector<std::exception_ptr> rung_err(static_cast<std::size_t>(rungs));
  std::vector<char> skipped(static_cast<std::size_t>(rungs), 0);
  for (int j = 0; j < rungs; ++j) {
    for (int k = 0; k < n; ++k) {
      if (coarse_err[static_cast<std::size_t>(j) * n + k]) {
        skipped[j] = 1;
        break;
      }
    }
  }

#pragma omp parallel for schedule(dynamic, 1)
  for (int j = 0; j < rungs; ++j) {
    if (skipped[j]) continue;
    try {
      out[j] = finish_rung(f, cfg, j, coarse.data() + static_cast<std::size_t>(j) * n);
    } catch (...) {
      rung_err[j] = std::current_exception();
    }
  }

  // Serial order: rung j's coarse cells, then rung j's refinement.
  for (int j = 0; j < rungs; ++j) {
    for (int k = 0; k < n; ++k) {
      if (auto& e = coarse_err[static_cast<std::size_t>(j) * n + k]) std::rethrow_exception(e);
    }
    if (rung_err[j]) std::rethrow_exception(rung_err[j]);
  }
  return out;
}

std::vector<RungSample> scan_ladder(const DiskFunctional& f, const GridConfig& cfg) {
  return cfg.parallel ? scan_ladder_parallel(f, cfg) : scan_ladder_serial(f, cfg);
}

}  // namespace hbloch
