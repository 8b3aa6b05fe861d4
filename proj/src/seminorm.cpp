#include "hbloch/seminorm.hpp"

#include <algorithm>
#include <cmath>

#include "hbloch/errors.hpp"

namespace hbloch {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::finite:
      return "finite";
    case Verdict::divergent:
      return "divergent";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

Verdict classify_divergence(const std::vector<LadderEntry>& ladder, const GridConfig& cfg,
                            bool overflowed) {
  if (ladder.empty()) throw DomainError("classify_divergence: ladder must be nonempty");
  if (overflowed) return Verdict::divergent;
  const int m = cfg.rungs_required;
  if (static_cast<int>(ladder.size()) < m + 1) return Verdict::inconclusive;

  bool all_growing = true;
  bool all_flat = true;
  for (std::size_t i = ladder.size() - static_cast<std::size_t>(m); i < ladder.size(); ++i) {
    const double prev = ladder[i - 1].value;
    const double cur = ladder[i].value;
    double ratio;
    if (prev == 0.0) {
      ratio = cur == 0.0 ? 1.0 : INFINITY;
    } else {
      ratio = cur / prev;
    }
    if (!(ratio > 1.0 + cfg.divergence_growth)) all_growing = false;
    if (!(ratio < 1.0 + 0.1 * cfg.divergence_growth)) all_flat = false;
  }
  if (all_growing && ladder.back().value > cfg.divergence_cap) return Verdict::divergent;
  if (all_flat) return Verdict::finite;
  return Verdict::inconclusive;
}

double jacobian(const HarmonicMap& f, cplx z) {
  if (f.jacobian) return f.jacobian(z);
  return std::norm(f.h.d1(z)) - std::norm(f.g.d1(z));
}

cplx dilatation(const HarmonicMap& f, const ComplexPoint& z) {
  const cplx hp = f.h.d1(z.value());
  if (hp == cplx{0.0, 0.0}) throw UndefinedDilatation(z.value());
  return f.g.d1(z.value()) / hp;
}

double beta_weight(const ComplexPoint& z, double nu) {
  if (nu == 0.0) return 1.0;
  return std::pow(z.one_minus_r_squared(), nu);
}

cplx pre_schwarzian(const HarmonicMap& f, const ComplexPoint& p) {
  const cplx z = p.value();
  const double J = jacobian(f, z);
  if (!(J > 0.0)) throw NotSensePreserving(z, J);
  if (f.h_log_derivative) {
    // Only supplied for analytic maps whose h' overflows.
    return f.h_log_derivative(z);
  }
  const cplx hp = f.h.d1(z);
  if (hp == cplx{0.0, 0.0}) throw UndefinedDilatation(z);
  const cplx hpp = f.h.d2(z);
  const cplx gp = f.g.d1(z);
  const cplx gpp = f.g.d2(z);
  const cplx omega = gp / hp;
  const cplx omega_prime = (gpp * hp - gp * hpp) / (hp * hp);
  return hpp / hp - std::conj(omega) * omega_prime / (1.0 - std::norm(omega));
}

SupEstimate estimate_sup(const DiskFunctional& functional, const GridConfig& cfg) {
  const auto rungs = scan_ladder(functional, cfg);
  SupEstimate est;
  est.ladder.reserve(rungs.size());
  std::size_t best = 0;
  for (std::size_t i = 0; i < rungs.size(); ++i) {
    const auto& s = rungs[i];
    est.ladder.push_back({1.0 - s.one_minus_r, s.one_minus_r, s.value, s.theta});
    if (s.overflow) {
      if (!est.overflowed) best = i;
      est.overflowed = true;
    } else if (!est.overflowed && s.value > rungs[best].value) {
      best = i;
    }
  }
  est.value = est.overflowed ? INFINITY : rungs[best].value;
  est.argmax = ComplexPoint::polar(rungs[best].one_minus_r, rungs[best].theta);
  est.verdict = classify_divergence(est.ladder, cfg, est.overflowed);
  return est;
}

SupEstimate estimate_beta(const HarmonicMap& f, double nu, const GridConfig& cfg) {
  if (!(nu > 0.0)) throw DomainError("estimate_beta: nu must be > 0");
  return estimate_sup(
      [&f, nu](const ComplexPoint& z) {
        const cplx w = z.value();
        return beta_weight(z, nu) * (std::abs(f.h.d1(w)) + std::abs(f.g.d1(w)));
      },
      cfg);
}

SupEstimate estimate_beta_star(const HarmonicMap& f, double nu, const GridConfig& cfg) {
  if (!(nu > 0.0)) throw DomainError("estimate_beta_star: nu must be > 0");
  return estimate_sup(
      [&f, nu](const ComplexPoint& z) { return beta_weight(z, nu) * std::sqrt(std::abs(jacobian(f, z))); },
      cfg);
}

SupEstimate estimate_pre_schwarzian_norm(const HarmonicMap& f, const GridConfig& cfg) {
  return estimate_sup(
      [&f](const ComplexPoint& z) { return z.one_minus_r_squared() * std::abs(pre_schwarzian(f, z)); },
      cfg);
}

}  // namespace hbloch
