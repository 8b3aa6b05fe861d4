#include "hbloch/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <numbers>

#include "hbloch/bohr.hpp"
#include "hbloch/bounds.hpp"
#include "hbloch/catalog.hpp"
#include "hbloch/errors.hpp"
#include "hbloch/invariance.hpp"
#include "hbloch/quadrature.hpp"
#include "hbloch/sampling.hpp"
#include "hbloch/seminorm.hpp"

namespace hbloch {

namespace {

constexpr double kPi = std::numbers::pi;
// Relative slack when a ladder estimate is compared with an exact bound: near
// 1 - |z| = 2^-40, |h'|^2 - |g'|^2 keeps only about four significant digits.
constexpr double kEstimateSlack = 1e-3;

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

std::string cstr(cplx z) { return fmt("(%.12g,%.12g)", z.real(), z.imag()); }

class Collector {
 public:
  void add(std::string name, bool ok, std::string detail) {
    out_.push_back({std::move(name), ok, std::move(detail)});
  }
  /// Runs body; any library exception turns into a failed check.
  void guarded(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      add(name, false, std::string("exception: ") + e.what());
    }
  }
  std::vector<CheckResult>& results() { return out_; }

 private:
  std::vector<CheckResult> out_;
};

bool finite_all(std::initializer_list<double> xs) {
  for (double x : xs)
    if (!std::isfinite(x)) return false;
  return true;
}

/// Worst scaled deviation over samples; skips samples where an evaluator overflowed.
struct Worst {
  double ratio = 0.0;
  cplx where{0.0, 0.0};
  std::string extra;
  int used = 0;
  int skipped = 0;

  void take(double dev, double scale, cplx z, const std::string& info = {}) {
    if (!finite_all({dev, scale})) {
      ++skipped;
      return;
    }
    ++used;
    const double r = scale > 0.0 ? dev / scale : (dev == 0.0 ? 0.0 : INFINITY);
    if (r > ratio) {
      ratio = r;
      where = z;
      extra = info;
    }
  }
  std::string describe() const {
    return fmt("worst=%.3e at z=%s %s samples=%d skipped=%d", ratio, cstr(where).c_str(), extra.c_str(), used,
               skipped);
  }
};

double derivative_scale(const HarmonicMap& f, cplx z) { return std::norm(f.h.d1(z)) + std::norm(f.g.d1(z)); }

// ---------------------------------------------------------------- invariance

void affine_jacobian_checks(Collector& c, const VerifyOptions& o) {
  DiskSampler s(o.seed);
  for (const auto& [label, f] : representative_maps()) {
    const std::string name = "invariance.affine_jacobian." + label;
    c.guarded(name, [&] {
      Worst w;
      for (int i = 0; i < o.samples; ++i) {
        const cplx z = s.value();
        cplx a = 2.0 * s.value();
        const cplx b = 2.0 * s.value();
        if (std::abs(a) == std::abs(b)) a *= 1.5;
        const HarmonicMap g = affine_compose(f, {a, b});
        const double lhs = jacobian(g, z);
        const double rhs = (std::norm(a) - std::norm(b)) * jacobian(f, z);
        const double scale = std::pow(std::abs(a) + std::abs(b), 2) * derivative_scale(f, z);
        w.take(std::abs(lhs - rhs), scale, z, "a=" + cstr(a) + " b=" + cstr(b));
      }
      c.add(name, w.ratio <= 1e-12 && w.used > 0, "seed=" + std::to_string(o.seed) + " " + w.describe());
    });
  }
}

void automorphism_jacobian_checks(Collector& c, const VerifyOptions& o) {
  DiskSampler s(o.seed + 1);
  for (const auto& [label, f] : representative_maps()) {
    const std::string name = "invariance.automorphism_jacobian." + label;
    c.guarded(name, [&] {
      Worst w;
      for (int i = 0; i < o.samples; ++i) {
        const cplx z = s.value();
        const cplx alpha = s.value(0.9);
        const AutomorphismParam phi(alpha);
        const HarmonicMap g = automorphism_compose(f, phi);
        const cplx pz = phi(z);
        const double dphi2 = std::norm(phi.derivative(z));
        const double lhs = jacobian(g, z);
        const double rhs = dphi2 * jacobian(f, pz);
        w.take(std::abs(lhs - rhs), dphi2 * derivative_scale(f, pz), z, "alpha=" + cstr(alpha));
      }
      c.add(name, w.ratio <= 1e-12 && w.used > 0, "seed=" + std::to_string(o.seed + 1) + " " + w.describe());
    });
  }
}

void automorphism_weight_check(Collector& c, const VerifyOptions& o) {
  const std::string name = "invariance.automorphism_weight";
  c.guarded(name, [&] {
    DiskSampler s(o.seed + 2);
    Worst w;
    for (int i = 0; i < o.samples; ++i) {
      const ComplexPoint z = s.point();
      const cplx alpha = s.value(0.99);
      const AutomorphismParam phi(alpha);
      const double lhs = 1.0 - std::norm(phi(z.value()));
      const double rhs = std::abs(phi.derivative(z.value())) * (1.0 - std::norm(z.value()));
      w.take(std::abs(lhs - rhs), 1.0, z.value(), "alpha=" + cstr(alpha));
    }
    c.add(name, w.ratio <= 1e-12, "seed=" + std::to_string(o.seed + 2) + " " + w.describe());
  });
}

void associativity_check(Collector& c, const VerifyOptions& o) {
  const std::string name = "invariance.automorphism_associativity";
  c.guarded(name, [&] {
    const HarmonicMap f = make_f_nu_t(1.0, 0.5, 64);
    const cplx al{0.3, 0.2};
    const cplx be{0.0, -0.5};
    const AutomorphismParam pa(al);
    const AutomorphismParam pb(be);
    const HarmonicMap left = automorphism_compose(automorphism_compose(f, pa), pb);
    const InnerMap both = InnerMap::custom(
        "phi_a o phi_b", [=](cplx z) { return pa(pb(z)); },
        [=](cplx z) { return pa.derivative(pb(z)) * pb.derivative(z); },
        [=](cplx z) {
          const cplx d = pb.derivative(z);
          return pa.second_derivative(pb(z)) * d * d + pa.derivative(pb(z)) * pb.second_derivative(z);
        });
    const HarmonicMap right = subordinate(f, both).map;
    DiskSampler s(o.seed + 3);
    Worst w;
    for (int i = 0; i < o.samples; ++i) {
      const cplx z = s.value(0.95);
      const cplx lv = left(z);
      const cplx rv = right(z);
      w.take(std::abs(lv - rv), 1.0 + std::abs(lv), z, "value");
      const double lj = jacobian(left, z);
      const double rj = jacobian(right, z);
      w.take(std::abs(lj - rj), derivative_scale(left, z), z, "jacobian");
    }
    c.add(name, w.ratio <= 1e-12,
          "f=f_nu_t(1,0.5) alpha=" + cstr(al) + " beta=" + cstr(be) + " seed=" + std::to_string(o.seed + 3) + " " +
              w.describe());
  });
}

void distortion_checks(Collector& c, const VerifyOptions& o) {
  const HarmonicMap f = make_f_nu_t(1.0, 0.0, 64);
  for (double nu : {0.5, 1.0, 2.0}) {
    const SupEstimate base = estimate_beta_star(f, nu, o.grid);
    for (cplx alpha : {cplx{0.3, 0.0}, cplx{0.0, 0.6}}) {
      const std::string name = fmt("invariance.beta_star_distortion.nu=%g.alpha=%s", nu, cstr(alpha).c_str());
      c.guarded(name, [&] {
        const SupEstimate comp = estimate_beta_star(automorphism_compose(f, AutomorphismParam(alpha)), nu, o.grid);
        const double a = std::abs(alpha);
        const double factor = std::pow((1.0 + a) / (1.0 - a), std::abs(nu - 1.0));
        bool ok;
        std::string d = fmt("f=f_nu_t(1,0) base=%.12g (%s) composed=%.12g (%s) factor=%.12g", base.value,
                            to_string(base.verdict).c_str(), comp.value, to_string(comp.verdict).c_str(), factor);
        if (base.verdict == Verdict::finite)
          ok = comp.verdict == Verdict::finite && comp.value <= factor * base.value * (1.0 + kEstimateSlack);
        else
          ok = comp.verdict == base.verdict;  // both unbounded: verdicts must agree
        c.add(name, ok, d);
      });
    }
  }
}

void subordination_checks(Collector& c, const VerifyOptions& o) {
  struct Case {
    std::string label;
    HarmonicMap F;
    bool star;
  };
  const std::vector<Case> cases = {
      {"f_nu_t(0.5,0).beta1", make_f_nu_t(0.5, 0.0, 64), false},
      {"remark34(1).beta1", make_remark34(1), false},
      {"f_nu_t(1,0).beta_star1", make_f_nu_t(1.0, 0.0, 64), true},
      {"example53(0.7).beta_star1", make_example53(0.7, 64), true},
  };
  const std::vector<InnerMap> inners = {InnerMap::automorphism(cplx{0.5, 0.0}), InnerMap::power(2),
                                        InnerMap::scaled(cplx{0.9, 0.0})};
  for (const auto& cs : cases) {
    for (const auto& phi : inners) {
      const std::string name = "invariance.subordination_verdict." + cs.label + "." + phi.tag;
      c.guarded(name, [&] {
        const HarmonicMap f = subordinate(cs.F, phi).map;
        const SupEstimate e = cs.star ? estimate_beta_star(f, 1.0, o.grid) : estimate_beta(f, 1.0, o.grid);
        c.add(name, e.verdict == Verdict::finite, fmt("value=%.12g verdict=", e.value) + to_string(e.verdict));
      });
    }
  }

  const std::string name = "invariance.subordination_pointwise";
  c.guarded(name, [&] {
    const HarmonicMap F = make_f_nu_t(1.0, 0.0, 64);
    const InnerMap phi = InnerMap::power(2);
    const HarmonicMap f = subordinate(F, phi).map;
    DiskSampler s(o.seed + 4);
    Worst w;
    for (int i = 0; i < o.samples; ++i) {
      const ComplexPoint z = s.point();
      const cplx pz = phi.value(z.value());
      const double lhs = z.one_minus_r_squared() * std::sqrt(std::abs(jacobian(f, z.value())));
      const double rhs = (1.0 - std::norm(pz)) * std::sqrt(std::abs(jacobian(F, pz)));
      w.take(std::max(0.0, lhs - rhs), rhs, z.value());
    }
    c.add(name, w.ratio <= 1e-12, "F=f_nu_t(1,0) phi=z^2 seed=" + std::to_string(o.seed + 4) + " " + w.describe());
  });
}

Thm31Input thm33_input(double nu, cplx eps) {
  auto hp = [nu](cplx z) { return std::exp(0.5 * nu * (std::log(1.0 + z) - std::log(1.0 - z))); };
  Thm31Input in;
  in.H_prime = {hp, [nu, hp](cplx z) { return hp(z) * nu / (1.0 - z * z); },
                [nu, hp](cplx z) {
                  const cplx w = 1.0 - z * z;
                  return hp(z) * (nu * nu / (w * w) + 2.0 * nu * z / (w * w));
                }};
  // G' = (1 - z)^{-1}: arbitrary second input, used only when eps != 0.
  in.G_prime = {[](cplx z) { return 1.0 / (1.0 - z); }, [](cplx z) { return 1.0 / ((1.0 - z) * (1.0 - z)); },
                [](cplx z) { return 2.0 / ((1.0 - z) * (1.0 - z) * (1.0 - z)); }};
  in.eps = eps;
  in.omega = [](cplx) { return cplx{0.0, 0.0}; };
  in.omega_prime = [](cplx) { return cplx{0.0, 0.0}; };
  in.omega_bound = 0.0;
  return in;
}

void thm31_checks(Collector& c, const VerifyOptions& o) {
  const double nu = 1.0;
  c.guarded("invariance.thm31.closed_form", [&] {
    const HarmonicMap f = make_thm31_map(thm33_input(nu, 0.0));
    DiskSampler s(o.seed + 5);
    Worst w;
    for (int i = 0; i < 200; ++i) {
      const cplx z = s.value(0.95);
      const cplx expect = 0.5 * nu * (std::log(1.0 + z) - std::log(1.0 - z));
      w.take(std::abs(f.h.value(z) - expect), 1.0 + std::abs(expect), z);
    }
    c.add("invariance.thm31.closed_form", w.ratio <= 1e-10, "nu=1 eps=0 omega=0 " + w.describe());
  });
  c.guarded("invariance.thm31.beta_star_finite", [&] {
    const SupEstimate e = estimate_beta_star(make_thm31_map(thm33_input(nu, 0.0)), 1.0, o.grid);
    c.add("invariance.thm31.beta_star_finite", e.verdict == Verdict::finite,
          fmt("nu=1 value=%.12g verdict=", e.value) + to_string(e.verdict));
  });
  c.guarded("invariance.thm31.eps_zero_ignores_G", [&] {
    Thm31Input a = thm33_input(nu, 0.0);
    Thm31Input b = a;
    b.G_prime = {[](cplx z) { return 3.0 + z; }, [](cplx) { return cplx{1.0, 0.0}; },
                 [](cplx) { return cplx{0.0, 0.0}; }};
    const HarmonicMap fa = make_thm31_map(a);
    const HarmonicMap fb = make_thm31_map(b);
    DiskSampler s(o.seed + 6);
    Worst w;
    for (int i = 0; i < 200; ++i) {
      const cplx z = s.value(0.95);
      w.take(std::abs(fa.h.d1(z) - fb.h.d1(z)) + std::abs(fa.h.value(z) - fb.h.value(z)), 1.0, z);
    }
    c.add("invariance.thm31.eps_zero_ignores_G", w.ratio == 0.0, w.describe());
  });
  c.guarded("invariance.thm31.pointwise_bound", [&] {
    Thm31Input in = thm33_input(nu, cplx{0.5, 0.0});
    in.omega = [](cplx z) { return 0.5 * z; };
    in.omega_prime = [](cplx) { return cplx{0.5, 0.0}; };
    in.omega_bound = 0.5;
    const HarmonicMap f = make_thm31_map(in);
    DiskSampler s(o.seed + 7);
    Worst w;
    for (int i = 0; i < o.samples; ++i) {
      const ComplexPoint z = s.point();
      const double wgt = z.one_minus_r_squared();
      const double lhs = wgt * std::sqrt(std::abs(jacobian(f, z.value())));
      const double rhs = wgt * std::abs(f.h.d1(z.value())) * (1.0 + in.omega_bound);
      w.take(std::max(0.0, lhs - rhs), rhs, z.value());
    }
    c.add("invariance.thm31.pointwise_bound", w.ratio <= 1e-12, "nu=1 eps=0.5 omega=z/2 M=0.5 " + w.describe());
  });
}

void affine_identity_check(Collector& c, const VerifyOptions& o) {
  c.guarded("invariance.affine_identity_unchanged", [&] {
    const HarmonicMap f = make_f_nu_t(1.0, 0.5, 64);
    const HarmonicMap g = affine_compose(f, {cplx{1.0, 0.0}, cplx{0.0, 0.0}});
    DiskSampler s(o.seed + 8);
    Worst w;
    for (int i = 0; i < 200; ++i) {
      const cplx z = s.value(0.99);
      w.take(std::abs(f(z) - g(z)) + std::abs(f.h.d1(z) - g.h.d1(z)) + std::abs(f.g.d1(z) - g.g.d1(z)),
             1.0 + std::abs(f(z)) + std::abs(f.h.d1(z)), z);
    }
    c.add("invariance.affine_identity_unchanged", w.ratio <= 1e-15, w.describe());
  });
}

std::vector<CheckResult> invariance_suite(const VerifyOptions& o) {
  Collector c;
  affine_identity_check(c, o);
  affine_jacobian_checks(c, o);
  automorphism_jacobian_checks(c, o);
  automorphism_weight_check(c, o);
  associativity_check(c, o);
  distortion_checks(c, o);
  subordination_checks(c, o);
  thm31_checks(c, o);
  return std::move(c.results());
}

// ---------------------------------------------------------------- inclusions

void verdict_case(Collector& c, const std::string& name, const std::function<SupEstimate()>& est, Verdict want) {
  c.guarded(name, [&] {
    const SupEstimate e = est();
    c.add(name, e.verdict == want,
          fmt("value=%.12g last_rung=%.12g verdict=", e.value, e.ladder.empty() ? 0.0 : e.ladder.back().value) +
              to_string(e.verdict) + " expected=" + to_string(want));
  });
}

std::vector<CheckResult> inclusions_suite(const VerifyOptions& o) {
  Collector c;
  const GridConfig& g = o.grid;
  const int N = 64;

  for (double nu : {0.5, 1.0, 2.0})
    verdict_case(c, fmt("inclusions.verdict.h_nu.beta.nu=%g", nu),
                 [&] { return estimate_beta(make_h_nu(nu, N), nu, g); }, Verdict::divergent);
  verdict_case(c, "inclusions.verdict.example22_F.beta_star.nu=1.mu=4",
               [&] { return estimate_beta_star(make_example22_sum(4.0, 1.0, N), 1.0, g); }, Verdict::divergent);
  for (double nu : {0.5, 2.0, 5.0})
    verdict_case(c, fmt("inclusions.verdict.exp_cayley.beta.nu=%g", nu),
                 [&] { return estimate_beta(make_exp_cayley(), nu, g); }, Verdict::divergent);
  verdict_case(c, "inclusions.verdict.example32_H.preschwarzian",
               [&] { return estimate_pre_schwarzian_norm(make_example32_outer(), g); }, Verdict::divergent);
  for (double nu : {0.5, 1.0, 2.0})
    for (double t : {0.0, 0.5})
      verdict_case(c, fmt("inclusions.verdict.f_nu_t.beta_star.nu=%g.t=%g", nu, t),
                   [&] { return estimate_beta_star(make_f_nu_t(nu, t, N), nu, g); }, Verdict::finite);
  for (double nu : {0.5, 1.0, 2.0})
    verdict_case(c, fmt("inclusions.verdict.f_nu_0.beta.nu=%g", nu + 0.5),
                 [&] { return estimate_beta(make_f_nu_t(nu, 0.0, N), nu + 0.5, g); }, Verdict::finite);
  for (int which : {1, 2}) {
    verdict_case(c, fmt("inclusions.verdict.remark34_f%d.beta.nu=1", which),
                 [&] { return estimate_beta(make_remark34(which), 1.0, g); }, Verdict::finite);
    verdict_case(c, fmt("inclusions.verdict.remark34_f%d.beta_star.nu=0.5", which),
                 [&] { return estimate_beta_star(make_remark34(which), 0.5, g); }, Verdict::finite);
  }

  // Sharpness of the 1/2 shift: growth is only 2^{0.1} per rung, so the cap is lowered.
  {
    GridConfig low = g;
    low.divergence_cap = 10.0;
    verdict_case(c, "inclusions.prop25_sharp.f_nu_0.beta.nu=1.4.cap=10",
                 [&] { return estimate_beta(make_f_nu_t(1.0, 0.0, N), 1.4, low); }, Verdict::divergent);
  }

  for (double nu : {0.5, 1.0, 2.0}) {
    const std::string name = fmt("inclusions.pre_schwarzian.thm33.nu=%g", nu);
    c.guarded(name, [&] {
      const SupEstimate e = estimate_pre_schwarzian_norm(make_thm33_family(nu, cplx{0.3, 0.0}, N), g);
      c.add(name, e.verdict == Verdict::finite && std::abs(e.value - nu) <= 1e-3,
            fmt("b1=0.3 value=%.12g expected=%.12g verdict=", e.value, nu) + to_string(e.verdict));
    });
  }
  for (double t : {0.5, 0.7, 0.9}) {
    const std::string name = fmt("inclusions.example53.beta_star.t=%g", t);
    c.guarded(name, [&] {
      const SupEstimate e = estimate_beta_star(make_example53(t, N), 1.0, g);
      const double want = 2.0 * std::sqrt(t - t * t);
      c.add(name, e.verdict == Verdict::finite && std::abs(e.value - want) <= 1e-3,
            fmt("value=%.12g expected=%.12g verdict=", e.value, want) + to_string(e.verdict));
    });
  }
  verdict_case(c, "inclusions.thm33.beta_star.nu=2.index=1",
               [&] { return estimate_beta_star(make_thm33_family(2.0, 0.0, N), 1.0, g); }, Verdict::finite);
  verdict_case(c, "inclusions.thm33.beta_star.nu=2.index=0.5",
               [&] { return estimate_beta_star(make_thm33_family(2.0, 0.0, N), 0.5, g); }, Verdict::divergent);
  verdict_case(c, "inclusions.exp_cayley.beta_star.nu=1",
               [&] { return estimate_beta_star(make_exp_cayley(), 1.0, g); }, Verdict::finite);

  for (double nu : {0.5, 1.0, 2.0})
    for (double t : {0.0, 0.5}) {
      const std::string name = fmt("inclusions.f_nu_t.beta_star_bound.nu=%g.t=%g", nu, t);
      c.guarded(name, [&] {
        const SupEstimate e = estimate_beta_star(make_f_nu_t(nu, t, N), nu, g);
        const double bound = std::pow(2.0, nu + 0.5) * std::sqrt(1.0 + t);
        c.add(name, e.value <= bound * (1.0 + kEstimateSlack), fmt("value=%.12g bound=%.12g", e.value, bound));
      });
    }

  const std::vector<NamedMap> maps = {{"identity", make_identity()},
                                      {"f_nu_t(1,0.5)", make_f_nu_t(1.0, 0.5, N)},
                                      {"example53(0.7)", make_example53(0.7, N)},
                                      {"remark34(1)", make_remark34(1)},
                                      {"thm33(1,0.3)", make_thm33_family(1.0, cplx{0.3, 0.0}, N)}};
  for (const auto& [label, f] : maps)
    for (double nu : {0.5, 1.0, 2.0}) {
      const std::string name = fmt("inclusions.beta_star_le_beta.%s.nu=%g", label.c_str(), nu);
      c.guarded(name, [&] {
        const SupEstimate b = estimate_beta(f, nu, g);
        const SupEstimate bs = estimate_beta_star(f, nu, g);
        const bool ok = b.verdict == Verdict::divergent || bs.value <= b.value * (1.0 + 1e-9);
        c.add(name, ok,
              fmt("beta=%.12g (%s) beta_star=%.12g (%s)", b.value, to_string(b.verdict).c_str(), bs.value,
                  to_string(bs.verdict).c_str()));
      });
    }

  for (const auto& [label, f] : maps) {
    const std::string name = "inclusions.monotone_in_nu." + label;
    c.guarded(name, [&] {
      std::string d;
      bool ok = true;
      bool seen_finite = false;
      for (double nu : {0.5, 1.0, 1.5, 2.0}) {
        const Verdict v = estimate_beta(f, nu, g).verdict;
        d += fmt("nu=%g:", nu) + to_string(v) + " ";
        if (seen_finite && v != Verdict::finite) ok = false;
        if (v == Verdict::finite) seen_finite = true;
      }
      c.add(name, ok, d);
    });
  }

  c.guarded("inclusions.preschwarzian_affine_invariant", [&] {
    const HarmonicMap f = make_thm33_family(1.0, cplx{0.3, 0.0}, N);
    const HarmonicMap af = affine_compose(f, {cplx{2.0, 1.0}, cplx{0.5, -0.25}});
    const SupEstimate a = estimate_pre_schwarzian_norm(f, g);
    const SupEstimate b = estimate_pre_schwarzian_norm(af, g);
    c.add("inclusions.preschwarzian_affine_invariant", std::abs(a.value - b.value) <= 1e-9 * a.value,
          fmt("f=thm33(1,0.3) A=(2+i, 0.5-0.25i) P=%.15g P_A=%.15g", a.value, b.value));
  });
  return std::move(c.results());
}

// ---------------------------------------------------------------- bounds

void coefficient_check(Collector& c, const std::string& name, const HarmonicMap& f, const BoundContext& ctx,
                       int N) {
  c.guarded(name, [&] {
    const TruncatedSeries a = f.series_h(N);
    const TruncatedSeries b = f.series_g(N);
    double worst = 0.0;
    int at = 0;
    for (int n = 1; n <= N; ++n) {
      const double m = std::max(std::abs(a[n]), std::abs(b[n]));
      const double r = m / coeff_bound(ctx, n);
      if (r > worst) {
        worst = r;
        at = n;
      }
    }
    c.add(name, worst <= 1.0 + 1e-12,
          fmt("nu=%g beta_star=%.12g omega0=%g max(|a_n|,|b_n|)/bound=%.12g at n=%d", ctx.nu, ctx.beta_star,
              ctx.omega0, worst, at));
  });
}

struct GrowthCase {
  std::string label;
  HarmonicMap f;
  BoundContext ctx;
  double max_radius;
};

std::vector<GrowthCase> growth_cases() {
  std::vector<GrowthCase> out;
  for (double nu : {0.3, 1.0, 2.0})
    out.push_back({fmt("f_nu_t(%g,0.5)", nu), make_f_nu_t(nu, 0.5, 64),
                   {nu, std::pow(2.0, nu + 0.5) * std::sqrt(1.5), 0.5}, 0.999});
  out.push_back({"example53(0.7)", make_example53(0.7, 64), {1.0, 2.0 * std::sqrt(0.21), 0.7}, 0.999});
  out.push_back({"thm33(1,0.3)", make_thm33_family(1.0, cplx{0.3, 0.0}, 64), {0.5, 2.0 * std::sqrt(0.91), 0.3},
                 0.99});
  return out;
}

std::vector<CheckResult> bounds_suite(const VerifyOptions& o) {
  Collector c;
  const int N = 64;
  for (double nu : {0.5, 1.0, 2.0})
    for (double t : {0.0, 0.5})
      coefficient_check(c, fmt("bounds.coeff.f_nu_t.nu=%g.t=%g", nu, t), make_f_nu_t(nu, t, N),
                        {nu, std::pow(2.0, nu + 0.5) * std::sqrt(1.0 + t), t}, N);
  for (double nu : {0.5, 1.0, 2.0}) {
    const double b1 = 0.3;
    coefficient_check(c, fmt("bounds.coeff.thm33.nu=%g.b1=0.3", nu), make_thm33_family(nu, b1, N),
                      {0.5 * nu, std::pow(2.0, nu) * std::sqrt(1.0 - b1 * b1), b1}, N);
  }

  DiskSampler s(o.seed + 10);
  for (const auto& gc : growth_cases()) {
    const std::string name = "bounds.growth." + gc.label;
    c.guarded(name, [&] {
      const cplx a0 = gc.f.h.value(0.0);
      Worst w;
      const int n = std::min(o.samples, gc.label.rfind("thm33", 0) == 0 ? 200 : o.samples);
      for (int i = 0; i < n; ++i) {
        const ComplexPoint z = s.point(gc.max_radius);
        const double lhs = std::max(std::abs(gc.f.h.value(z.value()) - a0), std::abs(gc.f.g.value(z.value())));
        const double rhs = growth_bound(gc.ctx, z.radius());
        w.take(std::max(0.0, lhs - rhs), rhs, z.value());
      }
      c.add(name, w.ratio <= 1e-12, fmt("nu=%g beta_star=%.12g omega0=%g ", gc.ctx.nu, gc.ctx.beta_star, gc.ctx.omega0) +
                                        w.describe());
    });
  }

  c.guarded("bounds.uniform_cap.nu=0.3", [&] {
    const BoundContext ctx{0.3, std::pow(2.0, 0.8) * std::sqrt(1.5), 0.5};
    const HarmonicMap f = make_f_nu_t(0.3, 0.5, N);
    const double cap = uniform_growth_cap(ctx) + std::abs(f.h.value(0.0));
    double worst = 0.0;
    for (int i = 0; i < o.samples; ++i) {
      const cplx z = s.value(1.0 - 1e-12);
      worst = std::max({worst, std::abs(f.h.value(z)), std::abs(f.g.value(z))});
    }
    c.add("bounds.uniform_cap.nu=0.3", worst <= cap, fmt("f=f_nu_t(0.3,0.5) max|h|,|g|=%.12g cap=%.12g", worst, cap));
  });

  for (double nu : {0.5, 1.0, 3.0}) {
    const std::string name = fmt("bounds.phi_limit.nu=%g", nu);
    const double lim = std::exp(nu + 0.5);
    const double v = phi_nu(nu, 1e6);
    c.add(name, std::abs(v - lim) <= 1e-4 * lim, fmt("phi(1e6)=%.12g e^{nu+1/2}=%.12g", v, lim));
  }
  for (double nu : {0.1, 0.5, 1.0, 3.0}) {
    const std::string name = fmt("bounds.phi_increasing.nu=%g", nu);
    bool ok = phi_nu(nu, 2.0) > 0.0;
    double bad = 0.0;
    for (double x = 2.0; x < 50.0; x += 0.5)
      if (!(phi_nu(nu, x + 0.5) > phi_nu(nu, x))) {
        ok = false;
        bad = x;
      }
    c.add(name, ok, ok ? std::string("x in [2, 50] step 0.5") : fmt("fails at x=%g", bad));
  }
  {
    bool ok = psi_nu(0.5, 2.0) == 6.0;
    for (double nu : {0.1, 1.0, 5.0})
      ok = ok && std::abs(psi_nu(nu, 2.0) - 4.0 * (2.0 * nu * nu + 1.0)) <= 1e-12 * psi_nu(nu, 2.0);
    c.add("bounds.psi_values", ok, fmt("psi_{1/2}(2)=%.12g", psi_nu(0.5, 2.0)));
    bool pos = true;
    for (double nu : {0.1, 0.5, 1.0, 5.0})
      for (double x = 2.0; x <= 100.0; x += 0.01) pos = pos && psi_nu(nu, x) > 0.0;
    c.add("bounds.psi_positive", pos, "x in [2, 100] step 0.01, nu in {0.1, 0.5, 1, 5}");
  }
  {
    bool ok = true;
    std::string d;
    for (double nu : {0.1, 0.3, 0.5, 1.0, 2.0, 4.0})
      for (double r = 0.0; r < 0.99; r += 0.01)
        if (!(h_nu_radial(nu, r + 0.01) > h_nu_radial(nu, r))) {
          ok = false;
          d = fmt("not increasing in r at nu=%g r=%g", nu, r);
        }
    for (double r : {0.1, 0.5, 0.9, 0.99})
      for (double nu = 0.1; nu < 4.0; nu += 0.1)
        if (!(h_nu_radial(nu + 0.1, r) > h_nu_radial(nu, r))) {
          ok = false;
          d = fmt("not increasing in nu at nu=%g r=%g", nu, r);
        }
    c.add("bounds.h_nu_monotone", ok, ok ? std::string("grids r step 0.01, nu step 0.1") : d);
    const double want = -std::log(0.1);
    const double lo = h_nu_radial(0.5 - 1e-7, 0.9);
    const double hi = h_nu_radial(0.5 + 1e-7, 0.9);
    c.add("bounds.h_nu_half_limit", std::abs(lo - want) <= 1e-5 && std::abs(hi - want) <= 1e-5,
          fmt("h(1/2-1e-7)=%.15g h(1/2+1e-7)=%.15g -log(0.1)=%.15g", lo, hi, want));
  }
  {
    bool ok = true;
    std::string d;
    for (double nu : {0.5, 2.0})
      for (int n : {2, 5, 50}) {
        const BoundContext ctx{nu, 1.7, 0.2};
        const double inter = coeff_bound_at_radius(ctx, n, coeff_bound_optimal_radius(nu, n));
        const double rearranged = coeff_bound(ctx, n) * phi_nu(nu, n) / std::exp(nu + 0.5);
        const bool this_ok = std::abs(inter - rearranged) <= 1e-10 * rearranged && rearranged <= coeff_bound(ctx, n);
        if (!this_ok) {
          ok = false;
          d += fmt("nu=%g n=%d inter=%.15g rearranged=%.15g ", nu, n, inter, rearranged);
        }
      }
    c.add("bounds.coeff_optimal_radius", ok, ok ? std::string("nu in {0.5, 2}, n in {2, 5, 50}") : d);
  }

  // Parseval: series side uses the generator, quadrature side the closed-form h'.
  const std::vector<NamedMap> pmaps = {{"h_nu(1)", make_h_nu(1.0, 512)},
                                       {"f_nu_t(1,0.5)", make_f_nu_t(1.0, 0.5, 512)},
                                       {"thm6(2)", make_thm6_extremal(2.0, 512)},
                                       {"example53(0.7)", make_example53(0.7, 512)},
                                       {"thm33(1,0.3)", make_thm33_family(1.0, cplx{0.3, 0.0}, 512)}};
  for (const auto& [label, f] : pmaps)
    for (double r : {0.3, 0.7, 0.9}) {
      const std::string name = fmt("bounds.parseval.%s.r=%g", label.c_str(), r);
      c.guarded(name, [&] {
        const int order = 512;
        double worst = 0.0;
        std::string d;
        for (int part = 0; part < 2; ++part) {
          const TruncatedSeries s = part == 0 ? f.series_h(order) : f.series_g(order);
          const ComplexFn& d1 = part == 0 ? f.h.d1 : f.g.d1;
          double series = 0.0;
          double r2n = 1.0;  // r^{2(n-1)}
          for (int n = 1; n <= s.order(); ++n) {
            series += static_cast<double>(n) * n * std::norm(s[n]) * r2n;
            r2n *= r * r;
          }
          const double quad = circle_mean([&](cplx z) { return std::norm(d1(z)); }, r, 4 * order);
          const double rel = std::abs(series - quad) / std::max(1.0, std::abs(quad));
          worst = std::max(worst, rel);
          d += fmt("%s: series=%.15g quad=%.15g ", part == 0 ? "h" : "g", series, quad);
        }
        c.add(name, worst <= 1e-8, d);
      });
    }
  return std::move(c.results());
}

// ---------------------------------------------------------------- bohr

std::vector<CheckResult> bohr_suite(const VerifyOptions& o) {
  Collector c;
  const double r1_want[] = {0.779697, 0.614883, 0.546679, 0.503190, 0.471528, 0.446818, 0.426678};
  const double r2_want[] = {0.586028, 0.553567, 0.522089, 0.492552, 0.465403, 0.440723};

  c.guarded("bohr.table", [&] {
    const auto t0 = std::chrono::steady_clock::now();
    const auto rows = emit_table();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (int k = 0; k < 6; ++k) {
      c.add(fmt("bohr.table.r1.nu=%g", 0.5 * k), std::abs(rows[k].r1_left - r1_want[k]) <= 1e-5,
            fmt("solved=%.12g table=%.6f", rows[k].r1_left, r1_want[k]));
      c.add(fmt("bohr.table.r2.k=%d", k), std::abs(rows[k].r2 - r2_want[k]) <= 1e-5,
            fmt("solved=%.12g table=%.6f", rows[k].r2, r2_want[k]));
    }
    c.add("bohr.table.r1.nu=3", std::abs(rows[5].r1_right - r1_want[6]) <= 1e-5,
          fmt("solved=%.12g table=%.6f", rows[5].r1_right, r1_want[6]));
    c.add("bohr.table.runtime", secs < 1.0, fmt("seconds=%.4f", secs));
  });

  c.guarded("bohr.closed_form", [&] {
    const double pi2 = kPi * kPi;
    const double half = solve(BohrEquation::e5(0.5)).root;
    const double half_want = std::sqrt(6.0 / (6.0 + pi2));
    c.add("bohr.closed_form.e5.nu=0.5", std::abs(half - half_want) <= 1e-10,
          fmt("solved=%.15g closed=%.15g", half, half_want));
    const double one = solve(BohrEquation::e5(1.0)).root;
    const double a = 12.0 + pi2;
    const double one_want = std::sqrt((a - std::sqrt(a * a - 144.0)) / 12.0);
    c.add("bohr.closed_form.e5.nu=1", std::abs(one - one_want) <= 1e-10,
          fmt("solved=%.15g closed=%.15g", one, one_want));
    const double zero = solve(BohrEquation::e5(1e-12)).root;
    const double zero_want = std::sqrt(6.0) / kPi;
    c.add("bohr.closed_form.e5.nu=1e-12", std::abs(zero - zero_want) <= 1e-9,
          fmt("solved=%.15g sqrt(6)/pi=%.15g", zero, zero_want));
  });

  c.guarded("bohr.r3_crossing", [&] {
    const double nu = r3_crossing();
    c.add("bohr.r3_crossing", std::abs(nu - 5.772240) <= 1e-3 && r3(2.0) == kR3Cap,
          fmt("crossing=%.9f r3(2)=%.9f", nu, r3(2.0)));
  });

  c.guarded("bohr.e9_matches_e5", [&] {
    double worst = 0.0;
    for (double nu : {0.25, 0.5, 1.0, 2.0, 3.0})
      worst = std::max(worst, std::abs(solve(BohrEquation::e9(nu, 2.0)).root - solve(BohrEquation::e5(nu)).root));
    c.add("bohr.e9_matches_e5", worst <= 1e-12, fmt("max |E9(nu,2) - E5(nu)|=%.3e", worst));
  });

  c.guarded("bohr.t8_reduction", [&] {
    // w0 = 0: T8A = E9 / 2 with the weight (1 - r^2) restored; T8B = T7B with F_{k+1} and 2 M_p.
    double worst = 0.0;
    for (double r = 0.05; r < 1.0; r += 0.05) {
      const double a = equation_lhs(BohrEquation::t8a(1.0, 1.0, 0.0), r);
      const double want_a = 3.0 * std::pow(1.0 - r * r, 3.0) - big_M_p(1.0) * kPi * kPi * r * r;
      const double b = equation_lhs(BohrEquation::t8b(2, 1.0, 0.0), r);
      const double want_b = (1.0 - r) - 2.0 * big_M_p(1.0) * r * eval_F_k(3, r);
      worst = std::max({worst, std::abs(a - want_a) / (1.0 + std::abs(want_a)),
                        std::abs(b - want_b) / (1.0 + std::abs(want_b))});
    }
    c.add("bohr.t8_reduction", worst <= 1e-14, fmt("max rel deviation=%.3e", worst));
  });

  c.guarded("bohr.r1_monotone", [&] {
    bool ok = true;
    double prev = r1(0.1);
    for (int i = 2; i <= 30; ++i) {
      const double cur = r1(0.1 * i);
      ok = ok && cur < prev;
      prev = cur;
    }
    c.add("bohr.r1_monotone", ok, "nu = 0.1, 0.2, ..., 3");
  });

  c.guarded("bohr.single_sign_change", [&] {
    std::vector<BohrEquation> eqs;
    for (int k = 0; k <= 6; ++k) {
      eqs.push_back(BohrEquation::e5(0.5 * k));
      eqs.push_back(BohrEquation::e6(k));
    }
    eqs.push_back(BohrEquation::t8a(1.0, 1.0, 0.5));
    eqs.push_back(BohrEquation::t8b(1, 1.0, 0.5));
    eqs.push_back(BohrEquation::t7b(1, 1.0));
    bool ok = true;
    std::string d;
    for (const auto& eq : eqs) {
      int changes = 0;
      double prev = equation_lhs(eq, 1e-4);
      for (int i = 2; i < 10000; ++i) {
        const double cur = equation_lhs(eq, i * 1e-4);
        if ((prev > 0.0) != (cur > 0.0)) ++changes;
        prev = cur;
      }
      if (changes != 1) {
        ok = false;
        d += to_string(eq.kind) + fmt("(nu=%g,k=%d) changes=%d ", eq.nu, eq.k, changes);
      }
    }
    c.add("bohr.single_sign_change", ok, ok ? std::string("10^4-point grid, all table equations") : d);
  });

  c.guarded("bohr.F_k", [&] {
    const double f1 = eval_F_k(1, 1.0 - std::exp(-1.0));
    const double f0 = eval_F_k(0, 0.5);
    const double f0_want = kPi * kPi / 12.0 - 0.5 * std::log(2.0) * std::log(2.0);
    const double f2 = eval_F_k(2, 0.5);
    c.add("bohr.F_k.values",
          std::abs(f1 - 1.0) <= 1e-14 && std::abs(f0 - f0_want) <= 1e-14 &&
              std::abs(f2 - 0.5 * (std::log(2.0) + 1.0)) <= 1e-14,
          fmt("F1(1-1/e)=%.15g F0(0.5)=%.15g F2(0.5)=%.15g", f1, f0, f2));
    // Reflection branch vs raw series, both sides of the 0.9 switch.
    double series = 0.0;
    double rn = 1.0;
    for (int n = 1; n < 2000; ++n) {
      rn *= 0.9 + 1e-12;
      series += rn / (static_cast<double>(n) * n);
    }
    const double refl = eval_F_k(0, 0.9 + 1e-12);
    c.add("bohr.F_k.reflection", std::abs(refl - series) <= 1e-13, fmt("reflection=%.16g series=%.16g", refl, series));
    // F_k(r) = int_0^r (1/k) sum_{j=1}^{k} (1 - s)^{-j} ds.
    double worst = 0.0;
    for (int k = 2; k <= 6; ++k)
      for (double r = 0.0; r <= 0.99 + 1e-12; r += 0.033) {
        const double q = integrate(
            [k](double s) {
              double v = 0.0;
              for (int j = 1; j <= k; ++j) v += std::pow(1.0 - s, -j);
              return v / k;
            },
            0.0, r, 1e-11);
        worst = std::max(worst, std::abs(q - eval_F_k(k, r)) / std::max(1.0, std::abs(q)));
      }
    c.add("bohr.F_k.integral", worst <= 1e-8, fmt("k=2..6 r in [0, 0.99] max rel deviation=%.3e", worst));
  });

  c.add("bohr.big_M_p", big_M_p(1.0) == 2.0 && big_M_p(2.0) == 1.0 && big_M_p(4.0) == 1.0,
        fmt("M1=%g M2=%g M4=%g", big_M_p(1.0), big_M_p(2.0), big_M_p(4.0)));

  c.guarded("bohr.membership.thm6", [&] {
    const HarmonicMap f = make_thm6_extremal(2.0, kDefaultTruncation);
    const MembershipReport rep = verify_bohr_membership(f, 2.0, 1.0, BohrTheorem::analytic, o.grid);
    c.add("bohr.membership.thm6.nu=2", rep.precondition_ok && rep.holds && std::abs(rep.radius - 0.492552) <= 1e-5,
          fmt("norm=%.12g radius=%.12g sum=%.15g tail=%.3e ", rep.norm, rep.radius, rep.sum.sum,
              rep.sum.tail_bound.value_or(NAN)) +
              rep.precondition_note);
    const double r = r3_formula(2.0);
    const SumResult at = majorant_sum(f.series_h(kDefaultTruncation), r, f.envelope_h);
    c.add("bohr.membership.thm6.nu=2.r3_radius", std::abs(at.sum - 1.0) <= 1e-8,
          fmt("r=%.15g sum=%.15g tail=%.3e", r, at.sum, at.tail_bound.value_or(NAN)));
  });

  for (double p : {1.0, 2.0}) {
    const std::string name = fmt("bohr.membership.example53.t=0.7.p=%g", p);
    c.guarded(name, [&] {
      const MembershipReport rep =
          verify_bohr_membership(make_example53(0.7, kDefaultTruncation), 1.0, p, BohrTheorem::jacobian, o.grid);
      c.add(name, rep.precondition_ok && rep.holds,
            fmt("norm=%.12g w0=%.12g radius=%.12g sum=%.15g tail=%.3e ", rep.norm, rep.omega0, rep.radius,
                rep.sum.sum, rep.sum.tail_bound.value_or(NAN)) +
                rep.precondition_note);
    });
  }

  c.guarded("bohr.membership.constant", [&] {
    const HarmonicMap f = make_constant(1.0);
    bool ok = true;
    for (double r : {0.0, 0.3, 0.9}) ok = ok && majorant_sum(f.series_h(64), r).sum == 1.0;
    c.add("bohr.membership.constant", ok, "a0=1, r in {0, 0.3, 0.9}");
  });

  c.guarded("bohr.half_plane", [&] {
    const HarmonicMap f = make_half_plane(kDefaultTruncation);
    bool ok = true;
    std::string d;
    for (double p : {1.0, 2.0})
      for (double r : {1e-3, 0.1, 0.5}) {
        const SumResult sr = p_bohr_sum(f.series_h(kDefaultTruncation), f.series_g(kDefaultTruncation), p, r);
        ok = ok && sr.sum > 1.0;
        d += fmt("p=%g r=%g sum=%.12g ", p, r, sr.sum);
      }
    c.add("bohr.half_plane", ok, d);
  });
  return std::move(c.results());
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {"invariance", "inclusions", "bounds", "bohr", "all"};
  return names;
}

std::vector<NamedMap> representative_maps(int order) {
  return {
      {"identity", make_identity()},
      {"constant", make_constant(cplx{0.5, -0.25})},
      {"h_nu(1)", make_h_nu(1.0, order)},
      {"f_nu_t(1,0.5)", make_f_nu_t(1.0, 0.5, order)},
      {"example22(4,1)", make_example22(4.0, 1.0, order)},
      {"example22_F(4,1)", make_example22_sum(4.0, 1.0, order)},
      {"exp_cayley", make_exp_cayley()},
      {"example32(0.3)", make_example32(0.3)},
      {"example32_H", make_example32_outer()},
      {"remark34(1)", make_remark34(1)},
      {"remark34(2)", make_remark34(2)},
      {"thm33(1,0.3+0.2i)", make_thm33_family(1.0, cplx{0.3, 0.2}, order)},
      {"thm6(2)", make_thm6_extremal(2.0, order)},
      {"example53(0.7)", make_example53(0.7, order)},
      {"half_plane", make_half_plane(order)},
  };
}

std::vector<CheckResult> run_suite(const std::string& suite, const VerifyOptions& opts) {
  opts.grid.validate();
  if (opts.samples < 1) throw DomainError("verify: samples must be >= 1");
  std::vector<CheckResult> out;
  auto append = [&](std::vector<CheckResult> r) { out.insert(out.end(), r.begin(), r.end()); };
  if (suite == "invariance" || suite == "all") append(invariance_suite(opts));
  if (suite == "inclusions" || suite == "all") append(inclusions_suite(opts));
  if (suite == "bounds" || suite == "all") append(bounds_suite(opts));
  if (suite == "bohr" || suite == "all") append(bohr_suite(opts));
  if (std::find(verify_suite_names().begin(), verify_suite_names().end(), suite) == verify_suite_names().end())
    throw DomainError("unknown suite '" + suite + "' (expected invariance, inclusions, bounds, bohr or all)");
  std::stable_sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return out;
}

}  // namespace hbloch
