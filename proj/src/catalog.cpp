#include "hbloch/catalog.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hbloch/complex_util.hpp"
#include "hbloch/errors.hpp"
#include "hbloch/quadrature.hpp"

namespace hbloch {

namespace {

constexpr cplx kOne{1.0, 0.0};

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

void require_order(int order) { require(order >= 0, "series order must be >= 0"); }

/// Log(1 + z) - Log(1 - z), i.e. log((1 + z)/(1 - z)) on the principal branch.
cplx log_cayley(cplx z) { return std::log(1.0 + z) - std::log(1.0 - z); }

/// (1 + z)^a: coefficients of (1 - (-z))^a.
TruncatedSeries one_plus_z_power(double a, int order) {
  return substitute_scaled(binomial_series(a, order), -1.0);
}

/// Odd part series of (1/2) log((1 + z)/(1 - z)).
TruncatedSeries artanh_series(int order) {
  const auto L = log_one_minus_z_series(order);
  return series_scale(series_sub(L, substitute_scaled(L, -1.0)), 0.5);
}

AnalyticPart shifted(const AnalyticPart& p, cplx shift) {
  auto value = p.value;
  return {[value, shift](cplx z) { return value(z) + shift; }, p.d1, p.d2};
}

TruncatedSeries drop_constant(TruncatedSeries s) {
  std::vector<cplx> c(s.coeffs().begin(), s.coeffs().end());
  c[0] = 0.0;
  return TruncatedSeries(std::move(c));
}

/// Analytic part with h' = (1 - z)^{-alpha}, h(0) = 0.
AnalyticPart power_part(double alpha) {
  return {[alpha](cplx z) { return power_primitive(z, alpha); },
          [alpha](cplx z) { return pow_one_minus(z, -alpha); },
          [alpha](cplx z) { return alpha * pow_one_minus(z, -alpha - 1.0); }};
}

}  // namespace

AnalyticPart zero_part() {
  auto zero = [](cplx) { return cplx{0.0, 0.0}; };
  return {zero, zero, zero};
}

CoefficientEnvelope negative_binomial_envelope(double alpha) {
  // (alpha)_n / n! = prod_{i<=n} (1 + (alpha - 1)/i) <= exp((alpha - 1) H_n) for alpha >= 1.
  if (alpha >= 1.0) return {std::exp(alpha - 1.0), alpha - 1.0};
  return {1.0, 0.0};
}

HarmonicMap make_identity() {
  HarmonicMap f;
  f.name = "identity";
  f.h = {[](cplx z) { return z; }, [](cplx) { return kOne; }, [](cplx) { return cplx{0.0, 0.0}; }};
  f.g = zero_part();
  f.series_h = [](int n) { return TruncatedSeries::identity(n); };
  f.series_g = [](int n) { return TruncatedSeries::zero(n); };
  f.envelope_h = CoefficientEnvelope{1.0, 0.0};
  f.envelope_g = CoefficientEnvelope{0.0, 0.0};
  return f;
}

HarmonicMap make_constant(cplx value) {
  HarmonicMap f;
  f.name = "constant";
  f.params.a = value;
  auto zero = [](cplx) { return cplx{0.0, 0.0}; };
  f.h = {[value](cplx) { return value; }, zero, zero};
  f.g = zero_part();
  f.series_h = [value](int n) {
    auto s = TruncatedSeries::zero(n);
    return series_add(s, series_scale(TruncatedSeries::unit(n), value));
  };
  f.series_g = [](int n) { return TruncatedSeries::zero(n); };
  f.envelope_h = CoefficientEnvelope{0.0, 0.0};
  f.envelope_g = CoefficientEnvelope{0.0, 0.0};
  return f;
}

HarmonicMap make_h_nu(double nu, int order) {
  require(nu > 0.0, "h_nu: nu must be > 0");
  require_order(order);
  const double alpha = nu + 0.5;
  HarmonicMap f;
  f.name = "h_nu";
  f.params.nu = nu;
  f.h = power_part(alpha);
  f.g = zero_part();
  f.series_h = [alpha](int n) {
    return series_antiderivative(binomial_series(-alpha, std::max(n - 1, 0)));
  };
  f.series_g = [](int n) { return TruncatedSeries::zero(n); };
  f.envelope_h = negative_binomial_envelope(alpha);
  f.envelope_g = CoefficientEnvelope{0.0, 0.0};
  return f;
}

HarmonicMap make_f_nu_t(double nu, double t, int order) {
  require(nu > 0.0, "f_nu_t: nu must be > 0");
  require(t >= 0.0 && t < 1.0, "f_nu_t: t must lie in [0, 1)");
  require_order(order);
  HarmonicMap f = make_h_nu(nu, order);
  f.name = "f_nu_t";
  f.params.t = t;
  const double alpha = nu + 0.5;
  const double s = 1.0 - t;
  // g' = (t + (1 - t) z)(1 - z)^{-alpha} = (1 - z)^{-alpha} - (1 - t)(1 - z)^{1-alpha}.
  f.g = {[alpha, s](cplx z) { return power_primitive(z, alpha) - s * power_primitive(z, alpha - 1.0); },
         [alpha, t, s](cplx z) { return (t + s * z) * pow_one_minus(z, -alpha); },
         [alpha, t, s](cplx z) {
           return s * pow_one_minus(z, -alpha) + (t + s * z) * alpha * pow_one_minus(z, -alpha - 1.0);
         }};
  f.series_g = [alpha, s](int n) {
    const int m = std::max(n - 1, 0);
    return series_antiderivative(
        series_sub(binomial_series(-alpha, m), series_scale(binomial_series(1.0 - alpha, m), s)));
  };
  f.envelope_g.reset();
  return f;
}

HarmonicMap make_example22(double mu, double nu, int order) {
  require(nu > 0.0, "example22: nu must be > 0");
  require(mu > 2.0 * nu + 1.0, "example22: requires mu > 2 nu + 1");
  require_order(order);
  HarmonicMap f;
  f.name = "example22";
  f.params.mu = mu;
  f.params.nu = nu;
  const cplx h0 = 1.0 / (mu - 1.0);
  f.h = {[mu](cplx z) { return pow_one_minus(z, 1.0 - mu) / (mu - 1.0); },
         [mu](cplx z) { return pow_one_minus(z, -mu); },
         [mu](cplx z) { return mu * pow_one_minus(z, -mu - 1.0); }};
  // f = h + conj(h) - conj(h(0)); the constant keeps g(0) = 0.
  f.g = shifted(f.h, -h0);
  f.jacobian = [](cplx) { return 0.0; };
  f.series_h = [mu](int n) { return series_scale(binomial_series(1.0 - mu, n), 1.0 / (mu - 1.0)); };
  f.series_g = [mu](int n) {
    return drop_constant(series_scale(binomial_series(1.0 - mu, n), 1.0 / (mu - 1.0)));
  };
  f.envelope_h = negative_binomial_envelope(mu - 1.0);
  f.envelope_h->scale /= (mu - 1.0);
  f.envelope_g = f.envelope_h;
  return f;
}

HarmonicMap make_example22_sum(double mu, double nu, int order) {
  HarmonicMap f = make_example22(mu, nu, order);
  f.name = "example22_F";
  const AnalyticPart h = f.h;
  f.h = {[v = h.value](cplx z) { return v(z) + z; }, [d = h.d1](cplx z) { return d(z) + 1.0; }, h.d2};
  // |h' + 1|^2 - |h'|^2 = 1 + 2 Re h'.
  f.jacobian = [mu](cplx z) { return 1.0 + 2.0 * pow_one_minus(z, -mu).real(); };
  auto base = f.series_h;
  f.series_h = [base](int n) { return series_add(base(n), TruncatedSeries::identity(n)); };
  f.envelope_h->scale += 1.0;
  return f;
}

HarmonicMap make_exp_cayley() {
  HarmonicMap f;
  f.name = "exp_cayley";
  auto value = [](cplx z) { return std::exp((1.0 + z) / (1.0 - z)); };
  f.h = {value,
         [value](cplx z) {
           const cplx w = 1.0 - z;
           return 2.0 * value(z) / (w * w);
         },
         [value](cplx z) {
           const cplx w = 1.0 - z;
           return 4.0 * value(z) * (2.0 - z) / (w * w * w * w);
         }};
  f.g = shifted(f.h, -std::numbers::e);
  f.jacobian = [](cplx) { return 0.0; };
  return f;
}

namespace {

/// sqrt((1 + z)/(1 - z)) with q(0) = 1.
cplx cayley_sqrt(cplx z) { return std::exp(0.5 * log_cayley(z)); }

/// log H' for H = exp(q): q - (3/2) Log(1 - z) - (1/2) Log(1 + z).
cplx log_outer_derivative(cplx z) {
  return cayley_sqrt(z) - 1.5 * std::log(1.0 - z) - 0.5 * std::log(1.0 + z);
}

/// H''/H' = ((1 + 2z) sqrt(1 - z) + sqrt(1 + z)) / ((1 - z^2) sqrt(1 - z)).
cplx outer_pre_schwarzian(cplx z) { return (1.0 + 2.0 * z + cayley_sqrt(z)) / (1.0 - z * z); }

cplx outer_pre_schwarzian_prime(cplx z) {
  const cplx w = 1.0 - z * z;
  return (2.0 + 2.0 * z + 2.0 * z * z + cayley_sqrt(z) * (1.0 + 2.0 * z)) / (w * w);
}

}  // namespace

HarmonicMap make_example32(double theta) {
  require(std::isfinite(theta), "example32: theta must be finite");
  HarmonicMap f;
  f.name = "example32";
  f.params.theta = theta;
  f.h = {log_outer_derivative, outer_pre_schwarzian, outer_pre_schwarzian_prime};
  const cplx rot = std::polar(1.0, theta);
  auto gp = [rot](cplx z) { return rot * z * outer_pre_schwarzian(z); };
  f.g = {[gp](cplx z) { return radial_primitive(gp, z); }, gp,
         [rot](cplx z) { return rot * (outer_pre_schwarzian(z) + z * outer_pre_schwarzian_prime(z)); }};
  return f;
}

HarmonicMap make_example32_outer() {
  HarmonicMap f;
  f.name = "example32_H";
  f.h = {[](cplx z) { return std::exp(cayley_sqrt(z)); },
         [](cplx z) { return std::exp(log_outer_derivative(z)); },
         [](cplx z) { return std::exp(log_outer_derivative(z)) * outer_pre_schwarzian(z); }};
  f.g = zero_part();
  f.h_log_derivative = outer_pre_schwarzian;
  f.jacobian = [](cplx z) { return std::exp(2.0 * log_outer_derivative(z).real()); };
  return f;
}

HarmonicMap make_remark34(int which) {
  require(which == 1 || which == 2, "remark34: which must be 1 or 2");
  const double sign = which == 1 ? 1.0 : -1.0;
  HarmonicMap f;
  f.name = "remark34";
  f.params.which = which;
  f.h = {[](cplx z) { return std::log(1.0 - z); }, [](cplx z) { return -1.0 / (1.0 - z); },
         [](cplx z) { return -1.0 / ((1.0 - z) * (1.0 - z)); }};
  f.g = {[sign](cplx z) { return sign * (z + std::log(1.0 - z)); },
         [sign](cplx z) { return -sign * z / (1.0 - z); },
         [sign](cplx z) { return -sign / ((1.0 - z) * (1.0 - z)); }};
  f.series_h = [](int n) { return series_scale(log_one_minus_z_series(n), -1.0); };
  f.series_g = [sign](int n) {
    return series_scale(series_sub(TruncatedSeries::identity(n), log_one_minus_z_series(n)), sign);
  };
  f.envelope_h = CoefficientEnvelope{1.0, 0.0};
  f.envelope_g = CoefficientEnvelope{1.0, 0.0};
  return f;
}

HarmonicMap make_thm33_family(double nu, cplx b1, int order) {
  require(nu > 0.0, "thm33: nu must be > 0");
  require(std::abs(b1) < 1.0, "thm33: |b1| must be < 1");
  require_order(order);
  HarmonicMap f;
  f.name = "thm33";
  f.params.nu = nu;
  f.params.b1 = b1;
  auto hp = [nu](cplx z) { return std::exp(0.5 * nu * log_cayley(z)); };
  auto hpp = [nu, hp](cplx z) { return hp(z) * nu / (1.0 - z * z); };
  f.h = {[hp](cplx z) { return radial_primitive(hp, z); }, hp, hpp};
  f.g = {[hp, b1](cplx z) { return b1 * radial_primitive(hp, z); },
         [hp, b1](cplx z) { return b1 * hp(z); }, [hpp, b1](cplx z) { return b1 * hpp(z); }};
  f.series_h = [nu](int n) {
    const int m = std::max(n - 1, 0);
    return series_antiderivative(series_mul(one_plus_z_power(0.5 * nu, m), binomial_series(-0.5 * nu, m)));
  };
  auto sh = f.series_h;
  f.series_g = [sh, b1](int n) { return series_scale(sh(n), b1); };
  return f;
}

HarmonicMap make_thm6_extremal(double nu, int order) {
  require(nu > 1.0, "thm6: nu must be > 1");
  require_order(order);
  HarmonicMap f;
  f.name = "thm6";
  f.params.nu = nu;
  f.h = {[nu](cplx z) { return 0.5 * power_primitive(z * z, nu); },
         [nu](cplx z) { return z * pow_one_minus(z * z, -nu); },
         [nu](cplx z) {
           const cplx w = z * z;
           return pow_one_minus(w, -nu) + 2.0 * nu * w * pow_one_minus(w, -nu - 1.0);
         }};
  f.g = zero_part();
  f.series_h = [nu](int n) {
    const auto base = series_scale(series_sub(binomial_series(1.0 - nu, (n + 1) / 2),
                                              TruncatedSeries::unit((n + 1) / 2)),
                                   1.0 / (2.0 * (nu - 1.0)));
    return substitute_z_squared(base, n);
  };
  f.series_g = [](int n) { return TruncatedSeries::zero(n); };
  auto env = negative_binomial_envelope(nu - 1.0);
  env.scale /= 2.0 * (nu - 1.0);
  f.envelope_h = env;
  f.envelope_g = CoefficientEnvelope{0.0, 0.0};
  return f;
}

HarmonicMap make_example53(double t, int order) {
  require(t >= 0.5 && t < 1.0, "example53: t must lie in [1/2, 1)");
  require_order(order);
  HarmonicMap f;
  f.name = "example53";
  f.params.t = t;
  const double a0 = 1.0 - 2.0 * std::sqrt(t - t * t);
  f.h = {[a0](cplx z) { return a0 + 0.5 * log_cayley(z); }, [](cplx z) { return 1.0 / (1.0 - z * z); },
         [](cplx z) {
           const cplx w = 1.0 - z * z;
           return 2.0 * z / (w * w);
         }};
  // Log(1 - z^2) = Log(1 - z) + Log(1 + z) on the disk.
  f.g = {[t](cplx z) {
           return 0.5 * (t - 1.0) * (std::log(1.0 - z) + std::log(1.0 + z)) + 0.5 * t * log_cayley(z);
         },
         [t](cplx z) { return ((1.0 - t) * z + t) / (1.0 - z * z); },
         [t](cplx z) {
           const cplx w = 1.0 - z * z;
           return ((1.0 - t) * w + 2.0 * z * ((1.0 - t) * z + t)) / (w * w);
         }};
  f.series_h = [a0](int n) {
    return series_add(artanh_series(n), series_scale(TruncatedSeries::unit(n), a0));
  };
  f.series_g = [t](int n) {
    return series_add(series_scale(artanh_series(n), t),
                      series_scale(substitute_z_squared(log_one_minus_z_series((n + 1) / 2), n),
                                   0.5 * (1.0 - t)));
  };
  f.envelope_h = CoefficientEnvelope{1.0, 0.0};
  f.envelope_g = CoefficientEnvelope{1.0, 0.0};
  return f;
}

HarmonicMap make_half_plane(int order) {
  require_order(order);
  HarmonicMap f;
  f.name = "half_plane";
  auto d1 = [](cplx z) { return 1.0 / ((1.0 - z) * (1.0 - z)); };
  auto d2 = [](cplx z) { return 2.0 / ((1.0 - z) * (1.0 - z) * (1.0 - z)); };
  f.h = {[](cplx z) { return 1.0 / (1.0 - z); }, d1, d2};
  f.g = {[](cplx z) { return z / (1.0 - z); }, d1, d2};
  f.jacobian = [](cplx) { return 0.0; };
  f.series_h = [](int n) { return TruncatedSeries::geometric(n); };
  f.series_g = [](int n) { return drop_constant(TruncatedSeries::geometric(n)); };
  f.envelope_h = CoefficientEnvelope{1.0, 0.0};
  f.envelope_g = CoefficientEnvelope{1.0, 0.0};
  return f;
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"identity", "f(z) = z", {}, true},
      {"constant", "f(z) = a", {{"a", "complex", "any", "1"}}, true},
      {"h_nu", "analytic h with h'(z) = (1-z)^{-(nu+1/2)}, h(0) = 0", {{"nu", "real", "> 0", ""}}, true},
      {"f_nu_t",
       "h_nu + conj(g_{nu,t}), dilatation t + (1-t) z",
       {{"nu", "real", "> 0", ""}, {"t", "real", "[0, 1)", "0"}},
       true},
      {"example22",
       "h + conj(h) with h = (1-z)^{1-mu}/(mu-1)",
       {{"mu", "real", "> 2 nu + 1", ""}, {"nu", "real", "> 0", ""}},
       true},
      {"example22_F",
       "example22 + z",
       {{"mu", "real", "> 2 nu + 1", ""}, {"nu", "real", "> 0", ""}},
       true},
      {"exp_cayley", "h + conj(h) with h = exp((1+z)/(1-z))", {}, false},
      {"example32",
       "h = log H', g' = e^{i theta} z h', H = exp(sqrt((1+z)/(1-z)))",
       {{"theta", "real", "any", "0"}},
       false},
      {"example32_H", "analytic H = exp(sqrt((1+z)/(1-z)))", {}, false},
      {"remark34",
       "log(1-z) +/- conj(z + log(1-z))",
       {{"which", "integer", "1 or 2", "1"}},
       true},
      {"thm33",
       "h' = ((1+z)/(1-z))^{nu/2}, g' = b1 h'",
       {{"nu", "real", "> 0", ""}, {"b1", "complex", "|b1| < 1", "0"}},
       true},
      {"thm6", "((1-z^2)^{1-nu} - 1)/(2(nu-1))", {{"nu", "real", "> 1", ""}}, true},
      {"example53",
       "h_t = 1 - 2 sqrt(t-t^2) + artanh z, g_t = ((t-1)/2) log(1-z^2) + t artanh z",
       {{"t", "real", "[1/2, 1)", "0.5"}},
       true},
      {"half_plane", "1/(1-z) + conj(z/(1-z))", {}, true},
  };
  return entries;
}

HarmonicMap make_by_name(const std::string& name, const MapParams& p, int order) {
  auto need = [&](const std::optional<double>& v, const char* what) {
    if (!v) throw DomainError(name + ": parameter '" + what + "' is required");
    return *v;
  };
  if (name == "identity") return make_identity();
  if (name == "constant") return make_constant(p.a.value_or(1.0));
  if (name == "h_nu") return make_h_nu(need(p.nu, "nu"), order);
  if (name == "f_nu_t") return make_f_nu_t(need(p.nu, "nu"), p.t.value_or(0.0), order);
  if (name == "example22") return make_example22(need(p.mu, "mu"), need(p.nu, "nu"), order);
  if (name == "example22_F") return make_example22_sum(need(p.mu, "mu"), need(p.nu, "nu"), order);
  if (name == "exp_cayley") return make_exp_cayley();
  if (name == "example32") return make_example32(p.theta.value_or(0.0));
  if (name == "example32_H") return make_example32_outer();
  if (name == "remark34") return make_remark34(p.which.value_or(1));
  if (name == "thm33") return make_thm33_family(need(p.nu, "nu"), p.b1.value_or(0.0), order);
  if (name == "thm6") return make_thm6_extremal(need(p.nu, "nu"), order);
  if (name == "example53") return make_example53(p.t.value_or(0.5), order);
  if (name == "half_plane") return make_half_plane(order);
  throw DomainError("unknown catalog entry '" + name + "'");
}

std::optional<BoundContext> proven_beta_star(const std::string& name, const MapParams& p) {
  // Each bound is sup (1-|z|^2)^nu sqrt(J) estimated by hand from the closed forms.
  if (name == "identity") return BoundContext{1.0, 1.0, 0.0};
  if (name == "constant") return BoundContext{1.0, 0.0, 0.0};
  if (name == "h_nu" && p.nu) return BoundContext{*p.nu + 0.5, std::pow(2.0, *p.nu + 0.5), 0.0};
  if (name == "f_nu_t" && p.nu) {
    const double t = p.t.value_or(0.0);
    return BoundContext{*p.nu, std::pow(2.0, *p.nu + 0.5) * std::sqrt(1.0 + t), t};
  }
  if (name == "thm33" && p.nu) {
    const double b = std::abs(p.b1.value_or(0.0));
    return BoundContext{0.5 * *p.nu, std::pow(2.0, *p.nu) * std::sqrt(1.0 - b * b), b};
  }
  if (name == "thm6" && p.nu) return BoundContext{*p.nu, 1.0, 0.0};
  if (name == "example53") {
    const double t = p.t.value_or(0.5);
    return BoundContext{1.0, 2.0 * std::sqrt(t - t * t), t};
  }
  if (name == "remark34") return BoundContext{0.5, 2.0, 0.0};
  return std::nullopt;
}

}  // namespace hbloch
