#pragma once

#include <string>
#include <vector>

#include <optional>

#include "hbloch/bounds.hpp"
#include "hbloch/harmonic_map.hpp"

namespace hbloch {

// Closed-form extremal and counterexample mappings. Constructors validate
// parameters and throw DomainError; evaluators are pure.

HarmonicMap make_identity();
HarmonicMap make_constant(cplx value);

/// Analytic h_nu with h_nu'(z) = (1 - z)^{-(nu + 1/2)}, h_nu(0) = 0.
HarmonicMap make_h_nu(double nu, int order = kDefaultTruncation);

/// f_{nu,t} = h_nu + conj(g_{nu,t}); dilatation t + (1 - t) z.
HarmonicMap make_f_nu_t(double nu, double t, int order = kDefaultTruncation);

/// f = h + conj(h) (up to an additive constant) with
/// h = (1 - z)^{1-mu}/(mu - 1); requires mu > 2 nu + 1.
HarmonicMap make_example22(double mu, double nu, int order = kDefaultTruncation);
/// F = f + z for the map above.
HarmonicMap make_example22_sum(double mu, double nu, int order = kDefaultTruncation);

/// f = h + conj(h) (up to an additive constant), h = exp((1 + z)/(1 - z)).
HarmonicMap make_exp_cayley();

/// h = log H', g' = e^{i theta} z h', H = exp(sqrt((1 + z)/(1 - z))).
HarmonicMap make_example32(double theta);
/// The analytic map H itself.
HarmonicMap make_example32_outer();

/// which = 1: log(1 - z) + conj(z + log(1 - z)); which = 2: the minus sign.
HarmonicMap make_remark34(int which);

/// h' = ((1 + z)/(1 - z))^{nu/2}, g' = b1 h'.
HarmonicMap make_thm33_family(double nu, cplx b1, int order = kDefaultTruncation);

/// f_nu(z) = ((1 - z^2)^{1-nu} - 1) / (2 (nu - 1)), nu > 1.
HarmonicMap make_thm6_extremal(double nu, int order = kDefaultTruncation);

/// f_t = h_t + conj(g_t), t in [1/2, 1).
HarmonicMap make_example53(double t, int order = kDefaultTruncation);

/// 1/(1 - z) + conj(z/(1 - z)).
HarmonicMap make_half_plane(int order = kDefaultTruncation);

/// One catalog parameter in the published listing.
struct ParamSpec {
  std::string name;
  std::string type;  // "real", "complex" or "integer"
  std::string constraint;
  std::string fallback;  // default used by the CLI, empty if required
};

struct CatalogEntry {
  std::string name;
  std::string description;
  std::vector<ParamSpec> params;
  bool has_series;
};

const std::vector<CatalogEntry>& catalog_entries();

/// Builds a catalog entry by name; unused parameters are ignored, missing
/// ones fall back to the listed defaults. Unknown names throw DomainError.
HarmonicMap make_by_name(const std::string& name, const MapParams& params,
                         int order = kDefaultTruncation);

/// Closed-form upper bound for beta*_nu of a catalog entry together with the
/// exponent nu it refers to and |omega(0)|. Empty for entries that are not
/// sense-preserving or not in any B*_H(nu).
std::optional<BoundContext> proven_beta_star(const std::string& name, const MapParams& params);

/// Bound |c_n| <= C (n+1)^s for the Taylor coefficients of (1 - z)^{-alpha}, alpha > 0.
CoefficientEnvelope negative_binomial_envelope(double alpha);

}  // namespace hbloch
