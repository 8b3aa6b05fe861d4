#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hbloch/grid_kernel.hpp"
#include "hbloch/harmonic_map.hpp"
#include "hbloch/series.hpp"

namespace hbloch {

enum class BohrKind { E5, E6, E9, T7B, T8A, T8B };

std::string to_string(BohrKind kind);
/// Parses "E5", "E6", ... (case-insensitive). Throws DomainError.
BohrKind parse_bohr_kind(const std::string& s);

/// One radius equation. Only the fields used by `kind` matter:
///   E5(nu), E6(k), E9(nu, p), T7B(k, p), T8A(nu, p, w0), T8B(k, p, w0).
struct BohrEquation {
  BohrKind kind = BohrKind::E5;
  double nu = 1.0;
  int k = 0;
  double p = 1.0;
  double w0 = 0.0;

  static BohrEquation e5(double nu);
  static BohrEquation e6(int k);
  static BohrEquation e9(double nu, double p);
  static BohrEquation t7b(int k, double p);
  static BohrEquation t8a(double nu, double p, double w0);
  static BohrEquation t8b(int k, double p, double w0);

  /// Throws DomainError on out-of-range parameters. nu = 0 is accepted for
  /// the nu-kinds so the nu -> 0+ limit of r_1 can be evaluated directly.
  void validate() const;
};

struct RootResult {
  double root = 0.0;
  double residual = 0.0;
  double lo = 0.0;
  double hi = 1.0;
  int iterations = 0;
};

/// F_0 = dilogarithm, F_1 = -log(1 - r), and for k >= 2
/// (1/k)[-log(1 - r) + sum_{n<k} ((1 - r)^{-n} - 1)/n].
double eval_F_k(int k, double r);

/// max(2^{2/p - 1}, 1).
double big_M_p(double p);

/// k = ceil(2 nu) - 1, so nu lies in (k/2, (k+1)/2].
int interval_index(double nu);

/// Signed left-hand side: positive as r -> 0+, negative as r -> 1-.
double equation_lhs(const BohrEquation& eq, double r);

/// Bisection on (1e-15, 1 - 1e-15) until the bracket is narrower than tol.
RootResult solve(const BohrEquation& eq, double tol = 1e-14);

double r1(double nu);
double r2(int k);
/// max(r1(nu), r2(ceil(2 nu) - 1)).
double bohr_radius(double nu);
/// max of E9(nu, p) and T7B(k, p).
double harmonic_bohr_radius(double nu, double p);
/// max of T8A(nu, p, w0) and T8B(k, p, w0).
double jacobian_bohr_radius(double nu, double p, double w0);

inline constexpr double kR3Cap = 0.624162;

/// sqrt(1 - (2 nu - 1)^{-1/(nu - 1)}) for nu > 1.
double r3_formula(double nu);
/// nu = 1 -> 0.624162, nu > 1 -> min(0.624162, r3_formula(nu)).
double r3(double nu);
/// Smallest nu > 1 with r3_formula(nu) = level, by bisection.
double r3_crossing(double level = kR3Cap, double tol = 1e-12);

struct SumResult {
  double sum = 0.0;
  /// Certified bound on the omitted terms; empty when no envelope is known.
  std::optional<double> tail_bound;
};

/// sum |c_n| r^n over stored terms, plus the envelope's tail bound.
SumResult majorant_sum(const TruncatedSeries& a, double r,
                       const std::optional<CoefficientEnvelope>& envelope = std::nullopt);

/// |a_0| + sum_{n>=1} (|a_n|^p + |b_n|^p)^{1/p} r^n. The tail is bounded by
/// the sum of both envelopes' tails, since the p-mean never exceeds |a_n| + |b_n|.
SumResult p_bohr_sum(const TruncatedSeries& a, const TruncatedSeries& b, double p, double r,
                     const std::optional<CoefficientEnvelope>& env_a = std::nullopt,
                     const std::optional<CoefficientEnvelope>& env_b = std::nullopt);

enum class BohrTheorem { analytic, harmonic, jacobian };

std::string to_string(BohrTheorem t);

struct MembershipReport {
  BohrTheorem theorem = BohrTheorem::analytic;
  double nu = 0.0;
  double p = 1.0;
  /// |a_0| + seminorm estimate.
  double norm = 0.0;
  double omega0 = 0.0;
  bool precondition_ok = false;
  std::string precondition_note;
  double radius = 0.0;
  SumResult sum;
  /// No envelope: the verdict only covers the stored terms.
  bool caveat = false;
  /// sum <= 1 + tail (meaningful only when precondition_ok).
  bool holds = false;
};

/// Checks ||f|| <= 1 (seminorm ladder plus |a_0|, and J > 0 for the
/// Jacobian theorem), then evaluates the theorem's sum at its radius.
MembershipReport verify_bohr_membership(const HarmonicMap& f, double nu, double p, BohrTheorem theorem,
                                        const GridConfig& cfg = {}, int order = kDefaultTruncation);

/// Same checks, sum evaluated at an explicit radius.
MembershipReport verify_bohr_membership_at(const HarmonicMap& f, double nu, double p, BohrTheorem theorem,
                                           double radius, const GridConfig& cfg = {},
                                           int order = kDefaultTruncation);

struct TableRow {
  int k = 0;
  double nu_left = 0.0;
  double nu_right = 0.0;
  double r1_left = 0.0;
  double r1_right = 0.0;
  double r2 = 0.0;
  double r_left = 0.0;
  double r_right = 0.0;
  /// nu inside the interval where r1(nu) = r2(k), if the max switches there.
  std::optional<double> nu_switch;
};

/// Six rows for nu in (0, 1/2], ..., (5/2, 3]. Row k = 0 uses the nu -> 0+ limit.
std::vector<TableRow> emit_table(bool dense = false);

/// CSV with 6 decimals: interval,r1_left,r1_right,r2,r_left,r_right[,nu_switch].
std::string table_csv(const std::vector<TableRow>& rows, bool dense = false);
/// JSON array of row objects, same fields and precision.
std::string table_json(const std::vector<TableRow>& rows, bool dense = false);

}  // namespace hbloch
