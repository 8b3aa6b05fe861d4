#include "hbloch/bohr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "json.hpp"

#include "hbloch/errors.hpp"
#include "hbloch/seminorm.hpp"

namespace hbloch {

namespace {

constexpr double kPi2 = std::numbers::pi * std::numbers::pi;
constexpr double kEdge = 1e-15;

double dilog_series(double r) {
  double sum = 0.0;
  double rn = r;
  for (int n = 1; n < 100000; ++n) {
    const double term = rn / (static_cast<double>(n) * n);
    sum += term;
    if (term < 1e-17) break;
    rn *= r;
  }
  return sum;
}

double dilog(double r) {
  if (r <= 0.9) return dilog_series(r);
  // Li2(r) = pi^2/6 - log(r) log(1 - r) - Li2(1 - r)
  return kPi2 / 6.0 - std::log(r) * std::log1p(-r) - dilog_series(1.0 - r);
}

void require_nu(double nu, const char* who) {
  if (!(nu >= 0.0) || !std::isfinite(nu)) throw DomainError(std::string(who) + ": nu must be >= 0");
}
void require_k(int k, const char* who) {
  if (k < 0) throw DomainError(std::string(who) + ": k must be >= 0");
}
void require_p(double p, const char* who) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError(std::string(who) + ": p must be >= 1");
}
void require_w0(double w0, const char* who) {
  if (!(w0 >= 0.0 && w0 < 1.0)) throw DomainError(std::string(who) + ": w0 must lie in [0, 1)");
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string interval_label(int k) {
  static const char* kLabels[] = {"0", "1/2", "1", "3/2", "2", "5/2", "3"};
  return std::string("(") + kLabels[k] + "," + kLabels[k + 1] + "]";
}

}  // namespace

std::string to_string(BohrKind kind) {
  switch (kind) {
    case BohrKind::E5: return "E5";
    case BohrKind::E6: return "E6";
    case BohrKind::E9: return "E9";
    case BohrKind::T7B: return "T7B";
    case BohrKind::T8A: return "T8A";
    case BohrKind::T8B: return "T8B";
  }
  return "?";
}

BohrKind parse_bohr_kind(const std::string& s) {
  std::string u;
  for (char c : s) u.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  for (BohrKind k : {BohrKind::E5, BohrKind::E6, BohrKind::E9, BohrKind::T7B, BohrKind::T8A, BohrKind::T8B})
    if (to_string(k) == u) return k;
  throw DomainError("unknown equation kind '" + s + "' (expected E5, E6, E9, T7B, T8A or T8B)");
}

BohrEquation BohrEquation::e5(double nu) { return {BohrKind::E5, nu, 0, 1.0, 0.0}; }
BohrEquation BohrEquation::e6(int k) { return {BohrKind::E6, 0.0, k, 1.0, 0.0}; }
BohrEquation BohrEquation::e9(double nu, double p) { return {BohrKind::E9, nu, 0, p, 0.0}; }
BohrEquation BohrEquation::t7b(int k, double p) { return {BohrKind::T7B, 0.0, k, p, 0.0}; }
BohrEquation BohrEquation::t8a(double nu, double p, double w0) { return {BohrKind::T8A, nu, 0, p, w0}; }
BohrEquation BohrEquation::t8b(int k, double p, double w0) { return {BohrKind::T8B, 0.0, k, p, w0}; }

void BohrEquation::validate() const {
  switch (kind) {
    case BohrKind::E5: require_nu(nu, "E5"); break;
    case BohrKind::E6: require_k(k, "E6"); break;
    case BohrKind::E9: require_nu(nu, "E9"); require_p(p, "E9"); break;
    case BohrKind::T7B: require_k(k, "T7B"); require_p(p, "T7B"); break;
    case BohrKind::T8A: require_nu(nu, "T8A"); require_p(p, "T8A"); require_w0(w0, "T8A"); break;
    case BohrKind::T8B: require_k(k, "T8B"); require_p(p, "T8B"); require_w0(w0, "T8B"); break;
  }
}

double eval_F_k(int k, double r) {
  require_k(k, "eval_F_k");
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("eval_F_k: r must lie in [0, 1)");
  if (k == 0) return dilog(r);
  const double L = -std::log1p(-r);
  if (k == 1) return L;
  double sum = L;
  for (int n = 1; n < k; ++n) sum += std::expm1(n * L) / n;
  return sum / k;
}

double big_M_p(double p) {
  require_p(p, "big_M_p");
  return std::max(std::exp2(2.0 / p - 1.0), 1.0);
}

int interval_index(double nu) {
  if (!(nu > 0.0)) throw DomainError("interval_index: nu must be > 0");
  return static_cast<int>(std::ceil(2.0 * nu)) - 1;
}

double equation_lhs(const BohrEquation& eq, double r) {
  eq.validate();
  if (!(r > 0.0 && r < 1.0)) throw DomainError("equation_lhs: r must lie in (0, 1)");
  const double one_minus_r2 = (1.0 - r) * (1.0 + r);
  switch (eq.kind) {
    case BohrKind::E5:
      return 6.0 * std::pow(one_minus_r2, 2.0 * eq.nu) - kPi2 * r * r;
    case BohrKind::E6:
      return 1.0 - r - r * eval_F_k(eq.k, r);
    case BohrKind::E9:
      return 6.0 * std::pow(one_minus_r2, 2.0 * eq.nu) - big_M_p(eq.p) * kPi2 * r * r;
    case BohrKind::T7B:
      return 1.0 - r - big_M_p(eq.p) * r * eval_F_k(eq.k, r);
    case BohrKind::T8A:
      return 3.0 * (1.0 - eq.w0) * std::pow(one_minus_r2, 2.0 * eq.nu + 1.0) -
             big_M_p(eq.p) * kPi2 * (1.0 + eq.w0) * r * r;
    case BohrKind::T8B:
      return (1.0 - eq.w0) * (1.0 - r) - 2.0 * big_M_p(eq.p) * (1.0 + eq.w0) * r * eval_F_k(eq.k + 1, r);
  }
  return 0.0;
}

RootResult solve(const BohrEquation& eq, double tol) {
  if (!(tol > 0.0)) throw DomainError("solve: tol must be > 0");
  eq.validate();
  double lo = kEdge;
  double hi = 1.0 - kEdge;
  const double f_lo = equation_lhs(eq, lo);
  const double f_hi = equation_lhs(eq, hi);
  if (!(f_lo > 0.0 && f_hi < 0.0))
    throw SolverError("solve: no sign change for " + to_string(eq.kind) + " on (1e-15, 1 - 1e-15)");
  RootResult out;
  out.lo = lo;
  out.hi = hi;
  int it = 0;
  while (hi - lo >= tol && it < 200) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (equation_lhs(eq, mid) > 0.0)
      lo = mid;
    else
      hi = mid;
    ++it;
  }
  out.root = 0.5 * (lo + hi);
  out.residual = equation_lhs(eq, out.root);
  out.lo = lo;
  out.hi = hi;
  out.iterations = it;
  return out;
}

double r1(double nu) { return solve(BohrEquation::e5(nu)).root; }
double r2(int k) { return solve(BohrEquation::e6(k)).root; }

double bohr_radius(double nu) { return std::max(r1(nu), r2(interval_index(nu))); }

double harmonic_bohr_radius(double nu, double p) {
  return std::max(solve(BohrEquation::e9(nu, p)).root, solve(BohrEquation::t7b(interval_index(nu), p)).root);
}

double jacobian_bohr_radius(double nu, double p, double w0) {
  return std::max(solve(BohrEquation::t8a(nu, p, w0)).root,
                  solve(BohrEquation::t8b(interval_index(nu), p, w0)).root);
}

double r3_formula(double nu) {
  if (!(nu > 1.0)) throw DomainError("r3_formula: nu must be > 1");
  // 1 - (2nu - 1)^{-1/(nu-1)} = -expm1(-log(2nu - 1)/(nu - 1))
  return std::sqrt(-std::expm1(-std::log(2.0 * nu - 1.0) / (nu - 1.0)));
}

double r3(double nu) {
  if (!(nu >= 1.0)) throw DomainError("r3: nu must be >= 1");
  if (nu == 1.0) return kR3Cap;
  return std::min(kR3Cap, r3_formula(nu));
}

double r3_crossing(double level, double tol) {
  if (!(level > 0.0 && level < 1.0)) throw DomainError("r3_crossing: level must lie in (0, 1)");
  double lo = 1.0 + 1e-9;
  double hi = 2.0;
  while (r3_formula(hi) > level) {
    hi *= 2.0;
    if (hi > 1e12) throw SolverError("r3_crossing: level not reached");
  }
  if (!(r3_formula(lo) > level)) throw SolverError("r3_crossing: level above the formula's range");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (r3_formula(mid) > level)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

SumResult majorant_sum(const TruncatedSeries& a, double r, const std::optional<CoefficientEnvelope>& envelope) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("majorant_sum: r must lie in [0, 1)");
  SumResult out;
  double rn = 1.0;
  for (const cplx& c : a.coeffs()) {
    out.sum += std::abs(c) * rn;
    rn *= r;
  }
  if (envelope) out.tail_bound = envelope->tail_bound(a.order(), r);
  return out;
}

SumResult p_bohr_sum(const TruncatedSeries& a, const TruncatedSeries& b, double p, double r,
                     const std::optional<CoefficientEnvelope>& env_a,
                     const std::optional<CoefficientEnvelope>& env_b) {
  require_p(p, "p_bohr_sum");
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("p_bohr_sum: r must lie in [0, 1)");
  const int order = std::min(a.order(), b.order());
  SumResult out;
  out.sum = std::abs(a[0]);
  double rn = 1.0;
  for (int n = 1; n <= order; ++n) {
    rn *= r;
    const double x = std::abs(a[n]);
    const double y = std::abs(b[n]);
    const double m = std::max(x, y);
    double mean = 0.0;
    if (m > 0.0) mean = m * std::pow(std::pow(x / m, p) + std::pow(y / m, p), 1.0 / p);
    out.sum += mean * rn;
  }
  if (env_a && env_b) out.tail_bound = env_a->tail_bound(order, r) + env_b->tail_bound(order, r);
  return out;
}

std::string to_string(BohrTheorem t) {
  switch (t) {
    case BohrTheorem::analytic: return "analytic";
    case BohrTheorem::harmonic: return "harmonic";
    case BohrTheorem::jacobian: return "jacobian";
  }
  return "?";
}

namespace {

double theorem_radius(BohrTheorem t, double nu, double p, double w0) {
  switch (t) {
    case BohrTheorem::analytic: return bohr_radius(nu);
    case BohrTheorem::harmonic: return harmonic_bohr_radius(nu, p);
    case BohrTheorem::jacobian: return jacobian_bohr_radius(nu, p, w0);
  }
  return 0.0;
}

MembershipReport membership(const HarmonicMap& f, double nu, double p, BohrTheorem theorem,
                            std::optional<double> radius, const GridConfig& cfg, int order) {
  if (!f.has_series()) throw DomainError("verify_bohr_membership: '" + f.name + "' has no series generator");
  if (!(nu > 0.0)) throw DomainError("verify_bohr_membership: nu must be > 0");
  require_p(p, "verify_bohr_membership");

  MembershipReport rep;
  rep.theorem = theorem;
  rep.nu = nu;
  rep.p = p;
  const TruncatedSeries a = f.series_h(order);
  const TruncatedSeries b = f.series_g(order);

  const cplx h1 = f.h.d1(cplx{0.0, 0.0});
  rep.omega0 = h1 == cplx{0.0, 0.0} ? 0.0 : std::abs(f.g.d1(cplx{0.0, 0.0}) / h1);

  std::vector<std::string> problems;
  if (theorem == BohrTheorem::analytic) {
    for (const cplx& c : b.coeffs())
      if (c != cplx{0.0, 0.0}) {
        problems.push_back("co-analytic part is not zero");
        break;
      }
  }
  if (theorem == BohrTheorem::jacobian) {
    if (!(rep.omega0 < 1.0)) problems.push_back("|omega(0)| >= 1");
    bool sp = true;
    for (int j = 0; j <= 20 && sp; ++j)
      for (int i = 0; i < 64; ++i) {
        const auto z = ComplexPoint::polar(std::ldexp(1.0, -j), 2.0 * std::numbers::pi * i / 64.0);
        if (!(jacobian(f, z) > 0.0)) {
          sp = false;
          break;
        }
      }
    if (!sp) problems.push_back("not sense-preserving on the sample grid");
  }

  const SupEstimate est = theorem == BohrTheorem::jacobian ? estimate_beta_star(f, nu, cfg) : estimate_beta(f, nu, cfg);
  rep.norm = std::abs(a[0]) + est.value;
  if (est.verdict != Verdict::finite) problems.push_back("seminorm ladder verdict is " + to_string(est.verdict));
  if (!(rep.norm <= 1.0 + 1e-9)) problems.push_back("norm estimate exceeds 1");

  rep.precondition_ok = problems.empty();
  for (std::size_t i = 0; i < problems.size(); ++i) {
    if (i) rep.precondition_note += "; ";
    rep.precondition_note += problems[i];
  }

  if (rep.omega0 >= 1.0) return rep;
  rep.radius = radius ? *radius : theorem_radius(theorem, nu, p, rep.omega0);
  if (theorem == BohrTheorem::analytic)
    rep.sum = majorant_sum(a, rep.radius, f.envelope_h);
  else
    rep.sum = p_bohr_sum(a, b, p, rep.radius, f.envelope_h, f.envelope_g);
  rep.caveat = !rep.sum.tail_bound.has_value();
  const double tail = rep.sum.tail_bound.value_or(0.0);
  rep.holds = rep.precondition_ok && rep.sum.sum <= 1.0 + tail;
  return rep;
}

}  // namespace

MembershipReport verify_bohr_membership(const HarmonicMap& f, double nu, double p, BohrTheorem theorem,
                                        const GridConfig& cfg, int order) {
  return membership(f, nu, p, theorem, std::nullopt, cfg, order);
}

MembershipReport verify_bohr_membership_at(const HarmonicMap& f, double nu, double p, BohrTheorem theorem,
                                           double radius, const GridConfig& cfg, int order) {
  if (!(radius >= 0.0 && radius < 1.0)) throw DomainError("verify_bohr_membership_at: radius must lie in [0, 1)");
  return membership(f, nu, p, theorem, radius, cfg, order);
}

std::vector<TableRow> emit_table(bool dense) {
  std::vector<TableRow> rows(6);
  // Rows are independent; solved in order for a stable output.
  for (int k = 0; k < 6; ++k) {
    TableRow& row = rows[k];
    row.k = k;
    row.nu_left = 0.5 * k;
    row.nu_right = 0.5 * (k + 1);
    row.r1_left = r1(row.nu_left);
    row.r1_right = r1(row.nu_right);
    row.r2 = r2(k);
    row.r_left = std::max(row.r1_left, row.r2);
    row.r_right = std::max(row.r1_right, row.r2);
    if (dense && row.r1_right < row.r2 && row.r2 < row.r1_left) {
      double lo = row.nu_left;
      double hi = row.nu_right;
      while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (r1(mid) > row.r2)
          lo = mid;
        else
          hi = mid;
      }
      row.nu_switch = 0.5 * (lo + hi);
    }
  }
  return rows;
}

std::string table_csv(const std::vector<TableRow>& rows, bool dense) {
  std::string out = "interval,r1_left,r1_right,r2,r_left,r_right";
  if (dense) out += ",nu_switch";
  out += "\n";
  for (const auto& row : rows) {
    out += "\"" + interval_label(row.k) + "\"," + fixed6(row.r1_left) + "," + fixed6(row.r1_right) + "," +
           fixed6(row.r2) + "," + fixed6(row.r_left) + "," + fixed6(row.r_right);
    if (dense) out += "," + (row.nu_switch ? fixed6(*row.nu_switch) : std::string());
    out += "\n";
  }
  return out;
}

std::string table_json(const std::vector<TableRow>& rows, bool dense) {
  // Values are rounded through the same 6-decimal text so CSV and JSON agree.
  auto num = [](double v) { return nlohmann::json::parse(fixed6(v)); };
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json o;
    o["interval"] = interval_label(row.k);
    o["k"] = row.k;
    o["nu_left"] = row.nu_left;
    o["nu_right"] = row.nu_right;
    o["r1_left"] = num(row.r1_left);
    o["r1_right"] = num(row.r1_right);
    o["r2"] = num(row.r2);
    o["r_left"] = num(row.r_left);
    o["r_right"] = num(row.r_right);
    if (dense) o["nu_switch"] = row.nu_switch ? num(*row.nu_switch) : nlohmann::json(nullptr);
    arr.push_back(o);
  }
  return arr.dump(2) + "\n";
}

}  // namespace hbloch
