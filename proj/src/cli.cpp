#include "hbloch/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hbloch/bohr.hpp"
#include "hbloch/bounds.hpp"
#include "hbloch/catalog.hpp"
#include "hbloch/errors.hpp"
#include "hbloch/seminorm.hpp"
#include "hbloch/verify.hpp"

namespace hbloch {

namespace {

using nlohmann::json;

std::string g12(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

/// 12-significant-digit JSON number; non-finite values become null.
json num(double x) {
  if (!std::isfinite(x)) return nullptr;
  return json::parse(g12(x));
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

/// "x" or "x,y" (real and imaginary parts).
cplx parse_complex(const std::string& s, const std::string& flag) {
  const auto comma = s.find(',');
  try {
    std::size_t used = 0;
    if (comma == std::string::npos) {
      const double re = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return {re, 0.0};
    }
    const std::string a = s.substr(0, comma);
    const std::string b = s.substr(comma + 1);
    const double re = std::stod(a, &used);
    if (used != a.size()) throw std::invalid_argument(s);
    const double im = std::stod(b, &used);
    if (used != b.size()) throw std::invalid_argument(s);
    return {re, im};
  } catch (const std::exception&) {
    throw DomainError(flag + ": expected a complex number as 're' or 're,im', got '" + s + "'");
  }
}

struct MapFlags {
  std::string fn;
  double nu = 0.0, t = 0.0, mu = 0.0, theta = 0.0;
  std::string b1, a;
  int variant = 1;
  CLI::Option *o_nu = nullptr, *o_t = nullptr, *o_mu = nullptr, *o_theta = nullptr, *o_b1 = nullptr,
              *o_a = nullptr, *o_variant = nullptr;

  void attach(CLI::App* sub) {
    sub->add_option("--fn", fn, "catalog entry name (see `catalog`)")->required();
    o_nu = sub->add_option("--nu", nu, "entry parameter nu");
    o_t = sub->add_option("--t", t, "entry parameter t");
    o_mu = sub->add_option("--mu", mu, "entry parameter mu");
    o_theta = sub->add_option("--theta", theta, "entry parameter theta");
    o_b1 = sub->add_option("--b1", b1, "entry parameter b1 as 're' or 're,im'");
    o_a = sub->add_option("--a", a, "constant value as 're' or 're,im'");
    o_variant = sub->add_option("--variant", variant, "remark34 variant (1 or 2)");
  }

  MapParams params() const {
    MapParams p;
    if (o_nu->count()) p.nu = nu;
    if (o_t->count()) p.t = t;
    if (o_mu->count()) p.mu = mu;
    if (o_theta->count()) p.theta = theta;
    if (o_b1->count()) p.b1 = parse_complex(b1, "--b1");
    if (o_a->count()) p.a = parse_complex(a, "--a");
    if (o_variant->count()) p.which = variant;
    return p;
  }
};

json params_json(const MapParams& p) {
  json o = json::object();
  if (p.nu) o["nu"] = num(*p.nu);
  if (p.t) o["t"] = num(*p.t);
  if (p.mu) o["mu"] = num(*p.mu);
  if (p.theta) o["theta"] = num(*p.theta);
  if (p.b1) o["b1"] = {num(p.b1->real()), num(p.b1->imag())};
  if (p.a) o["a"] = {num(p.a->real()), num(p.a->imag())};
  if (p.which) o["variant"] = *p.which;
  return o;
}

// ---------------------------------------------------------------- commands

void cmd_table(std::ostream& os, const std::string& format, bool dense) {
  const auto rows = emit_table(dense);
  if (format == "json") {
    os << table_json(rows, dense);
    return;
  }
  if (format == "csv") {
    os << table_csv(rows, dense);
    return;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-10s %10s %10s %10s %10s %10s%s\n", "interval", "r1_left", "r1_right", "r2",
                "r_left", "r_right", dense ? "  nu_switch" : "");
  os << buf;
  static const char* labels[] = {"(0,1/2]", "(1/2,1]", "(1,3/2]", "(3/2,2]", "(2,5/2]", "(5/2,3]"};
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%-10s %10.6f %10.6f %10.6f %10.6f %10.6f", labels[r.k], r.r1_left, r.r1_right,
                  r.r2, r.r_left, r.r_right);
    os << buf;
    if (dense) {
      if (r.nu_switch) {
        std::snprintf(buf, sizeof buf, "  %9.6f", *r.nu_switch);
        os << buf;
      } else {
        os << "          -";
      }
    }
    os << "\n";
  }
}

struct RadiusFlags {
  std::string eq;
  double nu = 1.0, p = 1.0, w0 = 0.0, tol = 1e-14;
  int k = 0;
  CLI::Option *o_nu = nullptr, *o_k = nullptr;
};

void cmd_radius(std::ostream& os, const std::string& format, const RadiusFlags& f) {
  BohrEquation eq;
  eq.kind = parse_bohr_kind(f.eq);
  eq.p = f.p;
  eq.w0 = f.w0;
  const bool wants_nu = eq.kind == BohrKind::E5 || eq.kind == BohrKind::E9 || eq.kind == BohrKind::T8A;
  if (wants_nu) {
    if (!f.o_nu->count()) throw DomainError("--eq " + f.eq + " requires --nu");
    eq.nu = f.nu;
  } else if (f.o_k->count()) {
    eq.k = f.k;
  } else if (f.o_nu->count()) {
    eq.k = interval_index(f.nu);
  } else {
    throw DomainError("--eq " + f.eq + " requires --k (or --nu to select k = ceil(2 nu) - 1)");
  }
  const RootResult r = solve(eq, f.tol);
  std::string label = to_string(eq.kind) + "(";
  switch (eq.kind) {
    case BohrKind::E5: label += "nu=" + g12(eq.nu); break;
    case BohrKind::E6: label += "k=" + std::to_string(eq.k); break;
    case BohrKind::E9: label += "nu=" + g12(eq.nu) + ",p=" + g12(eq.p); break;
    case BohrKind::T7B: label += "k=" + std::to_string(eq.k) + ",p=" + g12(eq.p); break;
    case BohrKind::T8A: label += "nu=" + g12(eq.nu) + ",p=" + g12(eq.p) + ",w0=" + g12(eq.w0); break;
    case BohrKind::T8B: label += "k=" + std::to_string(eq.k) + ",p=" + g12(eq.p) + ",w0=" + g12(eq.w0); break;
  }
  label += ")";
  if (format == "json") {
    json o = {{"equation", label}, {"root", num(r.root)},       {"residual", num(r.residual)},
              {"lo", num(r.lo)},   {"hi", num(r.hi)},           {"iterations", r.iterations}};
    os << o.dump(2) << "\n";
  } else if (format == "csv") {
    os << "equation,root,residual,lo,hi,iterations\n"
       << csv_quote(label) << "," << g12(r.root) << "," << g12(r.residual) << "," << g12(r.lo) << "," << g12(r.hi)
       << "," << r.iterations << "\n";
  } else {
    os << "equation:   " << label << "\n"
       << "root:       " << g12(r.root) << "\n"
       << "residual:   " << g12(r.residual) << "\n"
       << "bracket:    [" << g12(r.lo) << ", " << g12(r.hi) << "]\n"
       << "iterations: " << r.iterations << "\n";
  }
}

struct SeminormFlags {
  MapFlags map;
  std::string which = "beta";
  double index = 1.0;
  CLI::Option* o_index = nullptr;
};

void cmd_seminorm(std::ostream& os, const std::string& format, const SeminormFlags& f, const GridConfig& cfg) {
  const MapParams params = f.map.params();
  const HarmonicMap m = make_by_name(f.map.fn, params);
  double index = 1.0;
  if (f.o_index->count())
    index = f.index;
  else if (params.nu)
    index = *params.nu;
  SupEstimate e;
  if (f.which == "beta")
    e = estimate_beta(m, index, cfg);
  else if (f.which == "beta_star")
    e = estimate_beta_star(m, index, cfg);
  else
    e = estimate_pre_schwarzian_norm(m, cfg);
  const bool has_index = f.which != "preschwarzian";
  const double a0 = std::abs(m(cplx{0.0, 0.0}));

  if (format == "json") {
    json ladder = json::array();
    for (std::size_t j = 0; j < e.ladder.size(); ++j) {
      const auto& l = e.ladder[j];
      ladder.push_back({{"j", j}, {"radius", num(l.radius)}, {"one_minus_r", num(l.one_minus_r)},
                        {"value", num(l.value)}, {"theta", num(l.theta)}});
    }
    json o = {{"function", f.map.fn},
              {"params", params_json(params)},
              {"which", f.which},
              {"index", has_index ? num(index) : json(nullptr)},
              {"value", num(e.value)},
              {"verdict", to_string(e.verdict)},
              {"overflowed", e.overflowed},
              {"abs_f0", num(a0)},
              {"argmax",
               {{"re", num(e.argmax.value().real())},
                {"im", num(e.argmax.value().imag())},
                {"one_minus_r", num(e.argmax.one_minus_r())}}},
              {"ladder", ladder}};
    os << o.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    os << "j,radius,one_minus_r,value,theta\n";
    for (std::size_t j = 0; j < e.ladder.size(); ++j) {
      const auto& l = e.ladder[j];
      os << j << "," << g12(l.radius) << "," << g12(l.one_minus_r) << "," << g12(l.value) << "," << g12(l.theta)
         << "\n";
    }
    return;
  }
  os << "function:  " << f.map.fn << " " << params_json(params).dump() << "\n"
     << "which:     " << f.which << (has_index ? " (nu=" + g12(index) + ")" : std::string()) << "\n"
     << "value:     " << g12(e.value) << "\n"
     << "verdict:   " << to_string(e.verdict) << (e.overflowed ? " (overflow)" : "") << "\n"
     << "argmax:    " << g12(e.argmax.value().real()) << " " << g12(e.argmax.value().imag())
     << "i  (1-|z| = " << g12(e.argmax.one_minus_r()) << ")\n";
  if (has_index) os << "|f(0)|+value: " << g12(a0 + e.value) << "\n";
  os << "ladder:\n";
  char buf[160];
  for (std::size_t j = 0; j < e.ladder.size(); ++j) {
    const auto& l = e.ladder[j];
    std::snprintf(buf, sizeof buf, "  %2zu  1-r=%-20s value=%-20s theta=%s\n", j, g12(l.one_minus_r).c_str(),
                  g12(l.value).c_str(), g12(l.theta).c_str());
    os << buf;
  }
}

int cmd_verify(std::ostream& os, std::ostream& err, const std::string& format, const std::string& suite,
               const VerifyOptions& opts) {
  const auto results = run_suite(suite, opts);
  const auto failed = std::count_if(results.begin(), results.end(), [](const CheckResult& r) { return !r.passed; });
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : results) arr.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    json o = {{"suite", suite},
              {"seed", opts.seed},
              {"checks", results.size()},
              {"failed", failed},
              {"results", arr}};
    os << o.dump(2) << "\n";
  } else if (format == "csv") {
    os << "name,passed,detail\n";
    for (const auto& r : results) os << r.name << "," << (r.passed ? "true" : "false") << "," << csv_quote(r.detail) << "\n";
  } else {
    for (const auto& r : results) {
      os << (r.passed ? "PASS " : "FAIL ") << r.name;
      if (!r.passed) os << "  [" << r.detail << "]";
      os << "\n";
    }
    os << results.size() << " checks, " << failed << " failed (suite=" << suite << ", seed=" << opts.seed << ")\n";
  }
  for (const auto& r : results)
    if (!r.passed) err << "FAIL " << r.name << ": " << r.detail << "\n";
  return failed == 0 ? kExitOk : kExitFailure;
}

void cmd_coeffs(std::ostream& os, const std::string& format, const MapFlags& mf, int N) {
  const MapParams params = mf.params();
  const HarmonicMap m = make_by_name(mf.fn, params, std::max(N, 0));
  if (!m.has_series()) throw DomainError("catalog entry '" + mf.fn + "' has no series generator");
  if (N < 0) throw DomainError("--N must be >= 0");
  const TruncatedSeries a = m.series_h(N);
  const TruncatedSeries b = m.series_g(N);
  const auto ctx = proven_beta_star(mf.fn, params);
  auto bound = [&](int n) -> std::optional<double> {
    if (n < 1 || !ctx) return std::nullopt;
    return coeff_bound(*ctx, n);
  };
  if (format == "json") {
    json rows = json::array();
    for (int n = 0; n <= N; ++n) {
      const auto bd = bound(n);
      rows.push_back({{"n", n},
                      {"abs_a", num(std::abs(a[n]))},
                      {"abs_b", num(std::abs(b[n]))},
                      {"bound", bd ? num(*bd) : json(nullptr)}});
    }
    json o = {{"function", mf.fn}, {"params", params_json(params)}, {"N", N}, {"rows", rows}};
    if (ctx)
      o["bound_context"] = {{"nu", num(ctx->nu)}, {"beta_star", num(ctx->beta_star)}, {"omega0", num(ctx->omega0)}};
    os << o.dump(2) << "\n";
    return;
  }
  // csv and text share the same columns; text is the CSV form.
  os << "n,abs_a,abs_b,bound\n";
  for (int n = 0; n <= N; ++n) {
    const auto bd = bound(n);
    os << n << "," << g12(std::abs(a[n])) << "," << g12(std::abs(b[n])) << "," << (bd ? g12(*bd) : std::string())
       << "\n";
  }
}

struct SumFlags {
  MapFlags map;
  double r = 0.5;
  double p = 1.0;
  std::string kind = "pbohr";
  int N = kDefaultTruncation;
};

void cmd_sum(std::ostream& os, const std::string& format, const SumFlags& f) {
  const MapParams params = f.map.params();
  const HarmonicMap m = make_by_name(f.map.fn, params, f.N);
  if (!m.has_series()) throw DomainError("catalog entry '" + f.map.fn + "' has no series generator");
  if (f.N < 0) throw DomainError("--N must be >= 0");
  const TruncatedSeries a = m.series_h(f.N);
  const SumResult s = f.kind == "majorant" ? majorant_sum(a, f.r, m.envelope_h)
                                           : p_bohr_sum(a, m.series_g(f.N), f.p, f.r, m.envelope_h, m.envelope_g);
  if (format == "json") {
    json o = {{"function", f.map.fn},
              {"params", params_json(params)},
              {"kind", f.kind},
              {"r", num(f.r)},
              {"p", f.kind == "majorant" ? json(nullptr) : num(f.p)},
              {"N", f.N},
              {"sum", num(s.sum)},
              {"tail_bound", s.tail_bound ? num(*s.tail_bound) : json(nullptr)}};
    os << o.dump(2) << "\n";
  } else if (format == "csv") {
    os << "function,kind,r,p,N,sum,tail_bound\n"
       << f.map.fn << "," << f.kind << "," << g12(f.r) << "," << (f.kind == "majorant" ? "" : g12(f.p)) << ","
       << f.N << "," << g12(s.sum) << "," << (s.tail_bound ? g12(*s.tail_bound) : std::string()) << "\n";
  } else {
    os << "function:   " << f.map.fn << " " << params_json(params).dump() << "\n"
       << "kind:       " << f.kind << (f.kind == "majorant" ? std::string() : " (p=" + g12(f.p) + ")") << "\n"
       << "r:          " << g12(f.r) << "\n"
       << "sum:        " << g12(s.sum) << "  (" << f.N + 1 << " stored terms)\n"
       << "tail_bound: " << (s.tail_bound ? g12(*s.tail_bound) : std::string("unknown")) << "\n";
  }
}

void cmd_catalog(std::ostream& os, const std::string& format) {
  const auto& entries = catalog_entries();
  if (format == "text") {
    for (const auto& e : entries) {
      os << e.name << (e.has_series ? "" : "  (no series)") << "\n    " << e.description << "\n";
      for (const auto& p : e.params) {
        os << "    --" << (p.name == "which" ? "variant" : p.name) << "  " << p.type << ", " << p.constraint;
        if (!p.fallback.empty()) os << ", default " << p.fallback;
        os << "\n";
      }
    }
    return;
  }
  if (format == "csv") {
    os << "name,has_series,params,description\n";
    for (const auto& e : entries) {
      std::string ps;
      for (const auto& p : e.params) ps += (ps.empty() ? "" : ";") + p.name;
      os << e.name << "," << (e.has_series ? "true" : "false") << "," << csv_quote(ps) << ","
         << csv_quote(e.description) << "\n";
    }
    return;
  }
  json arr = json::array();
  for (const auto& e : entries) {
    json ps = json::array();
    for (const auto& p : e.params)
      ps.push_back({{"name", p.name},
                    {"flag", "--" + (p.name == "which" ? std::string("variant") : p.name)},
                    {"type", p.type},
                    {"constraint", p.constraint},
                    {"default", p.fallback.empty() ? json(nullptr) : json(p.fallback)}});
    arr.push_back({{"name", e.name}, {"description", e.description}, {"has_series", e.has_series}, {"params", ps}});
  }
  os << arr.dump(2) << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Harmonic nu-Bloch mappings: seminorm estimates, growth and coefficient bounds, Bohr radii", "hbloch"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string format = "text";
  std::string output;
  std::uint64_t seed = 0;
  GridConfig cfg;
  bool serial = false;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--output", output, "write the report to this file instead of stdout");
  app.add_option("--seed", seed, "seed for random sample points");
  app.add_option("--grid-depth", cfg.ladder_depth, "radial ladder depth J (radii 1 - 2^-j)")
      ->envname("HBLOCH_GRID_DEPTH");
  app.add_option("--angular-samples", cfg.angular_samples, "angular grid size per rung");
  app.add_option("--refine-iters", cfg.refine_iters, "minimum golden-section iterations per rung");
  app.add_option("--divergence-cap", cfg.divergence_cap, "V_max of the divergence rule");
  app.add_flag("--serial", serial, "use the serial reference grid kernel");

  auto* table = app.add_subcommand("table", "reproduce the Bohr-radius table");
  bool dense = false;
  table->add_flag("--dense", dense, "add the nu where r1 and r2 cross inside each interval");

  auto* radius = app.add_subcommand("radius", "solve one radius equation");
  RadiusFlags rf;
  radius->add_option("--eq", rf.eq, "E5, E6, E9, T7B, T8A or T8B")->required();
  rf.o_nu = radius->add_option("--nu", rf.nu, "nu (E5, E9, T8A; selects k for the others)");
  rf.o_k = radius->add_option("--k", rf.k, "interval index k (E6, T7B, T8B)");
  radius->add_option("--p", rf.p, "exponent p >= 1");
  radius->add_option("--w0", rf.w0, "|omega(0)| in [0, 1)");
  radius->add_option("--tol", rf.tol, "bracket width tolerance");

  auto* seminorm = app.add_subcommand("seminorm", "estimate beta_nu, beta*_nu or the pre-Schwarzian norm");
  SeminormFlags sf;
  sf.map.attach(seminorm);
  seminorm->add_option("--which", sf.which, "beta, beta_star or preschwarzian")
      ->check(CLI::IsMember({"beta", "beta_star", "preschwarzian"}));
  sf.o_index = seminorm->add_option("--index", sf.index, "seminorm exponent (defaults to --nu, else 1)");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  int samples = 1000;
  verify->add_option("--suite", suite, "invariance, inclusions, bounds, bohr or all")
      ->check(CLI::IsMember(verify_suite_names()));
  verify->add_option("--samples", samples, "random points per identity check")->check(CLI::PositiveNumber);

  auto* coeffs = app.add_subcommand("coeffs", "dump Taylor coefficients with the coefficient-bound column");
  MapFlags cf;
  int coeff_n = 16;
  cf.attach(coeffs);
  coeffs->add_option("--N", coeff_n, "highest coefficient index");

  auto* sum = app.add_subcommand("sum", "majorant or p-Bohr sum of a catalog entry");
  SumFlags uf;
  uf.map.attach(sum);
  sum->add_option("--r", uf.r, "radius in [0, 1)");
  sum->add_option("--p", uf.p, "exponent p >= 1 (pbohr only)");
  sum->add_option("--kind", uf.kind, "majorant or pbohr")->check(CLI::IsMember({"majorant", "pbohr"}));
  sum->add_option("--N", uf.N, "truncation order");

  auto* catalog = app.add_subcommand("catalog", "list catalog entries and their parameters");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  cfg.parallel = !serial;

  std::ostringstream buf;
  int code = kExitOk;
  try {
    cfg.validate();
    if (*table) {
      cmd_table(buf, format, dense);
    } else if (*radius) {
      cmd_radius(buf, format, rf);
    } else if (*seminorm) {
      cmd_seminorm(buf, format, sf, cfg);
    } else if (*verify) {
      VerifyOptions opts;
      opts.seed = seed;
      opts.grid = cfg;
      opts.samples = samples;
      code = cmd_verify(buf, err, format, suite, opts);
    } else if (*coeffs) {
      cmd_coeffs(buf, format, cf, coeff_n);
    } else if (*sum) {
      cmd_sum(buf, format, uf);
    } else if (*catalog) {
      cmd_catalog(buf, format);
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }

  if (output.empty()) {
    out << buf.str();
  } else {
    std::ofstream file(output, std::ios::binary);
    file << buf.str();
    file.close();
    if (!file) {
      err << "error: cannot write '" << output << "'\n";
      return kExitIo;
    }
  }
  return code;
}

}  // namespace hbloch
