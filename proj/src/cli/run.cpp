#include "lshape/cli/run.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "lshape/asympt/rate.hpp"
#include "lshape/eqmeasure/density.hpp"
#include "lshape/exact/efp.hpp"
#include "lshape/harness/convergence.hpp"
#include "lshape/harness/parallel.hpp"
#include "lshape/harness/suites.hpp"
#include "lshape/harness/transition.hpp"

namespace lshape::cli {

namespace {

using harness::Json;

constexpr const char* kVersion = "0.1.0";

/// A usage problem found after CLI11 accepted the syntax.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One output table: fixed columns, rows of scalars, optional summary.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
  Json summary = Json::object();
};

std::string cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number_float()) return to_decimal(v.get<double>());
  return v.dump();
}

/// NaN and infinities become null so JSON output stays valid.
Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

void emit(std::ostream& os, const std::string& format, const std::string& command, const Json& config,
          const Table& t) {
  if (format == "json") {
    Json doc;
    doc["command"] = command;
    doc["version"] = kVersion;
    doc["config"] = config;
    Json rows = Json::array();
    for (const auto& r : t.rows) {
      Json obj = Json::object();
      for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = r[i];
      rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    if (!t.summary.empty()) doc["summary"] = t.summary;
    os << doc.dump(2) << '\n';
    return;
  }
  os << "# lshape " << kVersion << ' ' << command << '\n';
  for (const auto& [k, v] : config.items()) os << "# " << k << '=' << cell(v) << '\n';
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << cell(r[i]);
    os << '\n';
  }
  for (const auto& [k, v] : t.summary.items()) os << "# " << k << '=' << cell(v) << '\n';
}

Rational rational_flag(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const Error& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

double decimal_flag(const std::string& name, const std::string& text) {
  return rational_flag(name, text).convert_to<double>();
}

std::optional<long> env_int(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (*end != '\0') throw UsageError(std::string(name) + " is not an integer");
  return n;
}

struct Common {
  std::string format = "csv";
  std::string out;
  unsigned prec = 0;  // 0: tier default
  int jobs = 1;
};

unsigned resolved_prec(const Common& c, int n) {
  return c.prec ? c.prec : static_cast<unsigned>(default_precision_bits(n));
}

// efp ---------------------------------------------------------------------

struct EfpArgs {
  int r = 1, s = 0, q = 0;
  std::string alpha, mode = "exact";
};

Table do_efp(const EfpArgs& a, const Common& c, Json& config) {
  const auto d = exact::LshapeDims::make(a.r, a.s, a.q);
  const Rational alpha = rational_flag("alpha", a.alpha);
  config["r"] = a.r;
  config["s"] = a.s;
  config["q"] = a.q;
  config["alpha"] = to_string(alpha);
  config["mode"] = a.mode;
  Table t;
  t.columns = {"r", "s", "q", "alpha", "mode", "F", "log_F"};
  if (a.mode == "exact") {
    const Rational f = exact::efp_hankel(d, alpha);
    const Json log_f = f > 0 ? number(log_positive(f)) : Json(nullptr);
    t.rows.push_back({a.r, a.s, a.q, to_string(alpha), a.mode, to_string(f), log_f});
    return t;
  }
  const unsigned bits = resolved_prec(c, d.n());
  config["precision_bits"] = precision_tier(bits);
  dispatch_precision(bits, [&](auto tag) {
    using Real = decltype(tag);
    const Real al = convert<Real>(numerator(alpha)) / convert<Real>(denominator(alpha));
    const Real lf = exact::log_efp_real<Real>(d, al);
    const int digits = static_cast<int>(digits10_for_bits(precision_tier(bits))) - 5;
    t.rows.push_back({a.r, a.s, a.q, to_string(alpha), a.mode, to_decimal(Real(exp(lf)), digits),
                      to_decimal(lf, digits)});
    return 0;
  });
  return t;
}

// zpart -------------------------------------------------------------------

struct ZpartArgs {
  int r = 1, s = 0, q = 0;
  std::string alpha, rho;
};

Table do_zpart(const ZpartArgs& a, const Common& c, Json& config) {
  const auto d = exact::LshapeDims::make(a.r, a.s, a.q);
  const auto params = exact::ModelParams::make(rational_flag("alpha", a.alpha), rational_flag("rho", a.rho));
  const unsigned bits = resolved_prec(c, d.n());
  config["r"] = a.r;
  config["s"] = a.s;
  config["q"] = a.q;
  config["alpha"] = to_string(params.alpha);
  config["rho"] = to_string(params.rho);
  config["precision_bits"] = precision_tier(bits);
  Table t;
  t.columns = {"N", "r", "s", "q", "Z", "log_Z"};
  dispatch_precision(bits, [&](auto tag) {
    using Real = decltype(tag);
    const Real z = exact::partition_lshape<Real>(d, params);
    const int digits = static_cast<int>(digits10_for_bits(precision_tier(bits))) - 5;
    t.rows.push_back({d.n(), a.r, a.s, a.q, to_decimal(z, digits),
                      z > 0 ? Json(to_decimal(Real(log(z)), digits)) : Json(nullptr)});
    return 0;
  });
  return t;
}

// phi ---------------------------------------------------------------------

struct PhiArgs {
  std::string x = "0", y = "0", alpha, rho = "1";
  std::vector<int> grid;
};

std::vector<Json> phi_row(double x, double y, const Rational& alpha, const Rational& rho) {
  using namespace asympt;
  const double a = alpha.convert_to<double>();
  const auto p = ScaledPoint<double>::make(x, y);
  const RegionTag tag = classify_point(p, a);
  const bool interior = x < 1 && y < 1;
  Json eta = nullptr;
  if (y > 0 && tag == RegionTag::kDII) eta = number(eta_root(p, a).eta);
  if (y > 0 && tag == RegionTag::kOnArc && interior) eta = number(h_param(p));
  const Json h = interior ? number(h_param(p)) : Json(nullptr);
  const double phi = varphi(p, a);
  Json f = nullptr;
  if (x * y < 1 && a < 1) f = number(free_energy(p, exact::ModelParams::make(alpha, rho)));
  return {x, y, a, std::string(to_string(tag)), eta, h, number(alpha_c(p)), number(phi), f};
}

Table do_phi(const PhiArgs& a, const Common& c, Json& config) {
  const Rational alpha = rational_flag("alpha", a.alpha);
  const Rational rho = rational_flag("rho", a.rho);
  if (!(alpha > 0 && alpha < 1)) throw Error(ErrorCode::kInvalidArgument, "alpha must lie in (0,1)");
  config["alpha"] = to_string(alpha);
  config["rho"] = to_string(rho);
  std::vector<std::pair<double, double>> pts;
  if (a.grid.empty()) {
    const double x = decimal_flag("x", a.x), y = decimal_flag("y", a.y);
    config["x"] = x;
    config["y"] = y;
    pts.emplace_back(x, y);
  } else {
    if (a.grid.size() != 2 || a.grid[0] < 2 || a.grid[1] < 1)
      throw UsageError("--grid expects NX,NY with NX >= 2, NY >= 1");
    config["grid"] = std::to_string(a.grid[0]) + "," + std::to_string(a.grid[1]);
    config["jobs"] = c.jobs;
    // x = i/NX inside (0,1); y = j/NY of the admissible height min(x, 1-x).
    for (int i = 1; i < a.grid[0]; ++i) {
      const double x = static_cast<double>(i) / a.grid[0];
      for (int j = 0; j <= a.grid[1]; ++j) pts.emplace_back(x, std::min(x, 1 - x) * j / a.grid[1]);
    }
  }
  Table t;
  t.columns = {"x", "y", "alpha", "region", "eta", "h", "alpha_c", "phi", "f"};
  t.rows.resize(pts.size());
  harness::parallel_for(pts.size(), c.jobs,
                        [&](std::size_t i) { t.rows[i] = phi_row(pts[i].first, pts[i].second, alpha, rho); });
  return t;
}

// eta ---------------------------------------------------------------------

struct EtaArgs {
  std::string x, y, alpha, method = "closed";
};

Table do_eta(const EtaArgs& a, const Common&, Json& config) {
  using namespace asympt;
  const double x = decimal_flag("x", a.x), y = decimal_flag("y", a.y), al = decimal_flag("alpha", a.alpha);
  config["x"] = x;
  config["y"] = y;
  config["alpha"] = al;
  config["method"] = a.method;
  const EtaMethod m = a.method == "closed"   ? EtaMethod::kClosedForm
                      : a.method == "bisect" ? EtaMethod::kBisection
                                             : EtaMethod::kBoth;
  const auto p = ScaledPoint<double>::make(x, y);
  const auto r = eta_root(p, al, m);
  Table t;
  t.columns = {"x", "y", "alpha", "method", "region", "eta", "residual", "disagreement"};
  t.rows.push_back({x, y, al, a.method, std::string(to_string(classify_point(p, al))), number(r.eta),
                    number(r.residual), m == EtaMethod::kBoth ? number(r.disagreement) : Json(nullptr)});
  return t;
}

// regime / density ---------------------------------------------------------

struct GasArgs {
  std::string R, Q = "0", alpha;
  int points = 101;
  std::string oracle_eps = "1e-10";
  std::string iib = "oracle";
};

eqmeasure::GasParams<double> gas_from(const GasArgs& a, Json& config) {
  const double R = decimal_flag("R", a.R), Q = decimal_flag("Q", a.Q), al = decimal_flag("alpha", a.alpha);
  config["R"] = R;
  config["Q"] = Q;
  config["alpha"] = al;
  return eqmeasure::GasParams<double>::make(R, Q, al);
}

Table do_regime(const GasArgs& a, const Common&, Json& config) {
  using namespace eqmeasure;
  const auto g = gas_from(a, config);
  const auto s = endpoints(g);
  Table t;
  t.columns = {"regime", "a", "b", "nu", "eta", "Qc", "Rc", "E"};
  t.rows.push_back({std::string(to_string(s.regime)), number(s.a), number(s.b), s.nu,
                    s.eta ? number(*s.eta) : Json(nullptr), number(g.Qc()), number(g.Rc()),
                    number(first_moment(s, g))});
  return t;
}

Table do_density(const GasArgs& a, const Common&, Json& config) {
  using namespace eqmeasure;
  if (a.points < 2) throw UsageError("--points must be >= 2");
  const auto g = gas_from(a, config);
  const double eps = decimal_flag("oracle-eps", a.oracle_eps);
  if (!(eps > 0)) throw UsageError("--oracle-eps must be positive");
  const IIBDensity iib = a.iib == "arctan" ? IIBDensity::kArctan : IIBDensity::kOracle;
  config["points"] = a.points;
  config["oracle_eps"] = eps;
  config["iib"] = a.iib;
  const auto s = endpoints(g);
  const auto prof = profile(s, g, iib);
  Table t;
  t.columns = {"mu", "rho0", "rho0_formula", "rho0_oracle"};
  for (int k = 0; k < a.points; ++k) {
    const double mu = g.R * k / (a.points - 1);
    double formula = 0;
    if (mu < s.a)
      formula = left_gap_value(s.regime);
    else if (mu > s.b)
      formula = right_gap_value(s.regime);
    else
      formula = band_density_formula(mu, s, g);
    t.rows.push_back({mu, number(prof(mu)), number(formula), number(density_oracle(mu, eps, s, g))});
  }
  t.summary["regime"] = std::string(to_string(s.regime));
  t.summary["a"] = s.a;
  t.summary["b"] = s.b;
  return t;
}

// transition / converge ------------------------------------------------------

struct TransitionArgs {
  std::string x, y, alpha_lo, alpha_hi, spacing = "geometric";
  int n = 40;
};

Table do_transition(const TransitionArgs& a, const Common&, Json& config) {
  const double x = decimal_flag("x", a.x), y = decimal_flag("y", a.y);
  const double lo = decimal_flag("alpha-lo", a.alpha_lo), hi = decimal_flag("alpha-hi", a.alpha_hi);
  config["x"] = x;
  config["y"] = y;
  config["alpha_lo"] = lo;
  config["alpha_hi"] = hi;
  config["n"] = a.n;
  config["spacing"] = a.spacing;
  const double ac = asympt::alpha_c(asympt::ScaledPoint<double>::make(x, y));
  const auto f = harness::transition_fit(
      x, y, lo - ac, hi - ac, a.n, a.spacing == "linear" ? harness::Spacing::kLinear : harness::Spacing::kGeometric);
  Table t;
  t.columns = {"alpha_c", "exponent", "r_squared", "amplitude", "cubic_prefactor", "C_formula", "C_fd"};
  t.rows.push_back({number(f.alpha_c), number(f.exponent), number(f.r_squared), number(f.amplitude),
                    number(f.cubic_prefactor), number(f.c_formula), number(f.c_fd)});
  return t;
}

struct ConvergeArgs {
  std::string x, y, alpha, rounding = "nearest", mode = "exact";
  std::vector<int> ns = {32, 64, 128};
};

Table do_converge(const ConvergeArgs& a, const Common& c, Json& config) {
  const double x = decimal_flag("x", a.x), y = decimal_flag("y", a.y);
  const Rational alpha = rational_flag("alpha", a.alpha);
  harness::FiniteSizeOptions opt;
  opt.precision_bits = c.prec;
  opt.rounding = a.rounding == "floor" ? harness::Rounding::kFloor : harness::Rounding::kNearest;
  if (a.mode == "real") opt.exact_n_max = 0;
  config["x"] = x;
  config["y"] = y;
  config["alpha"] = to_string(alpha);
  std::string ns;
  for (int n : a.ns) ns += (ns.empty() ? "" : ",") + std::to_string(n);
  config["Ns"] = ns;
  config["rounding"] = a.rounding;
  config["mode"] = a.mode;
  config["precision_bits"] = c.prec ? Json(precision_tier(c.prec)) : Json("default");
  config["jobs"] = c.jobs;
  const auto scan = harness::convergence_scan(x, y, alpha, a.ns, opt, c.jobs);
  Table t;
  t.columns = {"N", "r", "s", "q", "path", "phi_N", "gap"};
  for (const auto& r : scan.rows)
    t.rows.push_back({r.n, r.dims.r, r.dims.s, r.dims.q, r.exact_path ? "exact" : "real", number(r.phi_n),
                      number(r.gap)});
  t.summary["region"] = std::string(asympt::to_string(scan.region));
  t.summary["phi"] = number(scan.phi);
  t.summary["extrapolation"] = number(scan.extrapolation);
  t.summary["c1"] = number(scan.c1);
  t.summary["c2"] = number(scan.c2);
  t.summary["abs_deviation"] = number(scan.abs_deviation);
  t.summary["rel_deviation"] = number(scan.rel_deviation);
  t.summary["gaps_decreasing"] = scan.gaps_decreasing;
  return t;
}

// verify --------------------------------------------------------------------

int do_verify(const std::string& suite, const std::string& tol_scale_text, const Common& c, Json& config,
              std::ostream& os) {
  const double tol_scale = decimal_flag("tol-scale", tol_scale_text);
  if (!(tol_scale > 0)) throw UsageError("--tol-scale must be positive");
  harness::suite_criteria(suite);
  config["suite"] = suite;
  config["tol_scale"] = tol_scale;
  const auto results = harness::run_suite(suite, tol_scale, c.jobs);
  bool pass = true;
  for (const auto& r : results) pass = pass && r.pass;
  if (c.format == "json") {
    Json doc;
    doc["command"] = "verify";
    doc["version"] = kVersion;
    doc["config"] = config;
    Json arr = Json::array();
    for (const auto& r : results) {
      Json j = harness::to_json(r);
      j.erase("seconds");  // keeps the report byte-deterministic
      arr.push_back(std::move(j));
    }
    doc["criteria"] = std::move(arr);
    doc["pass"] = pass;
    os << doc.dump(2) << '\n';
  } else {
    Table t;
    t.columns = {"criterion", "check_name", "residual", "tolerance", "pass"};
    for (const auto& r : results)
      for (const auto& k : r.checks) {
        if (k.check_name == "runtime_seconds") continue;
        t.rows.push_back({r.id, k.check_name, number(k.residual), number(k.tolerance), k.pass});
      }
    t.summary["pass"] = pass;
    emit(os, "csv", "verify", config, t);
  }
  return pass ? kOk : kVerificationFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"L-shaped domain six-vertex free energies and cross-checks", "lshape"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);
  Common common;
  std::optional<long> env_prec, env_jobs;
  try {
    env_prec = env_int("LSHAPE_PREC_BITS");
    env_jobs = env_int("LSHAPE_JOBS");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (env_prec) common.prec = static_cast<unsigned>(*env_prec);
  if (env_jobs) common.jobs = static_cast<int>(*env_jobs);
  app.add_option("--format", common.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", common.out, "output file (default stdout)");
  app.add_option("--prec", common.prec, "real-path precision in bits (>= 53)");
  app.add_option("--jobs", common.jobs, "worker threads")->check(CLI::PositiveNumber);

  EfpArgs efp;
  auto* c_efp = app.add_subcommand("efp", "emptiness formation probability F_{r,s,q}(alpha)");
  c_efp->add_option("--r", efp.r)->required();
  c_efp->add_option("--s", efp.s)->required();
  c_efp->add_option("--q", efp.q)->required();
  c_efp->add_option("--alpha", efp.alpha, "rational p/q or decimal")->required();
  c_efp->add_option("--mode", efp.mode)->check(CLI::IsMember({"exact", "real"}));

  ZpartArgs zp;
  auto* c_zp = app.add_subcommand("zpart", "L-shaped partition function (s = 0 gives Z_N)");
  c_zp->add_option("--r", zp.r)->required();
  c_zp->add_option("--s", zp.s)->required();
  c_zp->add_option("--q", zp.q)->required();
  c_zp->add_option("--alpha", zp.alpha)->required();
  c_zp->add_option("--rho", zp.rho)->required();

  PhiArgs phi;
  auto* c_phi = app.add_subcommand("phi", "asymptotic rate phi(x, y) and free energy");
  c_phi->add_option("--x", phi.x);
  c_phi->add_option("--y", phi.y);
  c_phi->add_option("--alpha", phi.alpha)->required();
  c_phi->add_option("--rho", phi.rho, "normalization for f (default 1)");
  c_phi->add_option("--grid", phi.grid, "NX,NY")->delimiter(',')->expected(2);

  EtaArgs eta;
  auto* c_eta = app.add_subcommand("eta", "root eta of the saddle-point equation");
  c_eta->add_option("--x", eta.x)->required();
  c_eta->add_option("--y", eta.y)->required();
  c_eta->add_option("--alpha", eta.alpha)->required();
  c_eta->add_option("--method", eta.method)->check(CLI::IsMember({"closed", "bisect", "both"}));

  GasArgs reg;
  auto* c_reg = app.add_subcommand("regime", "equilibrium-measure regime and end-points");
  c_reg->add_option("--R", reg.R)->required();
  c_reg->add_option("--Q", reg.Q)->required();
  c_reg->add_option("--alpha", reg.alpha)->required();

  GasArgs den;
  auto* c_den = app.add_subcommand("density", "equilibrium density on [0, R]");
  c_den->add_option("--R", den.R)->required();
  c_den->add_option("--Q", den.Q)->required();
  c_den->add_option("--alpha", den.alpha)->required();
  c_den->add_option("--points", den.points);
  c_den->add_option("--oracle-eps", den.oracle_eps);
  c_den->add_option("--iib", den.iib, "IIB band profile")->check(CLI::IsMember({"oracle", "arctan"}));

  TransitionArgs tr;
  auto* c_tr = app.add_subcommand("transition", "cubic-law fit above alpha_c");
  c_tr->add_option("--x", tr.x)->required();
  c_tr->add_option("--y", tr.y)->required();
  c_tr->add_option("--alpha-lo", tr.alpha_lo)->required();
  c_tr->add_option("--alpha-hi", tr.alpha_hi)->required();
  c_tr->add_option("--n", tr.n);
  c_tr->add_option("--spacing", tr.spacing)->check(CLI::IsMember({"geometric", "linear"}));

  ConvergeArgs cv;
  auto* c_cv = app.add_subcommand("converge", "finite-size phi_N against phi");
  c_cv->add_option("--x", cv.x)->required();
  c_cv->add_option("--y", cv.y)->required();
  c_cv->add_option("--alpha", cv.alpha)->required();
  c_cv->add_option("--Ns", cv.ns, "comma-separated lattice sizes")->delimiter(',');
  c_cv->add_option("--rounding", cv.rounding)->check(CLI::IsMember({"nearest", "floor"}));
  c_cv->add_option("--mode", cv.mode)->check(CLI::IsMember({"exact", "real"}));

  std::string suite = "all", tol_scale = "1";
  auto* c_ver = app.add_subcommand("verify", "run acceptance checks");
  c_ver->add_option("--suite", suite)->check(CLI::IsMember({"exactcore", "asympt", "eqmeasure", "harness", "all"}));
  c_ver->add_option("--tol-scale", tol_scale);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (common.prec != 0 && common.prec < 53) throw UsageError("precision must be >= 53 bits");
    if (common.jobs < 1) throw UsageError("jobs must be >= 1");
    std::ofstream file;
    if (!common.out.empty()) {
      file.open(common.out);
      if (!file) throw UsageError("cannot open " + common.out);
    }
    std::ostream& os = common.out.empty() ? out : file;
    Json config = Json::object();
    auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "verify") return do_verify(suite, tol_scale, common, config, os);
    Table t;
    if (name == "efp") t = do_efp(efp, common, config);
    if (name == "zpart") t = do_zpart(zp, common, config);
    if (name == "phi") t = do_phi(phi, common, config);
    if (name == "eta") t = do_eta(eta, common, config);
    if (name == "regime") t = do_regime(reg, common, config);
    if (name == "density") t = do_density(den, common, config);
    if (name == "transition") t = do_transition(tr, common, config);
    if (name == "converge") t = do_converge(cv, common, config);
    emit(os, common.format, name, config, t);
    return kOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace lshape::cli
