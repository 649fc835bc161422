#include "lnewton/cli.hpp"

#include <cmath>
#include <fstream>
#include <locale>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lnewton/error.hpp"
#include "lnewton/extremal.hpp"
#include "lnewton/invariants.hpp"
#include "lnewton/resistance.hpp"
#include "lnewton/ssc.hpp"

namespace lnewton {

namespace {

using nlohmann::json;

struct Globals {
  double tol = kDefaultTolerance;
  std::string format = "csv";
  std::string output;
  int precision = 6;
};

/// Radial profile selection shared by `resist` and `ssc`.
struct ProfileFlags {
  std::string kind = "cone";
  double R = 1.0;
  double lambda = 0.5;
  double rho = 1.0;
  double M = 0.5;
  int n = 1;
};

const std::vector<std::string> kProfileKinds{"flat", "cap", "cone", "truncated-cone", "truncated-cap",
                                             "extremal"};

void add_profile_flags(CLI::App* cmd, ProfileFlags& f) {
  cmd->add_option("--profile", f.kind, "Profile kind")->check(CLI::IsMember(kProfileKinds))->capture_default_str();
  cmd->add_option("--R", f.R, "Outer radius")->capture_default_str();
  cmd->add_option("--lambda", f.lambda, "Cone slope")->capture_default_str();
  cmd->add_option("--rho", f.rho, "Cap radius")->capture_default_str();
  cmd->add_option("--M", f.M, "Height for truncated and extremal profiles")->capture_default_str();
  cmd->add_option("--n", f.n, "Truncation index")->capture_default_str();
}

RadialProfile build_profile(const ProfileFlags& f) {
  if (f.kind == "flat") return make_flat(f.R);
  if (f.kind == "cap") return make_hyperbolic_cap(f.R, f.rho);
  if (f.kind == "cone") return make_cone(f.R, f.lambda);
  if (f.kind == "truncated-cone") return make_truncated_cone(f.R, f.M, f.n);
  if (f.kind == "truncated-cap") return make_truncated_cap(f.R, f.M, f.n);
  return make_extremal_profile(solve_extremal({f.R, f.M}));
}

/// Formats numbers with a fixed number of significant digits, independent of
/// the global locale.
class Printer {
 public:
  explicit Printer(int precision) : precision_(precision) {}

  std::string operator()(double x) const {
    std::ostringstream s;
    s.imbue(std::locale::classic());
    s.precision(precision_);
    s << x;
    return s.str();
  }

  /// Rounds every floating-point value of `j` to the display precision.
  json round(json j) const {
    if (j.is_number_float()) return std::stod((*this)(j.get<double>()));
    if (j.is_structured()) {
      for (auto& item : j) item = round(item);
    }
    return j;
  }

 private:
  int precision_;
};

std::string csv_quote(const std::string& s) {
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadBoundaryData:
    case ErrorCode::SlopeOutOfRange:
    case ErrorCode::DomainError:
    case ErrorCode::NotSpacelike:
    case ErrorCode::NotAdmissible:
    case ErrorCode::ZeroGradient:
      return kExitUsage;
    default:
      return kExitNumerical;
  }
}

// ---- commands -----------------------------------------------------------------

int cmd_table1(const Globals& g, double R, const std::vector<double>& M_list, std::ostream& out) {
  const Printer num(g.precision);
  const std::vector<Table1Row> rows = table1(R, M_list);
  if (g.format == "json") {
    json j{{"R", R}, {"rows", json::array()}};
    for (const Table1Row& r : rows) {
      j["rows"].push_back({{"M", r.M}, {"p_R", r.p_R}, {"E_extremal", r.E_extremal}, {"E_cone", r.E_cone}});
    }
    out << num.round(j).dump(2) << '\n';
    return kExitOk;
  }
  out << "M,p_R,E_extremal,E_cone\n";
  for (const Table1Row& r : rows) {
    out << num(r.M) << ',' << num(r.p_R) << ',' << num(r.E_extremal) << ',' << num(r.E_cone) << '\n';
  }
  return kExitOk;
}

int cmd_resist(const Globals& g, const ProfileFlags& f, std::ostream& out) {
  const Printer num(g.precision);
  const RadialProfile p = build_profile(f);
  std::vector<ResistanceReport> reports{resistance_radial(p, g.tol)};
  if (has_closed_form(p)) reports.push_back(resistance_closed_form(p));
  if (g.format == "json") {
    json j{{"profile", to_json(p)}, {"reports", json::array()}};
    for (const ResistanceReport& r : reports) j["reports"].push_back(to_json(r));
    out << num.round(j).dump(2) << '\n';
    return kExitOk;
  }
  out << "profile,method,value,abs_error_estimate,sloped_part\n";
  for (const ResistanceReport& r : reports) {
    out << p.kind_name() << ',' << to_string(r.method) << ',' << num(r.value) << ','
        << num(r.abs_error_estimate) << ',' << (r.sloped_part ? num(*r.sloped_part) : "") << '\n';
  }
  return kExitOk;
}

int cmd_extremal(const Globals& g, double R, double M, const std::string& curve_path, int samples,
                 std::ostream& out, std::ostream& err) {
  const Printer num(g.precision);
  const ParametricExtremal e = solve_extremal({R, M});
  const double E = extremal_resistance(e);
  if (!curve_path.empty()) {
    if (samples < 1) throw Error(ErrorCode::DomainError, "--samples must be at least 1");
    std::ofstream curve(curve_path);
    if (!curve) {
      err << "cannot open " << curve_path << " for writing\n";
      return kExitUsage;
    }
    curve << "r,u,du,d2u\n";
    for (const ExtremalEvaluation& v : sample_curve(e, samples)) {
      curve << num(v.r) << ',' << num(v.u) << ',' << num(v.du) << ',' << num(v.d2u) << '\n';
    }
  }
  if (g.format == "json") {
    json j{{"R", R}, {"M", M}, {"p_R", e.p_R}, {"c1", e.c1}, {"E", E}};
    out << num.round(j).dump(2) << '\n';
    return kExitOk;
  }
  out << "R,M,p_R,c1,E\n"
      << num(R) << ',' << num(M) << ',' << num(e.p_R) << ',' << num(e.c1) << ',' << num(E) << '\n';
  return kExitOk;
}

int cmd_check(const Globals& g, const std::string& suite, double tolerance_scale, std::ostream& out,
              std::ostream& err) {
  InvariantOptions options;
  options.tolerance_scale = tolerance_scale;
  const std::vector<CheckResult> results = run_suite(suite, options);
  int passed = 0;
  for (const CheckResult& r : results) passed += r.pass ? 1 : 0;
  const bool ok = passed == static_cast<int>(results.size());
  if (g.format == "json") {
    json j{{"suite", suite}, {"passed", ok}, {"results", json::array()}};
    for (const CheckResult& r : results) j["results"].push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    out << j.dump(2) << '\n';
  } else {
    out << "check,pass,detail\n";
    for (const CheckResult& r : results) {
      out << r.name << ',' << (r.pass ? "pass" : "FAIL") << ',' << csv_quote(r.detail) << '\n';
    }
  }
  err << passed << '/' << results.size() << " checks passed\n";
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_diverge(const Globals& g, double R, double M, int n_max, std::ostream& out, std::ostream& err) {
  if (n_max < 1) throw Error(ErrorCode::DomainError, "--n-max must be at least 1");
  const Printer num(g.precision);
  std::vector<int> ns(n_max);
  for (int n = 1; n <= n_max; ++n) ns[n - 1] = n;
  const std::vector<DivergenceRow> rows = divergence_scan(R, M, ns, g.tol);
  const std::string note =
      "E_sloped covers 0 <= r <= a_n only; E_total and E_quadrature add the flat annulus a_n < r < R";
  if (g.format == "json") {
    json j{{"R", R}, {"M", M}, {"note", note}, {"rows", json::array()}};
    for (const DivergenceRow& r : rows) {
      j["rows"].push_back({{"n", r.n}, {"a_n", r.a}, {"E_sloped", r.E_sloped}, {"E_total", r.E_total},
                           {"E_quadrature", r.E_quadrature}});
    }
    out << num.round(j).dump(2) << '\n';
  } else {
    out << "n,a_n,E_sloped,E_total,E_quadrature\n";
    for (const DivergenceRow& r : rows) {
      out << r.n << ',' << num(r.a) << ',' << num(r.E_sloped) << ',' << num(r.E_total) << ','
          << num(r.E_quadrature) << '\n';
    }
  }
  err << "note: " << note << '\n';
  return kExitOk;
}

struct SscFlags {
  ProfileFlags profile;
  bool trigonometric = false;
  int modes = 4;
  int points = 100;
  std::uint64_t seed = 1;
  double t_max = 0.0;  // 0: four domain diameters
  int n_t = 64;
  std::string probes_path;
};

int cmd_ssc(const Globals& g, const SscFlags& f, std::ostream& out, std::ostream& err) {
  const Printer num(g.precision);
  Field2D field;
  Domain2D domain;
  std::string label;
  if (f.trigonometric) {
    field = random_trigonometric_field(f.seed, f.modes);
    domain = Domain2D::rectangle(-1.0, 1.0, -1.0, 1.0);
    label = "trigonometric";
  } else {
    const RadialProfile p = build_profile(f.profile);
    field = radial_field(p);
    domain = Domain2D::disk({0.0, 0.0}, p.outer_radius());
    label = p.kind_name();
  }
  const double diam = domain.diameter();
  const double t_max = f.t_max > 0.0 ? f.t_max : 4.0 * diam;
  if (f.n_t < 1) throw Error(ErrorCode::DomainError, "--n-t must be at least 1");
  const SscSweep sweep =
      ssc_sweep(field, domain, f.points, f.seed, 1e-3, log_t_grid(std::min(1e-4 * diam, t_max), t_max, f.n_t));
  if (!f.probes_path.empty()) {
    std::ofstream probes(f.probes_path);
    if (!probes) {
      err << "cannot open " << f.probes_path << " for writing\n";
      return kExitUsage;
    }
    probes.imbue(std::locale::classic());
    probes.precision(g.precision);
    write_probe_csv(probes, sweep.probes);
  }
  const bool holds = sweep.worst_margin >= 0.0;
  if (g.format == "json") {
    json j{{"field", label}, {"points", f.points}, {"t_values", f.n_t}, {"worst_margin", sweep.worst_margin},
           {"holds", holds}};
    out << num.round(j).dump(2) << '\n';
  } else {
    out << "field,points,t_values,worst_margin,holds\n"
        << label << ',' << f.points << ',' << f.n_t << ',' << num(sweep.worst_margin) << ','
        << (holds ? "true" : "false") << '\n';
  }
  return holds ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Resistance of spacelike graphs in Lorentz-Minkowski space", "lnewton"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--tol", g.tol, "Absolute quadrature tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  app.add_option("--output", g.output, "Write results to this file instead of stdout");
  app.add_option("--precision", g.precision, "Significant digits in printed numbers")
      ->check(CLI::Range(1, 17))
      ->capture_default_str();

  double t1_R = 1.0;
  std::vector<double> t1_M{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  CLI::App* table = app.add_subcommand("table1", "Extremal and cone resistance for a list of heights");
  table->add_option("--R", t1_R, "Outer radius")->capture_default_str();
  table->add_option("--M-list", t1_M, "Comma-separated heights")->delimiter(',');

  ProfileFlags resist_flags;
  CLI::App* resist = app.add_subcommand("resist", "Resistance of a radial profile");
  add_profile_flags(resist, resist_flags);

  double ex_R = 1.0;
  double ex_M = 0.5;
  std::string ex_curve;
  int ex_samples = 200;
  CLI::App* extremal = app.add_subcommand("extremal", "Radial stationary profile with u(0) = 0, u(R) = M");
  extremal->add_option("--R", ex_R, "Outer radius")->capture_default_str();
  extremal->add_option("--M", ex_M, "Height at r = R")->capture_default_str();
  extremal->add_option("--emit-curve", ex_curve, "Write r,u,du,d2u samples to this CSV file");
  extremal->add_option("--samples", ex_samples, "Number of curve samples")->capture_default_str();

  std::string suite = "all";
  double tolerance_scale = 1.0;
  CLI::App* check = app.add_subcommand("check", "Run invariant suites");
  check->add_option("--suite", suite, "Suite")->check(CLI::IsMember(suite_names()))->capture_default_str();
  check->add_option("--test-tolerance-scale", tolerance_scale)->group("");

  double dv_R = 1.0;
  double dv_M = 0.5;
  int dv_n_max = 16;
  CLI::App* diverge = app.add_subcommand("diverge", "Resistance of the truncated cones u_n");
  diverge->add_option("--R", dv_R, "Outer radius")->capture_default_str();
  diverge->add_option("--M", dv_M, "Plateau height")->capture_default_str();
  diverge->add_option("--n-max", dv_n_max, "Largest n")->capture_default_str();

  SscFlags ssc_flags;
  CLI::App* ssc = app.add_subcommand("ssc", "Single shock condition sweep");
  add_profile_flags(ssc, ssc_flags.profile);
  ssc->add_flag("--trigonometric", ssc_flags.trigonometric, "Use a random trigonometric field on [-1, 1]^2");
  ssc->add_option("--modes", ssc_flags.modes, "Modes of the trigonometric field")->capture_default_str();
  ssc->add_option("--points", ssc_flags.points, "Random probe points")->capture_default_str();
  ssc->add_option("--seed", ssc_flags.seed, "Seed for points and fields")->capture_default_str();
  ssc->add_option("--t-max", ssc_flags.t_max, "Largest t (default four diameters)");
  ssc->add_option("--n-t", ssc_flags.n_t, "Number of t values")->capture_default_str();
  ssc->add_option("--emit-probes", ssc_flags.probes_path, "Write x,y,t,margin rows to this CSV file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ostringstream buffer;
  buffer.imbue(std::locale::classic());
  int code = kExitOk;
  try {
    if (*table) code = cmd_table1(g, t1_R, t1_M, buffer);
    if (*resist) code = cmd_resist(g, resist_flags, buffer);
    if (*extremal) code = cmd_extremal(g, ex_R, ex_M, ex_curve, ex_samples, buffer, err);
    if (*check) code = cmd_check(g, suite, tolerance_scale, buffer, err);
    if (*diverge) code = cmd_diverge(g, dv_R, dv_M, dv_n_max, buffer, err);
    if (*ssc) code = cmd_ssc(g, ssc_flags, buffer, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }

  if (g.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(g.output);
    if (!file) {
      err << "cannot open " << g.output << " for writing\n";
      return kExitUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace lnewton
