#include "zenolab_cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <utility>

#include "zenolab/errors.hpp"
#include "zenolab/oracle.hpp"
#include "zenolab/resolvent.hpp"
#include "zenolab/self_energy.hpp"

namespace zenolab::cli {
namespace {

using cplx = std::complex<double>;

std::string f17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct KeyValues {
  std::vector<std::pair<std::string, std::string>> rows;
  void add(const std::string& k, double v) { rows.emplace_back(k, f17(v)); }
  void add(const std::string& k, const std::string& v) { rows.emplace_back(k, v); }
};

void write_keyvalues(std::ostream& os, const KeyValues& kv, Format format) {
  switch (format) {
    case Format::table:
      for (const auto& [k, v] : kv.rows) os << k << " = " << v << "\n";
      break;
    case Format::csv:
      os << "key,value\n";
      for (const auto& [k, v] : kv.rows) os << k << "," << v << "\n";
      break;
    case Format::json: {
      os << "{";
      bool first = true;
      for (const auto& [k, v] : kv.rows) {
        os << (first ? "" : ",") << "\n  \"" << k << "\": " << v;
        first = false;
      }
      os << "\n}\n";
      break;
    }
  }
}

// table format degrades to csv for row-oriented output
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

void write_table(std::ostream& os, const Table& t, Format format) {
  if (format == Format::json) {
    os << "{\n  \"samples\": [";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      os << (r ? "," : "") << "\n    {";
      for (std::size_t c = 0; c < t.header.size(); ++c)
        os << (c ? ", " : "") << "\"" << t.header[c] << "\": " << f17(t.rows[r][c]);
      os << "}";
    }
    os << "\n  ]\n}\n";
    return;
  }
  for (std::size_t c = 0; c < t.header.size(); ++c)
    os << (c ? "," : "") << t.header[c];
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << f17(row[c]);
    os << "\n";
  }
}

// Output sink: stdout by default, file when requested. Failure to open or a
// failed stream after writing maps to the I/O exit code.
class Sink {
public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::ios_base::failure("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  void finish() {
    stream().flush();
    if (!stream()) throw std::ios_base::failure("output stream failure");
  }

private:
  std::ofstream file_;
};

struct GridArgs {
  double tmin = 0.0, tmax = 0.0;
  int points = 100;
  std::string scale = "log";

  TimeGrid grid() const {
    TimeGrid g;
    g.t_min = tmin;
    g.t_max = tmax;
    g.points = points;
    g.scale = scale == "linear" ? TimeGrid::Scale::linear : TimeGrid::Scale::log;
    return g;
  }
};

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> xs(n);
  const double l0 = std::log(lo), l1 = std::log(hi);
  for (int i = 0; i < n; ++i) xs[i] = std::exp(l0 + (l1 - l0) * i / (n - 1));
  xs.front() = lo;
  xs.back() = hi;
  return xs;
}

Format series_format(const RunConfig& rc) {
  // series data defaults to csv; an explicit --format table also means csv
  if (!rc.format_given || rc.format == Format::table) return Format::csv;
  return rc.format;
}

int dispatch_constants(const RunConfig& rc) {
  const auto p = rc.make_params();
  const auto pole = find_pole(p, rc.pole_tol);
  KeyValues kv;
  if (rc.z >= 1) {
    PhysicalConstants c = codata_constants();
    if (rc.alpha_override > 0.0) c.alpha = rc.alpha_override;
    kv.add("alpha", c.alpha);
    kv.add("m_e_rad_per_s", c.m_e);
  }
  kv.add("z", static_cast<double>(p.z));
  kv.add("cutoff_lambda_rad_per_s", p.cutoff_lambda);
  kv.add("chi", p.chi);
  kv.add("a", p.a);
  kv.add("omega0_rad_per_s", p.omega0);
  kv.add("zeno_time_s", zeno_time(p, false));
  kv.add("zeno_time_corrected_s", zeno_time(p, true));
  kv.add("gamma_per_s", pole.gamma);
  kv.add("lifetime_s", 1.0 / pole.gamma);
  kv.add("delta_e_rad_per_s", pole.delta_e);
  kv.add("cut_prefactor_minus_1", cut_prefactor(p) - 1.0);
  Sink sink(rc.output);
  write_keyvalues(sink.stream(), kv, rc.format);
  sink.finish();
  return kExitOk;
}

int dispatch_pole(const RunConfig& rc, bool leading) {
  const auto p = rc.make_params();
  const PoleData pole = leading ? perturbative_pole(p) : find_pole(p, rc.pole_tol);
  KeyValues kv;
  kv.add("method", leading ? std::string("\"leading-order\"") : std::string("\"exact\""));
  kv.add("s_pole_re", pole.s_pole.real());
  kv.add("s_pole_im", pole.s_pole.imag());
  kv.add("gamma_per_s", pole.gamma);
  kv.add("lifetime_s", 1.0 / pole.gamma);
  kv.add("delta_e_rad_per_s", pole.delta_e);
  kv.add("delta_e_over_chi_lambda", pole.delta_e / (p.chi * p.cutoff_lambda));
  kv.add("residue_modulus", pole.residue_modulus);
  kv.add("residue_phase", pole.residue_phase);
  Sink sink(rc.output);
  write_keyvalues(sink.stream(), kv, rc.format);
  sink.finish();
  return kExitOk;
}

int dispatch_survival(const RunConfig& rc, const GridArgs& g) {
  const auto p = rc.make_params();
  const auto pole = find_pole(p, rc.pole_tol);
  const auto samples = timeseries(p, pole, rc.cut_spec(), g.grid());
  Sink sink(rc.output);
  emit(sink.stream(), p, samples, series_format(rc));
  sink.finish();
  return kExitOk;
}

int dispatch_crossover(const RunConfig& rc) {
  const auto p = rc.make_params();
  const auto pole = find_pole(p, rc.pole_tol);
  const auto cx = crossover_time(p, pole, rc.cut_spec());
  KeyValues kv;
  kv.add("t_equation_s", cx.t_equation);
  kv.add("lifetimes_equation", cx.lifetimes_equation);
  kv.add("t_amplitude_s", cx.t_amplitude);
  kv.add("lifetimes_amplitude", cx.lifetimes_amplitude);
  kv.add("residual", cx.residual);
  Sink sink(rc.output);
  write_keyvalues(sink.stream(), kv, rc.format);
  sink.finish();
  return kExitOk;
}

int dispatch_spectrum(const RunConfig& rc, double xmin, double xmax, int points) {
  const auto p = rc.make_params();
  Table t;
  t.header = {"x", "w"};
  for (double x : log_grid(xmin, xmax, points)) t.rows.push_back({x, spectral_density(x, p)});
  Sink sink(rc.output);
  write_table(sink.stream(), t, series_format(rc));
  sink.finish();
  return kExitOk;
}

int dispatch_selfenergy(const RunConfig& rc, double sre, double sim, int sheet,
                        bool check_quadrature) {
  const cplx s{sre, sim};
  const SheetPoint pt{s, sheet == 2 ? Sheet::second : Sheet::first};
  const cplx q = qbar(pt);
  KeyValues kv;
  kv.add("s_re", sre);
  kv.add("s_im", sim);
  kv.add("sheet", static_cast<double>(sheet));
  kv.add("qbar_re", q.real());
  kv.add("qbar_im", q.imag());
  const cplx dq = qbar_derivative(pt);
  kv.add("qbar_prime_re", dq.real());
  kv.add("qbar_prime_im", dq.imag());
  if (check_quadrature) {
    const cplx qq = qbar_quadrature(s, rc.quad_tol);
    kv.add("quadrature_re", qq.real());
    kv.add("quadrature_im", qq.imag());
    kv.add("abs_difference", std::abs(q - qq));
  }
  Sink sink(rc.output);
  write_keyvalues(sink.stream(), kv, rc.format);
  sink.finish();
  return kExitOk;
}

struct OracleArgs {
  std::string which;
  double tau_min = 0.01, tau_max = 100.0;
  int points = 50;
  double abscissa = 0.5;
  int n_modes = 1500;
  double x_max = 20.0;
};

std::vector<cplx> run_oracle(const OracleArgs& oa, const RunConfig& rc,
                             const AtomParams& p, const std::vector<double>& taus) {
  if (oa.which == "bromwich") {
    std::vector<cplx> ys;
    ys.reserve(taus.size());
    for (double tau : taus)
      ys.push_back(bromwich_inverse(tau, p, oa.abscissa, rc.quad_tol));
    return ys;
  }
  if (oa.which == "spectral") {
    std::vector<cplx> ys;
    ys.reserve(taus.size());
    for (double tau : taus) ys.push_back(spectral_inverse(tau, p, rc.quad_tol));
    return ys;
  }
  const auto model = build_discretized_model(p, oa.n_modes, oa.x_max);
  if (!model.resolution_ok)
    std::cerr << "warning: level spacing near the resonance exceeds its width;"
                 " increase --n-modes\n";
  return evaluate_survival(model, taus);
}

int dispatch_oracle(const RunConfig& rc, const OracleArgs& oa) {
  const auto p = rc.make_params();
  const auto taus = log_grid(oa.tau_min, oa.tau_max, oa.points);
  const auto ys = run_oracle(oa, rc, p, taus);
  Table t;
  t.header = {"tau", "t_s", "y_re", "y_im", "p"};
  for (std::size_t i = 0; i < taus.size(); ++i)
    t.rows.push_back({taus[i], seconds_from_tau(p, taus[i]), ys[i].real(),
                      ys[i].imag(), std::norm(ys[i])});
  Sink sink(rc.output);
  write_table(sink.stream(), t, series_format(rc));
  sink.finish();
  return kExitOk;
}

int dispatch_compare(const RunConfig& rc, const OracleArgs& oa, const GridArgs& g) {
  const auto p = rc.make_params();
  const auto pole = find_pole(p, rc.pole_tol);
  const auto spec = rc.cut_spec();

  std::vector<double> taus;
  for (const double t : log_grid(g.tmin, g.tmax, g.points))
    taus.push_back(dimensionless_time(p, t));
  const auto oracle_ys = run_oracle(oa, rc, p, taus);

  Table t;
  t.header = {"t_s", "tau", "y_re", "y_im", "oracle_re", "oracle_im", "abs_err"};
  double max_err = 0.0, sum_err = 0.0;
  for (std::size_t i = 0; i < taus.size(); ++i) {
    const cplx rep = y_pole_term(taus[i], pole) + y_cut_term(taus[i], p, spec);
    const double err = std::abs(rep - oracle_ys[i]);
    max_err = std::max(max_err, err);
    sum_err += err;
    t.rows.push_back({seconds_from_tau(p, taus[i]), taus[i], rep.real(), rep.imag(),
                      oracle_ys[i].real(), oracle_ys[i].imag(), err});
  }
  Sink sink(rc.output);
  write_table(sink.stream(), t, series_format(rc));
  sink.finish();
  std::cerr << "max_abs_error=" << f17(max_err)
            << " mean_abs_error=" << f17(sum_err / taus.size()) << "\n";
  return kExitOk;
}

}  // namespace

AtomParams RunConfig::make_params() const {
  if (z == 0) {
    if (!(chi_override > 0.0) || !(a_override > 0.0))
      throw std::domain_error("synthetic mode (--z 0) requires --chi and --a");
    const double lam = cutoff_override > 0.0 ? cutoff_override : 1.0;
    return custom_params(lam, chi_override, a_override);
  }
  if (chi_override > 0.0 || a_override > 0.0 || cutoff_override > 0.0)
    throw std::domain_error("hydrogen mode forbids --chi/--a/--cutoff-lambda overrides");
  PhysicalConstants c = codata_constants();
  if (alpha_override > 0.0) c.alpha = alpha_override;
  return hydrogen_params(c, z);
}

CutQuadratureSpec RunConfig::cut_spec() const {
  CutQuadratureSpec spec;
  spec.method = laguerre ? CutMethod::gauss_laguerre : CutMethod::adaptive_truncated;
  spec.tolerance = quad_tol;
  return spec;
}

void emit(std::ostream& os, const AtomParams& params,
          std::span<const SurvivalSample> samples, Format format) {
  if (samples.empty()) throw std::domain_error("emit: no samples");
  if (format == Format::json) {
    os << "{\n  \"params\": {\"z\": " << params.z
       << ", \"cutoff_lambda\": " << f17(params.cutoff_lambda)
       << ", \"chi\": " << f17(params.chi) << ", \"a\": " << f17(params.a)
       << ", \"omega0\": " << f17(params.omega0) << "},\n  \"samples\": [";
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const auto& s = samples[i];
      os << (i ? "," : "") << "\n    {\"t_s\": " << f17(s.t) << ", \"tau\": " << f17(s.tau)
         << ", \"p\": " << f17(s.p)
         << ", \"p_exponential\": " << f17(std::norm(s.y_pole))
         << ", \"p_powerlaw\": " << f17(std::norm(s.y_cut))
         << ", \"p_interference\": " << f17(2.0 * (s.y_pole * std::conj(s.y_cut)).real())
         << ", \"y_re\": " << f17(s.y.real()) << ", \"y_im\": " << f17(s.y.imag())
         << ", \"h\": " << f17(s.h) << ", \"eta\": " << f17(s.eta) << "}";
    }
    os << "\n  ]\n}\n";
    return;
  }
  os << "t_s,tau,p,p_exponential,p_powerlaw,p_interference,y_re,y_im,h,eta\n";
  for (const auto& s : samples) {
    os << f17(s.t) << "," << f17(s.tau) << "," << f17(s.p) << ","
       << f17(std::norm(s.y_pole)) << "," << f17(std::norm(s.y_cut)) << ","
       << f17(2.0 * (s.y_pole * std::conj(s.y_cut)).real()) << "," << f17(s.y.real())
       << "," << f17(s.y.imag()) << "," << f17(s.h) << "," << f17(s.eta) << "\n";
  }
}

int run(int argc, const char* const* argv) {
  CLI::App app{"exact temporal behavior of an excited two-level emitter:"
               " zeno region, exponential era, and power-law tail"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand name
  app.set_config("--config")->envname("ZENOLAB_CONFIG");

  RunConfig rc;
  std::string format_name = "table";
  app.add_option("--z", rc.z, "nuclear charge; 0 selects synthetic mode")
      ->capture_default_str();
  app.add_option("--alpha", rc.alpha_override, "fine-structure constant override");
  app.add_option("--chi", rc.chi_override, "synthetic coupling");
  app.add_option("--a", rc.a_override, "synthetic transition frequency (units of the cutoff)");
  app.add_option("--cutoff-lambda", rc.cutoff_override, "synthetic cutoff [rad/s]");
  app.add_option("--quad-tol", rc.quad_tol, "quadrature tolerance")->capture_default_str();
  app.add_option("--pole-tol", rc.pole_tol, "pole search tolerance")->capture_default_str();
  app.add_flag("--laguerre", rc.laguerre, "use the fixed gauss-laguerre cut rule where valid");
  app.add_option("--output", rc.output, "output file (default: stdout)");
  auto* fmt_opt = app.add_option("--format", format_name, "table|csv|json")
                      ->check(CLI::IsMember({"table", "csv", "json"}))
                      ->capture_default_str();

  auto* constants_cmd = app.add_subcommand("constants", "derived scales and decay data");
  auto* pole_cmd = app.add_subcommand("pole", "second-sheet pole report");
  bool leading = false;
  pole_cmd->add_flag("--leading-order", leading, "golden-rule values instead of the exact pole");

  GridArgs sg;
  auto* survival_cmd = app.add_subcommand("survival", "survival probability time series");
  survival_cmd->add_option("--tmin", sg.tmin, "start time [s]")->required();
  survival_cmd->add_option("--tmax", sg.tmax, "end time [s]")->required();
  survival_cmd->add_option("--points", sg.points, "grid size")->capture_default_str();
  survival_cmd->add_option("--scale", sg.scale, "log|linear")
      ->check(CLI::IsMember({"log", "linear"}))
      ->capture_default_str();

  auto* crossover_cmd = app.add_subcommand("crossover", "exponential-to-power-law transition");

  double xmin = 1e-4, xmax = 10.0;
  int xpoints = 200;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "continuum spectral density");
  spectrum_cmd->add_option("--xmin", xmin, "lower frequency (units of the cutoff)")
      ->capture_default_str();
  spectrum_cmd->add_option("--xmax", xmax, "upper frequency")->capture_default_str();
  spectrum_cmd->add_option("--points", xpoints, "grid size")->capture_default_str();

  double sre = 1.0, sim = 0.0;
  int sheet = 1;
  bool check_quad = false;
  auto* se_cmd = app.add_subcommand("selfenergy", "reduced self-energy at one point");
  se_cmd->add_option("--s-re", sre, "Re s")->capture_default_str();
  se_cmd->add_option("--s-im", sim, "Im s")->capture_default_str();
  se_cmd->add_option("--sheet", sheet, "1|2")->check(CLI::IsMember({1, 2}))
      ->capture_default_str();
  se_cmd->add_flag("--check-quadrature", check_quad,
                   "also integrate the defining representation");

  OracleArgs oa;
  auto* oracle_cmd = app.add_subcommand("oracle", "brute-force survival amplitude");
  oracle_cmd->add_option("method", oa.which, "bromwich|spectral|discrete")
      ->required()
      ->check(CLI::IsMember({"bromwich", "spectral", "discrete"}));
  oracle_cmd->add_option("--tau-min", oa.tau_min, "start time (units of 1/cutoff)")
      ->capture_default_str();
  oracle_cmd->add_option("--tau-max", oa.tau_max, "end time")->capture_default_str();
  oracle_cmd->add_option("--points", oa.points, "grid size")->capture_default_str();
  oracle_cmd->add_option("--abscissa", oa.abscissa, "line position (bromwich)")
      ->capture_default_str();
  oracle_cmd->add_option("--n-modes", oa.n_modes, "field modes (discrete)")
      ->capture_default_str();
  oracle_cmd->add_option("--x-max", oa.x_max, "frequency cut (discrete)")
      ->capture_default_str();

  OracleArgs ca;
  GridArgs cg;
  cg.points = 25;
  auto* compare_cmd =
      app.add_subcommand("compare", "pole+cut representation against an oracle");
  compare_cmd->add_option("--oracle", ca.which, "bromwich|spectral|discrete")
      ->required()
      ->check(CLI::IsMember({"bromwich", "spectral", "discrete"}));
  compare_cmd->add_option("--tmin", cg.tmin, "start time [s]")->required();
  compare_cmd->add_option("--tmax", cg.tmax, "end time [s]")->required();
  compare_cmd->add_option("--points", cg.points, "grid size")->capture_default_str();
  compare_cmd->add_option("--abscissa", ca.abscissa, "line position (bromwich)")
      ->capture_default_str();
  compare_cmd->add_option("--n-modes", ca.n_modes, "field modes (discrete)")
      ->capture_default_str();
  compare_cmd->add_option("--x-max", ca.x_max, "frequency cut (discrete)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (fmt_opt->count() > 0) rc.format_given = true;
  rc.format = format_name == "csv" ? Format::csv
              : format_name == "json" ? Format::json
                                      : Format::table;

  try {
    if (*constants_cmd) return dispatch_constants(rc);
    if (*pole_cmd) return dispatch_pole(rc, leading);
    if (*survival_cmd) return dispatch_survival(rc, sg);
    if (*crossover_cmd) return dispatch_crossover(rc);
    if (*spectrum_cmd) return dispatch_spectrum(rc, xmin, xmax, xpoints);
    if (*se_cmd) return dispatch_selfenergy(rc, sre, sim, sheet, check_quad);
    if (*oracle_cmd) return dispatch_oracle(rc, oa);
    if (*compare_cmd) return dispatch_compare(rc, ca, cg);
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerics;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args) {
  std::vector<std::string> full;
  full.reserve(args.size() + 1);
  full.push_back("zenolab");
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(full.size());
  for (const auto& s : full) argv.push_back(s.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace zenolab::cli
