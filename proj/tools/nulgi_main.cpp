// nulgi: three-flavor oscillation Leggett-Garg toolkit.
//
// Subcommands: probability, correlator, scan, sweep, simulate, reproduce,
// config. Exit codes: 0 ok, 1 validation/config error, 2 I/O error,
// 3 reproduction targets missed.

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nulgi/config.hpp"
#include "nulgi/exact_oracle.hpp"
#include "nulgi/measurement_sim.hpp"
#include "nulgi/osc_model.hpp"
#include "nulgi/reproduce.hpp"
#include "nulgi/scan.hpp"
#include "nulgi/units.hpp"

namespace {

using namespace nulgi;

struct Cli {
  std::string config_path;
  std::string out_path;
  std::string evaluator = "expansion";
  bool no_cp = false;
  double theta13_deg = 0.0;
  double alpha = 0.0;
  std::uint64_t seed = 0;

  CLI::Option* theta13_opt = nullptr;
  CLI::Option* alpha_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
};

Evaluator parse_evaluator(const std::string& name) {
  if (name == "expansion") return Evaluator::expansion;
  if (name == "oracle") return Evaluator::oracle;
  throw ConfigError("unknown evaluator '" + name +
                    "' (expected expansion or oracle)");
}

RunConfigFile effective_config(const Cli& cli) {
  RunConfigFile cfg = cli.config_path.empty() ? RunConfigFile{}
                                              : RunConfigFile::load(cli.config_path);
  if (cli.theta13_opt->count()) {
    cfg.params.theta13 = deg_to_rad(cli.theta13_deg);
  }
  if (cli.alpha_opt->count()) cfg.params.alpha_override = cli.alpha;
  if (cli.no_cp) cfg.params.delta_cp = 0.0;
  if (cli.seed_opt->count()) cfg.sim.seed = cli.seed;
  cfg.check();
  return cfg;
}

// The output sink is opened before any computation so an unwritable path
// fails fast with the I/O exit code.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) {
        throw std::ios_base::failure("cannot open output path '" + path + "'");
      }
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }
  void finish() {
    if (file_) {
      file_->flush();
      if (!*file_) throw std::ios_base::failure("write failed");
    }
  }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void triple_row(std::ostream& os, double l, const char* tag,
                const FlavorTriple& p) {
  os << csv_row({format_sig(l), tag, format_sig(p.e), format_sig(p.mu),
                 format_sig(p.tau)});
}

int cmd_probability(const Cli& cli, const std::vector<double>& lengths,
                    const std::string& evaluator) {
  const RunConfigFile cfg = effective_config(cli);
  for (const double l : lengths) {
    if (!(l >= 0.0)) throw ConfigError("lengths must be nonnegative");
  }
  Output out(cli.out_path);
  std::ostream& os = out.stream();

  const bool want_exp = evaluator == "expansion" || evaluator == "both";
  const bool want_orc = evaluator == "oracle" || evaluator == "both";
  if (!want_exp && !want_orc) {
    throw ConfigError("unknown evaluator '" + evaluator +
                      "' (expected expansion, oracle or both)");
  }
  std::unique_ptr<Propagator> prop;
  if (want_orc) prop = std::make_unique<Propagator>(cfg.params);

  os << "l_km,evaluator,p_e,p_mu,p_tau\n";
  for (const double l : lengths) {
    if (want_exp) {
      triple_row(os, l, "expansion", flavor_probabilities_from_e(cfg.params, l));
    }
    if (want_orc) {
      triple_row(os, l, "oracle", prop->probabilities_from_e(l));
    }
  }
  out.finish();
  return 0;
}

int cmd_correlator(const Cli& cli, double l1, double dl, bool l1_set,
                   bool dl_set) {
  const RunConfigFile cfg = effective_config(cli);
  BaselineSchedule schedule = cfg.schedule;
  if (l1_set) schedule.l1_km = l1;
  if (dl_set) schedule.spacing_km = dl;
  schedule.validate();

  const Evaluator ev = parse_evaluator(cli.evaluator);
  Output out(cli.out_path);
  const CorrelatorResult r = ev == Evaluator::expansion
                                 ? lgi_correlator(cfg.params, schedule)
                                 : exact_lgi_correlator(cfg.params, schedule);
  std::ostream& os = out.stream();
  os << "l1_km = " << format_sig(schedule.l1_km) << "\n"
     << "dl_km = " << format_sig(schedule.spacing_km) << "\n"
     << "evaluator = " << to_string(ev) << "\n"
     << "c12 = " << format_sig(r.c12) << "\n"
     << "c23 = " << format_sig(r.c23) << "\n"
     << "c34 = " << format_sig(r.c34) << "\n"
     << "c14 = " << format_sig(r.c14) << "\n"
     << "c_total = " << format_sig(r.c_total) << "\n";
  out.finish();
  return 0;
}

int cmd_scan(const Cli& cli, const ScanGrid& flags, const bool set[6]) {
  const RunConfigFile cfg = effective_config(cli);
  ScanGrid grid = cfg.grid;
  if (set[0]) grid.l1_min_km = flags.l1_min_km;
  if (set[1]) grid.l1_max_km = flags.l1_max_km;
  if (set[2]) grid.l1_steps = flags.l1_steps;
  if (set[3]) grid.dl_min_km = flags.dl_min_km;
  if (set[4]) grid.dl_max_km = flags.dl_max_km;
  if (set[5]) grid.dl_steps = flags.dl_steps;
  grid.validate();

  const Evaluator ev = parse_evaluator(cli.evaluator);
  Output out(cli.out_path);
  const ScanSurface surface = grid_scan(cfg.params, grid, ev);
  std::ostream& os = out.stream();
  os << "l1_km,dl_km,c\n";
  for (const ScanSample& s : surface.samples) {
    os << csv_row({format_sig(s.l1_km), format_sig(s.dl_km), format_sig(s.c)});
  }
  out.finish();
  return 0;
}

int cmd_sweep(const Cli& cli, const std::string& axis_name,
              const std::string& values_csv, bool no_refine) {
  const RunConfigFile cfg = effective_config(cli);

  SweepAxis axis;
  std::vector<double> values;
  bool degrees = false;
  if (axis_name == "theta13") {
    axis = SweepAxis::theta13;
    values = cfg.sweep_theta13;
    degrees = true;
  } else if (axis_name == "alpha") {
    axis = SweepAxis::alpha;
    values = cfg.sweep_alpha;
  } else if (axis_name == "delta_cp") {
    axis = SweepAxis::delta_cp;
    values = cfg.sweep_delta_cp;
    degrees = true;
  } else {
    throw ConfigError("unknown sweep axis '" + axis_name + "'");
  }
  if (!values_csv.empty()) {
    std::stringstream ss(values_csv);
    values.clear();
    std::string item;
    while (std::getline(ss, item, ',')) {
      values.push_back(std::stod(item));
    }
    if (degrees) {
      for (double& v : values) v = deg_to_rad(v);
    }
  }

  const Evaluator ev = parse_evaluator(cli.evaluator);
  Output out(cli.out_path);
  const auto points =
      parameter_sweep(cfg.params, axis, values, cfg.grid, !no_refine, ev);
  std::ostream& os = out.stream();
  os << "axis,value,l1_star_km,dl_star_km,c_star,evaluations,refined\n";
  for (const SweepPoint& p : points) {
    const double shown = degrees ? rad_to_deg(p.value) : p.value;
    os << csv_row({axis_name, format_sig(shown), format_sig(p.report.l1_star_km),
                   format_sig(p.report.dl_star_km), format_sig(p.report.c_star),
                   std::to_string(p.report.evaluations),
                   p.report.refined ? "1" : "0"});
  }
  out.finish();
  return 0;
}

int cmd_simulate(const Cli& cli, double l1, double dl, std::uint64_t runs,
                 bool l1_set, bool dl_set, bool runs_set) {
  const RunConfigFile cfg = effective_config(cli);
  BaselineSchedule schedule = cfg.schedule;
  if (l1_set) schedule.l1_km = l1;
  if (dl_set) schedule.spacing_km = dl;
  schedule.validate();
  const std::uint64_t n = runs_set ? runs : cfg.sim.n_runs;

  Output out(cli.out_path);
  const LgiEstimate est = simulate_lgi(cfg.params, schedule, n, cfg.sim.seed);
  std::ostream& os = out.stream();
  os << "l1_km = " << format_sig(schedule.l1_km) << "\n"
     << "dl_km = " << format_sig(schedule.spacing_km) << "\n"
     << "n_runs_per_pair = " << est.n_runs_per_pair << "\n"
     << "seed = " << est.seed << "\n"
     << "c_total_hat = " << format_sig(est.c_total.value) << "\n"
     << "c_total_se = " << format_sig(est.c_total.std_error) << "\n";
  os << "pair,first_km,second_km,c_hat,c_se,p_pp,p_pp_se,p_pm,p_pm_se,"
        "p_mp,p_mp_se,p_mm,p_mm_se,retention_trigger_on_e,"
        "retention_trigger_on_not_e\n";
  static const char* names[4] = {"12", "23", "34", "14"};
  const double firsts[4] = {schedule.l1_km, schedule.l2_km(), schedule.l3_km(),
                            schedule.l1_km};
  const double seconds[4] = {schedule.l2_km(), schedule.l3_km(),
                             schedule.l4_km(), schedule.l4_km()};
  for (int i = 0; i < 4; ++i) {
    const PairEstimate& p = est.pairs[i];
    os << csv_row(
        {names[i], format_sig(firsts[i]), format_sig(seconds[i]),
         format_sig(p.c12_hat.value), format_sig(p.c12_hat.std_error),
         format_sig(p.p_pp.value), format_sig(p.p_pp.std_error),
         format_sig(p.p_pm.value), format_sig(p.p_pm.std_error),
         format_sig(p.p_mp.value), format_sig(p.p_mp.std_error),
         format_sig(p.p_mm.value), format_sig(p.p_mm.std_error),
         format_sig(p.retention(Orientation::trigger_on_e)),
         format_sig(p.retention(Orientation::trigger_on_not_e))});
  }
  out.finish();
  return 0;
}

void print_target(std::ostream& os, const TargetOutcome& t) {
  os << (t.pass() ? "[PASS] " : "[FAIL] ") << t.name << ": C* = "
     << format_sig(t.achieved.c_star) << " target " << format_sig(t.c_target)
     << " |dC| = " << format_sig(std::abs(t.achieved.c_star - t.c_target))
     << " (tol " << format_sig(t.c_tol) << ")";
  os << "; at (" << format_sig(t.achieved.l1_star_km) << ", "
     << format_sig(t.achieved.dl_star_km) << ") km";
  if (t.l1_tol >= 0.0 || t.dl_tol >= 0.0) {
    os << " target (" << format_sig(t.l1_target) << ", "
       << format_sig(t.dl_target) << ")";
  }
  if (!t.gated) os << " [reported, ungated]";
  os << "\n";
}

int cmd_reproduce(const Cli& cli) {
  const RunConfigFile cfg = effective_config(cli);
  const Evaluator ev = parse_evaluator(cli.evaluator);
  Output out(cli.out_path);
  const ReproduceReport rep = run_reproduction(cfg.params, cfg.grid, ev);
  std::ostream& os = out.stream();

  print_target(os, rep.full);
  print_target(os, rep.theta13_zero);
  print_target(os, rep.alpha_zero_fixed);
  print_target(os, rep.alpha_zero_joint);
  print_target(os, rep.no_cp);
  for (const DerivedOutcome* d :
       {&rep.theta13_gain, &rep.cp_gain, &rep.classical_excess_pct}) {
    os << (d->pass() ? "[PASS] " : "[FAIL] ") << d->name << ": "
       << format_sig(d->achieved) << " target " << format_sig(d->target)
       << " (tol " << format_sig(d->tol) << ")\n";
  }
  os << (rep.all_pass() ? "RESULT: all targets met\n"
                        : "RESULT: some targets missed\n");
  out.finish();
  return rep.all_pass() ? 0 : 3;
}

int cmd_config(const Cli& cli) {
  const RunConfigFile cfg = effective_config(cli);
  Output out(cli.out_path);
  out.stream() << cfg.echo();
  out.finish();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-flavor neutrino oscillation Leggett-Garg toolkit"};
  app.require_subcommand(1);

  Cli cli;
  app.add_option("--config", cli.config_path, "Key-value config file");
  app.add_option("--out", cli.out_path, "Write output to this path");
  app.add_option("--evaluator", cli.evaluator,
                 "expansion (default) or oracle");
  app.add_flag("--no-cp", cli.no_cp, "Set delta_cp = 0");
  cli.theta13_opt =
      app.add_option("--theta13", cli.theta13_deg, "Override theta13, degrees");
  cli.alpha_opt = app.add_option("--alpha", cli.alpha,
                                 "Override the expansion's alpha");
  cli.seed_opt = app.add_option("--seed", cli.seed, "Simulation seed");

  auto* prob = app.add_subcommand("probability",
                                  "Flavor probabilities at given baselines");
  prob->fallthrough();
  std::vector<double> lengths;
  std::string prob_eval;
  prob->add_option("lengths", lengths, "Baselines in km")->required();
  auto* prob_eval_opt =
      prob->add_option("--evaluator", prob_eval, "expansion, oracle or both");

  auto* corr = app.add_subcommand("correlator", "LGI correlator at (l1, dl)");
  corr->fallthrough();
  double c_l1 = 0.0, c_dl = 0.0;
  auto* c_l1_opt = corr->add_option("--l1", c_l1, "First baseline, km");
  auto* c_dl_opt = corr->add_option("--dl", c_dl, "Spacing, km");

  auto* scan = app.add_subcommand("scan", "C over an (l1, dl) grid, CSV");
  scan->fallthrough();
  ScanGrid scan_flags;
  CLI::Option* scan_opts[6];
  scan_opts[0] = scan->add_option("--l1-min", scan_flags.l1_min_km, "km");
  scan_opts[1] = scan->add_option("--l1-max", scan_flags.l1_max_km, "km");
  scan_opts[2] = scan->add_option("--l1-steps", scan_flags.l1_steps, "nodes");
  scan_opts[3] = scan->add_option("--dl-min", scan_flags.dl_min_km, "km");
  scan_opts[4] = scan->add_option("--dl-max", scan_flags.dl_max_km, "km");
  scan_opts[5] = scan->add_option("--dl-steps", scan_flags.dl_steps, "nodes");

  auto* sweep = app.add_subcommand(
      "sweep", "Re-maximized C per parameter value, CSV");
  sweep->fallthrough();
  std::string axis_name;
  std::string values_csv;
  bool no_refine = false;
  sweep->add_option("--axis", axis_name, "theta13, alpha or delta_cp")
      ->required();
  sweep->add_option("--values", values_csv,
                    "Comma-separated values (degrees for angle axes)");
  sweep->add_flag("--no-refine", no_refine, "Grid maximum only");

  auto* sim = app.add_subcommand("simulate",
                                 "Monte Carlo NRM protocol estimate");
  sim->fallthrough();
  double s_l1 = 0.0, s_dl = 0.0;
  std::uint64_t s_runs = 0;
  auto* s_l1_opt = sim->add_option("--l1", s_l1, "First baseline, km");
  auto* s_dl_opt = sim->add_option("--dl", s_dl, "Spacing, km");
  auto* s_runs_opt = sim->add_option("--runs", s_runs, "Runs per pair");

  auto* repro = app.add_subcommand(
      "reproduce", "Check the four published maxima and derived deltas");
  repro->fallthrough();

  auto* conf = app.add_subcommand("config", "Echo normalized configuration");
  conf->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (prob->parsed()) {
      return cmd_probability(
          cli, lengths, prob_eval_opt->count() ? prob_eval : cli.evaluator);
    }
    if (corr->parsed()) {
      return cmd_correlator(cli, c_l1, c_dl, c_l1_opt->count() > 0,
                            c_dl_opt->count() > 0);
    }
    if (scan->parsed()) {
      bool set[6];
      for (int i = 0; i < 6; ++i) set[i] = scan_opts[i]->count() > 0;
      return cmd_scan(cli, scan_flags, set);
    }
    if (sweep->parsed()) return cmd_sweep(cli, axis_name, values_csv, no_refine);
    if (sim->parsed()) {
      return cmd_simulate(cli, s_l1, s_dl, s_runs, s_l1_opt->count() > 0,
                          s_dl_opt->count() > 0, s_runs_opt->count() > 0);
    }
    if (repro->parsed()) return cmd_reproduce(cli);
    if (conf->parsed()) return cmd_config(cli);
  } catch (const std::ios_base::failure& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
