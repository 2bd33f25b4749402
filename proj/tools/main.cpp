#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

#include "anharm/cli.hpp"

using namespace anharm;
using namespace anharm::cli;

namespace {

constexpr int kConfigError = 1;
constexpr int kNumericalError = 2;

// string-valued flags of one subcommand, applied on top of the config file
struct Flags {
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
  std::string config;
  bool verify = false;
  CLI::Option* verify_opt = nullptr;

  void add(CLI::App* app, const std::string& name, const std::string& help) {
    options[name] = app->add_option("--" + name, values[name], help);
  }

  RunConfig resolve(const std::string& command) {
    RunConfig cfg;
    if (!config.empty()) cfg = load_config(config, cfg);
    cfg.command = command;
    for (auto& [name, opt] : options)
      if (opt->count() > 0) apply_setting(cfg, name, values[name]);
    if (verify_opt && verify_opt->count() > 0) cfg.verify = verify;
    return cfg;
  }
};

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  out << text;
}

void check_states(const RunConfig& cfg) {
  for (int D : cfg.D)
    for (const auto& s : cfg.states) {
      if (D == 1 && s.ell != 0) throw ConfigError("for D = 1 give states as n,0");
      if (D == 1 && s.n_r > 5) throw ConfigError("D = 1 supports n <= 5");
      if (D > 1 && s.n_r > 2) throw ConfigError("n_r <= 2 is supported");
    }
}

int run_solve(const RunConfig& cfg) {
  check_states(cfg);
  auto recs = cmd_solve(cfg);
  std::string text, timings = "D,g,n_r,ell,seconds\n";
  if (cfg.format == Format::csv) text = csv_header() + "\n";
  bool config_error = false, numerical_error = false;
  for (const auto& r : recs) {
    text += (cfg.format == Format::csv ? to_csv_row(r) : to_json_line(r)) + "\n";
    timings += std::to_string(r.D) + "," + fmt(r.g) + "," + std::to_string(r.state.n_r) + "," +
               std::to_string(r.state.ell) + "," + fmt(r.seconds) + "\n";
    if (r.error.rfind("config:", 0) == 0) config_error = true;
    else if (!r.error.empty()) numerical_error = true;
  }
  write_text(cfg.out, text);
  if (!cfg.timings.empty()) write_text(cfg.timings, timings);
  if (config_error) return kConfigError;
  return numerical_error ? kNumericalError : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radial cubic anharmonic oscillator: Approximant, corrections, mesh checks and tables"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "variational + corrections (+ mesh with --verify) per (D, g, state)");
  auto* table = app.add_subcommand("table", "regenerate a reference table (I..VIII) with a diff report");
  auto* series = app.add_subcommand("series", "exact weak-coupling series of the unit cubic");
  auto* strong = app.add_subcommand("strong", "strong-coupling coefficients as JSON lines");
  auto* fit = app.add_subcommand("fit", "interpolation fit a, b per D as CSV");

  std::map<CLI::App*, Flags> flags;
  for (auto* sub : {solve, table, series, strong, fit}) {
    auto& f = flags[sub];
    sub->add_option("--config", f.config, "key = value file; flags override it");
    f.add(sub, "D", "comma separated integer dimensions");
    f.add(sub, "mesh-N", "mesh size (10..50)");
    f.add(sub, "out", "output path (default stdout)");
    f.add(sub, "jobs", "worker threads");
    f.add(sub, "seed", "recorded only; the pipeline is deterministic");
  }
  {
    auto& f = flags[solve];
    f.add(solve, "g", "comma separated couplings");
    f.add(solve, "state", "n_r,ell (D = 1: n,0); several separated by ';'");
    f.add(solve, "orders", "1 variational only, 2 adds E2, 3 adds E3");
    f.add(solve, "tol", "optimizer simplex size tolerance");
    f.add(solve, "format", "json or csv");
    f.add(solve, "timings", "write per-record timings to this file");
    f.verify_opt = solve->add_flag("--verify,!--no-verify", f.verify, "add the mesh eigenvalue and wavefunction check");
  }
  std::string table_name, diff_path;
  table->add_option("name", table_name, "I, II, ..., VIII")->required();
  table->add_option("--diff", diff_path, "diff report path (default stderr)");
  flags[table].add(table, "points", "g samples for table VIII");
  bool cubic = true;
  series->add_flag("--cubic", cubic, "unit cubic V = u^2 + u^3 (the only family exported)");
  flags[series].add(series, "Z", "index n of Z_n");
  flags[series].add(series, "c", "export c0, c2 up to this order instead");
  flags[series].add(series, "order", "highest power of u");
  flags[series].add(series, "eps", "comma separated rationals eps_0, eps_1, ...");
  flags[fit].add(fit, "points", "number of log-spaced g in [0.01, 100]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  try {
    if (solve->parsed()) return run_solve(flags[solve].resolve("solve"));
    if (table->parsed()) {
      auto cfg = flags[table].resolve("table");
      cfg.table = table_name;
      auto rep = cmd_table(table_name, cfg);
      write_text(cfg.out, rep.csv);
      if (diff_path.empty()) std::cerr << rep.diff;
      else write_text(diff_path, rep.diff);
      return rep.all_within ? 0 : kNumericalError;
    }
    if (series->parsed()) {
      auto cfg = flags[series].resolve("series");
      write_text(cfg.out, cmd_series(cfg));
      return 0;
    }
    if (strong->parsed()) {
      auto cfg = flags[strong].resolve("strong");
      write_text(cfg.out, cmd_strong(cfg));
      return 0;
    }
    if (fit->parsed()) {
      auto cfg = flags[fit].resolve("fit");
      write_text(cfg.out, cmd_fit(cfg));
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumericalError;
  }
  return 0;
}
