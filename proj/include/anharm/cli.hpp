#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "anharm/core.hpp"

namespace anharm::cli {

enum class Format { json, csv };

struct RunConfig {
  std::string command;
  std::vector<int> D{1};
  std::vector<double> g{1.0};
  std::vector<StateLabel> states{{0, 0}};  // for D = 1: {n, 0} with n the excitation number
  int orders = 2;
  bool verify = false;
  int mesh_N = 50;
  double size_tol = 1e-8;
  Format format = Format::json;
  std::string out;      // empty: stdout
  std::string timings;  // empty: not written
  int jobs = 1;
  unsigned seed = 0;
  // table / series / fit
  std::string table;
  int z_order = -1;      // series --Z n
  int c_order = -1;      // series --c N
  int precision = 8;     // series --order
  std::vector<std::string> eps;  // rational eps_0.. for series
  int fit_points = 25;
};

// key = value; '#' starts a comment; keys are the long flag names without dashes
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);
RunConfig load_config(const std::string& path, RunConfig base = {});
std::string dump_config(const RunConfig& cfg);

struct SpectralResult {
  int D = 1;
  double g = 0.0;
  StateLabel state;  // as requested
  std::optional<double> E_var, E2, E3, E02, E03, E_mesh, max_deviation;
  std::vector<double> nodes;
  std::optional<double> a0, a2, b3;
  std::string error;
  double seconds = 0.0;
};

std::string to_json_line(const SpectralResult& r);
std::string csv_header();
std::string to_csv_row(const SpectralResult& r);
// 12 significant digits, '.' decimal
std::string fmt(double x);

SpectralResult solve_one(int D, double g, const StateLabel& state, const RunConfig& cfg);
struct SolveJob {
  int D = 1;
  double g = 0.0;
  StateLabel state;
};
// runs on cfg.jobs threads; results keep the order of the jobs
std::vector<SpectralResult> run_jobs(const std::vector<SolveJob>& jobs, const RunConfig& cfg);
std::vector<SpectralResult> cmd_solve(const RunConfig& cfg);

// reference values, keyed by cell name (e.g. "D=2,g=1,E02")
struct ReferenceTable {
  std::string name;
  std::map<std::string, double> cells;
};
const ReferenceTable& reference_table(const std::string& name);
extern const char* const reference_version;

struct TableReport {
  std::string csv;   // regenerated content
  std::string diff;  // cell, value, reference, delta, tolerance, status
  bool all_within = true;
};
TableReport cmd_table(const std::string& name, const RunConfig& cfg);

std::string cmd_series(const RunConfig& cfg);
std::string cmd_strong(const RunConfig& cfg);
std::string cmd_fit(const RunConfig& cfg);

}  // namespace anharm::cli
