#include <atomic>
#include <chrono>
#include <cstdio>
#include <json.hpp>
#include <thread>

#include "anharm/cli.hpp"
#include "anharm/mesh.hpp"
#include "anharm/variational.hpp"

namespace anharm::cli {

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace {

StateLabel internal_state(int D, const StateLabel& s) {
  if (D != 1) return s;
  if (s.ell != 0) throw ConfigError("D = 1 states are given as n,0");
  return one_dimensional_state(s.n_r);
}

std::string opt_csv(const std::optional<double>& v) { return v ? fmt(*v) : std::string(); }

}  // namespace

SpectralResult solve_one(int D, double g, const StateLabel& state, const RunConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  SpectralResult rec;
  rec.D = D;
  rec.g = g;
  rec.state = state;
  try {
    const auto spec = PotentialSpec::cubic(D, g);
    const auto st = internal_state(D, state);
    MinimizeOptions opts;
    opts.size_tol = cfg.size_tol;
    auto res = minimize(spec, st, std::nullopt, opts);
    rec.E_var = res.E_var;
    rec.a0 = res.params.a0;
    rec.a2 = res.params.a2;
    rec.b3 = res.params.b3;
    rec.nodes = res.nodes;
    if (st.n_r == 0 && cfg.orders >= 2) {
      res = corrected_energies(res, spec, cfg.orders);
      rec.E2 = res.E2;
      rec.E02 = res.E02;
      if (cfg.orders >= 3) {
        rec.E3 = res.E3;
        rec.E03 = res.E03;
      }
    }
    if (cfg.verify) {
      auto ms = mesh_state(spec, st, cfg.mesh_N);
      rec.E_mesh = ms.values.at(st.n_r);
      if (st.n_r == 0) {
        auto zero = approximant_zero_order(res.params, problem_extent(spec, st));
        rec.max_deviation = deviation_metrics(zero, ms.r, ms.vectors.at(0), 1e-10).max_relative;
      }
    }
  } catch (const ConfigError& e) {
    rec.error = std::string("config: ") + e.what();
  } catch (const std::exception& e) {
    rec.error = std::string("numerical: ") + e.what();
  }
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rec;
}

std::vector<SpectralResult> run_jobs(const std::vector<SolveJob>& jobs, const RunConfig& cfg) {
  std::vector<SpectralResult> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < jobs.size();) out[i] = solve_one(jobs[i].D, jobs[i].g, jobs[i].state, cfg);
  };
  const int n = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(jobs.size())));
  std::vector<std::thread> pool;
  for (int k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

std::vector<SpectralResult> cmd_solve(const RunConfig& cfg) {
  std::vector<SolveJob> jobs;
  for (int D : cfg.D)
    for (double g : cfg.g)
      for (const auto& s : cfg.states) jobs.push_back({D, g, s});
  return run_jobs(jobs, cfg);
}

std::string to_json_line(const SpectralResult& r) {
  nlohmann::ordered_json j;
  j["D"] = r.D;
  j["g"] = r.g;
  if (r.D == 1) j["state"] = {{"n", r.state.n_r}};
  else j["state"] = {{"n_r", r.state.n_r}, {"ell", r.state.ell}};
  auto put_o = [&](const char* k, const std::optional<double>& v) {
    if (v) j[k] = *v;
  };
  put_o("E_var", r.E_var);
  put_o("E2", r.E2);
  put_o("E3", r.E3);
  put_o("E02", r.E02);
  put_o("E03", r.E03);
  put_o("E_mesh", r.E_mesh);
  if (!r.nodes.empty()) j["nodes"] = r.nodes;
  put_o("max_deviation", r.max_deviation);
  if (r.a0) j["params"] = {{"a0", *r.a0}, {"a2", *r.a2}, {"b3", *r.b3}};
  if (!r.error.empty()) j["error"] = r.error;
  return j.dump();
}

std::string csv_header() { return "D,g,n_r,ell,E_var,E2,E3,E02,E03,E_mesh,nodes,max_deviation,a0,a2,b3,error"; }

std::string to_csv_row(const SpectralResult& r) {
  std::string nodes;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) nodes += (i ? ";" : "") + fmt(r.nodes[i]);
  std::string err = r.error;
  if (!err.empty()) {
    std::string q = "\"";
    for (char c : err) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
    err = q + "\"";
  }
  return std::to_string(r.D) + "," + fmt(r.g) + "," + std::to_string(r.state.n_r) + "," +
         std::to_string(r.state.ell) + "," + opt_csv(r.E_var) + "," + opt_csv(r.E2) + "," + opt_csv(r.E3) + "," +
         opt_csv(r.E02) + "," + opt_csv(r.E03) + "," + opt_csv(r.E_mesh) + "," + nodes + "," +
         opt_csv(r.max_deviation) + "," + opt_csv(r.a0) + "," + opt_csv(r.a2) + "," + opt_csv(r.b3) + "," + err;
}

}  // namespace anharm::cli
