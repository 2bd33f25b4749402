#include <cmath>
#include <sstream>

#include "anharm/cli.hpp"
#include "anharm/mesh.hpp"
#include "anharm/strongcoupling.hpp"
#include "internal.hpp"

namespace anharm::cli {

namespace {

const char* const kNotReproduced = "not reproduced (out of scope)";

class DiffReport {
 public:
  explicit DiffReport(const ReferenceTable& ref) : ref_(ref) {
    os_ << "cell,value,reference,delta,tolerance,status\n";
  }

  void cell(const std::string& key, double value, double tol) { compare(key, key, value, tol); }

  // value compared with a reference stored under another key
  void compare(const std::string& label, const std::string& key, double value, double tol) {
    double r = ref_.cells.at(key);
    double d = value - r;
    bool pass = std::isfinite(value) && std::abs(d) <= tol;
    ok_ = ok_ && pass;
    os_ << quoted(label) << ',' << fmt(value) << ',' << fmt(r) << ',' << fmt(d) << ',' << fmt(tol) << ','
        << (pass ? "ok" : "FAIL") << '\n';
  }

  // upper bound without a reference value
  void bound(const std::string& label, double value, double limit) {
    bool pass = std::isfinite(value) && value <= limit;
    ok_ = ok_ && pass;
    os_ << quoted(label) << ',' << fmt(value) << ",,," << fmt(limit) << ',' << (pass ? "ok" : "FAIL") << '\n';
  }

  void missing(const std::string& label, const std::string& why) { os_ << quoted(label) << ",,,,," << why << '\n'; }

  std::string str() const { return os_.str(); }
  bool ok() const { return ok_; }

 private:
  static std::string quoted(const std::string& s) { return '"' + s + '"'; }

  const ReferenceTable& ref_;
  std::ostringstream os_;
  bool ok_ = true;
};

std::string opt(const std::optional<double>& v) { return v ? fmt(*v) : std::string(); }

const std::vector<int> kDims{1, 2, 3, 6};
const std::vector<double> kCouplings{0.1, 1.0, 10.0};

std::string key(int D, double g, const char* q) {
  std::ostringstream os;
  os << "D=" << D << ",g=" << g << ',' << q;
  return os.str();
}

StateLabel table_state(const std::string& name, int D) {
  if (name == "I") return {0, 0};
  if (name == "II") return D == 1 ? StateLabel{1, 0} : StateLabel{0, 1};
  if (name == "III") return D == 1 ? StateLabel{2, 0} : StateLabel{0, 2};
  return {1, 0};
}

TableReport energy_table(const std::string& name, const RunConfig& cfg) {
  const auto& ref = reference_table(name);
  const bool nodal = name == "IV";
  const std::vector<int> dims = nodal ? std::vector<int>{2, 3, 6} : kDims;
  std::vector<SolveJob> jobs;
  for (double g : kCouplings)
    for (int D : dims) jobs.push_back({D, g, table_state(name, D)});
  RunConfig run = cfg;
  run.orders = 3;
  run.verify = true;
  auto recs = run_jobs(jobs, run);

  std::ostringstream csv;
  csv << "g";
  for (int D : dims) {
    if (nodal) csv << ",D" << D << "_E01,D" << D << "_minus_E2,D" << D << "_r0,D" << D << "_E_mesh";
    else csv << ",D" << D << "_E01,D" << D << "_minus_E2,D" << D << "_E02,D" << D << "_E_mesh";
  }
  csv << '\n';
  DiffReport diff(ref);
  std::size_t i = 0;
  for (double g : kCouplings) {
    csv << fmt(g);
    for (int D : dims) {
      const auto& r = recs[i++];
      if (!r.error.empty()) {
        csv << ",,,,";
        diff.missing(key(D, g, "error"), r.error);
        continue;
      }
      std::optional<double> mE2;
      if (r.E2) mE2 = -*r.E2;
      if (nodal) {
        double r0 = r.nodes.empty() ? NAN : r.nodes.front();
        csv << ',' << opt(r.E_var) << ',' << kNotReproduced << ',' << fmt(r0) << ',' << opt(r.E_mesh);
        diff.cell(key(D, g, "E01"), *r.E_var, 5e-7);
        diff.missing(key(D, g, "mE2"), kNotReproduced);
        diff.cell(key(D, g, "r0"), r0, 1e-5);
        diff.bound(key(D, g, "E_mesh-E01"), *r.E_mesh - *r.E_var, 0.0);
        continue;
      }
      csv << ',' << opt(r.E_var) << ',' << opt(mE2) << ',' << opt(r.E02) << ',' << opt(r.E_mesh);
      diff.cell(key(D, g, "E01"), *r.E_var, 5e-7);
      if (ref.cells.count(key(D, g, "E02"))) {
        if (mE2) diff.cell(key(D, g, "mE2"), *mE2, 5e-7);
        if (r.E02) diff.cell(key(D, g, "E02"), *r.E02, 5e-8);
        diff.compare(key(D, g, "E_mesh"), key(D, g, "E02"), *r.E_mesh, 2e-9);
      }
      diff.bound(key(D, g, "E_mesh-E01"), *r.E_mesh - *r.E_var, 0.0);
    }
    csv << '\n';
  }
  return {csv.str(), diff.str(), diff.ok()};
}

TableReport partial_sums_table(const RunConfig& cfg) {
  const auto& ref = reference_table("V");
  auto sp = epsilon0_simple_pipeline(1.0, 6);
  double exact = detail::mesh_strong_eps0(1.0, cfg.mesh_N);
  std::ostringstream csv;
  csv << "K,partial_sum\n";
  DiffReport diff(ref);
  for (int k = 0; k <= 6; ++k) {
    csv << k << ',' << fmt(sp.partial_sums[k]) << '\n';
    diff.cell("K=" + std::to_string(k), sp.partial_sums[k], k == 0 ? 0.0 : k == 1 ? 1e-8 : 2e-5);
  }
  csv << "exact," << fmt(exact) << '\n';
  diff.cell("exact", exact, 2e-9);
  return {csv.str(), diff.str(), diff.ok()};
}

TableReport strong_table(const std::string& name, const RunConfig& cfg) {
  const auto& ref = reference_table(name);
  std::ostringstream csv;
  DiffReport diff(ref);
  if (name == "VI") csv << "D,eps0_1,minus_eps2,eps0_2,eps0_mesh\n";
  else csv << "D,eps1_1,eps11,eps1_2\n";
  for (int D : kDims) {
    auto ap = epsilon0_approximant(D);
    const std::string p = "D=" + std::to_string(D) + ",";
    if (name == "VI") {
      double mesh = detail::mesh_strong_eps0(D, cfg.mesh_N);
      csv << D << ',' << fmt(ap.eps0_var) << ',' << fmt(-ap.eps2) << ',' << fmt(ap.eps0_2) << ',' << fmt(mesh) << '\n';
      diff.cell(p + "eps0_1", ap.eps0_var, 5e-7);
      diff.cell(p + "mE2", -ap.eps2, 5e-7);
      diff.cell(p + "eps0_2", ap.eps0_2, 2e-8);
      diff.compare(p + "eps0_mesh", p + "eps0_2", mesh, 2e-9);
    } else {
      auto e1 = epsilon1(D, &ap);
      csv << D << ',' << fmt(e1.first) << ',' << fmt(e1.correction) << ',' << fmt(e1.refined) << '\n';
      diff.cell(p + "eps1_1", e1.first, 5e-6);
      diff.cell(p + "eps11", e1.correction, 5e-6);
      diff.cell(p + "eps1_2", e1.refined, 5e-6);
    }
  }
  return {csv.str(), diff.str(), diff.ok()};
}

TableReport fit_table(const RunConfig& cfg) {
  const auto& ref = reference_table("VIII");
  std::vector<FitResult> fits;
  for (int D : kDims) fits.push_back(detail::mesh_fit(D, cfg.fit_points, cfg.mesh_N));
  std::ostringstream csv;
  csv << "parameter";
  for (int D : kDims) csv << ",D=" << D;
  csv << "\na";
  for (auto& f : fits) csv << ',' << fmt(f.a);
  csv << "\nb";
  for (auto& f : fits) csv << ',' << fmt(f.b);
  csv << "\nmax_relative_error";
  for (auto& f : fits) csv << ',' << fmt(f.max_relative_error);
  csv << '\n';
  DiffReport diff(ref);
  for (std::size_t i = 0; i < kDims.size(); ++i) {
    const std::string p = "D=" + std::to_string(kDims[i]) + ",";
    diff.cell(p + "a", fits[i].a, 0.15);
    diff.cell(p + "b", fits[i].b, 5e-4);
    diff.bound(p + "max_relative_error", fits[i].max_relative_error, 0.025);
  }
  return {csv.str(), diff.str(), diff.ok()};
}

}  // namespace

TableReport cmd_table(const std::string& name, const RunConfig& cfg) {
  if (name == "I" || name == "II" || name == "III" || name == "IV") return energy_table(name, cfg);
  if (name == "V") return partial_sums_table(cfg);
  if (name == "VI" || name == "VII") return strong_table(name, cfg);
  if (name == "VIII") return fit_table(cfg);
  throw ConfigError("table must be one of I..VIII, got '" + name + "'");
}

}  // namespace anharm::cli
