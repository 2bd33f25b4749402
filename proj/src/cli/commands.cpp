#include <json.hpp>
#include <sstream>

#include "anharm/cli.hpp"
#include "anharm/mesh.hpp"
#include "anharm/series.hpp"
#include "anharm/strongcoupling.hpp"
#include "internal.hpp"

namespace anharm::cli {

namespace detail {

double mesh_strong_eps0(double D, int N) {
  return scale_scan([](double r) { return r * r * r; }, D, {0, 0}, N).energy;
}

FitResult mesh_fit(int D, int points, int N) {
  const double b = mesh_strong_eps0(D, N) / D;
  auto g = log_grid(0.01, 100.0, points);
  std::vector<double> E;
  for (double gi : g) E.push_back(mesh_energy(PotentialSpec::cubic(D, gi), {0, 0}, N));
  return fit_interpolation(D, b, g, E);
}

}  // namespace detail

namespace {

Rational parse_rational(const std::string& s) {
  try {
    Rational q(s);
    q.canonicalize();
    return q;
  } catch (const std::exception&) {
    throw ConfigError("not a rational number: " + s);
  }
}

}  // namespace

// Z_n of the unit cubic V = u^2 + u^3 (u = g r) as exact Laurent coefficients,
// or the large-v coefficients c0, c2 when --c is given.
std::string cmd_series(const RunConfig& cfg) {
  const Rational D(cfg.D.front());
  std::ostringstream os;
  if (cfg.c_order >= 0) {
    auto c = c_recurrences(cfg.c_order, D);
    os << "n,c0,c2\n";
    for (int n = 0; n <= cfg.c_order; ++n) os << n << ',' << c.c0[n].get_str() << ',' << c.c2[n].get_str() << '\n';
    return os.str();
  }
  const int n = cfg.z_order < 0 ? 0 : cfg.z_order;
  std::vector<Rational> eps{D};
  if (!cfg.eps.empty()) {
    eps.clear();
    for (const auto& e : cfg.eps) eps.push_back(parse_rational(e));
  }
  auto Z = gb_weak_series(D, {Rational(0), Rational(0), Rational(1), Rational(1)}, eps, n, cfg.precision + 1);
  os << "power,coefficient\n";
  for (const auto& [p, c] : Z[n].terms()) os << p << ',' << c.get_str() << '\n';
  return os.str();
}

std::string cmd_strong(const RunConfig& cfg) {
  std::ostringstream os;
  for (int D : cfg.D) {
    auto s = strong_expansion(D, 6);
    auto j = nlohmann::json::parse(s.to_json());
    j["eps0_mesh"] = detail::mesh_strong_eps0(D, cfg.mesh_N);
    os << j.dump() << '\n';
  }
  return os.str();
}

std::string cmd_fit(const RunConfig& cfg) {
  std::ostringstream os;
  os << "D,a,b,max_relative_error\n";
  for (int D : cfg.D) {
    auto f = detail::mesh_fit(D, cfg.fit_points, cfg.mesh_N);
    os << D << ',' << fmt(f.a) << ',' << fmt(f.b) << ',' << fmt(f.max_relative_error) << '\n';
  }
  return os.str();
}

}  // namespace anharm::cli
