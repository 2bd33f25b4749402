#include "anharm/strongcoupling.hpp"

#include <boost/math/tools/minima.hpp>

#include <algorithm>
#include <cmath>
#include <json.hpp>

namespace anharm {

ScaledProblem symanzik_scale(const PotentialSpec& spec) {
  spec.validate();
  if (!(spec.g > 0.0)) throw ConfigError("Symanzik scaling needs g > 0");
  const int m = spec.m;
  ScaledProblem out;
  out.gamma = std::pow(spec.g, 4.0 / (m + 2));
  out.lambda_hat = 1.0 / out.gamma;
  out.energy_factor = std::pow(spec.g, 2.0 * (m - 2) / (m + 2));
  std::vector<double> c(m + 1, 0.0);
  for (int k = 2; k <= m; ++k) c[k] = spec.a[k] * std::pow(out.gamma, -(m - k));
  out.W = RadialPotential(std::move(c));
  return out;
}

GeneralStrong general_strong_coefficients(double D, double p, double a) {
  if (!(p > 0.5)) throw ConfigError("need p > 1/2");
  if (!(a > 0.0) || !(D > 0.0)) throw ConfigError("need a > 0 and D > 0");
  const double q = p + 1.0;
  const double x0 = D / q, x1 = (D + p - 1.0) / q, x2 = (D + 2.0) / q;
  if (!(x1 > 0.0)) throw ConfigError("gamma function pole: D + p - 1 must be positive");
  GeneralStrong out;
  out.eps01 = std::pow(a, 1.0 / q) * (p + D - 1.0) * std::pow(q / 2.0, (p - 1.0) / q) *
              std::exp(std::lgamma(x1) - std::lgamma(x0));
  out.e10 = std::pow(q / (2.0 * std::sqrt(a)), 2.0 / q) * std::exp(std::lgamma(x2) - std::lgamma(x0));
  return out;
}

namespace {

RadialPotential pure_cubic() { return RadialPotential({0.0, 0.0, 0.0, 1.0}); }

double cubic_extent(double D) {
  return radial_extent([](double r) { return r * r * r; }, 60.0 + D);
}

}  // namespace

SimplePipeline epsilon0_simple_pipeline(double D, int K) {
  if (!(D > 0.0)) throw ConfigError("D must be positive");
  if (K < 1 || K > 6) throw ConfigError("simple pipeline orders are limited to 1..6");
  auto phase = [](double w) {
    double s = std::sqrt(w);
    return PhaseSample{0.4 * w * w * s, w * s, 1.5 * s};
  };
  auto zero = inverse_problem(phase, D, cubic_extent(D));
  auto set = run_pt(zero, [](double w) { return w * w * w; }, K);
  SimplePipeline out;
  out.corrections = set.E;
  out.partial_sums = set.partial_sums;
  out.closed_form_first = general_strong_coefficients(D, 1.5, 1.0).eps01;
  return out;
}

ApproximantStrong epsilon0_approximant(double D) {
  TrialProblem prob{D, 1.0, pure_cubic()};
  ApproximantStrong out;
  out.result = corrected_energies(minimize(prob, {0, 0}), prob, 2);
  out.eps0_var = out.result.E_var;
  out.eps2 = out.result.E2;
  out.eps0_2 = out.result.E02;
  return out;
}

Epsilon1 epsilon1(double D, const ApproximantStrong* approximant) {
  Epsilon1 out;
  out.crude = general_strong_coefficients(D, 1.5, 1.0).e10;
  ApproximantStrong local;
  if (!approximant) {
    local = epsilon0_approximant(D);
    approximant = &local;
  }
  auto zero = approximant_zero_order(approximant->result.params, cubic_extent(D));
  auto Va = perturbation_splitting([](double w) { return w * w * w; }, zero);
  std::vector<double> w2;
  for (double w : zero.grid.nodes()) w2.push_back(w * w);
  auto ya = correction_step(zero, Va);
  auto yb = correction_step(zero, w2);
  std::vector<double> cross(w2.size());
  for (std::size_t i = 0; i < cross.size(); ++i) cross[i] = ya.y[i] * yb.y[i] * zero.weight[i];
  out.first = yb.E;
  out.correction = -2.0 * zero.grid.integrate(cross);
  out.refined = out.first + out.correction;
  return out;
}

StrongExpansion strong_expansion(double D, int K) {
  StrongExpansion s;
  s.D = D;
  s.simple = epsilon0_simple_pipeline(D, K);
  s.approximant = epsilon0_approximant(D);
  s.eps1 = epsilon1(D, &s.approximant);
  return s;
}

std::string StrongExpansion::to_json() const {
  nlohmann::json j;
  j["D"] = D;
  j["simple"] = {{"corrections", simple.corrections},
                 {"partial_sums", simple.partial_sums},
                 {"closed_form_first", simple.closed_form_first}};
  const auto& p = approximant.result.params;
  j["approximant"] = {{"eps0_var", approximant.eps0_var},
                      {"eps2", approximant.eps2},
                      {"eps0_2", approximant.eps0_2},
                      {"a0", p.a0},
                      {"a2", p.a2},
                      {"b3", p.b3}};
  j["eps1"] = {{"crude", eps1.crude}, {"first", eps1.first}, {"correction", eps1.correction}, {"refined", eps1.refined}};
  return j.dump();
}

double interpolation(double D, double a, double b, double g) {
  return D * std::pow(1.0 + a * g + std::pow(b, 5) * g * g, 0.2);
}

FitResult fit_interpolation(double D, double b, const std::vector<double>& g, const std::vector<double>& E) {
  if (g.size() != E.size() || g.empty()) throw ConfigError("fit needs matching, non-empty samples");
  auto chi2 = [&](double a) {
    double s = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      double r = interpolation(D, a, b, g[i]) / E[i] - 1.0;
      s += r * r;
    }
    return s;
  };
  auto [a, val] = boost::math::tools::brent_find_minima(chi2, 0.0, 50.0, 52);
  (void)val;
  FitResult out{a, b, 0.0};
  for (std::size_t i = 0; i < g.size(); ++i)
    out.max_relative_error = std::max(out.max_relative_error, std::abs(interpolation(D, a, b, g[i]) / E[i] - 1.0));
  return out;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  if (!(lo > 0.0) || !(hi > lo) || n < 2) throw ConfigError("bad log grid");
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo * std::pow(hi / lo, i / double(n - 1));
  return g;
}

}  // namespace anharm
