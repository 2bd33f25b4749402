#include "anharm/variational.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>

#include <algorithm>
#include <array>
#include <cmath>

namespace anharm {

TrialProblem trial_problem(const PotentialSpec& spec) {
  spec.validate();
  return {spec.D, spec.g, spec.radial()};
}

double problem_extent(const TrialProblem& prob, const StateLabel& state) {
  const auto& V = prob.V;
  return radial_extent([&V](double r) { return V(r); }, 60.0 + effective_dimension(prob.D, state.ell));
}

double problem_extent(const PotentialSpec& spec, const StateLabel& state) {
  return problem_extent(trial_problem(spec), state);
}

namespace {

double local_energy_quotient(const std::vector<PhaseSample>& ph, const std::vector<PolySample>* poly,
                             const std::vector<double>& V, const std::vector<double>& log_r, double alpha,
                             const PanelGrid& grid) {
  const auto& r = grid.nodes();
  const auto& w = grid.weights();
  double fmin = ph[0].f;
  for (const auto& s : ph) fmin = std::min(fmin, s.f);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto& s = ph[i];
    double weight = w[i] * std::exp(-2.0 * (s.f - fmin) + alpha * log_r[i]);
    double EL = V[i] + s.f2 - s.f1 * s.f1 + alpha * s.f1 / r[i];
    if (poly) {
      const auto& P = (*poly)[i];
      num += weight * (P.P * P.P * EL - (P.P * P.P2 - 2.0 * P.P * P.P1 * s.f1 + alpha * P.P * P.P1 / r[i]));
      den += weight * P.P * P.P;
    } else {
      num += weight * EL;
      den += weight;
    }
  }
  if (!(den > 0.0) || !std::isfinite(num)) return std::numeric_limits<double>::infinity();
  return num / den;
}

}  // namespace

double rayleigh_quotient(const PhaseFunction& phase, const std::vector<double>& poly, double D_eff,
                         const std::function<double(double)>& V, const PanelGrid& grid) {
  if (!(D_eff > 0.0)) throw ConfigError("D must be positive");
  const auto& r = grid.nodes();
  std::vector<PhaseSample> ph(r.size());
  std::vector<double> v(r.size()), lr(r.size());
  std::vector<PolySample> ps;
  for (std::size_t i = 0; i < r.size(); ++i) {
    ph[i] = phase(r[i]);
    v[i] = V(r[i]);
    lr[i] = std::log(r[i]);
    if (!poly.empty()) ps.push_back(polynomial_factor(poly, r[i]));
  }
  return local_energy_quotient(ph, poly.empty() ? nullptr : &ps, v, lr, D_eff - 1.0, grid);
}

double rayleigh_quotient(const ApproximantParams& p, const TrialProblem& prob, double rel_tol) {
  p.validate();
  if (p.D != prob.D || p.g != prob.g) throw ConfigError("parameters and trial problem disagree on D or g");
  const auto& Vr = prob.V;
  auto V = [&Vr](double r) { return Vr(r); };
  auto phase = [&p](double r) { return phase_derivatives(p, r); };
  const double r_max = problem_extent(prob, {p.n_r, p.ell});
  double coarse = rayleigh_quotient(phase, p.poly, p.effective_dimension(), V, PanelGrid(r_max));
  double fine = rayleigh_quotient(phase, p.poly, p.effective_dimension(), V, PanelGrid(1.1 * r_max, 192, 16, 36));
  if (std::abs(fine - coarse) > rel_tol * std::abs(fine))
    throw NumericalError("Rayleigh quotient quadrature did not converge");
  return fine;
}

double rayleigh_quotient(const ApproximantParams& p, const PotentialSpec& spec, double rel_tol) {
  return rayleigh_quotient(p, trial_problem(spec), rel_tol);
}

namespace {

struct LowerState {
  std::vector<double> f;  // phase at grid nodes
  std::vector<double> poly;
};

// Objective over x = (a0, log a2, log b3) on a fixed grid.
class Objective {
 public:
  Objective(const TrialProblem& prob, const StateLabel& state, std::vector<LowerState> lower)
      : prob_(prob), state_(state), lower_(std::move(lower)) {
    grid_ = PanelGrid(problem_extent(prob, state));
    alpha_ = effective_dimension(prob.D, state.ell) - 1.0;
    for (double r : grid_.nodes()) {
      V_.push_back(prob.V(r));
      log_r_.push_back(std::log(r));
    }
  }

  ApproximantParams params(const std::array<double, 3>& x) const {
    ApproximantParams p;
    p.D = prob_.D;
    p.g = prob_.g;
    p.a0 = x[0];
    p.a2 = std::exp(x[1]);
    p.b3 = prob_.g > 0.0 ? std::exp(x[2]) : 0.0;
    p.n_r = 0;
    p.ell = state_.ell;
    return p;
  }

  double operator()(const std::array<double, 3>& x) const {
    if (!(std::abs(x[0]) <= 50.0) || std::abs(x[1]) > 20.0 || std::abs(x[2]) > 30.0)
      return std::numeric_limits<double>::infinity();
    ++evaluations;
    auto p = params(x);
    const auto& r = grid_.nodes();
    std::vector<PhaseSample> ph(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) ph[i] = phase_derivatives(p, r[i]);
    if (lower_.empty()) return local_energy_quotient(ph, nullptr, V_, log_r_, alpha_, grid_);
    std::vector<double> poly;
    try {
      poly = orthogonal_poly(ph);
    } catch (const NumericalError&) {
      return std::numeric_limits<double>::infinity();
    }
    std::vector<PolySample> ps(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) ps[i] = polynomial_factor(poly, r[i]);
    return local_energy_quotient(ph, &ps, V_, log_r_, alpha_, grid_);
  }

  // sum_k p_k <s^k, P_j> = -<s^n, P_j> against each lower state
  std::vector<double> orthogonal_poly(const std::vector<PhaseSample>& ph) const {
    const int n = static_cast<int>(lower_.size());
    const auto& r = grid_.nodes();
    const auto& w = grid_.weights();
    std::vector<std::vector<double>> A(n, std::vector<double>(n + 1, 0.0));
    for (int j = 0; j < n; ++j) {
      double fmin = ph[0].f + lower_[j].f[0];
      for (std::size_t i = 0; i < r.size(); ++i) fmin = std::min(fmin, ph[i].f + lower_[j].f[i]);
      for (std::size_t i = 0; i < r.size(); ++i) {
        double wt = w[i] * std::exp(-(ph[i].f + lower_[j].f[i] - fmin) + alpha_ * log_r_[i]) *
                    polynomial_factor(lower_[j].poly, r[i]).P;
        double s = r[i] * r[i], sk = 1.0;
        for (int k = 0; k <= n; ++k, sk *= s) A[j][k] += wt * sk;
      }
    }
    std::vector<double> poly(n + 1, 0.0);
    poly[n] = 1.0;
    if (n == 1) {
      poly[0] = -A[0][1] / A[0][0];
    } else if (n == 2) {
      double det = A[0][0] * A[1][1] - A[0][1] * A[1][0];
      if (std::abs(det) < 1e-300) throw NumericalError("singular orthogonality system");
      poly[0] = (-A[0][2] * A[1][1] + A[0][1] * A[1][2]) / det;
      poly[1] = (-A[0][0] * A[1][2] + A[0][2] * A[1][0]) / det;
    } else {
      throw ConfigError("n_r <= 2 supported");
    }
    return poly;
  }

  std::vector<double> phases(const ApproximantParams& p) const {
    std::vector<double> f;
    for (double r : grid_.nodes()) f.push_back(phase(p, r));
    return f;
  }

  const PanelGrid& grid() const { return grid_; }
  mutable long evaluations = 0;

 private:
  TrialProblem prob_;
  StateLabel state_;
  std::vector<LowerState> lower_;
  PanelGrid grid_;
  double alpha_ = 0.0;
  std::vector<double> V_, log_r_;
};

struct SimplexRun {
  std::array<double, 3> x;
  double f;
  int iterations;
  double size;
};

double gsl_trampoline(const gsl_vector* v, void* params) {
  const auto* obj = static_cast<const Objective*>(params);
  return (*obj)({gsl_vector_get(v, 0), gsl_vector_get(v, 1), gsl_vector_get(v, 2)});
}

SimplexRun nelder_mead(const Objective& obj, const std::array<double, 3>& x0, const std::array<double, 3>& step,
                       double size_tol, int max_iter) {
  gsl_multimin_function fn{&gsl_trampoline, 3, const_cast<Objective*>(&obj)};
  gsl_vector* x = gsl_vector_alloc(3);
  gsl_vector* ss = gsl_vector_alloc(3);
  for (int i = 0; i < 3; ++i) {
    gsl_vector_set(x, i, x0[i]);
    gsl_vector_set(ss, i, step[i]);
  }
  gsl_multimin_fminimizer* s = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, 3);
  gsl_multimin_fminimizer_set(s, &fn, x, ss);
  SimplexRun run{};
  int status = GSL_CONTINUE;
  for (run.iterations = 0; run.iterations < max_iter && status == GSL_CONTINUE; ++run.iterations) {
    if (gsl_multimin_fminimizer_iterate(s)) break;
    run.size = gsl_multimin_fminimizer_size(s);
    status = gsl_multimin_test_size(run.size, size_tol);
  }
  for (int i = 0; i < 3; ++i) run.x[i] = gsl_vector_get(s->x, i);
  run.f = s->fval;
  gsl_multimin_fminimizer_free(s);
  gsl_vector_free(x);
  gsl_vector_free(ss);
  return run;
}

std::array<double, 3> to_x(const ApproximantParams& p) {
  return {p.a0, std::log(p.a2), p.b3 > 0.0 ? std::log(p.b3) : 0.0};
}

}  // namespace

VariationalResult minimize(const PotentialSpec& spec, const StateLabel& state,
                           std::optional<ApproximantParams> initial, const MinimizeOptions& opts) {
  return minimize(trial_problem(spec), state, initial, opts);
}

VariationalResult minimize(const TrialProblem& prob, const StateLabel& state,
                           std::optional<ApproximantParams> initial, const MinimizeOptions& opts) {
  if (!(prob.D > 0.0) || !(prob.g >= 0.0)) throw ConfigError("need D > 0 and g >= 0");
  state.validate();
  if (state.n_r > 2) throw ConfigError("radial excitations are limited to n_r <= 2");
  gsl_set_error_handler_off();

  VariationalResult result;
  std::vector<LowerState> lower;
  if (state.n_r > 0) {
    StateLabel below{state.n_r - 1, state.ell};
    auto prev = minimize(prob, below, std::nullopt, opts);
    result.lower_states = prev.lower_states;
    result.lower_states.push_back(prev.params);
  }
  Objective obj(prob, state, {});
  for (const auto& l : result.lower_states) lower.push_back({obj.phases(l), l.poly});
  if (!lower.empty()) obj = Objective(prob, state, lower);

  std::vector<std::array<double, 3>> starts;
  if (initial) starts.push_back(to_x(*initial));
  for (auto s : std::vector<std::array<double, 3>>{{0.0, 0.5, 1.0}, {1.0, 0.5, 2.0}, {-1.0, 0.6, 0.5}, {3.0, 0.5, 0.3}})
    starts.push_back({s[0], std::log(s[1]), std::log(s[2])});
  const std::array<double, 3> wide{0.5, 0.2, 0.5}, narrow{0.05, 0.02, 0.05};

  SimplexRun best{};
  best.f = std::numeric_limits<double>::infinity();
  int iterations = 0;
  for (const auto& s : starts) {
    auto run = nelder_mead(obj, s, wide, 1e-5, std::min(opts.max_iterations, 2000));
    iterations += run.iterations;
    if (run.f < best.f) best = run;
  }
  if (!std::isfinite(best.f)) throw NumericalError("no start produced a finite Rayleigh quotient");
  best = nelder_mead(obj, best.x, narrow, opts.size_tol, opts.max_iterations);
  iterations += best.iterations;
  int restarts = 0;
  for (int k = 0; k < opts.restarts; ++k) {
    auto run = nelder_mead(obj, best.x, narrow, opts.size_tol, opts.max_iterations);
    iterations += run.iterations;
    ++restarts;
    bool improved = run.f < best.f - 1e-14;
    if (run.f <= best.f) best = run;
    if (!improved) break;
  }

  result.params = obj.params(best.x);
  result.params.n_r = state.n_r;
  if (!lower.empty()) {
    const auto& r = obj.grid().nodes();
    std::vector<PhaseSample> ph(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) ph[i] = phase_derivatives(result.params, r[i]);
    result.params.poly = obj.orthogonal_poly(ph);
    auto factor = excited_factor_solve(result.params, state.ell, state.n_r, result.lower_states);
    result.nodes = factor.nodes;
  }
  result.E_var = best.f;
  result.E02 = result.E03 = best.f;
  result.report.iterations = iterations;
  result.report.restarts = restarts;
  result.report.simplex_size = best.size;
  result.report.converged = best.size < opts.size_tol;
  return result;
}

VariationalResult corrected_energies(const VariationalResult& result, const PotentialSpec& spec, int orders) {
  return corrected_energies(result, trial_problem(spec), orders);
}

VariationalResult corrected_energies(const VariationalResult& result, const TrialProblem& prob, int orders) {
  if (orders < 2 || orders > 3) throw ConfigError("corrections are available for orders 2 and 3");
  if (result.params.n_r > 0) throw ConfigError("corrections are not available for states with radial nodes");
  auto zero = approximant_zero_order(result.params, problem_extent(prob, {0, result.params.ell}));
  const auto& V = prob.V;
  auto set = run_pt(zero, [&V](double r) { return V(r); }, orders);
  VariationalResult out = result;
  out.orders = orders;
  out.E2 = set.E[2];
  out.E02 = out.E_var + out.E2;
  out.E3 = orders >= 3 ? set.E[3] : 0.0;
  out.E03 = out.E02 + out.E3;
  return out;
}

}  // namespace anharm
