#pragma once

#include <optional>
#include <vector>

#include "anharm/approximant.hpp"
#include "anharm/core.hpp"
#include "anharm/nonlinearization.hpp"

namespace anharm {

// Trial family (D, g) applied to an arbitrary radial potential V.
struct TrialProblem {
  double D = 1.0;
  double g = 0.0;
  RadialPotential V;
};
TrialProblem trial_problem(const PotentialSpec& spec);

// Grid extent for a state: int_0^r sqrt(V) = 60 + D_eff.
double problem_extent(const TrialProblem& prob, const StateLabel& state);
double problem_extent(const PotentialSpec& spec, const StateLabel& state);

// Rayleigh quotient of Psi = P(r^2) exp(-Phi) under r^{D_eff - 1}, local-energy form.
double rayleigh_quotient(const PhaseFunction& phase, const std::vector<double>& poly, double D_eff,
                         const std::function<double(double)>& V, const PanelGrid& grid);
// Approximant trial; compares two grids and throws if they disagree beyond rel_tol.
double rayleigh_quotient(const ApproximantParams& p, const TrialProblem& prob, double rel_tol = 1e-11);
double rayleigh_quotient(const ApproximantParams& p, const PotentialSpec& spec, double rel_tol = 1e-11);

struct OptimizerReport {
  int iterations = 0;
  int restarts = 0;
  double simplex_size = 0.0;
  bool converged = false;
};

struct VariationalResult {
  ApproximantParams params;
  double E_var = 0.0;
  double E2 = 0.0, E3 = 0.0;
  double E02 = 0.0, E03 = 0.0;
  int orders = 1;
  std::vector<double> nodes;
  std::vector<ApproximantParams> lower_states;  // same ell, n_r' < n_r
  OptimizerReport report;
};

struct MinimizeOptions {
  double size_tol = 1e-8;
  int max_iterations = 20000;
  int restarts = 3;
};

// Ground and (0, ell) states optimize the free triple directly; n_r > 0 states
// first optimize every lower state of the same ell, then eliminate the
// polynomial by orthogonality inside the objective.
VariationalResult minimize(const PotentialSpec& spec, const StateLabel& state,
                           std::optional<ApproximantParams> initial = std::nullopt,
                           const MinimizeOptions& opts = {});
VariationalResult minimize(const TrialProblem& prob, const StateLabel& state,
                           std::optional<ApproximantParams> initial = std::nullopt,
                           const MinimizeOptions& opts = {});

// fills E2, E3 (orders 2, 3) from the nonlinearization procedure
VariationalResult corrected_energies(const VariationalResult& result, const PotentialSpec& spec, int orders = 3);
VariationalResult corrected_energies(const VariationalResult& result, const TrialProblem& prob, int orders = 3);

}  // namespace anharm
