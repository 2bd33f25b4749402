#pragma once

#include <string>
#include <vector>

#include "anharm/core.hpp"
#include "anharm/variational.hpp"

namespace anharm {

// W(r) = sum_k a_k r^k / gamma^{m-k}, gamma = g^{4/(m+2)}; E = energy_factor * E~.
struct ScaledProblem {
  RadialPotential W;
  double gamma = 1.0;
  double lambda_hat = 1.0;    // 1/gamma; the cubic W is r^3 + lambda_hat r^2
  double energy_factor = 1.0; // g^{2(m-2)/(m+2)}
};
ScaledProblem symanzik_scale(const PotentialSpec& spec);

// closed forms for the zero order Phi = sqrt(a) w^{p+1}/(p+1) of W = a w^{2p}
struct GeneralStrong {
  double eps01 = 0.0;  // <(p + D - 1) sqrt(a) w^{p-1}>
  double e10 = 0.0;    // <w^2>
};
GeneralStrong general_strong_coefficients(double D, double p, double a);

struct SimplePipeline {
  std::vector<double> corrections;   // eps~_{0,k}, k = 0..K
  std::vector<double> partial_sums;  // sum_{j<=k}
  double closed_form_first = 0.0;
};
SimplePipeline epsilon0_simple_pipeline(double D, int K);

struct ApproximantStrong {
  VariationalResult result;  // trial on W = r^3 with g = 1
  double eps0_var = 0.0;
  double eps2 = 0.0;
  double eps0_2 = 0.0;
};
ApproximantStrong epsilon0_approximant(double D);

struct Epsilon1 {
  double crude = 0.0;        // <w^2> in exp(-2/5 w^{5/2})
  double first = 0.0;        // <w^2> in the optimal Approximant
  double correction = 0.0;   // mixed second-order term
  double refined = 0.0;      // first + correction
};
Epsilon1 epsilon1(double D, const ApproximantStrong* approximant = nullptr);

struct StrongExpansion {
  double D = 1.0;
  SimplePipeline simple;
  ApproximantStrong approximant;
  Epsilon1 eps1;
  std::string to_json() const;
};
StrongExpansion strong_expansion(double D, int K = 6);

// E(g) ~ D (1 + a g + b^5 g^2)^{1/5}, b fixed
struct FitResult {
  double a = 0.0;
  double b = 0.0;
  double max_relative_error = 0.0;
};
FitResult fit_interpolation(double D, double b, const std::vector<double>& g, const std::vector<double>& E);
double interpolation(double D, double a, double b, double g);

// g log-grid on [lo, hi] with n points
std::vector<double> log_grid(double lo, double hi, int n);

}  // namespace anharm
