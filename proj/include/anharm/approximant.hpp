#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "anharm/core.hpp"
#include "anharm/nonlinearization.hpp"

namespace anharm {

// Cubic Approximant with free triple (a0, a2, b3); a1 and a3 follow from the
// constraints. For ell > 0 or n_r > 0 the wavefunction carries r^ell P(r^2).
struct ApproximantParams {
  double D = 1.0;
  double g = 0.0;
  double a0 = 0.0;
  double a2 = 0.5;
  double b3 = 0.0;
  int n_r = 0;
  int ell = 0;
  std::vector<double> poly;  // P(s) = sum_k poly[k] s^k, s = r^2, leading coefficient 1; empty means 1

  double a1() const { return b3 * (2.0 * a0 - D - 1.0) / 4.0; }
  double a3() const { return 0.4 * std::sqrt(b3); }
  double effective_dimension() const { return D + 2.0 * ell; }
  void validate() const;
};

PhaseSample phase_derivatives(const ApproximantParams& p, double r);
double phase(const ApproximantParams& p, double r);
double wavefunction(const ApproximantParams& p, double r);
// P(r^2) and its first two r-derivatives
struct PolySample {
  double P = 1.0, P1 = 0.0, P2 = 0.0;
};
PolySample polynomial_factor(const std::vector<double>& poly, double r);

// r beyond which exp(-(Phi - Phi(0))) < e^{-action}
double approximant_extent(const ApproximantParams& p, double action = 70.0);

struct ExcitedFactor {
  int ell = 0;
  int n_r = 0;
  std::vector<double> poly;   // ascending in s = r^2, poly[n_r] = 1
  std::vector<double> nodes;  // radial nodes, ascending
  double max_residual = 0.0;  // max |<Psi, Psi_k>| / (|Psi| |Psi_k|)
};
// Polynomial factor of params' state orthogonal to each lower state (same ell).
ExcitedFactor excited_factor_solve(const ApproximantParams& params, int ell, int n_r,
                                   const std::vector<ApproximantParams>& lower_states);

// Zero order for the nonlinearization procedure (nodeless states only).
ZeroOrder approximant_zero_order(const ApproximantParams& p, double r_max);

std::string to_json(const ApproximantParams& p);
ApproximantParams params_from_json(const std::string& text);

}  // namespace anharm
