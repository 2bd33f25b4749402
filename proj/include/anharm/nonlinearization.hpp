#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "anharm/quadrature.hpp"

namespace anharm {

struct PhaseSample {
  double f = 0.0;   // Phi
  double f1 = 0.0;  // Phi'
  double f2 = 0.0;  // Phi''
};
using PhaseFunction = std::function<PhaseSample(double)>;

// Smallest r with int_0^r sqrt(max(V, 0)) = action.
double radial_extent(const std::function<double(double)>& V, double action = 60.0);

// Nodeless zero order Psi_0 = exp(-Phi) for the radial factor, with weight r^{D_eff - 1}.
// vt_minus_e0 = Phi'^2 - Phi'' - (D_eff - 1) Phi'/r.
struct ZeroOrder {
  PhaseFunction phase;
  double D_eff = 1.0;
  double E0 = 0.0;
  PanelGrid grid;
  std::vector<PhaseSample> samples;
  std::vector<double> weight;  // Psi_0^2 r^{D_eff-1}, normalized to unit integral
  std::vector<double> vt_minus_e0;
  double phi_ref = 0.0;  // Phi value subtracted before exponentiating
  double norm = 1.0;     // int exp(-2(Phi - phi_ref)) r^{D_eff-1} dr

  double induced_potential(std::size_t i) const { return E0 + vt_minus_e0[i]; }
  // normalized radial factor exp(-Phi(r)) at arbitrary r
  double psi(double r) const;
};

// Default gauge (NaN): E0 = D_eff Phi''(0), i.e. V_t(0) = 0.
ZeroOrder inverse_problem(const PhaseFunction& phase, double D_eff, double r_max,
                          double E0_gauge = std::numeric_limits<double>::quiet_NaN());

// V_1 = V - V_t sampled on the zero-order grid
std::vector<double> perturbation_splitting(const std::function<double(double)>& V, const ZeroOrder& zero);

struct CorrectionStep {
  double E = 0.0;
  std::vector<double> y;
};
// E_n = <Q_n>, y_n = (int_0^r (E_n - Q_n) w) / w; the integral is taken from
// whichever end carries less of the integrand mass.
CorrectionStep correction_step(const ZeroOrder& zero, const std::vector<double>& Q);

struct CorrectionSet {
  int order = 0;
  double E0 = 0.0;
  std::vector<double> E;                // E[1..order], E[0] = E0
  std::vector<std::vector<double>> y;   // y[1..order] sampled; y[0] = Phi'
  std::vector<double> partial_sums;     // E0 + ... + E_n

  double partial_sum(int n) const { return partial_sums.at(n); }
};
// single splitting V = V_t + V_1: Q_1 = V_1, Q_n = -sum_{k=1}^{n-1} y_k y_{n-k}
CorrectionSet run_pt(const ZeroOrder& zero, const std::vector<double>& V1, int N);
CorrectionSet run_pt(const ZeroOrder& zero, const std::function<double(double)>& V, int N);

struct DeviationReport {
  double max_relative = 0.0;
  double r_at_max = 0.0;
  std::size_t points = 0;
  std::vector<double> r;
  std::vector<double> relative;   // |Psi_t / Psi_ref - 1|
  std::vector<double> y1_over_y0; // on the zero-order grid, empty unless corrections given
};
// psi_ref sampled at r_ref, normalized under r^{D_eff-1}; points with
// |psi_ref| <= cutoff * max |psi_ref| are skipped.
DeviationReport deviation_metrics(const ZeroOrder& zero, const std::vector<double>& r_ref,
                                  const std::vector<double>& psi_ref, double cutoff = 1e-10,
                                  const CorrectionSet* corrections = nullptr);

// r, y_1, ..., y_N with 12 significant digits
std::string corrections_csv(const ZeroOrder& zero, const CorrectionSet& set);

}  // namespace anharm
