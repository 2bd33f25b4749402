#include "anharm/nonlinearization.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "anharm/core.hpp"

namespace anharm {

double radial_extent(const std::function<double(double)>& V, double action) {
  if (!(action > 0.0)) throw ConfigError("action must be positive");
  auto q = gauss_legendre(16);
  double r = 0.0, acc = 0.0, step = 0.05;
  for (int it = 0; it < 100000; ++it) {
    double piece = 0.0;
    for (std::size_t k = 0; k < q.size(); ++k) {
      double x = r + 0.5 * step * (q.nodes[k] + 1.0);
      piece += 0.5 * step * q.weights[k] * std::sqrt(std::max(V(x), 0.0));
    }
    if (acc + piece >= action) {
      return r + step * (action - acc) / piece;
    }
    acc += piece;
    r += step;
    step *= 1.02;
  }
  throw NumericalError("potential too weak to confine within the search range");
}

double ZeroOrder::psi(double r) const {
  return std::exp(-(phase(r).f - phi_ref)) / std::sqrt(norm);
}

ZeroOrder inverse_problem(const PhaseFunction& phase, double D_eff, double r_max, double E0_gauge) {
  if (!(D_eff > 0.0)) throw ConfigError("D must be positive");
  ZeroOrder z;
  z.phase = phase;
  z.D_eff = D_eff;
  z.grid = PanelGrid(r_max);
  const double alpha = D_eff - 1.0;
  const auto& r = z.grid.nodes();
  const std::size_t n = r.size();

  const PhaseSample at0 = phase(0.0);
  if (!std::isfinite(at0.f) || !std::isfinite(at0.f2)) throw NumericalError("phase is singular at the origin");
  // Phi'/r must stay finite: Phi'(0) = 0 for a nodeless factor
  const PhaseSample near0 = phase(1e-7 * r_max);
  if (std::abs(near0.f1) > 1e-5 * (1.0 + std::abs(at0.f2)) * r_max)
    throw NumericalError("Phi'/r does not extend continuously to r = 0");
  z.E0 = std::isnan(E0_gauge) ? D_eff * at0.f2 : E0_gauge;

  z.samples.resize(n);
  z.vt_minus_e0.resize(n);
  z.weight.resize(n);
  double fmin = at0.f;
  for (std::size_t i = 0; i < n; ++i) {
    z.samples[i] = phase(r[i]);
    fmin = std::min(fmin, z.samples[i].f);
  }
  z.phi_ref = fmin;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = z.samples[i];
    z.vt_minus_e0[i] = s.f1 * s.f1 - s.f2 - alpha * s.f1 / r[i];
    z.weight[i] = std::exp(-2.0 * (s.f - fmin)) * std::pow(r[i], alpha);
  }
  z.norm = z.grid.integrate(z.weight);
  if (!(z.norm > 0.0) || !std::isfinite(z.norm)) throw NumericalError("zero-order function is not normalizable");
  for (auto& w : z.weight) w /= z.norm;
  return z;
}

std::vector<double> perturbation_splitting(const std::function<double(double)>& V, const ZeroOrder& zero) {
  const auto& r = zero.grid.nodes();
  std::vector<double> v1(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) v1[i] = V(r[i]) - zero.induced_potential(i);
  return v1;
}

CorrectionStep correction_step(const ZeroOrder& zero, const std::vector<double>& Q) {
  const auto& w = zero.weight;
  const std::size_t n = w.size();
  if (Q.size() != n) throw ConfigError("Q must be sampled on the zero-order grid");
  CorrectionStep out;
  std::vector<double> qw(n);
  for (std::size_t i = 0; i < n; ++i) qw[i] = Q[i] * w[i];
  out.E = zero.grid.integrate(qw);

  std::vector<double> integrand(n), mass(n);
  for (std::size_t i = 0; i < n; ++i) {
    integrand[i] = (out.E - Q[i]) * w[i];
    mass[i] = std::abs(integrand[i]);
  }
  auto left = zero.grid.cumulative(integrand);
  auto right = zero.grid.tail(integrand);
  auto cm = zero.grid.cumulative(mass);
  const double half = 0.5 * zero.grid.integrate(mass);
  out.y.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(w[i] > 1e-290)) throw NumericalError("zero-order weight underflows inside the grid");
    out.y[i] = (cm[i] < half ? left[i] : -right[i]) / w[i];
  }
  return out;
}

CorrectionSet run_pt(const ZeroOrder& zero, const std::vector<double>& V1, int N) {
  if (N < 1) throw ConfigError("need at least one correction order");
  const std::size_t n = zero.weight.size();
  CorrectionSet set;
  set.order = N;
  set.E0 = zero.E0;
  set.E.assign(N + 1, 0.0);
  set.E[0] = zero.E0;
  set.y.assign(N + 1, {});
  set.y[0].resize(n);
  for (std::size_t i = 0; i < n; ++i) set.y[0][i] = zero.samples[i].f1;
  for (int k = 1; k <= N; ++k) {
    std::vector<double> Q(n, 0.0);
    if (k == 1) {
      Q = V1;
    } else {
      for (int j = 1; j < k; ++j)
        for (std::size_t i = 0; i < n; ++i) Q[i] -= set.y[j][i] * set.y[k - j][i];
    }
    auto step = correction_step(zero, Q);
    set.E[k] = step.E;
    set.y[k] = std::move(step.y);
  }
  set.partial_sums.resize(N + 1);
  double s = 0.0;
  for (int k = 0; k <= N; ++k) set.partial_sums[k] = (s += set.E[k]);
  return set;
}

CorrectionSet run_pt(const ZeroOrder& zero, const std::function<double(double)>& V, int N) {
  return run_pt(zero, perturbation_splitting(V, zero), N);
}

DeviationReport deviation_metrics(const ZeroOrder& zero, const std::vector<double>& r_ref,
                                  const std::vector<double>& psi_ref, double cutoff,
                                  const CorrectionSet* corrections) {
  if (r_ref.size() != psi_ref.size()) throw ConfigError("reference samples size mismatch");
  DeviationReport rep;
  double peak = 0.0;
  for (double p : psi_ref) peak = std::max(peak, std::abs(p));
  for (std::size_t i = 0; i < r_ref.size(); ++i) {
    if (!(std::abs(psi_ref[i]) > cutoff * peak)) continue;
    double d = std::abs(zero.psi(r_ref[i]) / psi_ref[i] - 1.0);
    rep.r.push_back(r_ref[i]);
    rep.relative.push_back(d);
    if (d > rep.max_relative) {
      rep.max_relative = d;
      rep.r_at_max = r_ref[i];
    }
  }
  rep.points = rep.r.size();
  if (corrections && corrections->order >= 1) {
    const auto& y0 = corrections->y[0];
    const auto& y1 = corrections->y[1];
    rep.y1_over_y0.resize(y0.size());
    for (std::size_t i = 0; i < y0.size(); ++i) rep.y1_over_y0[i] = std::abs(y1[i] / y0[i]);
  }
  return rep;
}

std::string corrections_csv(const ZeroOrder& zero, const CorrectionSet& set) {
  std::ostringstream os;
  os << "r";
  for (int k = 1; k <= set.order; ++k) os << ",y" << k;
  os << "\n";
  char buf[32];
  const auto& r = zero.grid.nodes();
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.12g", r[i]);
    os << buf;
    for (int k = 1; k <= set.order; ++k) {
      std::snprintf(buf, sizeof buf, "%.12g", set.y[k][i]);
      os << ',' << buf;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace anharm
