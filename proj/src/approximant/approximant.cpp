#include "anharm/approximant.hpp"

#include <algorithm>
#include <json.hpp>

namespace anharm {

void ApproximantParams::validate() const {
  if (!(D > 0.0)) throw ConfigError("D must be positive");
  if (!(g >= 0.0)) throw ConfigError("g must be non-negative");
  if (!(a2 > 0.0)) throw ConfigError("a2 must be positive");
  if (!(b3 >= 0.0)) throw ConfigError("b3 must be non-negative");
  if (!std::isfinite(a0)) throw ConfigError("a0 must be finite");
  if (n_r < 0 || ell < 0) throw ConfigError("state quantum numbers must be non-negative");
  if (n_r > 0 && static_cast<int>(poly.size()) != n_r + 1)
    throw ConfigError("polynomial factor must have degree n_r in r^2");
}

PhaseSample phase_derivatives(const ApproximantParams& p, double r) {
  const double g = p.g, a1 = p.a1(), a3 = p.a3();
  const double s1 = p.b3 * g;
  const double s = 1.0 + s1 * r, q = std::sqrt(s);
  const double q1 = s1 / (2.0 * q), q2 = -s1 * s1 / (4.0 * q * s);
  const double P = p.a0 + a1 * g * r + p.a2 * r * r + a3 * g * r * r * r;
  const double P1 = a1 * g + 2.0 * p.a2 * r + 3.0 * a3 * g * r * r;
  const double P2 = 2.0 * p.a2 + 6.0 * a3 * g * r;
  PhaseSample out;
  out.f = P / q + 0.25 * std::log(s) + p.D * std::log(1.0 + q);
  out.f1 = P1 / q - P * q1 / s + 0.25 * s1 / s + p.D * q1 / (1.0 + q);
  out.f2 = P2 / q - 2.0 * P1 * q1 / s - P * (q2 / s - 2.0 * q1 * q1 / (s * q)) - 0.25 * s1 * s1 / (s * s) +
           p.D * (q2 / (1.0 + q) - q1 * q1 / ((1.0 + q) * (1.0 + q)));
  return out;
}

double phase(const ApproximantParams& p, double r) { return phase_derivatives(p, r).f; }

PolySample polynomial_factor(const std::vector<double>& poly, double r) {
  PolySample out;
  if (poly.empty()) return out;
  // P(s), P'(s), P''(s) by Horner, then chain rule with s = r^2
  double P = 0.0, Ps = 0.0, Pss = 0.0;
  for (std::size_t k = poly.size(); k-- > 0;) {
    Pss = Pss * r * r + 2.0 * Ps;
    Ps = Ps * r * r + P;
    P = P * r * r + poly[k];
  }
  out.P = P;
  out.P1 = 2.0 * r * Ps;
  out.P2 = 2.0 * Ps + 4.0 * r * r * Pss;
  return out;
}

double wavefunction(const ApproximantParams& p, double r) {
  double psi = std::exp(-phase(p, r));
  if (p.ell > 0) psi *= std::pow(r, p.ell);
  if (!p.poly.empty()) psi *= polynomial_factor(p.poly, r).P;
  return psi;
}

double approximant_extent(const ApproximantParams& p, double action) {
  const double f0 = phase(p, 0.0);
  double lo = 0.0, hi = 1.0;
  while (phase(p, hi) - f0 < action) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e8) throw NumericalError("Approximant is not normalizable");
  }
  for (int it = 0; it < 60; ++it) {
    double mid = 0.5 * (lo + hi);
    (phase(p, mid) - f0 < action ? lo : hi) = mid;
  }
  return hi;
}

namespace {

// quadrature for exp(-(Phi_a + Phi_b - fmin)) r^{2 ell + D - 1}
struct OverlapGrid {
  PanelGrid grid;
  std::vector<double> w;
  double fmin = 0.0;
};

OverlapGrid overlap_grid(const ApproximantParams& a, const ApproximantParams& b) {
  OverlapGrid o;
  o.grid = PanelGrid(std::max(approximant_extent(a, 40.0), approximant_extent(b, 40.0)));
  const auto& r = o.grid.nodes();
  const double alpha = a.D - 1.0 + 2.0 * a.ell;
  std::vector<double> f(r.size());
  double fmin = phase(a, 0.0) + phase(b, 0.0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    f[i] = phase(a, r[i]) + phase(b, r[i]);
    fmin = std::min(fmin, f[i]);
  }
  o.fmin = fmin;
  o.w.resize(r.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    o.w[i] = std::exp(-(f[i] - fmin)) * std::pow(r[i], alpha) * o.grid.weights()[i];
  return o;
}

double moment(const OverlapGrid& o, const std::vector<double>& pa, const std::vector<double>& pb) {
  double acc = 0.0;
  const auto& r = o.grid.nodes();
  for (std::size_t i = 0; i < o.w.size(); ++i)
    acc += o.w[i] * polynomial_factor(pa, r[i]).P * polynomial_factor(pb, r[i]).P;
  return acc;
}

std::vector<double> monomial(int k) {
  std::vector<double> p(k + 1, 0.0);
  p[k] = 1.0;
  return p;
}

}  // namespace

ExcitedFactor excited_factor_solve(const ApproximantParams& params, int ell, int n_r,
                                   const std::vector<ApproximantParams>& lower_states) {
  if (n_r < 1 || n_r > 2) throw ConfigError("excited factors are available for n_r = 1, 2");
  if (static_cast<int>(lower_states.size()) < n_r) throw ConfigError("need every lower state of the same ell");
  for (const auto& l : lower_states)
    if (l.ell != ell || l.D != params.D) throw ConfigError("lower states must share D and ell");
  ApproximantParams self = params;
  self.ell = ell;
  self.poly.clear();

  std::vector<OverlapGrid> grids;
  for (int j = 0; j < n_r; ++j) grids.push_back(overlap_grid(self, lower_states[j]));

  ExcitedFactor out;
  out.ell = ell;
  out.n_r = n_r;
  // sum_k p_k <s^k, P_j> = -<s^{n_r}, P_j>, j < n_r
  std::vector<std::vector<double>> A(n_r, std::vector<double>(n_r));
  std::vector<double> rhs(n_r);
  for (int j = 0; j < n_r; ++j) {
    const auto& pj = lower_states[j].poly;
    for (int k = 0; k < n_r; ++k) A[j][k] = moment(grids[j], monomial(k), pj);
    rhs[j] = -moment(grids[j], monomial(n_r), pj);
  }
  out.poly.assign(n_r + 1, 0.0);
  out.poly[n_r] = 1.0;
  if (n_r == 1) {
    out.poly[0] = rhs[0] / A[0][0];
  } else {
    double det = A[0][0] * A[1][1] - A[0][1] * A[1][0];
    if (std::abs(det) < 1e-300) throw NumericalError("orthogonality system is singular");
    out.poly[0] = (rhs[0] * A[1][1] - A[0][1] * rhs[1]) / det;
    out.poly[1] = (A[0][0] * rhs[1] - rhs[0] * A[1][0]) / det;
  }

  std::vector<double> roots;
  if (n_r == 1) {
    roots.push_back(-out.poly[0]);
  } else {
    double b = out.poly[1], c = out.poly[0], disc = b * b - 4.0 * c;
    if (disc < 0.0) throw NumericalError("orthogonality constraint gives complex nodes");
    double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    roots = {q, c / q};
    std::sort(roots.begin(), roots.end());
  }
  for (double s : roots) {
    if (!(s > 0.0)) throw NumericalError("orthogonality constraint gives a non-positive root in r^2");
    out.nodes.push_back(std::sqrt(s));
  }

  const auto self_grid = overlap_grid(self, self);
  const double na = moment(self_grid, out.poly, out.poly);
  for (int j = 0; j < n_r; ++j) {
    const auto& pj = lower_states[j].poly;
    const auto low_grid = overlap_grid(lower_states[j], lower_states[j]);
    const double nb = moment(low_grid, pj, pj);
    const double overlap = moment(grids[j], out.poly, pj);
    double rel = std::abs(overlap) / std::sqrt(na * nb) *
                 std::exp(0.5 * (self_grid.fmin + low_grid.fmin) - grids[j].fmin);
    out.max_residual = std::max(out.max_residual, rel);
  }
  return out;
}

ZeroOrder approximant_zero_order(const ApproximantParams& p, double r_max) {
  p.validate();
  if (p.n_r > 0) throw ConfigError("nonlinearization corrections are limited to nodeless states");
  return inverse_problem([p](double r) { return phase_derivatives(p, r); }, p.effective_dimension(), r_max);
}

std::string to_json(const ApproximantParams& p) {
  nlohmann::json j;
  j["D"] = p.D;
  j["g"] = p.g;
  j["a0"] = p.a0;
  j["a2"] = p.a2;
  j["b3"] = p.b3;
  j["state"] = {p.n_r, p.ell};
  j["poly"] = p.poly;
  return j.dump();
}

ApproximantParams params_from_json(const std::string& text) {
  ApproximantParams p;
  try {
    auto j = nlohmann::json::parse(text);
    p.D = j.at("D").get<double>();
    p.g = j.at("g").get<double>();
    p.a0 = j.at("a0").get<double>();
    p.a2 = j.at("a2").get<double>();
    p.b3 = j.at("b3").get<double>();
    if (j.contains("state")) {
      p.n_r = j["state"].at(0).get<int>();
      p.ell = j["state"].at(1).get<int>();
    }
    if (j.contains("poly")) p.poly = j["poly"].get<std::vector<double>>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad Approximant JSON: ") + e.what());
  }
  p.validate();
  return p;
}

}  // namespace anharm
