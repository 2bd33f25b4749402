#include <cmath>

#include "anharm/core.hpp"
#include "anharm/quadrature.hpp"

namespace anharm {

namespace {
std::vector<double> legendre_values(int nmax, double x) {
  std::vector<double> p(nmax + 1);
  p[0] = 1.0;
  if (nmax > 0) p[1] = x;
  for (int k = 1; k < nmax; ++k) p[k + 1] = ((2.0 * k + 1.0) * x * p[k] - k * p[k - 1]) / (k + 1.0);
  return p;
}
}  // namespace

PanelGrid::PanelGrid(double r_max, int panels, int order, int graded_panels, double r_min_fraction,
                     double switch_fraction)
    : r_max_(r_max), order_(order) {
  if (!(r_max > 0.0)) throw ConfigError("panel grid needs r_max > 0");
  if (order < 2 || panels < 2 || graded_panels < 1 || graded_panels >= panels)
    throw ConfigError("bad panel grid layout");

  edges_.push_back(0.0);
  const double r_min = r_min_fraction * r_max, r_sw = switch_fraction * r_max;
  for (int i = 0; i < graded_panels; ++i)
    edges_.push_back(r_min * std::pow(r_sw / r_min, i / double(graded_panels - 1)));
  const int uniform = panels - graded_panels;
  for (int i = 1; i <= uniform; ++i) edges_.push_back(r_sw + (r_max - r_sw) * i / uniform);

  auto q = gauss_legendre(order);
  unit_weights_ = q.weights;
  for (std::size_t p = 0; p + 1 < edges_.size(); ++p) {
    double a = edges_[p], b = edges_[p + 1], hw = 0.5 * (b - a);
    for (int j = 0; j < order; ++j) {
      r_.push_back(a + hw * (q.nodes[j] + 1.0));
      w_.push_back(hw * q.weights[j]);
    }
  }

  // partial integrals of the Lagrange basis on [-1, x_i]
  partial_.assign(order, std::vector<double>(order, 0.0));
  std::vector<std::vector<double>> P(order);
  for (int j = 0; j < order; ++j) P[j] = legendre_values(order, q.nodes[j]);
  for (int i = 0; i < order; ++i) {
    const auto& Pi = P[i];
    for (int j = 0; j < order; ++j) {
      double s = 0.5 * (q.nodes[i] + 1.0);
      for (int n = 1; n < order; ++n) s += 0.5 * P[j][n] * (Pi[n + 1] - Pi[n - 1]);
      partial_[i][j] = q.weights[j] * s;
    }
  }
}

double PanelGrid::integrate(const std::vector<double>& f) const {
  double s = 0.0;
  for (std::size_t i = 0; i < r_.size(); ++i) s += w_[i] * f[i];
  return s;
}

std::vector<double> PanelGrid::cumulative(const std::vector<double>& f) const {
  std::vector<double> out(r_.size());
  double acc = 0.0;
  const std::size_t M = order_;
  for (std::size_t p = 0; p + 1 < edges_.size(); ++p) {
    double hw = 0.5 * (edges_[p + 1] - edges_[p]);
    const double* fp = f.data() + p * M;
    double full = 0.0;
    for (std::size_t i = 0; i < M; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < M; ++j) s += partial_[i][j] * fp[j];
      out[p * M + i] = acc + hw * s;
      full += unit_weights_[i] * fp[i];
    }
    acc += hw * full;
  }
  return out;
}

std::vector<double> PanelGrid::tail(const std::vector<double>& f) const {
  std::vector<double> out(r_.size());
  double acc = 0.0;
  const std::size_t M = order_;
  for (std::size_t p = edges_.size() - 1; p-- > 0;) {
    double hw = 0.5 * (edges_[p + 1] - edges_[p]);
    const double* fp = f.data() + p * M;
    double full = 0.0;
    for (std::size_t i = 0; i < M; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < M; ++j) s += (unit_weights_[j] - partial_[i][j]) * fp[j];
      out[p * M + i] = acc + hw * s;
      full += unit_weights_[i] * fp[i];
    }
    acc += hw * full;
  }
  return out;
}

}  // namespace anharm
