#pragma once

#include <functional>
#include <vector>

namespace anharm {

// nodes/weights for the weight function of the family; scaled_weights carry
// the inverse weight factor (w e^x for Laguerre, w e^{x^2} for Hermite, w for Legendre)
// so that plain integrands can be summed without overflow.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> log_weights;
  std::vector<double> scaled_weights;
  std::size_t size() const { return nodes.size(); }
};

// weight x^alpha e^{-x} on [0, inf), alpha > -1
QuadratureRule gauss_laguerre(int n, double alpha);
// weight e^{-x^2} on the real line
QuadratureRule gauss_hermite(int n);
// unit weight on [-1, 1]
QuadratureRule gauss_legendre(int n);

// int_0^inf f(r) r^{D-1} dr on a Gauss-Laguerre rule mapped with r = scale*x,
// doubling the order (16 .. 256) until successive results agree to tol.
double integrate_radial(const std::function<double(double)>& f, double D, double scale,
                        double tol = 1e-12);

// Composite Gauss-Legendre panels on [0, r_max]: geometric near the origin,
// uniform beyond. Supports cumulative integrals at every node.
class PanelGrid {
 public:
  PanelGrid() = default;
  PanelGrid(double r_max, int panels = 128, int order = 16, int graded_panels = 24,
            double r_min_fraction = 1e-5, double switch_fraction = 0.05);

  const std::vector<double>& nodes() const { return r_; }
  const std::vector<double>& weights() const { return w_; }
  std::size_t size() const { return r_.size(); }
  double r_max() const { return r_max_; }
  int order() const { return order_; }

  double integrate(const std::vector<double>& f) const;
  // F[i] = int_0^{r_i} f
  std::vector<double> cumulative(const std::vector<double>& f) const;
  // T[i] = int_{r_i}^{r_max} f
  std::vector<double> tail(const std::vector<double>& f) const;

 private:
  double r_max_ = 0.0;
  int order_ = 0;
  std::vector<double> edges_;
  std::vector<double> r_, w_;
  std::vector<double> unit_weights_;
  std::vector<std::vector<double>> partial_;  // partial_[i][j] = int_{-1}^{x_i} l_j
};

}  // namespace anharm
