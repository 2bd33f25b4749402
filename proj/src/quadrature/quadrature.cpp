#include "anharm/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "anharm/core.hpp"

namespace anharm {

namespace {

// Eigenvalues of the symmetric Jacobi matrix: starting guesses for Newton.
std::vector<double> jacobi_eigenvalues(const Eigen::VectorXd& diag, const Eigen::VectorXd& off) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalError("tridiagonal eigensolve failed");
  const auto& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

// Laguerre L_n^alpha and derivative at x, with a common log scale.
struct LagEval {
  double value, deriv, log_scale;
};

LagEval laguerre_eval(int n, double alpha, double x) {
  double pm1 = 0.0, p = 1.0, log_scale = 0.0;
  for (int k = 0; k < n; ++k) {
    double next = ((2.0 * k + 1.0 + alpha - x) * p - (k + alpha) * pm1) / (k + 1.0);
    pm1 = p;
    p = next;
    if (std::abs(p) > 1e150) {
      p *= 1e-150;
      pm1 *= 1e-150;
      log_scale += 150.0 * std::numbers::ln10;
    }
  }
  // x L_n' = n L_n - (n + alpha) L_{n-1}
  double d = (n * p - (n + alpha) * pm1) / x;
  return {p, d, log_scale};
}

QuadratureRule build_laguerre(int n, double alpha) {
  if (n < 1) throw ConfigError("quadrature order must be positive");
  if (!(alpha > -1.0)) throw ConfigError("Laguerre alpha must exceed -1");
  Eigen::VectorXd diag(n), off(std::max(n - 1, 0));
  for (int k = 0; k < n; ++k) diag[k] = 2.0 * k + alpha + 1.0;
  for (int k = 1; k < n; ++k) off[k - 1] = std::sqrt(k * (k + alpha));
  auto x = jacobi_eigenvalues(diag, off);

  QuadratureRule q;
  q.nodes.resize(n);
  q.weights.resize(n);
  q.log_weights.resize(n);
  q.scaled_weights.resize(n);
  const double lg = std::lgamma(n + alpha + 1.0) - std::lgamma(n + 1.0);
  for (int i = 0; i < n; ++i) {
    double xi = x[i];
    bool ok = false;
    for (int it = 0; it < 50; ++it) {
      auto e = laguerre_eval(n, alpha, xi);
      double dx = e.value / e.deriv;
      xi -= dx;
      if (std::abs(dx) <= 1e-15 * std::max(1.0, std::abs(xi))) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      // the three-term recurrence loses digits near the largest roots of high orders
      auto e = laguerre_eval(n, alpha, xi);
      if (std::abs(e.value / e.deriv) > 1e-11 * std::max(1.0, xi))
        throw NumericalError("Gauss-Laguerre root refinement did not converge");
    }
    auto e = laguerre_eval(n, alpha, xi);
    double lw = lg - std::log(xi) - 2.0 * (std::log(std::abs(e.deriv)) + e.log_scale);
    q.nodes[i] = xi;
    q.log_weights[i] = lw;
    q.weights[i] = std::exp(lw);
    q.scaled_weights[i] = std::exp(lw + xi);
  }
  return q;
}

// Orthonormal Hermite functions psi_n(x) = p_n(x) e^{-x^2/2}; returns psi_n, psi_{n-1}.
std::pair<double, double> hermite_functions(int n, double x) {
  double pm1 = 0.0, p = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
  for (int k = 0; k < n; ++k) {
    double next = std::sqrt(2.0 / (k + 1.0)) * x * p - std::sqrt(k / (k + 1.0)) * pm1;
    pm1 = p;
    p = next;
  }
  return {p, pm1};
}

QuadratureRule build_hermite(int n) {
  if (n < 1) throw ConfigError("quadrature order must be positive");
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n), off(std::max(n - 1, 0));
  for (int k = 1; k < n; ++k) off[k - 1] = std::sqrt(k / 2.0);
  auto x = jacobi_eigenvalues(diag, off);
  QuadratureRule q;
  q.nodes.resize(n);
  q.weights.resize(n);
  q.log_weights.resize(n);
  q.scaled_weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double xi = x[i];
    for (int it = 0; it < 50; ++it) {
      auto [pn, pn1] = hermite_functions(n, xi);
      // p_n' = sqrt(2n) p_{n-1}; the Gaussian factor cancels at a root
      double dx = pn / (std::sqrt(2.0 * n) * pn1);
      xi -= dx;
      if (std::abs(dx) <= 1e-15 * std::max(1.0, std::abs(xi))) break;
    }
    auto [pn, pn1] = hermite_functions(n, xi);
    if (std::abs(pn / (std::sqrt(2.0 * n) * pn1)) > 1e-14 * std::max(1.0, std::abs(xi)))
      throw NumericalError("Gauss-Hermite root refinement did not converge");
    double scaled = 1.0 / (n * pn1 * pn1);
    q.nodes[i] = xi;
    q.scaled_weights[i] = scaled;
    q.log_weights[i] = std::log(scaled) - xi * xi;
    q.weights[i] = std::exp(q.log_weights[i]);
  }
  return q;
}

QuadratureRule build_legendre(int n) {
  if (n < 1) throw ConfigError("quadrature order must be positive");
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n), off(std::max(n - 1, 0));
  for (int k = 1; k < n; ++k) off[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
  auto x = jacobi_eigenvalues(diag, off);
  QuadratureRule q;
  q.nodes.resize(n);
  q.weights.resize(n);
  q.log_weights.resize(n);
  q.scaled_weights.resize(n);
  auto eval = [n](double t) {
    double pm1 = 0.0, p = 1.0;
    for (int k = 0; k < n; ++k) {
      double next = ((2.0 * k + 1.0) * t * p - k * pm1) / (k + 1.0);
      pm1 = p;
      p = next;
    }
    double d = n * (t * p - pm1) / (t * t - 1.0);
    return std::pair{p, d};
  };
  for (int i = 0; i < n; ++i) {
    double xi = x[i];
    for (int it = 0; it < 50; ++it) {
      auto [p, d] = eval(xi);
      double dx = p / d;
      xi -= dx;
      if (std::abs(dx) <= 1e-16) break;
    }
    auto [p, d] = eval(xi);
    if (std::abs(p / d) > 1e-14) throw NumericalError("Gauss-Legendre root refinement did not converge");
    q.nodes[i] = xi;
    q.weights[i] = 2.0 / ((1.0 - xi * xi) * d * d);
    q.log_weights[i] = std::log(q.weights[i]);
    q.scaled_weights[i] = q.weights[i];
  }
  return q;
}

std::mutex cache_mutex;
std::map<std::pair<int, double>, QuadratureRule> laguerre_cache;

}  // namespace

QuadratureRule gauss_laguerre(int n, double alpha) {
  {
    std::lock_guard lock(cache_mutex);
    auto it = laguerre_cache.find({n, alpha});
    if (it != laguerre_cache.end()) return it->second;
  }
  auto q = build_laguerre(n, alpha);
  std::lock_guard lock(cache_mutex);
  laguerre_cache.emplace(std::pair{n, alpha}, q);
  return q;
}

QuadratureRule gauss_hermite(int n) { return build_hermite(n); }

QuadratureRule gauss_legendre(int n) { return build_legendre(n); }

double integrate_radial(const std::function<double(double)>& f, double D, double scale, double tol) {
  if (!(D > 0.0)) throw ConfigError("integrate_radial needs D > 0");
  if (!(scale > 0.0)) throw ConfigError("integrate_radial needs a positive scale");
  const double pref = std::pow(scale, D);
  double prev = 0.0;
  for (int n = 16; n <= 256; n *= 2) {
    auto q = gauss_laguerre(n, D - 1.0);
    double s = 0.0;
    for (std::size_t k = 0; k < q.size(); ++k) s += q.scaled_weights[k] * f(scale * q.nodes[k]);
    s *= pref;
    if (n > 16 && std::abs(s - prev) <= tol * std::max(std::abs(s), 1e-300)) return s;
    prev = s;
  }
  throw NumericalError("integrate_radial: no convergence at order 256");
}

}  // namespace anharm
