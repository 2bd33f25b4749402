#include <doctest.h>

#include <cmath>

#include "anharm/quadrature.hpp"

using namespace anharm;

TEST_CASE("small Laguerre rules") {
  auto q1 = gauss_laguerre(1, 0.0);
  CHECK(q1.nodes[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(q1.weights[0] == doctest::Approx(1.0).epsilon(1e-14));
  auto q2 = gauss_laguerre(2, 0.0);
  CHECK(q2.nodes[0] == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-14));
  CHECK(q2.nodes[1] == doctest::Approx(2.0 + std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("Laguerre rules: ordering, positivity, moments") {
  for (double alpha : {0.0, 0.5, 2.0, 5.0}) {
    for (int n : {5, 20, 40}) {
      auto q = gauss_laguerre(n, alpha);
      for (std::size_t i = 0; i < q.size(); ++i) {
        CHECK(q.weights[i] > 0.0);
        if (i) CHECK(q.nodes[i] > q.nodes[i - 1]);
        CHECK(std::exp(q.log_weights[i]) == doctest::Approx(q.weights[i]).epsilon(1e-12));
      }
      // int x^alpha e^{-x} x^k = Gamma(alpha + k + 1), exact up to k = 2n - 1
      for (int k : {0, 1, n, 2 * n - 1}) {
        double s = 0.0;
        for (std::size_t i = 0; i < q.size(); ++i) s += std::exp(q.log_weights[i] + k * std::log(q.nodes[i]));
        CHECK(s / std::exp(std::lgamma(alpha + k + 1)) == doctest::Approx(1.0).epsilon(1e-12));
      }
    }
  }
  double s = 0.0;
  for (double w : gauss_laguerre(40, 0.0).weights) s += w;
  CHECK(std::abs(s - 1.0) < 1e-14);
}

TEST_CASE("Hermite and Legendre rules") {
  auto h = gauss_hermite(30);
  double m0 = 0.0, m2 = 0.0, m1 = 0.0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    m0 += h.weights[i];
    m1 += h.weights[i] * h.nodes[i];
    m2 += h.weights[i] * h.nodes[i] * h.nodes[i];
    if (i) CHECK(h.nodes[i] > h.nodes[i - 1]);
  }
  CHECK(m0 == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-13));
  CHECK(std::abs(m1) < 1e-13);
  CHECK(m2 == doctest::Approx(std::sqrt(M_PI) / 2).epsilon(1e-13));
  auto l = gauss_legendre(16);
  double s = 0.0, x30 = 0.0;
  for (std::size_t i = 0; i < l.size(); ++i) {
    s += l.weights[i];
    x30 += l.weights[i] * std::pow(l.nodes[i], 30);
  }
  CHECK(s == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(x30 == doctest::Approx(2.0 / 31.0).epsilon(1e-13));
}

TEST_CASE("radial integration") {
  auto gauss = [](double r) { return std::exp(-r * r); };
  CHECK(integrate_radial(gauss, 2.0, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(integrate_radial(gauss, 3.0, 1.0) == doctest::Approx(std::sqrt(M_PI) / 4).epsilon(1e-12));
  // independent high-precision quadrature of r e^{-r} / (1 + r^2) on [0, inf)
  auto f = [](double r) { return std::exp(-r) / (1.0 + r * r); };
  CHECK(integrate_radial(f, 2.0, 1.0) == doctest::Approx(0.343377961556427033).epsilon(1e-11));
}

TEST_CASE("panel grid: integrals, cumulative and tail") {
  PanelGrid grid(12.0);
  std::vector<double> f, F;
  for (double r : grid.nodes()) {
    f.push_back(std::exp(-r) * r * r);
    F.push_back(2.0 - std::exp(-r) * (r * r + 2 * r + 2));
  }
  double total = 2.0 - std::exp(-12.0) * (144 + 24 + 2);
  CHECK(grid.integrate(f) == doctest::Approx(total).epsilon(1e-14));
  auto c = grid.cumulative(f);
  auto t = grid.tail(f);
  for (std::size_t i = 0; i < grid.size(); i += 97) {
    CHECK(std::abs(c[i] - F[i]) < 1e-14);
    CHECK(std::abs(c[i] + t[i] - total) < 1e-14);
  }
  // nodes increase and stay inside (0, r_max)
  for (std::size_t i = 1; i < grid.size(); ++i) CHECK(grid.nodes()[i] > grid.nodes()[i - 1]);
  CHECK(grid.nodes().front() > 0.0);
  CHECK(grid.nodes().back() < 12.0);
}

TEST_CASE("panel grid resolves a weak singularity near the origin") {
  PanelGrid grid(1.0);
  std::vector<double> f;
  for (double r : grid.nodes()) f.push_back(std::sqrt(r));
  CHECK(grid.integrate(f) == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
}
