#include <doctest.h>

#include <cmath>

#include "anharm/approximant.hpp"

using namespace anharm;

namespace {

ApproximantParams sample(double D, double g) {
  ApproximantParams p;
  p.D = D;
  p.g = g;
  p.a0 = 1.3;
  p.a2 = 0.47;
  p.b3 = 0.8;
  return p;
}

}  // namespace

TEST_CASE("constraints") {
  auto p = sample(2.0, 1.0);
  CHECK(p.a3() == doctest::Approx(0.4 * std::sqrt(0.8)).epsilon(1e-15));
  p.b3 = 1.0;
  p.a0 = 1.5;
  CHECK(p.a1() == 0.0);
  // no linear term in the phase: d(log Psi)/dr = 0 at the origin
  for (double g : {0.1, 1.0, 10.0}) CHECK(std::abs(phase_derivatives(sample(3.0, g), 0.0).f1) < 1e-14);
  CHECK_THROWS_AS([] { auto q = sample(1, 1); q.a2 = -1; q.validate(); }(), ConfigError);
  CHECK_THROWS_AS([] { auto q = sample(1, 1); q.n_r = 1; q.validate(); }(), ConfigError);
}

TEST_CASE("harmonic limit and origin value") {
  for (double D : {1.0, 2.5, 6.0}) {
    auto p = sample(D, 0.0);
    for (double r : {0.0, 0.7, 3.0}) CHECK(phase(p, r) == doctest::Approx(p.a0 + p.a2 * r * r + D * std::log(2.0)));
    auto q = sample(D, 0.4);
    CHECK(wavefunction(q, 0.0) == doctest::Approx(std::pow(2.0, -D) * std::exp(-q.a0)).epsilon(1e-14));
  }
}

TEST_CASE("large-r phase approaches (2/5) g^{1/2} r^{5/2}") {
  auto p = sample(2.0, 2.0);
  double prev = 1.0;
  for (double r : {1e2, 1e4, 1e6, 1e8}) {
    double rel = std::abs(phase(p, r) / (0.4 * std::sqrt(2.0) * std::pow(r, 2.5)) - 1.0);
    CHECK(rel < prev);
    prev = rel;
  }
  CHECK(prev < 1e-3);
}

TEST_CASE("phase derivatives match finite differences") {
  auto p = sample(3.0, 0.7);
  for (double r : {0.05, 0.9, 2.5, 7.0}) {
    const double h = 1e-4 * std::max(1.0, r);
    auto s = phase_derivatives(p, r);
    double d1 = (phase(p, r + h) - phase(p, r - h)) / (2 * h);
    double d2 = (phase(p, r + h) - 2 * phase(p, r) + phase(p, r - h)) / (h * h);
    CHECK(s.f1 == doctest::Approx(d1).epsilon(1e-8));
    CHECK(s.f2 == doctest::Approx(d2).epsilon(1e-5));
  }
}

TEST_CASE("polynomial factor") {
  std::vector<double> poly = {-1.5, 0.25, 1.0};  // P(s) = s^2 + s/4 - 3/2
  for (double r : {0.0, 0.8, 1.9}) {
    double s = r * r;
    auto ps = polynomial_factor(poly, r);
    CHECK(ps.P == doctest::Approx(s * s + 0.25 * s - 1.5));
    CHECK(ps.P1 == doctest::Approx(4 * r * r * r + 0.5 * r));
    CHECK(ps.P2 == doctest::Approx(12 * r * r + 0.5));
  }
  CHECK(polynomial_factor({}, 2.0).P == 1.0);
}

TEST_CASE("harmonic radial excitation") {
  // exact e^{-r^2/2} ground state for D = 3; the first node sits at sqrt(D/2)
  ApproximantParams ground;
  ground.D = 3.0;
  ground.g = 0.0;
  ground.a2 = 0.5;
  ground.a0 = 0.0;
  ApproximantParams excited = ground;
  excited.n_r = 1;
  auto f = excited_factor_solve(excited, 0, 1, {ground});
  REQUIRE(f.nodes.size() == 1);
  CHECK(f.nodes[0] == doctest::Approx(std::sqrt(1.5)).epsilon(1e-10));
  CHECK(f.max_residual < 1e-10);
  CHECK(f.poly.back() == 1.0);

  ApproximantParams e2 = excited;
  e2.n_r = 2;
  auto f1 = f;
  ApproximantParams first = excited;
  first.poly = f1.poly;
  auto f2 = excited_factor_solve(e2, 0, 2, {ground, first});
  REQUIRE(f2.nodes.size() == 2);
  // L_2^{1/2}(r^2) roots: r^2 = (5 -+ sqrt(10)) / 2
  CHECK(f2.nodes[0] == doctest::Approx(std::sqrt((5 - std::sqrt(10.0)) / 2)).epsilon(1e-9));
  CHECK(f2.nodes[1] == doctest::Approx(std::sqrt((5 + std::sqrt(10.0)) / 2)).epsilon(1e-9));
  CHECK(f2.max_residual < 1e-10);
}

TEST_CASE("zero order from the Approximant") {
  auto p = sample(2.0, 1.0);
  auto z = approximant_zero_order(p, approximant_extent(p, 60.0));
  CHECK(z.D_eff == 2.0);
  CHECK(z.E0 == doctest::Approx(2.0 * phase_derivatives(p, 0.0).f2).epsilon(1e-12));
  // natural gauge: the induced potential vanishes at the origin
  CHECK(std::abs(z.induced_potential(0)) < 1e-6);
  CHECK(z.grid.integrate(z.weight) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK_THROWS_AS(approximant_zero_order([&] { auto q = p; q.n_r = 1; q.poly = {-1, 1}; return q; }(), 10.0),
                  ConfigError);
}

TEST_CASE("json round trip") {
  auto p = sample(6.0, 10.0);
  p.ell = 1;
  auto q = params_from_json(to_json(p));
  CHECK(q.D == p.D);
  CHECK(q.g == p.g);
  CHECK(q.a0 == p.a0);
  CHECK(q.a2 == p.a2);
  CHECK(q.b3 == p.b3);
  CHECK(q.ell == 1);
  CHECK_THROWS(params_from_json("{\"D\": 1}"));
}
