#include <doctest.h>

#include <cmath>

#include "anharm/core.hpp"

using namespace anharm;

TEST_CASE("potential evaluation") {
  auto harm = PotentialSpec::polynomial(2.0, 0.0, {0, 0, 1, 1});
  CHECK(evaluate_potential(harm, 2.0) == doctest::Approx(4.0));
  CHECK(evaluate_potential(PotentialSpec::cubic(1.0, 1.0), 1.0) == doctest::Approx(2.0));
  CHECK(evaluate_potential(PotentialSpec::cubic(3.0, 0.1), 2.0) == doctest::Approx(4.8));
  CHECK(PotentialSpec::cubic(3.0, 0.1).is_unit_cubic());
}

TEST_CASE("radial polynomial and its derivatives") {
  auto spec = PotentialSpec::polynomial(3.0, 0.5, {0, 0, 2, 1, 3});
  auto V = spec.radial();
  for (double r : {0.0, 0.3, 1.7, 4.0}) {
    double direct = 2 * r * r + 0.5 * r * r * r + 3 * 0.25 * r * r * r * r;
    CHECK(V(r) == doctest::Approx(direct).epsilon(1e-14));
    double h = 1e-5;
    CHECK(V.derivative(r) == doctest::Approx((V(r + h) - V(r - h)) / (2 * h)).epsilon(1e-8));
    CHECK(V.second_derivative(r) == doctest::Approx((V(r + h) - 2 * V(r) + V(r - h)) / (h * h)).epsilon(1e-5));
  }
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(PotentialSpec::polynomial(1.0, 1.0, {0, 0, 0, 1}).validate(), ConfigError);
  CHECK_THROWS_AS(PotentialSpec::polynomial(1.0, 1.0, {0, 0, 1, -1}).validate(), ConfigError);
  CHECK_THROWS_AS(PotentialSpec::polynomial(1.0, 1.0, {0, 1, 1, 1}).validate(), ConfigError);
  CHECK_THROWS_AS(PotentialSpec::polynomial(1.0, 1.0, {0, 0, 1}).validate(), ConfigError);
  CHECK_THROWS_AS(PotentialSpec::cubic(0.0, 1.0).validate(), ConfigError);
  CHECK_THROWS_AS(PotentialSpec::cubic(1.0, -1.0).validate(), ConfigError);
  CHECK_NOTHROW(PotentialSpec::cubic(2.5, 0.0).validate());
}

TEST_CASE("effective couplings") {
  CHECK(effective_coupling(PotentialSpec::cubic(1, 1)) == doctest::Approx(1.0));
  CHECK(effective_coupling(PotentialSpec::cubic(1, 10)) == doctest::Approx(10.0));
  CHECK(effective_coupling(PotentialSpec::cubic(1, 1), {2.0, 1.0}) == doctest::Approx(1.189207115).epsilon(1e-9));
  CHECK(strong_effective_coupling(PotentialSpec::cubic(1, 1)) == doctest::Approx(1.0));
  CHECK(strong_effective_coupling(PotentialSpec::cubic(1, 10)) == doctest::Approx(6.309573445).epsilon(1e-9));
  CHECK(strong_effective_coupling(PotentialSpec::cubic(1, 32)) == doctest::Approx(16.0).epsilon(1e-14));
  CHECK_THROWS_AS(strong_effective_coupling(PotentialSpec::cubic(1, 0)), ConfigError);
}

TEST_CASE("degeneracy") {
  for (int l = 0; l < 8; ++l) CHECK(degeneracy(3, l) == std::uint64_t(2 * l + 1));
  CHECK(degeneracy(2, 5) == 2);
  CHECK(degeneracy(2, 0) == 1);
  CHECK(degeneracy(6, 0) == 1);
  CHECK(degeneracy(6, 1) == 6);
  CHECK(degeneracy(4, 2) == 9);
  CHECK_THROWS_AS(degeneracy(1, 0), ConfigError);
}

TEST_CASE("one-dimensional states") {
  CHECK(one_dimensional_state(0).n_r == 0);
  CHECK(one_dimensional_state(0).ell == 0);
  CHECK(one_dimensional_state(1).ell == 1);
  CHECK(one_dimensional_state(2).n_r == 1);
  CHECK(one_dimensional_state(2).ell == 0);
  CHECK(one_dimensional_state(5).n_r == 2);
  CHECK(one_dimensional_state(5).ell == 1);
  CHECK_THROWS(one_dimensional_state(-1));
  CHECK(effective_dimension(1.0, 1) == 3.0);
}
