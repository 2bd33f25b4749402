#include <doctest.h>

#include <cmath>
#include <json.hpp>

#include "anharm/mesh.hpp"
#include "anharm/strongcoupling.hpp"

using namespace anharm;

namespace {

double cube(double r) { return r * r * r; }

double mesh_eps0(double D) { return scale_scan(cube, D, {0, 0}).energy; }

}  // namespace

TEST_CASE("Symanzik scaling") {
  auto s1 = symanzik_scale(PotentialSpec::cubic(2, 1));
  CHECK(s1.gamma == 1.0);
  CHECK(s1.energy_factor == 1.0);
  CHECK(s1.W.coefficients()[3] == 1.0);
  CHECK(s1.W.coefficients()[2] == 1.0);
  auto s32 = symanzik_scale(PotentialSpec::cubic(2, 32));
  CHECK(s32.lambda_hat == doctest::Approx(1.0 / 16).epsilon(1e-14));
  CHECK(s32.W.coefficients()[2] == doctest::Approx(1.0 / 16).epsilon(1e-14));
  CHECK(s32.energy_factor == doctest::Approx(std::pow(32.0, 0.4)).epsilon(1e-14));
  auto q = symanzik_scale(PotentialSpec::polynomial(1, 1, {0, 0, 2, 3, 1}));
  CHECK(q.gamma == 1.0);
  CHECK(q.W.coefficients() == std::vector<double>{0, 0, 2, 3, 1});
  CHECK_THROWS_AS(symanzik_scale(PotentialSpec::cubic(1, 0)), ConfigError);
}

TEST_CASE("Symanzik identity through the mesh") {
  for (double g : {1.0, 10.0}) {
    for (double D : {1.0, 3.0}) {
      auto spec = PotentialSpec::cubic(D, g);
      auto s = symanzik_scale(spec);
      auto W = s.W;
      double scaled = s.energy_factor * scale_scan([&](double r) { return W(r); }, D, {0, 0}).energy;
      CHECK(mesh_energy(spec, {0, 0}) == doctest::Approx(scaled).epsilon(1e-9));
    }
  }
}

TEST_CASE("closed forms of the first strong-coupling coefficients") {
  auto c = general_strong_coefficients(1.0, 1.5, 1.0);
  CHECK(c.e10 == doctest::Approx(0.494831951163184980).epsilon(1e-13));
  CHECK(c.eps01 == doctest::Approx(1.053006976765822385).epsilon(1e-13));
  CHECK(general_strong_coefficients(1.0, 2.0, 1.0).eps01 == doctest::Approx(1.157233039336957034).epsilon(1e-13));
  CHECK(general_strong_coefficients(3.0, 1.5, 1.0).e10 ==
        doctest::Approx(std::pow(1.25, 0.8) * std::tgamma(2.0) / std::tgamma(1.2)).epsilon(1e-13));
  CHECK_THROWS_AS(general_strong_coefficients(0.2, 0.6, 1.0), ConfigError);
  CHECK_THROWS_AS(general_strong_coefficients(1.0, 0.5, 1.0), ConfigError);
}

TEST_CASE("simple pipeline partial sums") {
  const double ref[] = {0, 1.053006976, 1.021174929, 1.022989568, 1.022956899, 1.022946414, 1.022947763};
  auto sp = epsilon0_simple_pipeline(1.0, 6);
  REQUIRE(sp.partial_sums.size() == 7);
  CHECK(sp.partial_sums[0] == 0.0);
  CHECK(std::abs(sp.partial_sums[1] - sp.closed_form_first) < 1e-10);
  CHECK(std::abs(sp.partial_sums[1] - ref[1]) < 1e-8);
  for (int k = 2; k <= 6; ++k) CHECK(std::abs(sp.partial_sums[k] - ref[k]) < 2e-5);
  const double exact = mesh_eps0(1.0);
  for (int k = 2; k <= 6; ++k)
    CHECK(std::abs(sp.partial_sums[k] - exact) < std::abs(sp.partial_sums[k - 1] - exact));
  CHECK_THROWS_AS(epsilon0_simple_pipeline(1.0, 7), ConfigError);
}

TEST_CASE("leading and subleading coefficients from the Approximant") {
  auto ap = epsilon0_approximant(1.0);
  CHECK(ap.eps2 < 0.0);
  CHECK(std::abs(ap.eps0_2 - mesh_eps0(1.0)) < 2e-8);
  CHECK(std::abs(ap.eps0_2 - 1.022947875) < 2e-8);
  auto e1 = epsilon1(1.0, &ap);
  CHECK(e1.crude == doctest::Approx(0.4948).epsilon(1e-4));
  CHECK(std::abs(e1.refined - 0.410599202) < 5e-6);
  CHECK(e1.refined == doctest::Approx(e1.first + e1.correction));
  auto j = nlohmann::json::parse(strong_expansion(1.0, 2).to_json());
  CHECK(j.contains("eps1"));
  CHECK(j["simple"]["partial_sums"].size() == 3);
}

TEST_CASE("reconstruction residual scales like g^{-6/5}") {
  for (double D : {1.0, 2.0, 3.0, 6.0}) {
    const double e0 = mesh_eps0(D), e1 = epsilon1(D).refined;
    std::vector<double> scaled;
    for (double g : {10.0, 50.0, 100.0}) {
      double E = mesh_energy(PotentialSpec::cubic(D, g), {0, 0});
      double approx = std::pow(g, 0.4) * (e0 + e1 * std::pow(g, -0.8));
      scaled.push_back(std::abs(E - approx) * std::pow(g, 1.2));
    }
    double hi = *std::max_element(scaled.begin(), scaled.end());
    double lo = *std::min_element(scaled.begin(), scaled.end());
    CHECK(hi / lo < 1.3);
  }
}

TEST_CASE("interpolation fit") {
  auto g = log_grid(0.01, 100.0, 25);
  CHECK(g.front() == doctest::Approx(0.01));
  CHECK(g.back() == doctest::Approx(100.0));
  CHECK(g.size() == 25);
  std::vector<double> E;
  for (double x : g) E.push_back(interpolation(2.0, 3.5, 1.1, x));
  auto f = fit_interpolation(2.0, 1.1, g, E);
  CHECK(f.a == doctest::Approx(3.5).epsilon(1e-7));
  CHECK(f.max_relative_error < 1e-8);
  CHECK(interpolation(1.0, 3.281, 1.023, 1.0) == doctest::Approx(1.401).epsilon(1e-3));
  CHECK_THROWS_AS(fit_interpolation(1.0, 1.0, {1.0}, {}), ConfigError);
}
