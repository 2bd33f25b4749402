#include <doctest.h>

#include <cmath>

#include "anharm/mesh.hpp"

using namespace anharm;

namespace {

double sq(double r) { return r * r; }

}  // namespace

TEST_CASE("kinetic matrix is symmetric") {
  for (auto kind : {MeshKind::laguerre, MeshKind::hermite}) {
    auto b = build(kind, 30, 0.7, 1.0);
    double scale = b.kinetic.cwiseAbs().maxCoeff();
    CHECK((b.kinetic - b.kinetic.transpose()).cwiseAbs().maxCoeff() <= 1e-13 * scale);
  }
  auto b = build(MeshKind::laguerre, 40, 0.3, 6.0, 2);
  CHECK(b.alpha == 9.0);
  CHECK((b.kinetic - b.kinetic.transpose()).cwiseAbs().maxCoeff() <= 1e-13 * b.kinetic.cwiseAbs().maxCoeff());
  CHECK_THROWS_AS(build(MeshKind::laguerre, 51, 1.0, 1.0), ConfigError);
  CHECK_THROWS_AS(build(MeshKind::hermite, 20, 1.0, 2.0), ConfigError);
}

TEST_CASE("harmonic spectra") {
  auto h = eigenvalues(build(MeshKind::hermite, 40, 1.0, 1.0), sq, 4);
  for (int k = 0; k < 4; ++k) CHECK(std::abs(h.values[k] - (2 * k + 1)) < 1e-10);

  auto three = scale_scan(sq, 3.0, {0, 0}, 50);
  CHECK(std::abs(three.energy - 3.0) < 1e-10);
  CHECK(std::abs(scale_scan(sq, 3.0, {1, 0}, 50).energy - 7.0) < 1e-10);
  CHECK(std::abs(scale_scan(sq, 3.0, {2, 0}, 50).energy - 11.0) < 1e-10);
  CHECK(std::abs(scale_scan(sq, 2.0, {0, 1}, 50).energy - 4.0) < 1e-10);
  CHECK(std::abs(scale_scan(sq, 2.0, {1, 1}, 50).energy - 8.0) < 1e-10);
  CHECK(three.plateau);
}

TEST_CASE("cubic reference energies") {
  CHECK(std::abs(mesh_energy(PotentialSpec::cubic(1, 1), {0, 0}) - 1.387428851) < 2e-9);
  CHECK(std::abs(mesh_energy(PotentialSpec::cubic(2, 10), {0, 0}) - 5.794212901) < 2e-9);
  auto sc = scale_scan(PotentialSpec::cubic(3, 0.1), {0, 0});
  CHECK(std::abs(sc.energy - 3.208922343) < 2e-9);
  CHECK(sc.plateau);
  CHECK(std::abs(scale_scan(PotentialSpec::cubic(6, 10), {0, 0}).energy - 19.981458308) < 2e-9);
  CHECK(std::abs(scale_scan([](double r) { return r * r * r; }, 1.0, {0, 0}).energy - 1.022947875) < 2e-9);
}

TEST_CASE("convergence in N") {
  for (double g : {0.1, 1.0, 10.0}) {
    auto spec = PotentialSpec::cubic(2, g);
    CHECK(std::abs(mesh_energy(spec, {0, 0}, 50) - mesh_energy(spec, {0, 0}, 40)) <= 1e-10);
  }
}

TEST_CASE("full-line mesh reproduces both radial sectors of D = 1") {
  auto V = [](double x) { return x * x + std::abs(x * x * x); };
  // the kink of |x|^3 at the origin caps the full-line mesh near 1e-6
  auto h = eigenvalues(build(MeshKind::hermite, 50, 0.34, 1.0), V, 2);
  auto spec = PotentialSpec::cubic(1, 1);
  CHECK(h.values[0] == doctest::Approx(mesh_energy(spec, {0, 0})).epsilon(1e-6));
  CHECK(h.values[1] == doctest::Approx(mesh_energy(spec, {0, 1})).epsilon(1e-6));
  // odd D = 1 states coincide with D = 3, ell = 0
  CHECK(std::abs(mesh_energy(spec, {0, 1}) - mesh_energy(PotentialSpec::cubic(3, 1), {0, 0})) < 1e-9);
}

TEST_CASE("eigenvectors") {
  auto s = mesh_state(PotentialSpec::cubic(2, 1), {0, 0});
  auto b = build(MeshKind::laguerre, 50, 1.0, 2.0);
  REQUIRE(s.vectors.size() >= 1);
  // positive, nodeless ground state
  for (double f : s.vectors[0]) CHECK(f > -1e-12);
  auto csv = mesh_csv(s, 0, 0);
  CHECK(csv.rfind("r,F,Psi\n", 0) == 0);
  CHECK(b.r().size() == 50);
}
