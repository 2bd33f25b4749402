#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace anharm {

// Units: hbar = 1, mass = 1/2, so lambda = g, v = r, eps = E.
inline constexpr double hbar = 1.0;
inline constexpr double mass = 0.5;

struct Conventions {
  double hbar = anharm::hbar;
  double mass = anharm::mass;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Polynomial radial potential V(r) = sum_k c[k] r^k with the coupling
// already absorbed into the coefficients.
class RadialPotential {
 public:
  RadialPotential() = default;
  explicit RadialPotential(std::vector<double> coeffs);

  double operator()(double r) const;
  double derivative(double r) const;
  double second_derivative(double r) const;
  const std::vector<double>& coefficients() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }

 private:
  std::vector<double> c_;
};

// V(r) = sum_{k=2}^{m} a_k g^{k-2} r^k.
struct PotentialSpec {
  double D = 1.0;
  double g = 0.0;
  int m = 3;
  std::vector<double> a;  // a[0..m], a[0] = a[1] = 0

  static PotentialSpec cubic(double D, double g);
  static PotentialSpec polynomial(double D, double g, std::vector<double> a);

  void validate() const;
  bool is_unit_cubic() const;  // r^2 + g r^3
  double lambda() const { return g; }
  RadialPotential radial() const;
  double operator()(double r) const;
};

double evaluate_potential(const PotentialSpec& spec, double r);

// lambda = (hbar^2 / 2M)^{1/4} g
double effective_coupling(const PotentialSpec& spec, const Conventions& conv = {});
// lambda~ = (hbar^2 / 2M)^{1/(m+2)} g^{4/(m+2)}, g > 0
double strong_effective_coupling(const PotentialSpec& spec, const Conventions& conv = {});

struct StateLabel {
  int n_r = 0;
  int ell = 0;
  void validate() const;
};

// D = 1 states are labelled by the excitation number n. The radial problem
// for odd n is the ell = 1 sector of Psi = r F with D kept at 1.
StateLabel one_dimensional_state(int n);

// Number of independent states with angular momentum ell in D >= 2 dimensions.
std::uint64_t degeneracy(int D, int ell);

// Effective dimension D + 2 ell seen by the radial factor F in Psi = r^ell F.
inline double effective_dimension(double D, int ell) { return D + 2.0 * ell; }

}  // namespace anharm
