#include "anharm/core.hpp"

#include <cmath>

namespace anharm {

RadialPotential::RadialPotential(std::vector<double> coeffs) : c_(std::move(coeffs)) {}

double RadialPotential::operator()(double r) const {
  double s = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * r + *it;
  return s;
}

double RadialPotential::derivative(double r) const {
  double s = 0.0;
  for (int k = degree(); k >= 1; --k) s = s * r + k * c_[k];
  return s;
}

double RadialPotential::second_derivative(double r) const {
  double s = 0.0;
  for (int k = degree(); k >= 2; --k) s = s * r + k * (k - 1) * c_[k];
  return s;
}

PotentialSpec PotentialSpec::cubic(double D, double g) {
  return polynomial(D, g, {0.0, 0.0, 1.0, 1.0});
}

PotentialSpec PotentialSpec::polynomial(double D, double g, std::vector<double> a) {
  PotentialSpec s;
  s.D = D;
  s.g = g;
  s.m = static_cast<int>(a.size()) - 1;
  s.a = std::move(a);
  s.validate();
  return s;
}

void PotentialSpec::validate() const {
  if (!(D > 0.0) || !std::isfinite(D)) throw ConfigError("D must be positive");
  if (!(g >= 0.0) || !std::isfinite(g)) throw ConfigError("g must be non-negative");
  if (m < 3 || static_cast<int>(a.size()) != m + 1) throw ConfigError("need coefficients a_0..a_m with m >= 3");
  if (a[0] != 0.0 || a[1] != 0.0) throw ConfigError("a_0 and a_1 must vanish");
  if (!(a[2] > 0.0)) throw ConfigError("a_2 must be positive");
  if (!(a[m] > 0.0)) throw ConfigError("a_m must be positive");
}

bool PotentialSpec::is_unit_cubic() const {
  return m == 3 && a[2] == 1.0 && a[3] == 1.0;
}

RadialPotential PotentialSpec::radial() const {
  std::vector<double> c(a.size(), 0.0);
  for (int k = 2; k <= m; ++k) c[k] = a[k] * std::pow(g, k - 2);
  return RadialPotential(std::move(c));
}

double PotentialSpec::operator()(double r) const { return radial()(r); }

double evaluate_potential(const PotentialSpec& spec, double r) {
  spec.validate();
  if (!std::isfinite(r)) throw ConfigError("r must be finite");
  return spec(r);
}

double effective_coupling(const PotentialSpec& spec, const Conventions& conv) {
  spec.validate();
  if (!(conv.hbar > 0.0) || !(conv.mass > 0.0)) throw ConfigError("hbar and mass must be positive");
  return std::pow(conv.hbar * conv.hbar / (2.0 * conv.mass), 0.25) * spec.g;
}

double strong_effective_coupling(const PotentialSpec& spec, const Conventions& conv) {
  spec.validate();
  if (!(conv.hbar > 0.0) || !(conv.mass > 0.0)) throw ConfigError("hbar and mass must be positive");
  if (!(spec.g > 0.0)) throw ConfigError("strong-coupling constant needs g > 0");
  const double p = 1.0 / (spec.m + 2);
  return std::pow(conv.hbar * conv.hbar / (2.0 * conv.mass), p) * std::pow(spec.g, 4.0 * p);
}

void StateLabel::validate() const {
  if (n_r < 0 || ell < 0) throw ConfigError("state quantum numbers must be non-negative");
}

StateLabel one_dimensional_state(int n) {
  if (n < 0) throw ConfigError("excitation number must be non-negative");
  return {n / 2, n % 2};
}

namespace {
std::uint64_t binom(long n, long k) {
  if (k < 0 || n < k) return 0;
  std::uint64_t r = 1;
  for (long i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}
}  // namespace

std::uint64_t degeneracy(int D, int ell) {
  if (D < 2 || ell < 0) throw ConfigError("degeneracy needs D >= 2 and ell >= 0");
  return binom(ell + D - 1, D - 1) - binom(ell + D - 3, D - 1);
}

}  // namespace anharm
