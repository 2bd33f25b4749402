#include <cmath>

#include "anharm/quadrature.hpp"
#include "anharm/series.hpp"

namespace anharm {

namespace cubic {

double Z0(double u) { return u * std::sqrt(1.0 + u); }

// (u + 2D(1 + u - s)) / (4u(1+u)) with 1 + u - s = s u / (1 + s)
double Z2(double u, double D) {
  double s = std::sqrt(1.0 + u);
  return (1.0 + 2.0 * D * s / (1.0 + s)) / (4.0 * (1.0 + u));
}

double Z3(double u, double eps1) { return -eps1 / (2.0 * u * std::sqrt(1.0 + u)); }

double Z4(double u, double D, double eps2) {
  double s = std::sqrt(1.0 + u);
  double z2 = Z2(u, D);
  double dz2 = D / (4.0 * s * (1.0 + s) * (1.0 + s) * (1.0 + u)) - z2 / (1.0 + u);
  return (u * dz2 + (D - 1.0) * z2 - u * z2 * z2 - u * eps2) / (2.0 * u * Z0(u));
}

double eps1(double D) { return std::exp(std::lgamma((D + 3.0) / 2.0) - std::lgamma(D / 2.0)); }

}  // namespace cubic

namespace {

template <class S, class C>
std::vector<S> weak_hierarchy(const S& z0, const S& u, const C& D, const std::vector<C>& eps, int N) {
  std::vector<S> Z(N + 1);
  Z[0] = z0;
  if (N >= 1) Z[1] = S::zero(z0.precision());
  const S two_u_z0 = u * z0 * C(2);
  for (int n = 2; n <= N; ++n) {
    const S& prev = Z[n - 2];
    S num = u * prev.derivative() + prev * C(D - C(1));
    S conv = S::zero(z0.precision());
    for (int i = 2; i <= n - 2; ++i) conv += Z[i] * Z[n - i];
    num -= u * conv;
    num -= u * C(eps[n - 2]);
    Z[n] = num / two_u_z0;
  }
  return Z;
}

}  // namespace

std::vector<RationalSeries> gb_weak_series(const Rational& D, const std::vector<Rational>& a,
                                           const std::vector<Rational>& eps, int N, int precision) {
  if (N < 0) throw ConfigError("need N >= 0");
  if (a.size() < 3 || sgn(a[2]) <= 0) throw ConfigError("need a_2 > 0");
  if (N >= 2 && static_cast<int>(eps.size()) < N - 1) throw ConfigError("need eps_0..eps_{N-2}");
  const int work = precision + 3 * N + 6;
  auto V = RationalSeries::polynomial(a);
  auto z0 = V.sqrt(work);
  auto u = RationalSeries::monomial(Rational(1), 1);
  auto Z = weak_hierarchy<RationalSeries, Rational>(z0, u, D, eps, N);
  for (auto& z : Z) {
    if (z.precision() < precision) throw NumericalError("weak series lost too much precision");
    z = z.truncated(precision);
  }
  return Z;
}

std::vector<double> gb_weak_values(double D, const std::vector<double>& a, const std::vector<double>& eps, int N,
                                   double u0) {
  if (!(u0 > 0.0)) throw ConfigError("u must be positive");
  if (N >= 2 && static_cast<int>(eps.size()) < N - 1) throw ConfigError("need eps_0..eps_{N-2}");
  const int K = N + 4;
  auto U = RealSeries::polynomial({u0, 1.0});
  RealSeries V = RealSeries::zero();
  for (std::size_t k = a.size(); k-- > 0;) V = (V * U + RealSeries::constant(a[k])).truncated(K);
  auto z0 = V.sqrt(K);
  auto Z = weak_hierarchy<RealSeries, double>(z0, U, D, eps, N);
  std::vector<double> out;
  for (auto& z : Z) out.push_back(z.coeff(0));
  return out;
}

namespace {

double unit_cubic_phase(int n, double u, double D, const std::vector<double>& eps) {
  double w = std::sqrt(1.0 + u);
  switch (n) {
    case 0:
      return 2.0 * (3.0 * u - 2.0) * std::pow(1.0 + u, 1.5) / 15.0;
    case 1:
      return 0.0;
    case 2:
      return 0.25 * std::log1p(u) + D * std::log(1.0 + w);
    case 3:
      return -0.5 * eps.at(1) * std::log((w - 1.0) / (w + 1.0));
    case 4: {
      double A = (5.0 + (5.0 + 12.0 * D) * w + (1.0 - 6.0 * D * (D + 1.0)) * (w + 1.0) * w * w * (3.0 * w * w - 2.0)) /
                 (48.0 * (w - 1.0) * (w + 1.0) * (w + 1.0) * w * w * w);
      double B = (1.0 - 16.0 * eps.at(2) - 6.0 * D * (D + 1.0)) / 32.0 * std::log((w - 1.0) / (w + 1.0));
      return A + B;
    }
  }
  throw ConfigError("phase order out of range");
}

}  // namespace

std::vector<double> semiclassical_phases(const PotentialSpec& spec, const std::vector<double>& eps, double r,
                                         int N) {
  spec.validate();
  if (N < 0 || N > 4) throw ConfigError("semiclassical phases are available for N <= 4");
  if (!(spec.g > 0.0)) throw ConfigError("semiclassical phases need g > 0");
  if (!(r >= 0.0)) throw ConfigError("r must be non-negative");
  if (N >= 3 && !(r > 0.0)) throw ConfigError("G_3 and G_4 are singular at r = 0");
  const double g = spec.g, u = g * r, pref = std::sqrt(2.0 * mass) / (g * g);
  std::vector<double> G(N + 1, 0.0);

  if (spec.is_unit_cubic()) {
    for (int n = 0; n <= N; ++n) {
      double u_ref = n >= 3 ? 1.0 : 0.0;
      G[n] = pref * (unit_cubic_phase(n, u, spec.D, eps) - unit_cubic_phase(n, u_ref, spec.D, eps));
    }
    return G;
  }

  auto q = gauss_legendre(64);
  for (int n = 0; n <= N; ++n) {
    if (n == 1) continue;
    double u_ref = n >= 3 ? 1.0 : 0.0;
    double half = 0.5 * (u - u_ref), mid = 0.5 * (u + u_ref), s = 0.0;
    for (std::size_t k = 0; k < q.size(); ++k) {
      double uk = mid + half * q.nodes[k];
      s += q.weights[k] * gb_weak_values(spec.D, spec.a, eps, n, uk)[n];
    }
    G[n] = pref * half * s;
  }
  return G;
}

}  // namespace anharm
