#pragma once

#include <vector>

#include "anharm/core.hpp"
#include "anharm/truncated_series.hpp"

namespace anharm {

template <class R>
R ring_int(int k);
template <>
inline double ring_int<double>(int k) { return k; }
template <>
inline Rational ring_int<Rational>(int k) { return Rational(k); }
template <>
inline RationalSeries ring_int<RationalSeries>(int k) { return RationalSeries::constant(Rational(k)); }
template <>
inline RealSeries ring_int<RealSeries>(int k) { return RealSeries::constant(double(k)); }

// Taylor coefficients b_0..b_order of the regular solution of
//   b' + (D-1) b / v = eps + mu2 b^2 - sum_k pot[k] v^k,
// i.e. (k + D - 1) b_k = [k == 1] eps + mu2 sum_{i+j=k-1} b_i b_j - pot[k-1].
// R is any commutative ring in which k + D - 1 is invertible.
template <class R>
std::vector<R> riccati_taylor(const R& D, const R& eps, const R& mu2, const std::vector<R>& pot, int order) {
  std::vector<R> b(order + 1, ring_int<R>(0));
  for (int k = 1; k <= order; ++k) {
    R rhs = ring_int<R>(0);
    if (k == 1) rhs = eps;
    R conv = ring_int<R>(0);
    for (int i = 1; i < k - 1; ++i) conv = conv + b[i] * b[k - 1 - i];
    rhs = rhs + mu2 * conv;
    if (k - 1 < static_cast<int>(pot.size())) rhs = rhs - pot[k - 1];
    b[k] = rhs / (D + ring_int<R>(k - 1));
  }
  return b;
}

// ---- weak coupling, small v: y = sum_k b_k v^k solves the Riccati equation
std::vector<double> rb_small_v_series(const PotentialSpec& spec, double eps, int order);
std::vector<Rational> rb_small_v_series(const Rational& D, const Rational& eps, const Rational& lambda,
                                        const std::vector<Rational>& a, int order);

// ---- weak coupling, large v: leading three terms
struct PowerTerm {
  double power;
  double coeff;
};
std::vector<PowerTerm> rb_large_v_series(const PotentialSpec& spec, int terms = 3);

// ---- generalized Bloch (weak) corrections Z_n(u), u = g r
namespace cubic {
double Z0(double u);
double Z2(double u, double D);
double Z3(double u, double eps1);
double Z4(double u, double D, double eps2);
// first-order weak-coupling energy <r^3> in the harmonic ground state
double eps1(double D);
}  // namespace cubic

// Laurent series of Z_0..Z_N in u about u = 0 (exact); needs sqrt(a_2) rational.
// eps[k] is the weak-coupling energy coefficient eps_k (eps[0] = D sqrt(a_2)).
std::vector<RationalSeries> gb_weak_series(const Rational& D, const std::vector<Rational>& a,
                                           const std::vector<Rational>& eps, int N, int precision);
// Z_0..Z_N evaluated at u0 > 0 for a general polynomial potential
std::vector<double> gb_weak_values(double D, const std::vector<double>& a, const std::vector<double>& eps, int N,
                                   double u0);

// G_n(r) - G_n(r_ref), n = 0..N (N <= 4); r_ref = 0 for n <= 2 and g r_ref = 1 for n >= 3.
std::vector<double> semiclassical_phases(const PotentialSpec& spec, const std::vector<double>& eps, double r,
                                         int N);

// ---- large-v coefficients c_k^(n): Z_0 = u sum_n c0[n] u^n, u Z_2 = sum_n c2[n] u^n
struct CCoefficients {
  std::vector<Rational> c0;  // c0[0] = 1
  std::vector<Rational> c2;  // c2[0] = 0
};
CCoefficients c_recurrences(int N, const Rational& D);
// closed forms consistent with the recurrences above
Rational c0_closed_form(int n);
Rational c2_closed_form(int n, const Rational& D);
// variant whose linear term carries (2n + D) instead of (n + D), with seed (D + 2)/4
std::vector<Rational> c2_doubled_index_recurrence(int N, const Rational& D);
Rational c2_doubled_index_closed_form(int n, const Rational& D);

// ---- strong coupling: Z~_n(u) are polynomials in u
struct StrongCorrection {
  std::vector<Rational> full;      // coefficient of u^k
  std::vector<Rational> external;  // the potential part (only at n = m)
  Rational alpha(int k) const;     // coefficient of u^{k+1} in full - external
};
std::vector<StrongCorrection> gb_strong_corrections(const Rational& D, const std::vector<Rational>& a,
                                                    const std::vector<Rational>& eps_tilde, int N);

// small-u Taylor coefficients of the strong-coupling Riccati solution,
//   Z' + (D-1) Z/u = eps + mu^2 Z^2 - mu^m V(u),  mu = 1/lambda~
template <class R>
std::vector<R> strong_small_u_series(const R& D, const R& eps, const R& mu, const std::vector<R>& a, int order) {
  const int m = static_cast<int>(a.size()) - 1;
  R mum = ring_int<R>(1);
  for (int i = 0; i < m; ++i) mum = mum * mu;
  std::vector<R> pot;
  for (const auto& ak : a) pot.push_back(mum * ak);
  return riccati_taylor<R>(D, eps, mu * mu, pot, order);
}
std::vector<double> strong_small_u_series(const PotentialSpec& spec, double eps_tilde, double lambda_tilde,
                                          int order);

// ---- per-order expansions Y_1..Y_3 of the cubic weak-coupling solution
enum class Regime { small_v, large_v };
struct YExpansion {
  int order;
  std::vector<std::pair<int, Rational>> terms;  // (power of v, coefficient)
  Rational coeff(int power) const;
};
// eps1..eps3 are the weak-coupling energy coefficients (not divided by D)
std::vector<YExpansion> appendix_y_expansions(const Rational& D, const Rational& eps1, const Rational& eps2,
                                              const Rational& eps3, Regime regime);

}  // namespace anharm
