#include <cmath>
#include <sstream>

#include "anharm/series.hpp"

namespace anharm {

std::string export_series(const RationalSeries& s) {
  std::ostringstream os;
  for (const auto& [p, c] : s.terms()) os << p << '\t' << c.get_num() << '/' << c.get_den() << '\n';
  return os.str();
}

std::vector<double> rb_small_v_series(const PotentialSpec& spec, double eps, int order) {
  spec.validate();
  if (order < 1) throw ConfigError("series order must be positive");
  auto pot = spec.radial().coefficients();
  return riccati_taylor<double>(spec.D, eps, 1.0, pot, order);
}

std::vector<Rational> rb_small_v_series(const Rational& D, const Rational& eps, const Rational& lambda,
                                        const std::vector<Rational>& a, int order) {
  if (sgn(D) <= 0) throw ConfigError("D must be positive");
  if (order < 1) throw ConfigError("series order must be positive");
  std::vector<Rational> pot(a.size(), Rational(0));
  for (std::size_t k = 2; k < a.size(); ++k) {
    Rational p = a[k];
    for (std::size_t i = 2; i < k; ++i) p *= lambda;
    pot[k] = p;
  }
  return riccati_taylor<Rational>(D, eps, Rational(1), pot, order);
}

std::vector<PowerTerm> rb_large_v_series(const PotentialSpec& spec, int terms) {
  spec.validate();
  if (terms < 1 || terms > 3) throw ConfigError("large-v series is available for 1..3 terms");
  if (!(spec.g > 0.0)) throw ConfigError("large-v series needs g > 0");
  const int m = spec.m;
  const double am = spec.a[m], am1 = spec.a[m - 1], am2 = spec.a[m - 2], lam = spec.g;
  std::vector<PowerTerm> out;
  out.push_back({m / 2.0, std::sqrt(am) * std::pow(lam, (m - 2) / 2.0)});
  if (terms > 1) out.push_back({(m - 2) / 2.0, am1 * std::pow(lam, (m - 4) / 2.0) / (2.0 * std::sqrt(am))});
  if (terms > 2)
    out.push_back({(m - 4) / 2.0, (4.0 * am * am2 - am1 * am1) * std::pow(lam, (m - 6) / 2.0) /
                                      (8.0 * std::pow(am, 1.5))});
  return out;
}

namespace {
mpz_class central_binomial(int n) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), 2 * n, n);
  return r;
}
mpz_class pow2(int k) {
  mpz_class r = 1;
  r <<= k;
  return r;
}
mpz_class factorial(int n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}
}  // namespace

CCoefficients c_recurrences(int N, const Rational& D) {
  if (N < 1) throw ConfigError("need N >= 1");
  CCoefficients c;
  c.c0.assign(N + 1, Rational(0));
  c.c2.assign(N + 1, Rational(0));
  c.c0[0] = 1;
  c.c0[1] = Rational(1, 2);
  for (int n = 2; n <= N; ++n) {
    Rational s = 0;
    for (int k = 1; k < n; ++k) s += c.c0[k] * c.c0[n - k];
    c.c0[n] = -s / 2;
  }
  for (int n = 1; n <= N; ++n) {
    Rational s = (n + D) * c.c0[n] / 2;
    for (int k = 1; k < n; ++k) s -= c.c0[k] * c.c2[n - k];
    c.c2[n] = s;
  }
  return c;
}

Rational c0_closed_form(int n) {
  if (n == 0) return 1;
  Rational r(factorial(2 * n - 2), pow2(2 * n - 1) * factorial(n - 1) * factorial(n));
  r.canonicalize();
  return n % 2 == 1 ? r : Rational(-r);
}

Rational c2_closed_form(int n, const Rational& D) {
  Rational b(central_binomial(n), pow2(2 * n));
  b.canonicalize();
  Rational r = (Rational(1, 2) + D * b) / 2;
  return n % 2 == 1 ? r : Rational(-r);
}

std::vector<Rational> c2_doubled_index_recurrence(int N, const Rational& D) {
  auto c0 = c_recurrences(N, D).c0;
  std::vector<Rational> c2(N + 1, Rational(0));
  for (int n = 1; n <= N; ++n) {
    Rational s = (2 * n + D) * c0[n] / 2;
    for (int k = 1; k < n; ++k) s -= c0[k] * c2[n - k];
    c2[n] = s;
  }
  return c2;
}

Rational c2_doubled_index_closed_form(int n, const Rational& D) {
  Rational b(central_binomial(n), pow2(2 * n));
  b.canonicalize();
  Rational r = (1 + D * b) / 2;
  return n % 2 == 1 ? r : Rational(-r);
}

}  // namespace anharm
