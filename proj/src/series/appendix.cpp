#include "anharm/series.hpp"

namespace anharm {

Rational YExpansion::coeff(int power) const {
  for (const auto& [p, c] : terms)
    if (p == power) return c;
  return 0;
}

namespace {

// Y_n(v) about v = 0: coefficients of lambda^n in the Taylor coefficients of y.
std::vector<YExpansion> small_v(const Rational& D, const std::vector<Rational>& eps) {
  const int P = 4;
  auto lam = RationalSeries::monomial(Rational(1), 1, P);
  auto Dr = RationalSeries::constant(D);
  auto e = RationalSeries::polynomial(eps, P);
  std::vector<RationalSeries> pot = {RationalSeries::zero(P), RationalSeries::zero(P),
                                     RationalSeries::constant(Rational(1), P), lam};
  auto b = riccati_taylor<RationalSeries>(Dr, e, RationalSeries::constant(Rational(1), P), pot, 6);
  std::vector<YExpansion> out;
  for (int n = 1; n <= 3; ++n) {
    YExpansion y{n, {}};
    for (int k = 1; k <= 6; ++k) {
      Rational c = b[k].coeff(n);
      if (sgn(c) != 0) y.terms.emplace_back(k, c);
    }
    out.push_back(std::move(y));
  }
  return out;
}

// Y_n(v) about v = infinity, as Laurent series in t = 1/v.
std::vector<YExpansion> large_v(const Rational& D, const std::vector<Rational>& eps) {
  const int P = 14;
  const int last = 2;  // report down to v^{-2}
  auto t = RationalSeries::monomial(Rational(1), 1);
  auto half_t = RationalSeries::monomial(Rational(1, 2), 1);
  std::vector<RationalSeries> Y(4);
  Y[0] = RationalSeries::monomial(Rational(1), -1);
  std::vector<YExpansion> out;
  for (int n = 1; n <= 3; ++n) {
    RationalSeries fixed = RationalSeries::constant(-eps[n], P);
    if (n == 1) fixed += RationalSeries::monomial(Rational(1), -3, P);
    for (int k = 1; k < n; ++k) fixed -= Y[k] * Y[n - k];
    RationalSeries y = RationalSeries::zero(P);
    for (int it = 0; it < 2 * P; ++it) {
      RationalSeries dy = -(t * t * y.derivative());
      y = (half_t * (dy + t * y * Rational(D - 1) + fixed)).truncated(P);
    }
    Y[n] = y;
    if (y.precision() <= last) throw NumericalError("large-v expansion lost precision");
    YExpansion e{n, {}};
    for (int p = -(n + 1); p <= last; ++p) {
      Rational c = y.coeff(p);
      if (sgn(c) != 0) e.terms.emplace_back(-p, c);
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

std::vector<YExpansion> appendix_y_expansions(const Rational& D, const Rational& eps1, const Rational& eps2,
                                              const Rational& eps3, Regime regime) {
  if (sgn(D) <= 0) throw ConfigError("D must be positive");
  std::vector<Rational> eps = {D, eps1, eps2, eps3};
  return regime == Regime::small_v ? small_v(D, eps) : large_v(D, eps);
}

}  // namespace anharm
