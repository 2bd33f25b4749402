#include <doctest.h>

#include <cmath>

#include "anharm/quadrature.hpp"
#include "anharm/series.hpp"

using namespace anharm;

namespace {

// Taylor coefficient of sqrt(1 + u): binom(1/2, n)
Rational binom_half(int n) {
  Rational c(1);
  for (int k = 0; k < n; ++k) c *= Rational(1, 2) - Rational(k);
  for (int k = 2; k <= n; ++k) c /= Rational(k);
  return c;
}

RationalSeries poly(std::vector<Rational> c) { return RationalSeries::polynomial(c); }

}  // namespace

TEST_CASE("truncated series arithmetic") {
  auto one_plus_u = poly({1, 1});
  auto s = one_plus_u.sqrt(12);
  for (int n = 0; n < 12; ++n) CHECK(s.coeff(n) == binom_half(n));
  auto sq = (s * s).truncated(12);
  CHECK(sq.coeff(0) == 1);
  CHECK(sq.coeff(1) == 1);
  for (int n = 2; n < 12; ++n) CHECK(sq.coeff(n) == 0);

  auto a = poly({1, 2, 3}).truncated(8), b = poly({Rational(1, 3), -1}).truncated(8), c = s.truncated(8);
  auto l = (a * b) * c, r = a * (b * c);
  for (int n = 0; n < 8; ++n) CHECK(l.coeff(n) == r.coeff(n));

  auto inv = one_plus_u.inverse(10);
  for (int n = 0; n < 10; ++n) CHECK(inv.coeff(n) == (n % 2 ? -1 : 1));
  auto q = (poly({2, 1}) / one_plus_u.truncated(10));
  CHECK(q.coeff(0) == 2);
  CHECK(q.coeff(3) == -1);  // (2 + u)/(1 + u) = 2 - u + u^2 - ...

  auto p = poly({5, 0, 3, 1});
  CHECK(p.derivative().coeff(1) == 6);
  CHECK(p.integral().coeff(4) == Rational(1, 4));
  CHECK(p.integral().derivative().coeff(2) == 3);
  CHECK(RationalSeries::monomial(1, -2).valuation() == -2);
  CHECK_THROWS(RationalSeries::monomial(1, -1).integral());
  CHECK_THROWS(poly({2}).sqrt(4));  // 2 is not a rational square
  CHECK(s.evaluate(0.1) == doctest::Approx(std::sqrt(1.1)).epsilon(1e-12));
}

TEST_CASE("weak coupling small-v series") {
  // harmonic: y = v exactly
  auto h = rb_small_v_series(Rational(3), Rational(3), Rational(0), {0, 0, 1, 1}, 10);
  CHECK(h[1] == 1);
  for (int k = 2; k <= 10; ++k) CHECK(h[k] == 0);
  // v^2 coefficient vanishes whatever the inputs
  for (Rational eps : {Rational(7, 5), Rational(-2), Rational(1, 3)}) {
    auto b = rb_small_v_series(Rational(1), eps, Rational(1, 2), {0, 0, 1, 1}, 6);
    CHECK(b[2] == 0);
    CHECK(b[4] == -Rational(1, 2) / 4);  // -lambda a_3 / (D + 3)
  }
  auto d = rb_small_v_series(PotentialSpec::cubic(2, 0.3), 2.4, 6);
  CHECK(d[1] == doctest::Approx(1.2));
  CHECK(d[2] == 0.0);
}

TEST_CASE("weak coupling large-v leading terms") {
  auto t = rb_large_v_series(PotentialSpec::cubic(1, 1), 3);
  REQUIRE(t.size() == 3);
  CHECK(t[0].power == 1.5);
  CHECK(t[1].power == 0.5);
  CHECK(t[2].power == -0.5);
  CHECK(t[0].coeff == doctest::Approx(1.0));
  CHECK(t[1].coeff == doctest::Approx(0.5));
  CHECK(t[2].coeff == doctest::Approx(-0.125));
  // m = 6: third term (4 a6 a4 - a5^2) / (8 a6^{3/2}) on v^1
  auto s = rb_large_v_series(PotentialSpec::polynomial(1, 1, {0, 0, 1, 0, 1, 0, 1}), 3);
  CHECK(s[2].power == 1.0);
  CHECK(s[2].coeff == doctest::Approx(0.5));
}

TEST_CASE("generating functions of the unit cubic") {
  CHECK(cubic::Z0(3.0) == doctest::Approx(6.0));
  for (double D : {1.0, 2.0, 3.5}) CHECK(cubic::Z2(1e-7, D) == doctest::Approx((1 + D) / 4).epsilon(1e-6));
  // u Z_2 = (2D + 1)/4 - (D/2) u^{-1/2} + ...
  CHECK(cubic::Z2(1e12, 1.0) * 1e12 == doctest::Approx(0.75).epsilon(1e-6));
  CHECK((cubic::Z2(1e8, 1.0) * 1e8 - 0.75) * 1e4 == doctest::Approx(-0.5).epsilon(1e-3));
  CHECK(cubic::eps1(1.0) == doctest::Approx(0.564189583547756287).epsilon(1e-14));
  CHECK(cubic::eps1(3.0) == doctest::Approx(2.256758334191025148).epsilon(1e-14));

  // exact Laurent series: Z_0 = u sqrt(1 + u), Z_1 = 0, u Z_2 matches the c2 recurrence
  for (Rational D : {Rational(1), Rational(2), Rational(7, 2)}) {
    auto Z = gb_weak_series(D, {0, 0, 1, 1}, {D, Rational(3, 7)}, 3, 10);
    for (int n = 0; n < 9; ++n) CHECK(Z[0].coeff(n + 1) == binom_half(n));
    CHECK(Z[1].empty());
    auto c = c_recurrences(9, D);
    for (int n = 0; n < 9; ++n) CHECK(Z[2].coeff(n - 1) == c.c2[n]);
  }
  // floating evaluation agrees with the closed forms
  auto v = gb_weak_values(2.0, {0, 0, 1, 1}, {2.0, cubic::eps1(2.0)}, 3, 0.7);
  CHECK(v[0] == doctest::Approx(cubic::Z0(0.7)).epsilon(1e-12));
  CHECK(v[2] == doctest::Approx(cubic::Z2(0.7, 2.0)).epsilon(1e-12));
  CHECK(v[3] == doctest::Approx(cubic::Z3(0.7, cubic::eps1(2.0))).epsilon(1e-10));
}

TEST_CASE("large-v coefficients") {
  auto c = c_recurrences(20, Rational(1));
  for (int n = 0; n <= 20; ++n) {
    CHECK(c.c0[n] == binom_half(n));
    CHECK(c.c0[n] == c0_closed_form(n));
  }
  CHECK(c.c0[1] == Rational(1, 2));
  CHECK(c.c0[4] == Rational(-5, 128));
  for (Rational D : {Rational(1), Rational(3), Rational(5, 2)}) {
    auto c2 = c_recurrences(15, D).c2;
    CHECK(c2[1] == (D + 1) / 4);
    for (int n = 1; n <= 15; ++n) CHECK(c2[n] == c2_closed_form(n, D));
    auto alt = c2_doubled_index_recurrence(15, D);
    CHECK(alt[2] == -(3 * D + 8) / 16);
    for (int n = 1; n <= 15; ++n) CHECK(alt[n] == c2_doubled_index_closed_form(n, D));
  }
}

TEST_CASE("semiclassical phases") {
  auto spec = PotentialSpec::cubic(1, 1);
  auto G = semiclassical_phases(spec, {1.0, cubic::eps1(1.0)}, 1.0, 3);
  // int_0^1 r sqrt(1 + r) dr, independent high-precision quadrature
  CHECK(G[0] == doctest::Approx(0.643790283299492013).epsilon(1e-10));
  CHECK(G[1] == 0.0);
  auto q = gauss_legendre(40);
  double g2 = 0.0;
  for (std::size_t k = 0; k < q.size(); ++k) g2 += 0.5 * q.weights[k] * cubic::Z2(0.5 * (q.nodes[k] + 1), 1.0);
  CHECK(G[2] == doctest::Approx(g2).epsilon(1e-10));
  CHECK(G[3] == doctest::Approx(0.0).epsilon(1e-14));  // reference point g r = 1
  // generic path: a_3 = 2 is not the unit cubic, so G_0 comes from quadrature of the hierarchy
  auto other = PotentialSpec::polynomial(1, 1, {0, 0, 1, 2});
  CHECK_FALSE(other.is_unit_cubic());
  CHECK(semiclassical_phases(other, {1.0}, 1.0, 0)[0] == doctest::Approx(0.75948698969421758).epsilon(1e-10));
}

TEST_CASE("strong coupling generating functions") {
  const Rational D(3, 2);
  std::vector<Rational> a = {0, 0, 1, 1};
  std::vector<Rational> et;
  for (int n = 0; n <= 12; ++n) et.push_back(Rational(n + 2, n + 3));
  auto Z = gb_strong_corrections(D, a, et, 12);
  CHECK(Z[1].full.size() >= 2);
  CHECK(Z[1].full[1] == et[1] / D);
  for (std::size_t k = 0; k < Z[1].full.size(); ++k)
    if (k != 1) CHECK(Z[1].full[k] == 0);
  for (int n = 0; n <= 12; ++n) {
    CHECK(Z[n].alpha(1) == 0);
    CHECK(Z[n].alpha(3) == 0);
  }
  CHECK(Z[3].full.at(4) == -a[3] / (D + 3));

  // resummation equals the small-u solution with eps = sum eps_n mu^n
  const int N = 8, P = N + 1;
  auto mu = RationalSeries::monomial(Rational(1), 1);
  RationalSeries eps = RationalSeries::zero(P);
  for (int n = 0; n <= N; ++n) eps += RationalSeries::monomial(et[n], n, P);
  std::vector<RationalSeries> as;
  for (auto& x : a) as.push_back(RationalSeries::constant(x));
  auto b = strong_small_u_series<RationalSeries>(RationalSeries::constant(D), eps, mu, as, 5);
  for (int k = 0; k <= 5; ++k)
    for (int n = 0; n <= N; ++n) {
      Rational z = k < static_cast<int>(Z[n].full.size()) ? Z[n].full[k] : Rational(0);
      CHECK(b[k].coeff(n) == z);
    }
  // D = 1, lambda~ = 1: u^3 coefficient (eps^2 - 1)/3 with a_2 = 1
  Rational e(5, 4);
  auto s = strong_small_u_series<Rational>(Rational(1), e, Rational(1), a, 4);
  CHECK(s[3] == (e * e - 1) / 3);
  CHECK(s[2] == 0);
}

TEST_CASE("per-order expansions") {
  auto large = appendix_y_expansions(Rational(3), Rational(1, 2), Rational(1, 3), Rational(1, 5), Regime::large_v);
  CHECK(large[0].coeff(0) == 1);  // (D + 1)/4 at D = 3
  auto large1 = appendix_y_expansions(Rational(1), Rational(1, 2), Rational(1, 3), Rational(1, 5), Regime::large_v);
  CHECK(large1[0].coeff(-2) == 0);  // (D^2 - 1)/8
  const Rational D(3), e1(2, 3), e2(-1, 5);
  auto small = appendix_y_expansions(D, e1, e2, Rational(0), Regime::small_v);
  Rational b1 = e1 / D, b2 = e2 / D;
  CHECK(small[1].coeff(3) == (b1 * b1 + 2 * b2) / (D + 2));
  CHECK(small[0].coeff(1) == e1 / D);
  CHECK(small[0].coeff(2) == 0);
}
