#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <climits>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "anharm/core.hpp"

namespace anharm {

using Rational = mpq_class;

namespace detail {

inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline double scalar_sqrt(double x) {
  if (!(x > 0.0)) throw NumericalError("series sqrt needs a positive leading coefficient");
  return std::sqrt(x);
}

inline Rational scalar_sqrt(const Rational& x) {
  if (sgn(x) <= 0) throw NumericalError("series sqrt needs a positive leading coefficient");
  mpz_class n = x.get_num(), d = x.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    throw NumericalError("leading coefficient is not a rational square");
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  return Rational(sn, sd);
}

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.get_d(); }

}  // namespace detail

// Truncated Laurent series sum_{k >= val} c_k x^k + O(x^prec).
// Coefficients between the stored block and prec are zero.
template <class T>
class TruncatedSeries {
 public:
  static constexpr int exact = INT_MAX / 4;

  TruncatedSeries() : val_(0), prec_(exact) {}
  TruncatedSeries(int val, std::vector<T> c, int prec) : val_(val), c_(std::move(c)), prec_(prec) { trim(); }

  static TruncatedSeries constant(const T& c, int prec = exact) { return {0, {c}, prec}; }
  static TruncatedSeries monomial(const T& c, int power, int prec = exact) { return {power, {c}, prec}; }
  static TruncatedSeries zero(int prec = exact) { return {0, {}, prec}; }
  static TruncatedSeries polynomial(const std::vector<T>& c, int prec = exact) { return {0, c, prec}; }

  // lowest power with a non-zero coefficient (prec if none)
  int valuation() const { return c_.empty() ? prec_ : val_; }
  int precision() const { return prec_; }
  bool is_exact() const { return prec_ >= exact / 2; }
  bool empty() const { return c_.empty(); }
  // highest power that is stored
  int top() const { return val_ + static_cast<int>(c_.size()) - 1; }

  T coeff(int power) const {
    if (power >= prec_) throw std::out_of_range("coefficient beyond series precision");
    if (power < val_ || power > top()) return T(0);
    return c_[power - val_];
  }

  TruncatedSeries truncated(int prec) const {
    TruncatedSeries r = *this;
    r.prec_ = std::min(prec_, prec);
    r.cut();
    return r;
  }

  TruncatedSeries operator-() const {
    TruncatedSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    return add(a, b, false);
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    return add(a, b, true);
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.empty() || b.empty()) {
      int p = std::min(sat_add(a.prec_, b.valuation()), sat_add(b.prec_, a.valuation()));
      return zero(p);
    }
    int p = std::min(sat_add(a.prec_, b.val_), sat_add(b.prec_, a.val_));
    int lo = a.val_ + b.val_;
    int hi = std::min(a.top() + b.top(), p - 1);
    std::vector<T> c(std::max(hi - lo + 1, 0), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        int k = static_cast<int>(i + j);
        if (lo + k > hi) break;
        c[k] += a.c_[i] * b.c_[j];
      }
    }
    return {lo, std::move(c), p};
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const T& s) {
    TruncatedSeries r = a;
    for (auto& x : r.c_) x *= s;
    r.trim();
    return r;
  }
  friend TruncatedSeries operator*(const T& s, const TruncatedSeries& a) { return a * s; }
  friend TruncatedSeries operator/(const TruncatedSeries& a, const T& s) {
    if (detail::is_zero(s)) throw NumericalError("series division by zero scalar");
    TruncatedSeries r = a;
    for (auto& x : r.c_) x /= s;
    return r;
  }

  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (b.empty()) throw NumericalError("series division by zero");
    int vb = b.val_, va = a.valuation();
    int cap = a.is_exact() ? 64 - vb : a.prec_ - vb - va;
    return a * b.inverse(cap);
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) { return *this = *this + o; }
  TruncatedSeries& operator-=(const TruncatedSeries& o) { return *this = *this - o; }
  TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }

  // 1/a; the result is known up to x^{min(prec - 2 v, cap)}
  TruncatedSeries inverse(int cap = exact) const {
    if (empty()) throw NumericalError("inverse of a zero series");
    int v = val_;
    int p = std::min(sat_add(prec_, -2 * v), cap);
    if (p >= exact / 2) throw NumericalError("inverse of an exact series needs a precision cap");
    int n = p + v;  // number of coefficients
    if (n <= 0) return zero(p);
    std::vector<T> r(n, T(0));
    T inv0 = T(1) / c_[0];
    r[0] = inv0;
    for (int k = 1; k < n; ++k) {
      T s(0);
      for (int j = 1; j <= k && j < static_cast<int>(c_.size()); ++j) s += c_[j] * r[k - j];
      r[k] = -s * inv0;
    }
    return {-v, std::move(r), p};
  }

  // principal square root; the valuation must be even
  TruncatedSeries sqrt(int cap = exact) const {
    if (empty()) throw NumericalError("sqrt of a zero series");
    if (val_ % 2 != 0) throw NumericalError("sqrt of a series with odd valuation");
    int h = val_ / 2;
    int p = std::min(sat_add(prec_, -h), cap);
    if (p >= exact / 2) throw NumericalError("sqrt of an exact series needs a precision cap");
    int n = p - h;
    if (n <= 0) return zero(p);
    std::vector<T> r(n, T(0));
    r[0] = detail::scalar_sqrt(c_[0]);
    T two_r0 = T(2) * r[0];
    for (int k = 1; k < n; ++k) {
      T s = k < static_cast<int>(c_.size()) ? c_[k] : T(0);
      for (int j = 1; j < k; ++j) s -= r[j] * r[k - j];
      r[k] = s / two_r0;
    }
    return {h, std::move(r), p};
  }

  TruncatedSeries derivative() const {
    std::vector<T> c(c_.size(), T(0));
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * T(val_ + static_cast<int>(i));
    return {val_ - 1, std::move(c), is_exact() ? prec_ : prec_ - 1};
  }

  // antiderivative with zero constant of integration
  TruncatedSeries integral() const {
    std::vector<T> c(c_.size(), T(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      int pw = val_ + static_cast<int>(i);
      if (pw == -1) {
        if (!detail::is_zero(c_[i])) throw NumericalError("integral of a series with a 1/x term");
        continue;
      }
      c[i] = c_[i] / T(pw + 1);
    }
    return {val_ + 1, std::move(c), is_exact() ? prec_ : prec_ + 1};
  }

  // multiply by x^k
  TruncatedSeries shifted(int k) const { return {val_ + k, c_, is_exact() ? prec_ : prec_ + k}; }

  double evaluate(double x) const {
    double s = 0.0;
    for (std::size_t i = c_.size(); i-- > 0;) s = s * x + detail::to_double(c_[i]);
    return s * std::pow(x, val_);
  }

  // (power, coefficient) for each non-zero stored term
  std::vector<std::pair<int, T>> terms() const {
    std::vector<std::pair<int, T>> out;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!detail::is_zero(c_[i])) out.emplace_back(val_ + static_cast<int>(i), c_[i]);
    return out;
  }

 private:
  static int sat_add(int a, int b) {
    if (a >= exact / 2 || b >= exact / 2) return exact;
    return a + b;
  }

  static TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b, bool sub) {
    int p = std::min(a.prec_, b.prec_);
    if (a.empty() && b.empty()) return zero(p);
    int lo = a.empty() ? b.val_ : b.empty() ? a.val_ : std::min(a.val_, b.val_);
    int hi = std::max(a.empty() ? lo : a.top(), b.empty() ? lo : b.top());
    hi = std::min(hi, p - 1);
    std::vector<T> c(std::max(hi - lo + 1, 0), T(0));
    for (int k = lo; k <= hi; ++k) {
      T x(0);
      if (!a.empty() && k >= a.val_ && k <= a.top()) x += a.c_[k - a.val_];
      if (!b.empty() && k >= b.val_ && k <= b.top()) {
        if (sub)
          x -= b.c_[k - b.val_];
        else
          x += b.c_[k - b.val_];
      }
      c[k - lo] = x;
    }
    return {lo, std::move(c), p};
  }

  void cut() {
    while (!c_.empty() && top() >= prec_) c_.pop_back();
    trim();
  }

  void trim() {
    std::size_t first = 0;
    while (first < c_.size() && detail::is_zero(c_[first])) ++first;
    if (first == c_.size()) {
      c_.clear();
      val_ = 0;
    } else if (first > 0) {
      c_.erase(c_.begin(), c_.begin() + first);
      val_ += static_cast<int>(first);
    }
    while (!c_.empty() && detail::is_zero(c_.back())) c_.pop_back();
    while (!c_.empty() && top() >= prec_) c_.pop_back();
  }

  int val_;
  std::vector<T> c_;
  int prec_;
};

using RationalSeries = TruncatedSeries<Rational>;
using RealSeries = TruncatedSeries<double>;

// "power<TAB>num/den" per line
std::string export_series(const RationalSeries& s);

}  // namespace anharm
