#include "anharm/series.hpp"

namespace anharm {

Rational StrongCorrection::alpha(int k) const {
  auto at = [](const std::vector<Rational>& v, int i) {
    return i >= 0 && i < static_cast<int>(v.size()) ? v[i] : Rational(0);
  };
  return at(full, k + 1) - at(external, k + 1);
}

std::vector<StrongCorrection> gb_strong_corrections(const Rational& D, const std::vector<Rational>& a,
                                                    const std::vector<Rational>& eps_tilde, int N) {
  if (sgn(D) <= 0) throw ConfigError("D must be positive");
  if (N < 0) throw ConfigError("need N >= 0");
  if (static_cast<int>(eps_tilde.size()) < N + 1) throw ConfigError("need eps~_0..eps~_N");
  const int m = static_cast<int>(a.size()) - 1;
  if (m < 2) throw ConfigError("need a_0..a_m with m >= 2");

  std::vector<StrongCorrection> Z(N + 1);
  for (int n = 0; n <= N; ++n) {
    std::vector<Rational> prod;
    for (int k = 0; k <= n - 2; ++k) {
      const auto& A = Z[k].full;
      const auto& B = Z[n - k - 2].full;
      if (A.empty() || B.empty()) continue;
      if (prod.size() < A.size() + B.size() - 1) prod.resize(A.size() + B.size() - 1, Rational(0));
      for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < B.size(); ++j) prod[i + j] += A[i] * B[j];
    }
    // u^{1-D} int_0^u s^j s^{D-1} ds = u^{j+1}/(j+D)
    std::vector<Rational> full(std::max<std::size_t>(prod.size() + 1, 2), Rational(0));
    for (std::size_t j = 0; j < prod.size(); ++j) full[j + 1] += prod[j] / (Rational(static_cast<long>(j)) + D);
    full[1] += eps_tilde[n] / D;
    std::vector<Rational> ext;
    if (n == m) {
      ext.assign(m + 2, Rational(0));
      for (int k = 0; k <= m; ++k) ext[k + 1] = -a[k] / (D + k);
      if (full.size() < ext.size()) full.resize(ext.size(), Rational(0));
      for (std::size_t j = 0; j < ext.size(); ++j) full[j] += ext[j];
    }
    Z[n].full = std::move(full);
    Z[n].external = std::move(ext);
  }
  return Z;
}

std::vector<double> strong_small_u_series(const PotentialSpec& spec, double eps_tilde, double lambda_tilde,
                                          int order) {
  spec.validate();
  if (!(lambda_tilde > 0.0)) throw ConfigError("lambda~ must be positive");
  return strong_small_u_series<double>(spec.D, eps_tilde, 1.0 / lambda_tilde, spec.a, order);
}

}  // namespace anharm
