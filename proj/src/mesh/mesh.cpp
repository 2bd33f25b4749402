#include "anharm/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "anharm/quadrature.hpp"

namespace anharm {

std::vector<double> MeshBasis::r() const {
  std::vector<double> out;
  for (double xi : x) out.push_back(h * xi);
  return out;
}

namespace {

// dl[k][j] = l_j'(x_k) for the Lagrange polynomials on the given nodes
Eigen::MatrixXd lagrange_derivatives(const std::vector<double>& x) {
  const int n = static_cast<int>(x.size());
  std::vector<double> log_abs(n, 0.0);
  std::vector<int> sign(n, 1);
  for (int k = 0; k < n; ++k)
    for (int m = 0; m < n; ++m) {
      if (m == k) continue;
      double d = x[k] - x[m];
      log_abs[k] += std::log(std::abs(d));
      if (d < 0) sign[k] = -sign[k];
    }
  Eigen::MatrixXd dl(n, n);
  for (int k = 0; k < n; ++k) {
    double diag = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j == k) continue;
      dl(k, j) = sign[k] * sign[j] * std::exp(log_abs[k] - log_abs[j]) / (x[k] - x[j]);
      diag += 1.0 / (x[k] - x[j]);
    }
    dl(k, k) = diag;
  }
  return dl;
}

}  // namespace

MeshBasis build(MeshKind kind, int N, double h, double D, int ell) {
  if (N < 2 || N > 50) throw ConfigError("mesh size must be in [2, 50]");
  if (!(h > 0.0)) throw ConfigError("mesh scale must be positive");
  if (!(D > 0.0)) throw ConfigError("radial reduction needs D > 0");
  if (ell < 0) throw ConfigError("ell must be non-negative");
  if (kind == MeshKind::hermite && (D != 1.0 || ell != 0)) throw ConfigError("the Hermite mesh covers D = 1 only");

  MeshBasis b;
  b.kind = kind;
  b.N = N;
  b.h = h;
  b.D = D;
  b.ell = ell;
  b.alpha = D - 1.0 + 2.0 * ell;
  QuadratureRule q = kind == MeshKind::laguerre ? gauss_laguerre(N, b.alpha) : gauss_hermite(N);
  b.x = q.nodes;
  b.lambda = q.scaled_weights;
  const auto& lw = q.log_weights;

  // f_j = l_j(x) sqrt(weight(x) / w_j); B(k, j) = sqrt(lambda_k) f_j'(x_k)
  Eigen::MatrixXd B = lagrange_derivatives(b.x);
  for (int k = 0; k < N; ++k) {
    double shift = kind == MeshKind::laguerre ? 0.5 : b.x[k];
    B(k, k) -= shift;
  }
  for (int k = 0; k < N; ++k)
    for (int j = 0; j < N; ++j) B(k, j) *= std::exp(0.5 * (lw[k] - lw[j]));
  b.kinetic = B.transpose() * B / (h * h);
  return b;
}

MeshSpectrum eigenvalues(const MeshBasis& basis, const std::function<double(double)>& V, int k) {
  const int N = basis.N;
  if (k < 1 || k > N) throw ConfigError("requested eigenvalue count out of range");
  Eigen::MatrixXd H = basis.kinetic;
  const auto r = basis.r();
  for (int i = 0; i < N; ++i) H(i, i) += V(std::abs(r[i]));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H);
  if (es.info() != Eigen::Success) throw NumericalError("mesh eigensolver did not converge");

  MeshSpectrum out;
  out.r = r;
  const double scale = basis.kind == MeshKind::laguerre ? std::pow(basis.h, basis.alpha + 1.0) : basis.h;
  for (int n = 0; n < k; ++n) {
    out.values.push_back(es.eigenvalues()(n));
    std::vector<double> F(N);
    for (int i = 0; i < N; ++i) F[i] = es.eigenvectors()(i, n) / std::sqrt(basis.lambda[i] * scale);
    // orient: positive near the origin (first node for Laguerre, rightmost half-line node for Hermite)
    int ref = 0;
    if (basis.kind == MeshKind::hermite) ref = N / 2;
    if (F[ref] < 0)
      for (double& f : F) f = -f;
    out.vectors.push_back(std::move(F));
  }
  return out;
}

namespace {

double extent_for(const std::function<double(double)>& V, double D_eff) {
  auto q = gauss_legendre(16);
  double r = 0.0, acc = 0.0, step = 0.02;
  const double action = 30.0 + D_eff;
  while (acc < action) {
    double piece = 0.0;
    for (std::size_t k = 0; k < q.size(); ++k)
      piece += 0.5 * step * q.weights[k] * std::sqrt(std::max(V(r + 0.5 * step * (q.nodes[k] + 1.0)), 0.0));
    acc += piece;
    r += step;
    step *= 1.02;
    if (r > 1e6) throw NumericalError("potential does not confine");
  }
  return r;
}

double level(const std::function<double(double)>& V, double D, const StateLabel& s, int N, double h) {
  auto b = build(MeshKind::laguerre, N, h, D, s.ell);
  return eigenvalues(b, V, s.n_r + 1).values[s.n_r];
}

}  // namespace

ScaleScan scale_scan(const std::function<double(double)>& V, double D, const StateLabel& state, int N) {
  state.validate();
  if (N < 10) throw ConfigError("scale scan needs N >= 10");
  const double D_eff = effective_dimension(D, state.ell);
  const double x_max = gauss_laguerre(N, D_eff - 1.0).nodes.back();
  const double h0 = extent_for(V, D_eff) / x_max;

  // coarse log grid, then a finer one around the flattest neighbour pair
  auto flattest = [&](double lo, double hi, int n) {
    std::vector<double> hs(n), es(n);
    for (int i = 0; i < n; ++i) {
      hs[i] = lo * std::pow(hi / lo, i / double(n - 1));
      es[i] = level(V, D, state, N, hs[i]);
    }
    int best = 0;
    double bestd = std::numeric_limits<double>::infinity();
    for (int i = 0; i + 2 < n; ++i) {
      double d = std::max(std::abs(es[i + 1] - es[i]), std::abs(es[i + 2] - es[i + 1]));
      if (d < bestd) {
        bestd = d;
        best = i + 1;
      }
    }
    return std::tuple<double, double, double>(hs[best], es[best], bestd);
  };
  auto [hc, ec, dc] = flattest(0.25 * h0, 4.0 * h0, 33);
  (void)ec;
  (void)dc;
  auto [h, e, d] = flattest(hc / 1.1, hc * 1.1, 21);

  ScaleScan out;
  out.h = h;
  out.energy = e;
  out.h_variation = d;
  out.N_variation = std::abs(e - level(V, D, state, N - 5, h));
  const double tol = 1e-11 * std::max(1.0, std::abs(e));
  out.plateau = out.h_variation < tol && out.N_variation < tol;
  return out;
}

ScaleScan scale_scan(const PotentialSpec& spec, const StateLabel& state, int N) {
  spec.validate();
  auto Vr = spec.radial();
  return scale_scan([Vr](double r) { return Vr(r); }, spec.D, state, N);
}

double mesh_energy(const PotentialSpec& spec, const StateLabel& state, int N) {
  return scale_scan(spec, state, N).energy;
}

MeshSpectrum mesh_state(const PotentialSpec& spec, const StateLabel& state, int N) {
  auto scan = scale_scan(spec, state, N);
  auto Vr = spec.radial();
  auto b = build(MeshKind::laguerre, N, scan.h, spec.D, state.ell);
  return eigenvalues(b, [&Vr](double r) { return Vr(r); }, state.n_r + 1);
}

std::string mesh_csv(const MeshSpectrum& s, int index, int ell) {
  std::ostringstream os;
  os << "r,F,Psi\n";
  char buf[96];
  const auto& F = s.vectors.at(index);
  for (std::size_t i = 0; i < s.r.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g\n", s.r[i], F[i], F[i] * std::pow(std::abs(s.r[i]), ell));
    os << buf;
  }
  return os.str();
}

}  // namespace anharm
