#pragma once

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "anharm/core.hpp"

namespace anharm {

// laguerre: generalized Laguerre mesh in x = r/h with weight x^alpha, alpha = D - 1 + 2 ell,
// acting on the radial factor F of Psi = r^ell F (no centrifugal term).
// hermite: full-line mesh for D = 1 with potential V(|x|); both parities appear.
enum class MeshKind { hermite, laguerre };

struct MeshBasis {
  MeshKind kind = MeshKind::laguerre;
  int N = 0;
  double h = 1.0;
  double D = 1.0;
  int ell = 0;
  double alpha = 0.0;
  std::vector<double> x;        // unscaled nodes
  std::vector<double> lambda;   // Gauss weights times the inverse weight function
  Eigen::MatrixXd kinetic;      // already divided by h^2

  std::vector<double> r() const;
};

MeshBasis build(MeshKind kind, int N, double h, double D, int ell = 0);

struct MeshSpectrum {
  std::vector<double> values;                 // ascending
  std::vector<double> r;                      // node positions
  std::vector<std::vector<double>> vectors;   // radial factor at the nodes, normalized, positive at the first node
};
MeshSpectrum eigenvalues(const MeshBasis& basis, const std::function<double(double)>& V, int k);

struct ScaleScan {
  double h = 0.0;
  double energy = 0.0;
  double h_variation = 0.0;  // |E(h) - E(h')| for the neighbouring scale
  double N_variation = 0.0;  // |E_N - E_{N-5}| at h
  bool plateau = false;      // both variations below 1e-11 relative to max(1, |E|)
};
// Laguerre mesh; state.n_r selects the eigenvalue index within the ell sector.
ScaleScan scale_scan(const PotentialSpec& spec, const StateLabel& state, int N = 50);
ScaleScan scale_scan(const std::function<double(double)>& V, double D, const StateLabel& state, int N = 50);

double mesh_energy(const PotentialSpec& spec, const StateLabel& state, int N = 50);

// converged eigenpair at the scanned scale
MeshSpectrum mesh_state(const PotentialSpec& spec, const StateLabel& state, int N = 50);

// r, F(r), Psi(r) = r^ell F(r) with 12 significant digits
std::string mesh_csv(const MeshSpectrum& s, int index, int ell);

}  // namespace anharm
