#pragma once

#include "anharm/cli.hpp"
#include "anharm/strongcoupling.hpp"

namespace anharm::cli::detail {

// ground state of W = r^3 on the Laguerre mesh
double mesh_strong_eps0(double D, int N);

// b = eps0 / D from the mesh, a fitted to mesh energies on log-spaced g in [0.01, 100]
FitResult mesh_fit(int D, int points, int N);

}  // namespace anharm::cli::detail
