#pragma once

#include "fsl/potential.hpp"
#include "fsl/spectrum.hpp"

namespace fsl {

// Independent eigenvalue solver: second-order finite differences on both
// segments with one-sided closures for the interface conditions, assembled
// as a generalized eigenproblem A y = lambda B y that is linear in lambda.
// A coarse dense solve seeds shift-and-invert refinement on a fine mesh.
struct OracleOptions {
    int coarse_nodes = 360;  // total interval count for the dense seed solve
    int fine_nodes = 4000;   // total interval count for the refinement mesh
    int refine_iters = 30;   // inverse-iteration cap per seed
    double merge_rel = 1e-6; // duplicate-seed collapse tolerance
};

Spectrum fd_spectrum(const Potential& q, int count, OracleOptions opt = {});

} // namespace fsl
