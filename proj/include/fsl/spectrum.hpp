#pragma once

// Ordered multiset of eigenvalues.  Multiplicities are represented by
// repetition; k0 counts entries at zero.  Ordering is ascending real part
// with ties broken by imaginary part, which fixes the index n used by every
// asymptotic law (the lowest eigenvalue is lambda_0).

#include "fsl/geometry.hpp"
#include "fsl/types.hpp"

#include <vector>

namespace fsl {

struct Spectrum {
    Geometry geometry{1.0, 1.0, 1.0};
    int k0 = 0;
    std::vector<cplx> values;
    bool computed = false; // true when produced by a solver in-process

    int size() const { return static_cast<int>(values.size()); }

    static double zero_tolerance(double lambda_max_abs) { return 1e-10 * (1.0 + lambda_max_abs); }

    // canonical order (re, then im); recount k0 from the values
    void sort_canonical();
    void recount_k0();

    // growth sanity: |lambda_n| = O(n^2) with a generous constant
    bool coarse_growth_ok() const;
};

} // namespace fsl
