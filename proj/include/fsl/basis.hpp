#pragma once

// The non-orthogonal sine family sin(z_n t) on [0, l], where z_n are the
// positive zeros of h(z) = d cos(z l) + (1 - d^2 z^2) sin(z l)/z, one per
// interval ((n - 1/2) pi / l, (n + 1/2) pi / l).  Asymptotically
// z_n = pi n / l + 1/(d pi n) + O(n^-3), so the family is a small
// perturbation of the orthogonal one; the Gram matrix has a closed form and
// stays well conditioned.  Expansion against this family is what turns the
// second half of the moment data back into the potential on the right
// segment.

#include "fsl/geometry.hpp"
#include "fsl/types.hpp"

#include <memory>
#include <vector>

namespace fsl {

// First n frequencies z_1 < z_2 < ... (bisection on each interval, Newton
// polished).  n is capped at 512.
std::vector<double> compute_z(const Geometry& g, int n);

class SineBasis {
public:
    SineBasis(std::vector<double> z, double l);

    const std::vector<double>& z() const;
    double length() const;
    double condition() const; // spectral condition number of the Gram matrix

    // a = G^{-1} b where G_mn = int_0^l sin(z_m t) sin(z_n t) dt
    std::vector<double> solve_moments(const std::vector<double>& b) const;

    // pointwise sum_n a_n sin(z_n t) over a grid
    std::vector<double> synth(const std::vector<double>& a,
                              const std::vector<double>& t) const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

} // namespace fsl
