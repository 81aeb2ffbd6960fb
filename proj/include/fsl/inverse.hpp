#pragma once

// Inverse problem: from a spectrum back to the potential.
//
// The characteristic function is first rebuilt from the eigenvalues as an
// infinite product (reconstruct_charfn).  Sampling it on two frequency
// ladders then yields the two moment sequences of the potential: kappa_n are
// sine moments of q on [0, gamma] at pi n / gamma, and xi_n are moments of
// the flipped right part against sin(z_n s).  Each sequence determines its
// segment through an endpoint-accelerated series summation: the linear part
// of q is fitted from the high-n moments first and summed in closed form, so
// the remaining series converges absolutely instead of conditionally.

#include "fsl/basis.hpp"
#include "fsl/charfn.hpp"
#include "fsl/potential.hpp"
#include "fsl/spectrum.hpp"

#include <string>
#include <vector>

namespace fsl {

struct CoeffSeq {
    std::string kind;           // "left-moments" or "right-moments"
    std::vector<double> values; // values[i] corresponds to n = i + 1
    double tail_stat = 0.0;     // rms of the last quarter, for diagnostics
};

// kappa_n = -(pi n / (c2 gamma)) (Delta((pi n/gamma)^2) + (-1)^n c2)
// with c2 evaluated at the same lambda; fails on resonant geometry.
CoeffSeq recover_kappa(const CharFunction& delta, int n_max);

// xi_n = -(z_n^2 / sin(z_n gamma)) Delta(z_n^2) - z_n c1(z_n^2)
//        - d q(gamma) sin(z_n gamma)
CoeffSeq recover_xi(const CharFunction& delta, const std::vector<double>& z,
                    double q_gamma, int n_max);

struct RecoverOptions {
    int n_terms = 400; // moment count per segment
    int grid_pts = 1025;
};

// Full reconstruction; q(gamma) is extrapolated from inside the left
// segment (two Richardson levels), then feeds the right-segment moments.
Potential recover_potential(const CharFunction& delta, RecoverOptions opt = {});

// Product form of the characteristic function from eigenvalues alone.
CharFunction reconstruct_charfn(const Spectrum& s, ProductOptions opt = {});

} // namespace fsl
