#pragma once

// Eigenvalue computation: locate zeros of a characteristic function.
//
// Real zeros are bracketed by sign scans (in rho = sqrt(lambda) on the
// positive side, in R with lambda = -R^2 on the negative side) and polished
// by safeguarded Newton.  Dips of |Delta| along the scan line -- local
// minima without a sign change -- are resolved separately, since they hide
// the structures a sign scan cannot see: two real zeros inside one step, a
// tangency, or a complex-conjugate pair near the axis.  The result is then
// certified by argument-principle winding counts: one rectangle per root
// (checks multiplicity) and one large rectangle (checks nothing was
// missed).  A count mismatch triggers recursive subdivision that isolates
// the missing zeros; if isolation fails the error names the suspect region
// instead of returning a silently wrong spectrum.

#include "fsl/charfn.hpp"
#include "fsl/spectrum.hpp"
#include "fsl/types.hpp"

#include <functional>

namespace fsl {

struct SpectrumOptions {
    int oversample = 4;        // scan points per asymptotic root spacing
    double neg_r_max = 40.0;   // scan lambda = -R^2 for R up to this (clamped by growth)
    double merge_rel = 1e-6;   // roots closer than merge_rel*(1+|lambda|) coincide
    bool certify = true;       // winding-count certification
    int newton_max = 50;
    double strip_im_rho = 2.0; // certified strip |Im rho| <= this
};

// Winding number of f along the axis-aligned rectangle [lo, hi] (complex
// corners), by adaptive phase continuation.  Throws NumericError if the
// phase cannot be continued (zero on or too near the contour).
int winding_count(const std::function<cplx(cplx)>& f, cplx lo, cplx hi);

// The count eigenvalues that are smallest in the (Re, Im) lexicographic
// order, with multiplicity; k0 is the multiplicity of the zero eigenvalue.
Spectrum compute_spectrum(const CharFunction& f, int count, SpectrumOptions opt = {});

} // namespace fsl
