#pragma once

// Even/odd trigonometric pairs evaluated directly in lambda = rho^2, so no
// square-root branch is ever chosen: cos_rx(lambda, x) = cos(rho x) and
// sinc_rx(lambda, x) = sin(rho x)/rho are entire, even functions of rho.
// Near rho = 0 a Taylor series in lambda x^2 takes over (switch radius
// |rho| ~ 1e-2); for real negative lambda the hyperbolic forms are exact.

#include "fsl/types.hpp"

namespace fsl {

cplx cos_rx(cplx lambda, double x);
cplx sinc_rx(cplx lambda, double x);

double cos_rx(double lambda, double x);
double sinc_rx(double lambda, double x);

// sin(y)/y with the removable point filled in (real and complex)
double sinc(double y);
cplx sinc(cplx y);

} // namespace fsl
