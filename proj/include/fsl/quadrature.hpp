#pragma once

// Oscillatory quadrature for transforms  I(lambda) = int_0^L f(t) sin(rho t)/rho dt
// with lambda = rho^2.  Three regimes, all even in rho:
//   |rho| L small  -> Taylor series in lambda against precomputed odd moments,
//   |rho| < gk_rho -> adaptive Gauss-Kronrod 15 on the smooth integrand,
//   otherwise      -> composite Filon-Simpson panels sized so each panel spans
//                     at most pi/4 of kernel phase; cost independent of |rho|.
// Plus a general-purpose adaptive GK15 used by tests and oracles.

#include "fsl/types.hpp"

#include <array>
#include <functional>

namespace fsl {

struct QuadPolicy {
    int min_panels = 256;          // lower bound on Filon panel count
    double panel_phase = pi / 4.0; // max |rho| * halfwidth per panel
    double gk_rho = 5.0;           // below this |rho| use adaptive GK15
    double series_lambda_l2 = 0.25; // |lambda| L^2 below this -> moment series
    double gk_abs = 1e-13;
    double gk_rel = 1e-12;
    int gk_depth = 30;
    int moment_samples = 8193; // composite-Simpson resolution for the moments
};

double gk15_adaptive(const std::function<double(double)>& f, double a, double b,
                     double abs_tol = 1e-12, double rel_tol = 1e-11, int max_depth = 30);
cplx gk15_adaptive_cplx(const std::function<cplx(double)>& f, double a, double b,
                        double abs_tol = 1e-12, double rel_tol = 1e-11, int max_depth = 30);

class SineTransform {
public:
    SineTransform() = default; // identically-zero transform
    SineTransform(std::function<double(double)> f, double L, QuadPolicy pol = {});

    bool is_zero() const { return zero_; }
    double length() const { return L_; }

    cplx eval(cplx lambda) const;
    double eval_real(double lambda) const;

private:
    std::function<double(double)> f_;
    double L_ = 0.0;
    QuadPolicy pol_{};
    bool zero_ = true;
    std::array<double, 7> odd_moments_{}; // int_0^L t^(2k+1) f(t) dt

    cplx eval_series(cplx lambda) const;
    cplx eval_gk(cplx lambda) const;
    cplx eval_filon(cplx lambda) const;
};

} // namespace fsl
