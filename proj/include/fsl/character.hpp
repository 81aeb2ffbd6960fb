#pragma once

// Admissibility of a spectrum with equal segments (l = gamma).  A sequence of
// candidate eigenvalues is accepted only if
//   (1) it follows the two-term asymptotic law with square-summable
//       n^2-scaled residuals,
//   (2) the two bracket sequences read off the characteristic function on
//       the integer and the shifted frequency ladders settle to constants
//       consistent with each other and with the half-grid constant C0,
//   (3) the terminal integral G2(l) of the recovered boundary system
//       vanishes.
// The pipeline goes spectrum -> product characteristic function -> W (a
// jump-corrected sine series on [0, 2l]) -> g, G1, G2.  For the true data
// g(t) is exactly the left potential and G2(t) = int_0^{l-t} q(a+s) ds, so
// condition (3) is the closure of the right segment.

#include "fsl/charfn.hpp"
#include "fsl/potential.hpp"
#include "fsl/spectrum.hpp"

#include <functional>
#include <string>
#include <vector>

namespace fsl {

enum class Verdict { pass, fail, undetermined };

const char* to_string(Verdict v);

struct AsymptoticsFit {
    double u = 0.0;          // boundary-value surrogate from the tail law
    std::vector<double> mu;  // n^2-scaled residuals after the law
    bool decay_ok = false;
    int n_used = 0;
};

// rho_n = pi n/(2l) + 2/(d pi n) + (4l/pi^2) delta_n u/n^2 + o(n^-2);
// requires equal segments.
AsymptoticsFit fit_asymptotics(const Spectrum& s);

struct C0Estimate {
    double value = 0.0;
    double spread = 0.0; // relative spread of the last raw rungs
    bool ok = false;
    std::vector<double> ladder;
};

// The constant limit of rho (Delta - Delta_model)(rho^2) on the quarter-
// shifted ladder rho_k = pi (k + 1/4)/l; equals -1 - d^2 q(l)/2 for true
// spectra.
C0Estimate estimate_c0(const CharFunction& delta, double u);

struct WFunction {
    double l = 0.0;
    std::vector<double> grid;  // 2M+1 samples on [0, 2l]
    double w0 = 0.0;           // W(0+)
    double w2 = 0.0;           // W(2l-)
    double jump = 0.0;         // W(l-) - W(l+), equals 2 d q(0) for true data
    double u_refined = 0.0;
    int n_terms = 0;
};

// Sine synthesis of W from samples of Delta on the half-integer grid, with
// the boundary/jump carrier removed before summation (and added back in
// closed form) so the series converges absolutely.
WFunction build_w(const CharFunction& delta, double u, int n_terms, int grid_pts);

struct GSystem {
    double l = 0.0;
    std::vector<double> g, g1, g2; // on [0, l]; g1(t) = int_t^l g
    double g2_end = 0.0;           // G2(l), zero for admissible spectra
};

GSystem build_g_g1_g2(const WFunction& w, double d);

struct UniquenessReport {
    Verdict asymptotics = Verdict::undetermined;
    Verdict brackets = Verdict::undetermined;
    Verdict integral = Verdict::undetermined;
    Verdict overall = Verdict::undetermined;
    std::string detail;
    double u = 0.0, c0 = 0.0, c_from_c0 = 0.0;
    double c_fit = 0.0, u_fit = 0.0;
    double h1_fit = 0.0, h2_fit = 0.0;
    double g2_end = 0.0, g2_scale = 0.0;
    // residual sequences behind the verdicts, for reports and plots
    std::vector<double> mu, bracket1_resid, bracket2_resid, g2;
};

struct CharacterizationOptions {
    int n_terms = 0;       // 0: derived from the spectrum size
    int grid_pts = 257;    // W resolution on [0, 2l]; odd, at least 65
    double tol_c = 1e-2;   // |G2(l)| <= tol_c * scale
    double cross_tol = 5e-2;
    double floor_scale = 5e-3;
    int bracket_cap = 250; // shifted-ladder brackets beyond this amplify
                           // eigenvalue roundoff past the decision floors
};

UniquenessReport check_conditions(const Spectrum& s, CharacterizationOptions opt = {});

// Test oracle: W assembled directly from a known potential through its
// closed form.  q1p, if non-null, supplies d/dt of the left part; otherwise
// it is approximated by differences.
WFunction w_direct_from_potential(const Potential& q, int grid_pts,
                                  const std::function<double(double)>* q1p = nullptr);

} // namespace fsl
