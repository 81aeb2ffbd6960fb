#pragma once

// The characteristic function Delta(lambda) whose zeros are the eigenvalues.
// Two backings:
//  - potential-backed: closed form through the even trig pairs and the two
//    oscillatory transforms of q (left segment, and right segment flipped);
//  - product-backed: reconstructed from a spectrum.  With equal segments
//    (l = gamma) the explicit product over the half-integer grid
//    m_n = pi n/(2l) is used, folded against sin(2 rho l)/(2 rho l) and
//    extended by a fitted asymptotic tail law plus an analytic remainder.
//    Otherwise the canonical product is built and the multiplicative constant
//    is recovered from the growth along lambda = -R^2 (type detection with an
//    R-ladder).
// Every formula is arranged to be even in rho, so no branch of sqrt(lambda)
// is ever chosen.

#include "fsl/geometry.hpp"
#include "fsl/potential.hpp"
#include "fsl/quadrature.hpp"
#include "fsl/spectrum.hpp"
#include "fsl/types.hpp"

#include <memory>
#include <string>
#include <vector>

namespace fsl {

struct C12S {
    cplx c1, c2, s;
};

// c1 = cos(rho l) - d rho sin(rho l), c2 = d cos(rho l) + (1 - d^2 lambda) sin(rho l)/rho,
// s = sin(rho gamma)/rho; limits (1, d + l, gamma) at lambda = 0.
C12S eval_c1_c2_s(cplx lambda, const Geometry& g);

// S(x, lambda) = sin(rho (x - gamma))/rho on the first segment
cplx eval_S(double x, cplx lambda, const Geometry& g);

// C(x, lambda) = cos(rho (x - gamma)) + int_gamma^x sin(rho (x - t))/rho q(t) dt
cplx eval_C(double x, cplx lambda, const Potential& q, QuadPolicy pol = {});

// Closed-form Delta for any geometry
cplx eval_delta(cplx lambda, const Potential& q, QuadPolicy pol = {});

// Rewritten Delta valid only for l = gamma; must agree with eval_delta
cplx eval_delta_equal_segments(cplx lambda, const Potential& q, QuadPolicy pol = {});

struct ProductOptions {
    int n_prod = 0;                               // 0 = use every supplied eigenvalue
    int n_direct_tail = 20000;                    // law-extended terms evaluated directly
    // Constant-recovery ladder in R along lambda = -R^2.  Empty means scale
    // the rungs from the data edge (rho of the last supplied eigenvalue):
    // rungs beyond the data are poisoned by the uncertainty of the tail
    // offset, whose effect on the product grows like R^2 past the edge.
    std::vector<double> ladder_r = {};
    double ladder_stabilize = 0.01;               // relative stabilization threshold
};

struct ProductDiagnostics {
    bool equal_segments = false;
    int n_data = 0;     // supplied eigenvalues actually used
    int n_direct = 0;   // index up to which the tail law is evaluated term by term
    double u = 0.0;     // fitted boundary-value surrogate in the tail law
    double c3 = 0.0;    // fitted 1/n^3 tail-law coefficient
    std::string type;   // general branch: "gamma+l" or "2gamma"
    double C = 0.0;     // general branch: recovered multiplicative constant
    double C1 = 0.0;    // general branch, type 2gamma: lim G/s^2
    std::vector<double> ladder_r;
    std::vector<double> ladder_ratio; // G/s^2 trace
    std::vector<double> ladder_c;     // constant trace
    bool ladder_stable = true;
    std::string note;
};

class CharFunction {
public:
    static CharFunction from_potential(const Potential& q, QuadPolicy pol = {});
    static CharFunction from_spectrum(const Spectrum& s, ProductOptions opt = {});

    cplx eval(cplx lambda) const;
    double eval_real(double lambda) const;

    bool product_backed() const;
    const Geometry& geometry() const;
    const Potential* potential() const;              // nullptr if product-backed
    const ProductDiagnostics& diagnostics() const;   // empty for potential-backed

    // Max relative change on the grid when the data truncation is halved;
    // the convergence guard requires this to be < 1e-8 on the reference grid.
    double halving_change(const std::vector<double>& grid) const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    explicit CharFunction(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
};

// 200-point guard grid in lambda on [-50, 50]
std::vector<double> reference_grid();

} // namespace fsl
