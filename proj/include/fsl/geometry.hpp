#pragma once

// The two-segment closed set T = [0, gamma] u [a, b] with a = gamma + d,
// b = a + l, its jump functions, and the delta-derivative that is a divided
// difference across the gap and a classical derivative inside the segments.
// An optional exact-rational shadow of (l/gamma, pi l/gamma, pi d/gamma)
// feeds the arithmetic uniqueness checks; rationality is never inferred from
// floats.

#include "fsl/types.hpp"

#include <functional>
#include <optional>

namespace fsl {

struct Rational {
    long long num = 0;
    long long den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct ExactShadow {
    std::optional<Rational> l_over_gamma;
    std::optional<Rational> pi_l_over_gamma;
    std::optional<Rational> pi_d_over_gamma;
};

class Geometry {
public:
    Geometry(double gamma, double d, double l, ExactShadow exact = {});

    double gamma() const { return gamma_; }
    double d() const { return d_; }
    double l() const { return l_; }
    double a() const { return gamma_ + d_; }
    double b() const { return gamma_ + d_ + l_; }
    const ExactShadow& exact() const { return exact_; }

    // true when l and gamma agree to 1e-12 relative (the equal-segment regime)
    bool equal_segments() const;

    bool contains(double t) const;   // t in T, with a tiny relative slack
    void require_in_set(double t, const char* who) const;

    // slack used for "t is a point of T" comparisons
    double point_tol() const { return 1e-12 * (1.0 + b()); }

private:
    double gamma_, d_, l_;
    ExactShadow exact_;
};

// Forward jump: sigma(gamma) = a, identity elsewhere on T (sigma(b) = b).
double sigma(const Geometry& g, double t);

// Backward jump: sigma_minus(a) = gamma, identity elsewhere (sigma_minus(0) = 0).
double sigma_minus(const Geometry& g, double t);

// Divided difference (f(a) - f(gamma))/d at t = gamma; classical derivative
// elsewhere, via a five-point stencil shifted to stay inside the segment.
double delta_derivative(const Geometry& g, const std::function<double(double)>& f, double t);

} // namespace fsl
