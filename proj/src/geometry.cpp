#include "fsl/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace fsl {

namespace {

void check_rational(const std::optional<Rational>& r, double target, const char* name) {
    if (!r) return;
    if (r->den == 0) throw DomainError(std::string(name) + ": zero denominator");
    const double v = r->value();
    if (std::abs(v - target) > 1e-12 * (1.0 + std::abs(target)))
        throw DomainError(std::string(name) + ": declared rational disagrees with float value");
}

} // namespace

Geometry::Geometry(double gamma, double d, double l, ExactShadow exact)
    : gamma_(gamma), d_(d), l_(l), exact_(std::move(exact)) {
    if (!(gamma > 0.0) || !std::isfinite(gamma)) throw DomainError("geometry: gamma must be positive");
    if (!(d > 0.0) || !std::isfinite(d)) throw DomainError("geometry: d must be positive");
    if (!(l > 0.0) || !std::isfinite(l)) throw DomainError("geometry: l must be positive");
    check_rational(exact_.l_over_gamma, l_ / gamma_, "l_over_gamma");
    check_rational(exact_.pi_l_over_gamma, pi * l_ / gamma_, "pi_l_over_gamma");
    check_rational(exact_.pi_d_over_gamma, pi * d_ / gamma_, "pi_d_over_gamma");
}

bool Geometry::equal_segments() const {
    return std::abs(l_ - gamma_) <= 1e-12 * std::max(l_, gamma_);
}

bool Geometry::contains(double t) const {
    const double tol = point_tol();
    if (t >= -tol && t <= gamma_ + tol) return true;
    if (t >= a() - tol && t <= b() + tol) return true;
    return false;
}

void Geometry::require_in_set(double t, const char* who) const {
    if (!contains(t)) throw DomainError(std::string(who) + ": point " + std::to_string(t) + " is outside T");
}

double sigma(const Geometry& g, double t) {
    g.require_in_set(t, "sigma");
    if (std::abs(t - g.gamma()) <= g.point_tol()) return g.a();
    return t;
}

double sigma_minus(const Geometry& g, double t) {
    g.require_in_set(t, "sigma_minus");
    if (std::abs(t - g.a()) <= g.point_tol()) return g.gamma();
    return t;
}

namespace {

// Weights of a five-point finite-difference first derivative at x0 for
// arbitrary nodes x[0..4] (Fornberg's recursion, orders 0 and 1).
void derivative_weights(double x0, const double x[5], double w[5]) {
    double c[5][2] = {};
    double c1 = 1.0;
    double c4 = x[0] - x0;
    c[0][0] = 1.0;
    for (int i = 1; i < 5; ++i) {
        double c2 = 1.0;
        const double c5 = c4;
        c4 = x[i] - x0;
        for (int j = 0; j < i; ++j) {
            const double c3 = x[i] - x[j];
            c2 *= c3;
            if (j == i - 1) {
                c[i][1] = c1 * (c[i - 1][0] - c5 * c[i - 1][1]) / c2;
                c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
            }
            c[j][1] = (c4 * c[j][1] - c[j][0]) / c3;
            c[j][0] = c4 * c[j][0] / c3;
        }
        c1 = c2;
    }
    for (int i = 0; i < 5; ++i) w[i] = c[i][1];
}

} // namespace

double delta_derivative(const Geometry& g, const std::function<double(double)>& f, double t) {
    g.require_in_set(t, "delta_derivative");
    const double tol = g.point_tol();
    if (std::abs(t - g.gamma()) <= tol) return (f(g.a()) - f(g.gamma())) / g.d();

    double lo, hi;
    if (t < g.gamma()) {
        lo = 0.0;
        hi = g.gamma();
    } else {
        lo = g.a();
        hi = g.b();
    }
    const double len = hi - lo;
    const double h = std::min(7e-4 * (1.0 + std::abs(t)), len / 8.0);
    double s0 = std::clamp(t - 2.0 * h, lo, hi - 4.0 * h);
    double x[5], w[5];
    for (int j = 0; j < 5; ++j) x[j] = s0 + j * h;
    derivative_weights(t, x, w);
    double der = 0.0;
    for (int j = 0; j < 5; ++j) der += w[j] * f(x[j]);
    return der;
}

} // namespace fsl
