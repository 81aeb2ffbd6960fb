#include "fsl/trig.hpp"

#include <cmath>

namespace fsl {

namespace {

constexpr double series_radius = 1e-3; // threshold on |lambda| * x^2 = |rho x|^2

// cos(rho x) = sum_k (-w)^k / (2k)!,  w = lambda x^2
template <class T>
T cos_series(T w) {
    T term = T(1.0), sum = T(1.0);
    for (int k = 1; k <= 6; ++k) {
        term *= -w / static_cast<double>((2 * k - 1) * (2 * k));
        sum += term;
    }
    return sum;
}

// sin(rho x)/(rho x) = sum_k (-w)^k / (2k+1)!
template <class T>
T sinc_series(T w) {
    T term = T(1.0), sum = T(1.0);
    for (int k = 1; k <= 6; ++k) {
        term *= -w / static_cast<double>((2 * k) * (2 * k + 1));
        sum += term;
    }
    return sum;
}

} // namespace

cplx cos_rx(cplx lambda, double x) {
    const cplx w = lambda * (x * x);
    if (std::abs(w) <= series_radius) return cos_series(w);
    return std::cos(std::sqrt(lambda) * x);
}

cplx sinc_rx(cplx lambda, double x) {
    const cplx w = lambda * (x * x);
    if (std::abs(w) <= series_radius) return x * sinc_series(w);
    const cplx rho = std::sqrt(lambda);
    return std::sin(rho * x) / rho;
}

double cos_rx(double lambda, double x) {
    const double w = lambda * x * x;
    if (std::abs(w) <= series_radius) return cos_series(w);
    if (lambda > 0.0) return std::cos(std::sqrt(lambda) * x);
    return std::cosh(std::sqrt(-lambda) * x);
}

double sinc_rx(double lambda, double x) {
    const double w = lambda * x * x;
    if (std::abs(w) <= series_radius) return x * sinc_series(w);
    if (lambda > 0.0) {
        const double r = std::sqrt(lambda);
        return std::sin(r * x) / r;
    }
    const double m = std::sqrt(-lambda);
    return std::sinh(m * x) / m;
}

double sinc(double y) {
    if (std::abs(y) <= 1e-4) {
        const double y2 = y * y;
        return 1.0 - y2 / 6.0 + y2 * y2 / 120.0;
    }
    return std::sin(y) / y;
}

cplx sinc(cplx y) {
    if (std::abs(y) <= 1e-4) {
        const cplx y2 = y * y;
        return 1.0 - y2 / 6.0 + y2 * y2 / 120.0;
    }
    return std::sin(y) / y;
}

} // namespace fsl
