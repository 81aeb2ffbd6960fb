#pragma once

// Shared fixtures and frozen reference values.  The eigenvalue and frequency
// arrays were produced by independent high-precision computations (bisection
// plus Newton on the closed-form characteristic function at 30+ digits) and
// are pinned here so regressions show up as value drift, not just as
// self-consistency failures.

#include "fsl/geometry.hpp"
#include "fsl/potential.hpp"
#include "fsl/spectrum.hpp"

#include <cmath>
#include <vector>

namespace fixtures {

inline fsl::Geometry unit_geometry() { return fsl::Geometry(1.0, 1.0, 1.0); }

inline fsl::Geometry geometry(double gamma, double d, double l) {
    return fsl::Geometry(gamma, d, l);
}

inline fsl::Potential zero_potential() { return fsl::Potential::zero(unit_geometry()); }

// q(t) = cos(pi t) on [0, 1], q(t) = t - 2 on [2, 3]; q(0) = 1, q(gamma) = -1
inline fsl::Potential smooth_potential() {
    return fsl::Potential::from_callables(
        unit_geometry(), [](double t) { return std::cos(fsl::pi * t); },
        [](double t) { return t - 2.0; });
}

inline fsl::Potential one_potential() {
    return fsl::Potential::from_callables(
        unit_geometry(), [](double) { return 1.0; }, [](double) { return 1.0; });
}

// first 10 eigenvalues for q = 0, gamma = d = l = 1
inline const std::vector<double>& zero_q_eigenvalues() {
    static const std::vector<double> v = {
        1.021649416050021,  4.395915310441531,  11.876553552167126, 24.215313640526894,
        41.48473476071174,  63.689534132239004, 90.82975251936585,  122.90517126561227,
        159.9156398797616,  201.8610683022139};
    return v;
}

// first 5 zeros of d cos(zl) + (1 - d^2 z^2) sin(zl)/z for three geometries
inline const std::vector<double>& z_freqs_d1_l1() {
    static const std::vector<double> v = {3.448237983351985, 6.440954447908016,
                                          9.530477156207574, 12.645778666218554,
                                          15.7715387628633};
    return v;
}

inline const std::vector<double>& z_freqs_d05_l2() {
    static const std::vector<double> v = {1.19598994, 3.49420573, 4.93797629, 6.44846993,
                                          7.98455578};
    return v;
}

inline const std::vector<double>& z_freqs_d2_l1() {
    static const std::vector<double> v = {3.29565159, 6.36209991, 9.47763172, 12.60607565,
                                          15.73975135};
    return v;
}

inline fsl::Spectrum spectrum_from_reals(const fsl::Geometry& g, const std::vector<double>& v) {
    fsl::Spectrum s;
    s.geometry = g;
    for (double x : v) s.values.emplace_back(x, 0.0);
    s.sort_canonical();
    s.recount_k0();
    return s;
}

} // namespace fixtures
