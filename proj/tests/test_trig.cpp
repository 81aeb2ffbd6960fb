#include "fsl/trig.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>

using namespace fsl;

TEST_CASE("positive lambda reproduces circular functions") {
    const double lam = 4.0, x = 0.7; // rho = 2
    CHECK(cos_rx(lam, x) == doctest::Approx(std::cos(1.4)).epsilon(1e-14));
    CHECK(sinc_rx(lam, x) == doctest::Approx(std::sin(1.4) / 2.0).epsilon(1e-14));
}

TEST_CASE("negative lambda reproduces hyperbolic functions") {
    const double lam = -9.0, x = 0.5; // rho = 3i
    CHECK(cos_rx(lam, x) == doctest::Approx(std::cosh(1.5)).epsilon(1e-14));
    CHECK(sinc_rx(lam, x) == doctest::Approx(std::sinh(1.5) / 3.0).epsilon(1e-14));
}

TEST_CASE("lambda = 0 limits") {
    CHECK(cos_rx(0.0, 1.3) == doctest::Approx(1.0));
    CHECK(sinc_rx(0.0, 1.3) == doctest::Approx(1.3));
    CHECK(sinc(0.0) == doctest::Approx(1.0));
}

TEST_CASE("series regime joins the direct formulas smoothly") {
    // straddle the switchover with tiny lambda; both paths must agree
    for (double lam : {1e-8, -1e-8, 1e-4, -1e-4, 2.5e-3}) {
        const double x = 0.9;
        const double rho = std::sqrt(std::abs(lam));
        const double want_c = lam > 0 ? std::cos(rho * x) : std::cosh(rho * x);
        const double want_s = lam > 0 ? std::sin(rho * x) / rho : std::sinh(rho * x) / rho;
        CHECK(cos_rx(lam, x) == doctest::Approx(want_c).epsilon(1e-13));
        CHECK(sinc_rx(lam, x) == doctest::Approx(want_s).epsilon(1e-13));
    }
}

TEST_CASE("pythagorean identity holds for complex lambda") {
    // cos(rho x)^2 + lambda (sin(rho x)/rho)^2 = 1 for every lambda
    for (cplx lam : {cplx(3.0, 2.0), cplx(-5.0, 1.0), cplx(0.0, 4.0), cplx(100.0, -30.0)}) {
        const double x = 0.8;
        const cplx c = cos_rx(lam, x), s = sinc_rx(lam, x);
        CHECK(std::abs(c * c + lam * s * s - 1.0) < 1e-11);
    }
}

TEST_CASE("complex evaluation matches the principal-branch formula") {
    const cplx lam(2.0, 5.0);
    const double x = 1.1;
    const cplx rho = std::sqrt(lam);
    CHECK(std::abs(cos_rx(lam, x) - std::cos(rho * x)) < 1e-12);
    CHECK(std::abs(sinc_rx(lam, x) - std::sin(rho * x) / rho) < 1e-12);
}

TEST_CASE("x = 0 base points") {
    CHECK(cos_rx(7.7, 0.0) == doctest::Approx(1.0));
    CHECK(sinc_rx(7.7, 0.0) == doctest::Approx(0.0));
}
