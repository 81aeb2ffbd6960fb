#include "fsl/charfn.hpp"

#include "fsl/inverse.hpp"
#include "fsl/quadrature.hpp"
#include "fsl/trig.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>

using namespace fsl;

TEST_CASE("transfer entries reach their lambda = 0 limits") {
    for (auto g : {fixtures::unit_geometry(), fixtures::geometry(1.0, 0.5, 2.0),
                   fixtures::geometry(2.0, 2.0, 1.0)}) {
        const C12S p = eval_c1_c2_s(cplx(0.0, 0.0), g);
        CHECK(std::abs(p.c1 - 1.0) < 1e-12);
        CHECK(std::abs(p.c2 - (g.d() + g.l())) < 1e-12);
        CHECK(std::abs(p.s - g.gamma()) < 1e-12);
    }
}

TEST_CASE("transfer entries match explicit trigonometry at positive lambda") {
    Geometry g = fixtures::geometry(1.0, 0.5, 2.0);
    const double lam = 9.0, rho = 3.0;
    const C12S p = eval_c1_c2_s(cplx(lam, 0.0), g);
    CHECK(p.c1.real() ==
          doctest::Approx(std::cos(rho * 2.0) - 0.5 * rho * std::sin(rho * 2.0)).epsilon(1e-13));
    CHECK(p.c2.real() == doctest::Approx(0.5 * std::cos(rho * 2.0) +
                                         (1.0 - 0.25 * lam) * std::sin(rho * 2.0) / rho)
                             .epsilon(1e-13));
    CHECK(p.s.real() == doctest::Approx(std::sin(rho) / rho).epsilon(1e-13));
}

TEST_CASE("free characteristic function at the origin equals minus the total length") {
    for (auto g : {fixtures::unit_geometry(), fixtures::geometry(1.0, 0.5, 2.0),
                   fixtures::geometry(0.7, 1.3, 2.1)}) {
        Potential q = Potential::zero(g);
        const cplx v = eval_delta(cplx(0.0, 0.0), q);
        CHECK(std::abs(v - cplx(-(g.gamma() + g.d() + g.l()), 0.0)) < 1e-12);
    }
}

TEST_CASE("free characteristic function vanishes at the pinned eigenvalues") {
    Potential q = fixtures::zero_potential();
    for (double lam : fixtures::zero_q_eigenvalues()) {
        const cplx v = eval_delta(cplx(lam, 0.0), q);
        CHECK(std::abs(v) < 1e-9 * (1.0 + std::abs(lam)));
    }
}

TEST_CASE("equal-segment rewrite agrees with the general closed form") {
    Potential q = fixtures::smooth_potential();
    for (cplx lam : {cplx(0.0, 0.0), cplx(7.3, 0.0), cplx(-25.0, 0.0), cplx(49.5, 0.0),
                     cplx(12.0, 9.0), cplx(-4.0, -11.0), cplx(300.0, 2.0)}) {
        const cplx a = eval_delta(lam, q);
        const cplx b = eval_delta_equal_segments(lam, q);
        CHECK(std::abs(a - b) <= 1e-9 * (1.0 + std::abs(a)));
    }
}

TEST_CASE("first-segment solution entries") {
    Geometry g = fixtures::unit_geometry();
    // S is potential-free: S(x) = -sin(rho (gamma - x))/rho as a function on [0, gamma]
    CHECK(std::abs(eval_S(1.0, cplx(4.0, 0.0), g)) < 1e-13);
    CHECK(std::abs(eval_S(0.0, cplx(4.0, 0.0), g) + std::sin(2.0) / 2.0) < 1e-13);
    // C carries the potential: for q = 1 on [0,1], C(0, 0) = 1 + int_0^1 (1-t) dt
    Potential one = fixtures::one_potential();
    CHECK(std::abs(eval_C(0.0, cplx(0.0, 0.0), one) - 1.5) < 1e-10);
    CHECK(std::abs(eval_C(1.0, cplx(17.0, 0.0), one) - 1.0) < 1e-13); // empty integral at x = gamma
}

TEST_CASE("real potentials give conjugate-symmetric characteristic functions") {
    Potential q = fixtures::smooth_potential();
    for (cplx lam : {cplx(5.0, 3.0), cplx(-8.0, 12.0), cplx(60.0, -7.0)}) {
        const cplx a = eval_delta(lam, q);
        const cplx b = eval_delta(std::conj(lam), q);
        CHECK(std::abs(a - std::conj(b)) < 1e-11 * (1.0 + std::abs(a)));
    }
}

TEST_CASE("potential-backed object matches the free functions") {
    Potential q = fixtures::smooth_potential();
    CharFunction f = CharFunction::from_potential(q);
    CHECK_FALSE(f.product_backed());
    CHECK(f.potential() != nullptr);
    for (double lam : {-30.0, -1.0, 0.5, 12.0, 47.0}) {
        CHECK(f.eval_real(lam) ==
              doctest::Approx(eval_delta(cplx(lam, 0.0), q).real()).epsilon(1e-12));
    }
}

// The moment-extraction identity: at nu_n = (pi n / gamma)^2 the closed form
// collapses to Delta = c2 ((-1)^{n+1} - gamma kappa_n/(pi n)) where kappa_n
// is the plain sine moment of the left potential.  This isolates the
// extraction formula from any product or reconstruction machinery.
TEST_CASE("moment identity on the integer frequency ladder") {
    Potential q = fixtures::smooth_potential();
    CharFunction f = CharFunction::from_potential(q);
    const Geometry& g = q.geometry();
    CoeffSeq kappa = recover_kappa(f, 12);
    for (int n = 1; n <= 12; ++n) {
        const double freq = pi * n / g.gamma();
        const double direct = gk15_adaptive(
            [&](double t) { return q.eval_left(t) * std::sin(freq * t); }, 0.0, g.gamma(),
            1e-14, 1e-13, 40);
        CHECK(std::abs(kappa.values[static_cast<size_t>(n) - 1] - direct) <=
              1e-8 * (1.0 + std::abs(direct)));
    }
}

TEST_CASE("flipped right-segment moments match direct quadrature") {
    Potential q = fixtures::smooth_potential();
    CharFunction f = CharFunction::from_potential(q);
    const Geometry& g = q.geometry();
    const std::vector<double> z = compute_z(g, 10);
    CoeffSeq xi = recover_xi(f, z, q.q_gamma(), 10);
    for (int n = 1; n <= 10; ++n) {
        const double zn = z[static_cast<size_t>(n) - 1];
        const double direct = gk15_adaptive(
            [&](double s) { return q.eval_right(g.b() - s) * std::sin(zn * s); }, 0.0, g.l(),
            1e-14, 1e-13, 40);
        CHECK(std::abs(xi.values[static_cast<size_t>(n) - 1] - direct) <=
              1e-8 * (1.0 + std::abs(direct)));
    }
}

TEST_CASE("reference grid shape") {
    const std::vector<double> grid = reference_grid();
    REQUIRE(grid.size() == 200);
    CHECK(grid.front() == doctest::Approx(-50.0));
    CHECK(grid.back() == doctest::Approx(50.0));
}
