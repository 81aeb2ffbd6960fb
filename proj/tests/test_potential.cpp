#include "fsl/potential.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace fsl;

TEST_CASE("zero potential evaluates to zero and is flagged") {
    Potential q = fixtures::zero_potential();
    CHECK(q.is_zero());
    CHECK(q.eval_left(0.3) == 0.0);
    CHECK(q.eval_right(2.7) == 0.0);
    CHECK(q.q_gamma() == 0.0);
}

TEST_CASE("callable-backed potential evaluates per segment") {
    Potential q = fixtures::smooth_potential();
    CHECK_FALSE(q.is_zero());
    CHECK(q.eval_left(0.0) == doctest::Approx(1.0));
    CHECK(q.eval_left(0.5) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(q.q_gamma() == doctest::Approx(-1.0));
    CHECK(q.eval_left(1.0) == doctest::Approx(-1.0)); // endpoint routed to q(gamma)
    CHECK(q.eval_right(2.0) == doctest::Approx(0.0));
    CHECK(q.eval_right(3.0) == doctest::Approx(1.0));
    CHECK(q(0.25) == doctest::Approx(std::cos(pi * 0.25)));
    CHECK(q(2.5) == doctest::Approx(0.5));
    CHECK_THROWS_AS(q(1.5), DomainError); // the gap is not part of T
}

TEST_CASE("grid-backed potential interpolates to cubic accuracy") {
    Geometry g = fixtures::unit_geometry();
    const int n = 65;
    std::vector<double> left(n), right(n);
    for (int i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / (n - 1);
        left[i] = std::sin(2.0 * t);
        right[i] = std::exp(-t);
    }
    Potential q = Potential::from_grids(g, left, right, std::sin(2.0));
    for (double t : {0.013, 0.41, 0.77, 0.999}) {
        CHECK(q.eval_left(t) == doctest::Approx(std::sin(2.0 * t)).epsilon(1e-6));
        CHECK(q.eval_right(2.0 + t) == doctest::Approx(std::exp(-t)).epsilon(1e-6));
    }
    CHECK(q.grid_backed());
    CHECK_FALSE(q.is_zero());
}

TEST_CASE("grid-backed construction validates its inputs") {
    Geometry g = fixtures::unit_geometry();
    std::vector<double> ok = {0.0, 0.5, 1.0};
    CHECK_THROWS_AS(Potential::from_grids(g, {1.0}, ok, 0.0), DomainError);
    // declared q(gamma) must equal the final left sample
    CHECK_THROWS_AS(Potential::from_grids(g, ok, ok, 0.5), DomainError);
    CHECK_NOTHROW(Potential::from_grids(g, ok, ok, 1.0));
    std::vector<double> bad = {0.0, std::nan(""), 1.0};
    CHECK_THROWS_AS(Potential::from_grids(g, bad, ok, 1.0), DomainError);
}

TEST_CASE("all-zero grids are recognized as the zero potential") {
    Geometry g = fixtures::unit_geometry();
    std::vector<double> z(5, 0.0);
    Potential q = Potential::from_grids(g, z, z, 0.0);
    CHECK(q.is_zero());
    CHECK(q.eval_left(0.37) == doctest::Approx(0.0));
}

TEST_CASE("resampling agrees with direct evaluation") {
    Potential q = fixtures::smooth_potential();
    const std::vector<double> s = q.sample_left(33);
    REQUIRE(s.size() == 33);
    CHECK(s.front() == doctest::Approx(1.0));
    CHECK(s.back() == doctest::Approx(-1.0));
    CHECK(s[16] == doctest::Approx(std::cos(pi * 0.5)).epsilon(1e-12));
    const std::vector<double> r = q.sample_right(17);
    CHECK(r.front() == doctest::Approx(0.0));
    CHECK(r.back() == doctest::Approx(1.0));
}
