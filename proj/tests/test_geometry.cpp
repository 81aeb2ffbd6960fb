#include "fsl/geometry.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>

using namespace fsl;

TEST_CASE("constructor validates segment data") {
    CHECK_THROWS_AS(Geometry(0.0, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(Geometry(1.0, -0.5, 1.0), DomainError);
    CHECK_THROWS_AS(Geometry(1.0, 1.0, 0.0), DomainError);
    CHECK_NOTHROW(Geometry(2.0, 0.25, 3.0));
}

TEST_CASE("derived endpoints and equal-segment detection") {
    Geometry g(1.0, 0.5, 2.0);
    CHECK(g.a() == doctest::Approx(1.5));
    CHECK(g.b() == doctest::Approx(3.5));
    CHECK_FALSE(g.equal_segments());
    CHECK(fixtures::unit_geometry().equal_segments());
}

TEST_CASE("jump functions act only at the gap") {
    Geometry g = fixtures::unit_geometry(); // T = [0,1] u [2,3]
    CHECK(sigma(g, 1.0) == doctest::Approx(2.0));
    CHECK(sigma(g, 0.4) == doctest::Approx(0.4));
    CHECK(sigma(g, 2.7) == doctest::Approx(2.7));
    CHECK(sigma(g, 3.0) == doctest::Approx(3.0));
    CHECK(sigma_minus(g, 2.0) == doctest::Approx(1.0));
    CHECK(sigma_minus(g, 0.0) == doctest::Approx(0.0));
    CHECK(sigma_minus(g, 0.6) == doctest::Approx(0.6));
}

TEST_CASE("membership test respects both segments and rejects the gap") {
    Geometry g = fixtures::unit_geometry();
    CHECK(g.contains(0.0));
    CHECK(g.contains(1.0));
    CHECK(g.contains(2.0));
    CHECK(g.contains(3.0));
    CHECK(g.contains(0.123));
    CHECK_FALSE(g.contains(1.5));
    CHECK_FALSE(g.contains(-0.1));
    CHECK_FALSE(g.contains(3.2));
    CHECK_THROWS_AS(g.require_in_set(1.5, "test"), DomainError);
}

TEST_CASE("delta derivative is a divided difference exactly at the gap") {
    Geometry g = fixtures::unit_geometry();
    auto f = [](double t) { return t * t; };
    // (f(a) - f(gamma)) / d = (4 - 1)/1
    CHECK(delta_derivative(g, f, 1.0) == doctest::Approx(3.0));
    // classical derivative inside the segments
    CHECK(delta_derivative(g, f, 0.5) == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(delta_derivative(g, f, 2.5) == doctest::Approx(5.0).epsilon(1e-7));
    // also at segment endpoints that are dense from one side
    CHECK(delta_derivative(g, f, 0.0) == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(delta_derivative(g, f, 3.0) == doctest::Approx(6.0).epsilon(1e-6));
}

TEST_CASE("exact rational shadow is carried, never inferred") {
    ExactShadow e;
    e.l_over_gamma = Rational{3, 1};
    Geometry g(1.0, 0.5, 3.0, e);
    REQUIRE(g.exact().l_over_gamma.has_value());
    CHECK(g.exact().l_over_gamma->value() == doctest::Approx(3.0));
    CHECK_FALSE(g.exact().pi_l_over_gamma.has_value());
    Geometry plain(1.0, 0.5, 3.0);
    CHECK_FALSE(plain.exact().l_over_gamma.has_value());
}
