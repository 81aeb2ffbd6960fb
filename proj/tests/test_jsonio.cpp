#include "fsl/jsonio.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <string>

using namespace fsl;
using jsonio::ojson;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const char* name) : path(std::string("/tmp/fsl_jsonio_") + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("geometry roundtrips through its JSON form") {
    const Geometry g = fixtures::geometry(1.0, 0.5, 2.0);
    const ojson j = jsonio::geometry_to_json(g);
    const Geometry back = jsonio::geometry_from_json(j);
    CHECK(back.gamma() == g.gamma());
    CHECK(back.d() == g.d());
    CHECK(back.l() == g.l());
    // rationality is declared, never inferred: the plain constructor has none
    CHECK(j.at("exact").at("l_over_gamma").is_null());

    // a declared shadow survives the roundtrip
    ExactShadow sh;
    sh.l_over_gamma = Rational{2, 1};
    const Geometry gx(1.0, 0.5, 2.0, sh);
    const ojson jx = jsonio::geometry_to_json(gx);
    REQUIRE(jx.at("exact").at("l_over_gamma").is_array());
    CHECK(jx["exact"]["l_over_gamma"][0].get<long long>() == 2);
    CHECK(jx["exact"]["l_over_gamma"][1].get<long long>() == 1);
    const Geometry bx = jsonio::geometry_from_json(jx);
    REQUIRE(bx.exact().l_over_gamma.has_value());
    CHECK(bx.exact().l_over_gamma->num == 2);
}

TEST_CASE("potential roundtrip preserves values on both segments") {
    const Potential q = fixtures::smooth_potential();
    const ojson j = jsonio::potential_to_json(q, 257);
    const Potential back = jsonio::potential_from_json(j, q.geometry());
    for (int i = 0; i <= 32; ++i) {
        const double tl = i / 32.0;
        const double tr = 2.0 + i / 32.0;
        CHECK(std::abs(back(tl) - q(tl)) < 1e-9);
        CHECK(std::abs(back(tr) - q(tr)) < 1e-9);
    }
    CHECK(back.q_gamma() == doctest::Approx(q.q_gamma()).epsilon(1e-12));
}

TEST_CASE("spectrum roundtrip and canonical recount") {
    Spectrum s = fixtures::spectrum_from_reals(fixtures::unit_geometry(),
                                               {4.0, 1.0, -2.0, 9.0});
    s.sort_canonical();
    s.recount_k0();
    const ojson j = jsonio::spectrum_to_json(s);
    const Spectrum back = jsonio::spectrum_from_json(j);
    REQUIRE(back.values.size() == 4);
    CHECK(back.values[0].real() == doctest::Approx(-2.0));
    CHECK(back.k0 == s.k0);

    // a lying eigenvalue count below zero is rejected
    ojson bad = j;
    bad["k0"] = 3;
    CHECK_THROWS_AS(jsonio::spectrum_from_json(bad), DomainError);
}

TEST_CASE("writer is deterministic and stable under reload") {
    const Potential q = fixtures::smooth_potential();
    const ojson j = jsonio::potential_to_json(q, 129);
    const std::string once = jsonio::dump(j);
    const std::string twice = jsonio::dump(j);
    CHECK(once == twice);
    CHECK_FALSE(once.empty());
    CHECK(once.back() == '\n');

    // parse -> dump is the identity on our own output
    const ojson re = ojson::parse(once);
    CHECK(jsonio::dump(re) == once);
}

TEST_CASE("file transport") {
    TempFile tf("spec.json");
    Spectrum s = fixtures::spectrum_from_reals(fixtures::unit_geometry(), {1.5, 2.5});
    jsonio::write_file(tf.path, jsonio::spectrum_to_json(s));
    const Spectrum back = jsonio::load_spectrum(tf.path);
    CHECK(back.values.size() == 2);
    CHECK(back.values[1].real() == doctest::Approx(2.5));

    CHECK_THROWS_AS(jsonio::read_file("/tmp/fsl_jsonio_definitely_missing.json"), DomainError);

    TempFile broken("broken.json");
    {
        FILE* f = std::fopen(broken.path.c_str(), "wb");
        REQUIRE(f != nullptr);
        std::fputs("{ not json", f);
        std::fclose(f);
    }
    CHECK_THROWS_AS(jsonio::read_file(broken.path), DomainError);
}

TEST_CASE("input validation") {
    const Geometry g = fixtures::unit_geometry();
    // segment endpoints must match the geometry
    ojson j = jsonio::potential_to_json(fixtures::smooth_potential(), 65);
    j["segments"][0]["to"] = 0.9;
    CHECK_THROWS_AS(jsonio::potential_from_json(j, fixtures::smooth_potential().geometry()),
                    DomainError);

    // declared rational shadow must agree with the float ratio
    ojson gj = jsonio::geometry_to_json(g);
    gj["exact"]["l_over_gamma"] = ojson::array({3, 1});
    CHECK_THROWS_AS(jsonio::geometry_from_json(gj), DomainError);

    ojson gz = jsonio::geometry_to_json(g);
    gz["exact"]["l_over_gamma"] = ojson::array({1, 0});
    CHECK_THROWS_AS(jsonio::geometry_from_json(gz), DomainError);

    // null shadow is allowed
    ojson gn = jsonio::geometry_to_json(g);
    gn["exact"]["l_over_gamma"] = nullptr;
    const Geometry gb = jsonio::geometry_from_json(gn);
    CHECK(gb.l() == g.l());
}

TEST_CASE("envelope metadata does not disturb payload loading") {
    Spectrum s = fixtures::spectrum_from_reals(fixtures::unit_geometry(), {1.0, 2.0, 3.0});
    ojson out = jsonio::envelope("forward", ojson{{"count", 3}});
    out.update(jsonio::spectrum_to_json(s));
    CHECK(out.at("schema").get<std::string>() == "frozen-spectrum/1");
    CHECK(out.at("command").get<std::string>() == "forward");
    const Spectrum back = jsonio::spectrum_from_json(out);
    CHECK(back.values.size() == 3);
}

TEST_CASE("non-finite numbers are refused by the writer") {
    ojson j;
    j["x"] = std::nan("");
    CHECK_THROWS_AS(jsonio::dump(j), NumericError);
}
