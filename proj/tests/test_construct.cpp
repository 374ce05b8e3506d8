#include <random>

#include "doctest.h"
#include "knotforge/construct.hpp"
#include "testutil.hpp"

using namespace knotforge;

namespace {

ConwayPoly verify(const RealizedLink& r) {
    return conway_skein(r.diagram, std::max(kDefaultSkeinLimit, r.diagram.crossing_count()));
}

} // namespace

TEST_CASE("realize_knot fixtures") {
    for (const char* s : {"1", "1 + z^2", "1 - z^2", "1 - 2z^2 + 2z^4", "1 + z^2 - z^4",
                          "1 - z^2 + 3z^4 - 2z^6"}) {
        ConwayPoly nabla = ConwayPoly::parse(s);
        RealizedLink r = realize_knot(nabla);
        CHECK(verify(r) == nabla);
        CHECK(r.n == 1);
        CHECK(r.diagram.validate().genus == r.d); // canonical genus d
        if (r.d > 0) {
            CHECK(r.t_strong == 4 * r.d - 2);
            CHECK(r.t_strong_reverse == 4 * r.d - 1);
            REQUIRE(r.unknotting_site.has_value());
        }
    }
}

TEST_CASE("realize_knot rejects inadmissible input") {
    CHECK_THROWS_AS(realize_knot(ConwayPoly::parse("z")), BadInput);
    CHECK_THROWS_AS(realize_knot(ConwayPoly::parse("2 + z^2")), BadInput);
    CHECK_THROWS_AS(realize_knot(ConwayPoly::parse("0")), BadInput);
}

TEST_CASE("realize_knot randomized sweep") {
    std::mt19937 rng(7301);
    for (int it = 0; it < 25; ++it) {
        ConwayPoly nabla = testutil::random_nabla(rng, 1, 1 + (int)(rng() % 3), false);
        RealizedLink r = realize_knot(nabla);
        CHECK(verify(r) == nabla);
        CHECK(r.volume_bound == doctest::Approx(10 * V0 * (r.t_strong - 1)).epsilon(1e-12));
    }
}

TEST_CASE("realize_link2") {
    std::mt19937 rng(7302);
    for (int it = 0; it < 15; ++it) {
        ConwayPoly nabla = testutil::random_nabla(rng, 2, 1 + (int)(rng() % 3), false);
        RealizedLink r = realize_link2(nabla);
        CHECK(verify(r) == nabla);
        CHECK(r.n == 2);
        CHECK(r.diagram.component_count() == 2);
        CHECK(r.volume_bound == doctest::Approx(20 * V0 * (r.d - 1)).epsilon(1e-9));
    }
    CHECK_THROWS_AS(realize_link2(ConwayPoly::parse("1 + z^2")), BadInput);
}

TEST_CASE("realize_link_n") {
    std::mt19937 rng(7303);
    for (int n : {3, 4}) {
        for (int it = 0; it < 4; ++it) {
            ConwayPoly nabla = testutil::random_nabla(rng, n, 1 + (int)(rng() % 2), true);
            RealizedLink r = realize_link_n(nabla, n);
            CHECK(verify(r) == nabla);
            CHECK(r.diagram.component_count() == n);
            LinkingGraph g = r.diagram.linking_graph();
            CHECK(g.connected());
            CHECK((int)g.edges.size() <= n + 1);
        }
        // genus-0 boundary cases
        for (int s : {1, -1}) {
            ConwayPoly nabla = ConwayPoly::term(s, n - 1);
            RealizedLink r = realize_link_n(nabla, n);
            CHECK(verify(r) == nabla);
        }
    }
    CHECK_THROWS_AS(realize_link_n(ConwayPoly::parse("z^2"), 3), Impossible);
}

TEST_CASE("fibered necessary condition") {
    RealizedLink tref = realize_knot(ConwayPoly::parse("1 + z^2"));
    CHECK(fibered_necessary(tref.diagram, tref.nabla));
    RealizedLink r = realize_knot(ConwayPoly::parse("1 - 2z^2 + 2z^4"));
    CHECK_FALSE(fibered_necessary(r.diagram, r.nabla)); // leading coefficient 2
    CHECK_THROWS_AS(fibered_necessary(tref.diagram, ConwayPoly::parse("1 - z^2")), BadInput);
}

TEST_CASE("realized certificate serializes") {
    RealizedLink r = realize_knot(ConwayPoly::parse("1 + z^2"));
    std::string j = r.to_json();
    CHECK(j.find("\"pd\"") != std::string::npos);
    CHECK(j.find("\"nabla\"") != std::string::npos);
    CHECK(j.find("\"t_strong\"") != std::string::npos);
}
