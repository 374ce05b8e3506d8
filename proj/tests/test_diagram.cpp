#include <random>

#include "doctest.h"
#include "knotforge/diagram.hpp"
#include "knotforge/surgery.hpp"
#include "knotforge/tangle.hpp"
#include "testutil.hpp"

using namespace knotforge;

TEST_CASE("skein oracle fixtures") {
    CHECK(conway_skein(pretzel_diagram({1, 1, 1})) == ConwayPoly::parse("1 + z^2"));
    CHECK(conway_skein(tangle_to_diagram(parse_conway("2 2"))) == ConwayPoly::parse("1 - z^2"));
    CHECK(conway_skein(pretzel_diagram({-3, 5, 7})) == ConwayPoly::parse("1"));
    CHECK(conway_skein(pretzel_diagram({2, 2})) == ConwayPoly::parse("2z + z^3"));
    CHECK(conway_skein(tangle_to_diagram(parse_conway("2 1 3"))) ==
          ConwayPoly::parse("1 - z^2 - z^4"));
    Diagram unknot = tangle_to_diagram(parse_conway("1"));
    CHECK(conway_skein(unknot) == ConwayPoly::parse("1"));
    Diagram unlink = tangle_to_diagram(parse_conway("0"));
    CHECK(conway_skein(unlink).is_zero());
}

TEST_CASE("skein relation holds crossing by crossing") {
    std::mt19937 rng(7101);
    for (int it = 0; it < 60; ++it) {
        Diagram d = testutil::random_diagram(rng, 10);
        int i = (int)(rng() % d.crossing_count());
        ConwayPoly lhs = d.crossing_sign(i) > 0 ? conway_skein(d) - conway_skein(d.switched(i))
                                                : conway_skein(d.switched(i)) - conway_skein(d);
        CHECK(lhs == ConwayPoly::term(1, 1) * conway_skein(d.smoothed(i)));
    }
}

TEST_CASE("reidemeister I and II invariance") {
    std::mt19937 rng(7102);
    for (int it = 0; it < 40; ++it) {
        Diagram d = testutil::random_diagram(rng, 10);
        ConwayPoly base = conway_skein(d);
        int arc = d.crossings()[rng() % d.crossing_count()].a[0];
        CHECK(conway_skein(insert_kink(d, arc, rng() % 2 ? 1 : -1)) == base);
        CHECK(conway_skein(insert_clasp_pair(d, (int)(rng() % d.crossing_count())).diagram) ==
              base);
    }
}

TEST_CASE("mirror parity") {
    std::mt19937 rng(7103);
    for (int it = 0; it < 40; ++it) {
        Diagram d = testutil::random_diagram(rng, 10);
        int n = d.component_count();
        ConwayPoly m = conway_skein(d.mirror());
        ConwayPoly expect = n % 2 == 1 ? conway_skein(d) : -conway_skein(d);
        CHECK(m == expect);
    }
}

TEST_CASE("determinant method agrees up to units") {
    std::mt19937 rng(7104);
    int done = 0;
    while (done < 30) {
        Diagram d = testutil::random_diagram(rng, 12);
        if (d.validate().n != d.component_count() || d.free_loops() > 0) continue;
        ConwayPoly nabla = conway_skein(d);
        if (nabla.is_zero()) continue; // determinant minor vanishes with it
        CHECK(equal_up_to_units(alexander_det(d), conway_to_alexander(nabla)));
        ++done;
    }
}

TEST_CASE("pd round trip and normalization") {
    std::mt19937 rng(7105);
    for (int it = 0; it < 40; ++it) {
        Diagram d = testutil::random_diagram(rng, 12);
        Diagram back = Diagram::parse_pd(d.to_pd());
        CHECK(back == d);
        Diagram norm = d.normalized();
        CHECK(norm.normalized() == norm);
        CHECK(conway_skein(norm) == conway_skein(d));
    }
}

TEST_CASE("linking numbers and graph") {
    Diagram hopf = tangle_to_diagram(parse_conway("2"));
    REQUIRE(hopf.component_count() == 2);
    long long lk = hopf.linking_number(0, 1);
    CHECK(std::abs(lk) == 1);
    LinkingGraph g = hopf.linking_graph();
    CHECK(g.vertices == 2);
    REQUIRE(g.edges.size() == 1);
    CHECK(g.connected());
    CHECK_FALSE(g.has_cut_vertex());
    // reversing a component flips the linking number
    CHECK(hopf.component_reversed(0).linking_number(0, 1) == -lk);
}

TEST_CASE("twist classes and volume bound") {
    Diagram tref = pretzel_diagram({1, 1, 1});
    TwistCounts tc = tref.twist_classes();
    CHECK(tc.t_strong >= 1);
    CHECK(tref.volume_bound() == doctest::Approx(10 * V0 * (tc.t_strong - 1)).epsilon(1e-12));
}

TEST_CASE("evaluator limit") {
    Diagram d = pretzel_diagram({3, 3, 3});
    CHECK_THROWS_AS(conway_skein(d, 4), ResourceLimit);
}

TEST_CASE("validate flags malformed incidence") {
    Diagram d;
    Crossing c;
    c.a = {1, 2, 3, 4};
    c.sign = 1;
    d.add_crossing(c);
    CHECK_THROWS_AS(d.validate(), BadInput);
}
