#include <numeric>
#include <random>

#include "doctest.h"
#include "knotforge/tangle.hpp"
#include "testutil.hpp"

using namespace knotforge;

TEST_CASE("cf_eval fixtures") {
    Fraction f = cf_eval({2, 1, 3});
    CHECK(f.p == 11);
    CHECK(f.q == 3);
    CHECK(cf_eval({3}) == make_fraction(3, 1));
    CHECK_THROWS_AS(cf_eval({}), BadInput);
}

TEST_CASE("cf round trip on all reduced fractions up to 60") {
    for (long long p = 2; p <= 60; ++p)
        for (long long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (long long sp : {p, -p}) {
                Fraction f = make_fraction(sp, q);
                CHECK(cf_eval(cf_expand(f)) == f);
            }
        }
}

TEST_CASE("conway notation parse/print round trip") {
    std::mt19937 rng(7201);
    for (int it = 0; it < 200; ++it) {
        TangleExpr t = testutil::random_tangle(rng, 3);
        std::string s = print_conway(t);
        TangleExpr back = parse_conway(s);
        CHECK(print_conway(back) == s);
        // the diagrams agree even if the trees were normalized differently
        CHECK(conway_skein(tangle_to_diagram(back)) == conway_skein(tangle_to_diagram(t)));
    }
}

TEST_CASE("conway notation grammar") {
    CHECK(parse_conway("213") == parse_conway("2 1 3"));
    CHECK_THROWS_AS(parse_conway(""), BadInput);
    CHECK_THROWS_AS(parse_conway("(2,"), BadInput);
    CHECK_THROWS_AS(parse_conway("%"), BadInput);
}

TEST_CASE("rational tangle realizes its fraction") {
    std::mt19937 rng(7202);
    for (int it = 0; it < 60; ++it) {
        long long p = 3 + 2 * (long long)(rng() % 20), q = 1 + (long long)(rng() % (p - 1));
        if (std::gcd(p, q) != 1) continue;
        TangleExpr t = rational_tangle(make_fraction(p, q));
        // its closure is the 2-bridge link S(p,q): determinant |delta(-1)| = p
        Diagram d = tangle_to_diagram(t);
        IntLaurent delta = conway_to_alexander(conway_skein(d));
        Coef det = 0;
        for (auto& [e, c] : delta.coeffs()) det += (e / 2) % 2 == 0 ? c : -c;
        CHECK(std::abs(det) == p);
    }
}

TEST_CASE("montesinos canonicalization") {
    MontesinosForm m = parse_montesinos("M(-1/3;0)");
    MontesinosForm c = montesinos_canonical(m);
    CHECK(montesinos_to_string(c) == "M(2/3;-1)");
    // idempotent
    CHECK(montesinos_to_string(montesinos_canonical(c)) == "M(2/3;-1)");
}

TEST_CASE("montesinos equality invariances") {
    MontesinosForm a = parse_montesinos("M(1/2,1/3,1/7;0)");
    CHECK(montesinos_equal(a, parse_montesinos("M(1/3,1/7,1/2;0)")));         // cyclic
    CHECK(montesinos_equal(a, parse_montesinos("M(1/7,1/3,1/2;0)")));         // reversal
    CHECK_FALSE(montesinos_equal(a, parse_montesinos("M(1/2,1/3,1/5;0)")));
    CHECK_FALSE(montesinos_equal(a, parse_montesinos("M(-1/2,-1/3,-1/7;0)")));
    CHECK(montesinos_equal(a, parse_montesinos("M(-1/2,-1/3,-1/7;0)"), true)); // mirror
    CHECK_THROWS_AS(montesinos_equal(parse_montesinos("M(1/2,1/3;0)"), a), BadInput);
}

TEST_CASE("montesinos canonicalization, randomized") {
    std::mt19937 rng(7203);
    for (int it = 0; it < 300; ++it) {
        MontesinosForm m;
        int len = 3 + (int)(rng() % 3);
        for (int i = 0; i < len; ++i) {
            long long p = 2 + (long long)(rng() % 9);
            long long q;
            do
                q = (long long)(rng() % (2 * p - 1)) - (long long)(p - 1);
            while (q == 0 || std::gcd(p, std::abs(q)) != 1);
            m.fractions.push_back({q, p});
        }
        m.e = (long long)(rng() % 11) - 5;
        MontesinosForm c = montesinos_canonical(m);
        // entry sum is exact: compare via common denominator
        long long den = 1;
        for (auto& f : m.fractions) den *= f.q;
        long long s0 = m.e * den, s1 = c.e * den;
        for (size_t i = 0; i < m.fractions.size(); ++i) {
            s0 += m.fractions[i].p * (den / m.fractions[i].q);
            s1 += c.fractions[i].p * (den / c.fractions[i].q);
        }
        CHECK(s0 == s1);
        for (auto& f : c.fractions) {
            CHECK(f.p > 0);
            CHECK(f.p < f.q);
        }
        CHECK(montesinos_canonical(c).e == c.e);
        if (len >= 3) CHECK(montesinos_equal(m, c));
    }
}

TEST_CASE("montesinos_to_conway renders") {
    MontesinosForm m = parse_montesinos("M(1/2,1/3,1/7;0)");
    Diagram d = tangle_to_diagram(montesinos_to_conway(m));
    CHECK(d.crossing_count() >= 3);
    d.validate();
}

TEST_CASE("pretzel diagram component counts") {
    CHECK(pretzel_diagram({1, 1, 1}).component_count() == 1);
    CHECK(pretzel_diagram({2, 2}).component_count() == 2);
    CHECK(pretzel_diagram({2, 2, 2}).component_count() == 3);
}
