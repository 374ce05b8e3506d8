#pragma once

#include <random>
#include <vector>

#include "knotforge/diagram.hpp"
#include "knotforge/poly.hpp"
#include "knotforge/tangle.hpp"

namespace testutil {

using knotforge::ConwayPoly;

// Admissible nabla for an n-component link: exponents >= n-1, = n-1 mod 2,
// nonzero leading coefficient; monic forces leading +-1.
inline ConwayPoly random_nabla(std::mt19937& rng, int n, int genus, bool monic,
                               int coef_range = 3) {
    std::uniform_int_distribution<int> coef(-coef_range, coef_range);
    ConwayPoly p;
    if (n == 1) p.set(0, 1);
    int lead = n - 1 + 2 * genus;
    for (int e = n - 1 + (n == 1 ? 2 : 0); e < lead; e += 2) p.set(e, coef(rng));
    if (monic)
        p.set(lead, rng() % 2 ? 1 : -1);
    else {
        int c = coef(rng);
        p.set(lead, c == 0 ? 1 : c);
    }
    return p;
}

// Random Conway-notation tangle expression; every expression renders to a
// valid planar diagram, which makes this the fuzz generator of choice.
inline knotforge::TangleExpr random_tangle(std::mt19937& rng, int depth) {
    using knotforge::TangleExpr;
    std::uniform_int_distribution<int> val(-4, 4);
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 0 : 3);
    switch (pick(rng)) {
    case 1: {
        std::vector<TangleExpr> cs;
        int k = 2 + (int)(rng() % 2);
        for (int i = 0; i < k; ++i) cs.push_back(random_tangle(rng, depth - 1));
        return TangleExpr::product(std::move(cs));
    }
    case 2: {
        std::vector<TangleExpr> cs;
        int k = 2 + (int)(rng() % 2);
        for (int i = 0; i < k; ++i) cs.push_back(random_tangle(rng, depth - 1));
        return TangleExpr::ramification(std::move(cs));
    }
    case 3:
        return TangleExpr::infinity();
    default:
        return TangleExpr::integer(val(rng));
    }
}

inline knotforge::Diagram random_diagram(std::mt19937& rng, int max_crossings) {
    for (;;) {
        knotforge::Diagram d = knotforge::tangle_to_diagram(random_tangle(rng, 3));
        if (d.crossing_count() >= 1 && d.crossing_count() <= max_crossings) return d;
    }
}

} // namespace testutil
