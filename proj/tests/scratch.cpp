#include <cstdio>

#include "knotforge/construct.hpp"
#include "knotforge/surgery.hpp"
#include "knotforge/tangle.hpp"

using namespace knotforge;

int main() {
    auto show = [](const char* label, const Diagram& d) {
        printf("%s: nabla=%s comps=%d xs=%d\n", label, conway_skein(d, 64).to_string().c_str(),
               d.component_count(), d.crossing_count());
    };
    show("pretzel(1,1,1)", pretzel_diagram({1, 1, 1}));
    show("pretzel(-3,5,7)", pretzel_diagram({-3, 5, 7}));
    show("pretzel(4)", pretzel_diagram({4}));
    show("pretzel(-4)", pretzel_diagram({-4}));
    show("conway 22", tangle_to_diagram(parse_conway("2 2")));
    show("fig8 conway", tangle_to_diagram(parse_conway("2 2"))); // same
    Fraction f = cf_eval({2, 1, 3});
    printf("cf_eval([2,1,3]) = %lld/%lld\n", f.p, f.q);
    auto e = cf_expand(make_fraction(11, 3));
    printf("cf_expand(11/3) =");
    for (long long c : e) printf(" %lld", c);
    printf("\n");
    printf("delta(1+z^2) = %s\n", conway_to_alexander(ConwayPoly::parse("1+z^2")).to_string().c_str());
    // trefoil clasp site: pretzel(1,1,1) crossings all +? print signs
    Diagram tr = pretzel_diagram({1, 1, 1});
    for (int i = 0; i < 3; ++i) printf("trefoil sign[%d]=%d\n", i, tr.crossing_sign(i));
    // realize_knot clasp *
    RealizedLink rk = realize_knot(ConwayPoly::parse("1-2z^2+2z^4"));
    printf("rk unknotting_site=%d sign=%d d=%d t=%d tr=%d genus=%d\n",
           rk.unknotting_site ? *rk.unknotting_site : -1,
           rk.unknotting_site ? rk.diagram.crossing_sign(*rk.unknotting_site) : 0, rk.d,
           rk.t_strong, rk.t_strong_reverse, rk.diagram.validate().genus);
    printf("rk volume_bound=%f vs %f\n", rk.volume_bound, 10 * V0 * (rk.t_strong - 1));
    RealizedLink l2 = realize_link2(ConwayPoly::parse("z+z^3"));
    printf("l2 d=%d volume_bound=%f 20V0(d-1)=%f\n", l2.d, l2.volume_bound, 20 * V0 * (l2.d - 1));
    printf("montesinos: %s\n",
           montesinos_to_string(montesinos_canonical(parse_montesinos("M(1/2,1/3,1/7;0)"))).c_str());
    return 0;
}
