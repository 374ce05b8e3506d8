// Acceptance gate: one checker per criterion, one PASS/FAIL line each.
// Usage: acceptance [criterion] [cli-binary-path]

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "knotforge/construct.hpp"
#include "knotforge/surgery.hpp"
#include "knotforge/tangle.hpp"
#include "testutil.hpp"

using namespace knotforge;

namespace {

std::string g_cli = "knotforge";

ConwayPoly eval_exact(const Diagram& d) {
    return conway_skein(d, std::max(kDefaultSkeinLimit, d.crossing_count()));
}

// every admissible knot nabla with degree parameter <= dmax, a_i in [-3,3]
std::vector<ConwayPoly> knot_sweep(int dmax) {
    std::vector<ConwayPoly> out;
    for (int d = 0; d <= dmax; ++d) {
        std::vector<int> a(d, -3);
        for (;;) {
            if (d == 0 || a[d - 1] != 0) {
                ConwayPoly p;
                p.set(0, 1);
                for (int i = 0; i < d; ++i)
                    p.set(2 * (i + 1), (i + 1) % 2 ? -a[i] : a[i]); // a_i = (-1)^i [z^2i]
                out.push_back(p);
            }
            int i = 0;
            while (i < d && a[i] == 3) a[i++] = -3;
            if (i == d) break;
            ++a[i];
        }
    }
    return out;
}

bool crit1() {
    for (const ConwayPoly& nabla : knot_sweep(3)) {
        RealizedLink r = realize_knot(nabla);
        if (!(eval_exact(r.diagram) == nabla)) return false;
        if (r.diagram.validate().genus != r.d) return false;
        if (r.d > 0 && (r.t_strong != 4 * r.d - 2 || r.t_strong_reverse != 4 * r.d - 1))
            return false;
    }
    return true;
}

bool crit2() {
    for (const ConwayPoly& nabla : knot_sweep(3)) {
        SeifertMatrix v = seifert_matrix_V(coeff_vector(nabla));
        if (!(alexander_from_seifert(v) == conway_to_alexander(nabla))) return false;
    }
    // the paper instance a = (2,2)
    return alexander_from_seifert(seifert_matrix_V({2, 2})) ==
           conway_to_alexander(ConwayPoly::parse("1 - 2z^2 + 2z^4"));
}

bool crit3() {
    std::mt19937 rng(20260823);
    for (int it = 0; it < 50; ++it) {
        ConwayPoly nabla = testutil::random_nabla(rng, 2, 1 + (int)(rng() % 5), false);
        RealizedLink r = realize_link2(nabla);
        if (!(eval_exact(r.diagram) == nabla)) return false;
        if (std::fabs(r.volume_bound - 20 * V0 * (r.d - 1)) > 1e-9) return false;
    }
    return true;
}

bool crit4() {
    std::mt19937 rng(20260824);
    for (int n : {3, 4, 5}) {
        for (int it = 0; it < 20; ++it) {
            ConwayPoly nabla = testutil::random_nabla(rng, n, 1 + (int)(rng() % 3), true);
            RealizedLink r = realize_link_n(nabla, n);
            if (!(eval_exact(r.diagram) == nabla)) return false;
            if (r.diagram.component_count() != n) return false;
            LinkingGraph g = r.diagram.linking_graph();
            if (!g.connected() || (int)g.edges.size() > n + 1) return false;
        }
        for (int s : {1, -1}) {
            RealizedLink r = realize_link_n(ConwayPoly::term(s, n - 1), n);
            if (!(eval_exact(r.diagram) == ConwayPoly::term(s, n - 1))) return false;
        }
    }
    try {
        realize_link_n(ConwayPoly::parse("z^2"), 3);
        return false;
    } catch (const Impossible&) {
    }
    return true;
}

bool crit5() {
    Fraction f = cf_eval({2, 1, 3});
    if (f.p != 11 || f.q != 3) return false;
    for (long long p = 2; p <= 200; ++p)
        for (long long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (long long sp : {p, -p})
                if (!(cf_eval(cf_expand(make_fraction(sp, q))) == make_fraction(sp, q)))
                    return false;
        }
    return true;
}

bool crit6() {
    std::mt19937 rng(20260825);
    for (int it = 0; it < 500; ++it) {
        MontesinosForm m;
        int len = 3 + (int)(rng() % 3);
        for (int i = 0; i < len; ++i) {
            long long p = 2 + (long long)(rng() % 9), q;
            do
                q = (long long)(rng() % (2 * p - 1)) - (p - 1);
            while (q == 0 || std::gcd(p, std::abs(q)) != 1);
            m.fractions.push_back({q, p});
        }
        m.e = (long long)(rng() % 11) - 5;
        MontesinosForm c = montesinos_canonical(m);
        if (!(montesinos_canonical(c).e == c.e && montesinos_canonical(c).fractions == c.fractions))
            return false;
        long long den = 1;
        for (auto& fr : m.fractions) den *= fr.q;
        long long s0 = m.e * den, s1 = c.e * den;
        for (size_t i = 0; i < m.fractions.size(); ++i) {
            s0 += m.fractions[i].p * (den / m.fractions[i].q);
            s1 += c.fractions[i].p * (den / c.fractions[i].q);
        }
        if (s0 != s1) return false;
        // cyclic permutation and reversal
        MontesinosForm rot = m, rev = m;
        std::rotate(rot.fractions.begin(), rot.fractions.begin() + 1, rot.fractions.end());
        std::reverse(rev.fractions.begin(), rev.fractions.end());
        if (!montesinos_equal(m, rot) || !montesinos_equal(m, rev)) return false;
    }
    return true;
}

bool crit7() {
    SurgeryTriple t = surgery_triples(1, 2);
    if (t.p != 8 || t.q != 5 || t.r != -3) return false;
    for (int k = -5; k <= 5; ++k) {
        if (k == 0) continue;
        for (int n = -5; n <= 5; ++n) {
            SurgeryTriple s = surgery_triples(k, n);
            if ((s.p - 1) * s.q + (s.p - 1) * s.r + s.q * s.r + 1 != 0) return false;
            if ((s.p + 1) * s.q + (s.p + 1) * s.r + s.q * s.r + 1 != 4LL * k) return false;
        }
    }
    for (long long k = 1; k <= 5; ++k)
        if (v2_pretzel(1, 2 * k - 1, 1) != k || v2_pretzel(1, 2 * k - 1, -1) != 0) return false;
    return true;
}

bool crit8() {
    Diagram tref = pretzel_diagram({1, 1, 1});
    ConwayPoly tb = eval_exact(tref);
    for (int n = -2; n <= 2; ++n)
        if (!(eval_exact(apply_tangle_surgery(tref, {0, 1}, surgery_triples(1, n), true)) == tb))
            return false;
    for (const char* s : {"1 + z^2", "1 - 2z^2 + 2z^4", "1 + z^2 - z^4"}) {
        RealizedLink r = realize_knot(ConwayPoly::parse(s));
        std::vector<int> site = {*r.unknotting_site, *r.unknotting_site + 1};
        for (int n = -2; n <= 2; ++n)
            if (!(eval_exact(apply_tangle_surgery(r.diagram, site, surgery_triples(1, n), true)) ==
                  r.nabla))
                return false;
        SeifertData before = r.diagram.validate();
        for (int n : {-1, 1, 2}) {
            Diagram c = concordance_pair_surgery(r.diagram, surgery_triples(1, n));
            if (!(eval_exact(c) == r.nabla)) return false;
            if (before.chi - c.validate().chi > 4) return false;
        }
    }
    return true;
}

bool crit9() {
    bool saw_q5 = false;
    for (const SurgeryTriple& t : large_volume_triples(99)) {
        if (t.p * t.q + t.p * t.r + t.q * t.r != -1) return false;
        if (t.q == 5) {
            saw_q5 = true;
            if (t.p != 7 || t.r != -3) return false;
        }
    }
    return saw_q5;
}

bool crit10() {
    std::mt19937 rng(20260826);
    for (int it = 0; it < 200; ++it) {
        Diagram d = testutil::random_diagram(rng, 12);
        ConwayPoly base = conway_skein(d);
        // skein relation at a random crossing
        int i = (int)(rng() % d.crossing_count());
        ConwayPoly lhs = d.crossing_sign(i) > 0 ? base - conway_skein(d.switched(i))
                                                : conway_skein(d.switched(i)) - base;
        if (!(lhs == ConwayPoly::term(1, 1) * conway_skein(d.smoothed(i)))) return false;
        // Reidemeister I / II invariance
        int arc = d.crossings()[rng() % d.crossing_count()].a[0];
        if (!(conway_skein(insert_kink(d, arc, rng() % 2 ? 1 : -1)) == base)) return false;
        if (!(conway_skein(insert_clasp_pair(d, (int)(rng() % d.crossing_count())).diagram) ==
              base))
            return false;
        // mirror parity (-1)^{n+1}
        ConwayPoly m = conway_skein(d.mirror());
        if (!(m == (d.component_count() % 2 == 1 ? base : -base))) return false;
        // determinant method, connected diagrams with nonzero nabla
        if (d.validate().n == d.component_count() && d.free_loops() == 0 && !base.is_zero())
            if (!equal_up_to_units(alexander_det(d), conway_to_alexander(base))) return false;
    }
    if (!(conway_skein(pretzel_diagram({-3, 5, 7})) == ConwayPoly::parse("1"))) return false;
    return conway_skein(pretzel_diagram({2, 2})) == ConwayPoly::parse("2z + z^3");
}

int run_cli(const std::string& args, std::string* out) {
    std::string cmd = g_cli + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return -1;
    char buf[4096];
    std::string acc;
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) acc.append(buf, got);
    int rc = pclose(p);
    if (out) *out = acc;
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

bool crit11() {
    std::string cert;
    if (run_cli("realize --nabla \"1 - 2z^2 + 2z^4\" --components 1 --json", &cert) != 0)
        return false;
    nlohmann::json j = nlohmann::json::parse(cert);
    std::string pd_path = "/tmp/knotforge_accept.pd";
    FILE* f = fopen(pd_path.c_str(), "w");
    if (!f) return false;
    fputs(j["pd"].get<std::string>().c_str(), f);
    fclose(f);
    std::string eval_out;
    if (run_cli("eval --pd " + pd_path + " --json", &eval_out) != 0) return false;
    nlohmann::json je = nlohmann::json::parse(eval_out);
    // byte-identical canonical polynomial text
    if (je["nabla"].get<std::string>() != j["nabla"].get<std::string>()) return false;
    if (je["nabla"].get<std::string>() != "1 - 2z^2 + 2z^4") return false;
    // exit code contract
    std::string sink;
    if (run_cli("realize --nabla \"1 + z\" --components 1", &sink) != 2) return false;
    if (run_cli("realize --nabla \"z^2\" --components 3", &sink) != 3) return false;
    if (run_cli("eval --conway \"2 1 3\" --limit 1", &sink) != 4) return false;
    if (run_cli("surgery triples --k 1 --n 2", &sink) != 0 || sink != "8 5 -3\n") return false;
    return true;
}

struct Criterion {
    const char* what;
    bool (*fn)();
};

const std::array<Criterion, 11> kCriteria = {{
    {"knot realization sweep d<=3 (skein, genus, twist counts)", crit1},
    {"Seifert matrix coherence over the sweep", crit2},
    {"2-component realization + volume bound", crit3},
    {"n-component realization, linking graph, impossible case", crit4},
    {"continued fractions: fixture and round trip", crit5},
    {"Montesinos calculus on 500 random forms", crit6},
    {"surgery triple identities and v2 base case", crit7},
    {"tangle/concordance surgery preserves nabla", crit8},
    {"large-volume triples", crit9},
    {"skein engine soundness fuzz", crit10},
    {"CLI round trip and exit codes", crit11},
}};

} // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);
    if (argc > 2) g_cli = argv[2];
    bool all_ok = true;
    for (int i = 1; i <= (int)kCriteria.size(); ++i) {
        if (only && i != only) continue;
        const Criterion& c = kCriteria[i - 1];
        bool ok = false;
        std::string note;
        auto t0 = std::chrono::steady_clock::now();
        try {
            ok = c.fn();
        } catch (const std::exception& e) {
            note = std::string(" (") + e.what() + ")";
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        printf("criterion %2d %s: %s [%.1fs]%s\n", i, c.what, ok ? "PASS" : "FAIL", secs,
               note.c_str());
        fflush(stdout);
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
