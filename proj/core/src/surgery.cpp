#include "knotforge/surgery.hpp"
#include <cstdlib>

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace knotforge {

namespace {

void check_triple(const SurgeryTriple& t) {
    long long p = t.p, q = t.q, r = t.r, k = t.k;
    if ((p - 1) * q + (p - 1) * r + q * r + 1 != 0 || (p + 1) * q + (p + 1) * r + q * r + 1 != 4 * k)
        throw InternalError("surgery triple fails the v2 equations");
    if (p % 2 != 0 || q + r != 2 * k) throw InternalError("surgery triple has wrong parity");
}

int max_arc(const Diagram& d) {
    int m = 0;
    for (const Crossing& c : d.crossings())
        for (int s = 0; s < 4; ++s) m = std::max(m, c.a[s]);
    return m;
}

void relabel_arc(std::vector<Crossing>& xs, int from, int to) {
    for (Crossing& c : xs)
        for (int s = 0; s < 4; ++s)
            if (c.a[s] == from) c.a[s] = to;
}

} // namespace

SurgeryTriple surgery_triples(int k, int n) {
    if (k == 0) throw BadInput("surgery_triples needs k != 0");
    SurgeryTriple t;
    t.k = k;
    t.q = 1 + 2LL * n * k;
    t.r = 2LL * k - 1 - 2LL * n * k;
    long long num = 2LL * k - 1 - t.q * t.r;
    if (num % (2 * k) != 0) throw InternalError("surgery triple p is not integral");
    t.p = num / (2 * k);
    check_triple(t);
    return t;
}

long long v2_pretzel(long long a, long long b, long long c) {
    if (a % 2 == 0 || b % 2 == 0 || c % 2 == 0)
        throw BadInput("v2_pretzel needs odd twist lengths");
    return (a * b + a * c + b * c + 1) / 4;
}

std::vector<SurgeryTriple> large_volume_triples(int q_max) {
    if (q_max < 5) throw BadInput("large_volume_triples needs q_max >= 5");
    std::vector<SurgeryTriple> out;
    for (long long q = 3; q <= q_max; q += 2) {
        SurgeryTriple t;
        t.k = 1;
        t.q = q;
        t.r = 2 - q;
        t.p = (q * q - 2 * q - 1) / 2;
        if (t.p * t.q + t.p * t.r + t.q * t.r != -1)
            throw InternalError("large-volume triple fails pq+pr+qr = -1");
        out.push_back(t);
    }
    return out;
}

Diagram clasping(const Diagram& d, int i, int sign) {
    if (i < 0 || i >= d.crossing_count()) throw BadInput("clasping: crossing index out of range");
    if (sign != 1 && sign != -1) throw BadInput("clasping: sign must be +-1");
    const Crossing& x = d.crossings()[i];
    int m1 = max_arc(d) + 1, m2 = m1 + 1;
    int e0 = x.a[0], e1 = x.a[1], e2 = x.a[2], e3 = x.a[3];
    // Seifert-smooth the crossing and hook the two parallel strands back
    // together with two crossings of the requested sign.
    Crossing c1, c2;
    c1.sign = c2.sign = sign;
    if (x.sign > 0 && sign > 0) {
        c1.a = {e0, m2, m1, e3};
        c2.a = {m2, e1, e2, m1};
    } else if (x.sign > 0) {
        c1.a = {e3, e0, m2, m1};
        c2.a = {m1, m2, e1, e2};
    } else if (sign > 0) {
        c1.a = {e1, m2, m1, e0};
        c2.a = {m2, e2, e3, m1};
    } else {
        c1.a = {e0, e1, m2, m1};
        c2.a = {m1, m2, e2, e3};
    }
    Diagram r;
    r.add_free_loops(d.free_loops());
    for (int j = 0; j < d.crossing_count(); ++j) r.add_crossing(j == i ? c1 : d.crossings()[j]);
    r.add_crossing(c2);
    r.validate();
    if (std::abs(r.component_count() - d.component_count()) != 1)
        throw InternalError("clasping did not change the component count by one");
    return r;
}

ClaspPairInsertion insert_clasp_pair(const Diagram& d, int at) {
    if (at < 0 || at >= d.crossing_count())
        throw BadInput("insert_clasp_pair: crossing index out of range");
    const Crossing& x = d.crossings()[at];
    // The two arcs leaving the crossing bound a common region; push the
    // over-exit across the under-exit (an R2 move).
    int Y = x.sign > 0 ? x.under_out() : x.over_out();
    int X = x.sign > 0 ? x.over_out() : x.under_out();
    if (Y == X) throw BadInput("insert_clasp_pair: crossing exits close up immediately");
    int yp = max_arc(d) + 1, xp = yp + 1, ypp = yp + 2, xpp = yp + 3;
    std::vector<Crossing> xs = d.crossings();
    // re-head Y and X: whichever crossing they used to enter now sees the
    // post-clasp arcs
    auto rehead = [&](int arc, int repl) {
        for (Crossing& c : xs)
            for (int s : {0, c.sign > 0 ? 3 : 1})
                if (c.a[s] == arc) {
                    c.a[s] = repl;
                    return;
                }
        throw InternalError("insert_clasp_pair: arc head not found");
    };
    rehead(Y, ypp);
    rehead(X, xpp);
    Crossing p, q;
    p.a = {Y, X, yp, xp};
    p.sign = -1;
    q.a = {yp, xpp, ypp, xp};
    q.sign = 1;
    ClaspPairInsertion out;
    out.neg_crossing = (int)xs.size();
    xs.push_back(p);
    out.pos_crossing = (int)xs.size();
    xs.push_back(q);
    out.diagram.add_free_loops(d.free_loops());
    for (const Crossing& c : xs) out.diagram.add_crossing(c);
    out.diagram.validate();
    return out;
}

Diagram insert_kink(const Diagram& d, int arc, int sign) {
    if (sign != 1 && sign != -1) throw BadInput("insert_kink: sign must be +-1");
    int yp = max_arc(d) + 1, m = yp + 1;
    std::vector<Crossing> xs = d.crossings();
    bool found = false;
    for (Crossing& c : xs) {
        for (int s : {0, c.sign > 0 ? 3 : 1})
            if (!found && c.a[s] == arc) {
                c.a[s] = yp;
                found = true;
            }
        if (found) break;
    }
    if (!found) throw BadInput("insert_kink: arc head not found");
    Crossing k;
    k.sign = sign;
    // a small curl on the arc; the loop occupies two adjacent slots
    if (sign > 0)
        k.a = {arc, yp, m, m};
    else
        k.a = {arc, m, m, yp};
    xs.push_back(k);
    Diagram r;
    r.add_free_loops(d.free_loops());
    for (const Crossing& c : xs) r.add_crossing(c);
    r.validate();
    return r;
}

namespace {

// One vertical twist band of |len| crossings.  Columns are tracked top to
// bottom; `down` flags give the strand direction in each column at the top
// (they swap after every crossing since the strands change columns).
// `h` picks which diagonal is the over-strand (h: top-left to bottom-right).
struct BandEnds {
    int bl, br; // arc ids at the bottom of the band
};
BandEnds emit_band(std::vector<Crossing>& xs, int& next_arc, long long len, bool h, int tl, int tr,
                   bool dl_down, bool dr_down) {
    long long m = std::llabs(len);
    if (len < 0) h = !h;
    for (long long i = 0; i < m; ++i) {
        int bl = next_arc++, br = next_arc++;
        // geometry: CCW cycle (tl, bl, br, tr); strands tl-br and tr-bl
        std::array<int, 4> cyc = {tl, bl, br, tr};
        int under_in, over_in;
        if (h) { // tl-br over
            under_in = dr_down ? tr : bl;
            over_in = dl_down ? tl : br;
        } else {
            under_in = dl_down ? tl : br;
            over_in = dr_down ? tr : bl;
        }
        int s0 = 0;
        while (cyc[s0] != under_in) ++s0;
        Crossing c;
        for (int s = 0; s < 4; ++s) c.a[s] = cyc[(s0 + s) % 4];
        c.sign = c.a[3] == over_in ? 1 : -1;
        xs.push_back(c);
        tl = bl;
        tr = br;
        std::swap(dl_down, dr_down);
    }
    return {tl, tr};
}

// The tangle T_{p-1,q,r}: the (p+-1,q,r)-pretzel diagram with the switched
// crossing (top of the first band) cut out, leaving p crossings in the first
// band.  The four severed stubs of the cut crossing become the boundary, in
// planar cyclic order (dl, dr, ur, ul) with strand pattern (out, in, in, out):
// strand alpha enters at dr, runs down band 1, up band 2, down band 3, back
// up band 1 and leaves at dl; strand beta enters at ur, runs down band 2, up
// band 3 and leaves at ul over the top.
struct TangleEnds {
    int dl, dr, ur, ul;
};
TangleEnds emit_tprq(std::vector<Crossing>& xs, int& next_arc, const SurgeryTriple& t,
                     bool mirrored) {
    // the frozen handedness convention: verified by the skein certificate
    bool h = !mirrored;
    TangleEnds e;
    e.dl = next_arc++;
    e.dr = next_arc++;
    e.ur = next_arc++;
    e.ul = next_arc++;
    int j2 = next_arc++;
    BandEnds b1 = emit_band(xs, next_arc, t.p, h, e.dl, e.dr, false, true);
    BandEnds b2 = emit_band(xs, next_arc, t.q, h, e.ur, j2, true, false);
    BandEnds b3 = emit_band(xs, next_arc, t.r, h, j2, e.ul, true, false);
    // bottom closures: band1 -> band2 -> band3 -> around to band1
    if (b1.br != b2.bl) relabel_arc(xs, b2.bl, b1.br);
    if (b2.br != b3.bl) relabel_arc(xs, b3.bl, b2.br);
    // keep band 1's labels: with p = 0 they are the boundary ends themselves
    if (b3.br != b1.bl) relabel_arc(xs, b3.br, b1.bl);
    return e;
}

} // namespace

Diagram apply_tangle_surgery(const Diagram& d, const std::vector<int>& site,
                             const SurgeryTriple& t, bool mirrored) {
    check_triple(t);
    if (t.k != 1) throw BadInput("apply_tangle_surgery: only k = 1 (parallel clasp) sites");
    if (site.size() != 2) throw BadInput("apply_tangle_surgery: a k = 1 site is two crossings");
    int i1 = site[0], i2 = site[1];
    if (i1 < 0 || i2 < 0 || i1 >= d.crossing_count() || i2 >= d.crossing_count() || i1 == i2)
        throw BadInput("apply_tangle_surgery: bad site indices");
    const Crossing& x1 = d.crossings()[i1];
    const Crossing& x2 = d.crossings()[i2];
    int want = mirrored ? -1 : 1;
    if (x1.sign != want || x2.sign != want)
        throw BadInput("apply_tangle_surgery: site is not a parallel clasp of the required sign");
    // the two arcs shared by the pair are the clasp's internal arcs
    std::vector<int> shared;
    for (int a : x1.a)
        for (int b : x2.a)
            if (a == b && std::find(shared.begin(), shared.end(), a) == shared.end())
                shared.push_back(a);
    if (shared.size() != 2) throw BadInput("apply_tangle_surgery: site crossings do not form a clasp");
    auto is_shared = [&](int a) { return a == shared[0] || a == shared[1]; };
    auto in_slot = [&](const Crossing& x, int s) { return s == 0 || s == (x.sign > 0 ? 3 : 1); };
    // walk the boundary of the clasp disk to read the four external stubs in
    // planar cyclic order, recording whether each strand points in or out
    struct Stub {
        int arc;
        bool in;
    };
    std::vector<Stub> cyc;
    {
        int cur = i1, slot = -1;
        for (int s = 0; s < 4 && slot < 0; ++s)
            if (!is_shared(x1.a[s])) slot = s;
        int cur0 = cur, slot0 = slot;
        do {
            const Crossing& x = d.crossings()[cur];
            int a = x.a[slot];
            if (is_shared(a)) {
                int other = cur == i1 ? i2 : i1;
                const Crossing& y = d.crossings()[other];
                int u = -1;
                for (int s = 0; s < 4; ++s)
                    if (y.a[s] == a) u = s;
                cur = other;
                slot = (u + 1) % 4;
            } else {
                cyc.push_back({a, in_slot(x, slot)});
                slot = (slot + 1) % 4;
            }
        } while (!(cur == cur0 && slot == slot0) && cyc.size() <= 4);
        if (cyc.size() != 4) throw BadInput("apply_tangle_surgery: clasp boundary is degenerate");
    }
    // align to the tangle boundary pattern (in, out, out, in)
    int rot = -1;
    for (int s = 0; s < 4; ++s)
        if (cyc[s].in && cyc[(s + 1) % 4].in == false && cyc[(s + 2) % 4].in == false &&
            cyc[(s + 3) % 4].in)
            rot = s;
    if (rot < 0) throw BadInput("apply_tangle_surgery: site is not a parallel clasp");
    auto at = [&](int j) { return cyc[(rot + j) % 4]; };
    std::vector<Crossing> xs;
    for (int c = 0; c < d.crossing_count(); ++c)
        if (c != i1 && c != i2) xs.push_back(d.crossings()[c]);
    int host_crossings = (int)xs.size();
    int next_arc = max_arc(d) + 1;
    std::vector<Crossing> tangle;
    TangleEnds e = emit_tprq(tangle, next_arc, t, mirrored);
    // glue along the boundary: tangle ends in cyclic order (dl, dr, ur, ul)
    // carry the pattern (out, in, in, out), matching the host's rotated
    // (in, out, out, in) at shift 2
    relabel_arc(tangle, e.ur, at(3).arc);
    relabel_arc(tangle, e.ul, at(2).arc);
    relabel_arc(tangle, e.dl, at(1).arc);
    relabel_arc(tangle, e.dr, at(0).arc);
    for (const Crossing& c : tangle) xs.push_back(c);
    (void)host_crossings;
    Diagram r;
    r.add_free_loops(d.free_loops());
    for (const Crossing& c : xs) r.add_crossing(c);
    r.validate();
    ConwayPoly before = conway_skein(d, std::max(kDefaultSkeinLimit, d.crossing_count()));
    ConwayPoly after = conway_skein(r, std::max(kDefaultSkeinLimit, r.crossing_count()));
    if (!(after == before)) {
        std::ostringstream os;
        os << "apply_tangle_surgery: the substitution changed the polynomial ("
           << before.to_string() << " -> " << after.to_string() << ")";
        throw InternalError(os.str());
    }
    return r;
}

Diagram concordance_pair_surgery(const Diagram& d, const SurgeryTriple& t) {
    check_triple(t);
    if (t.k != 1) throw BadInput("concordance_pair_surgery: only k = 1 tangles");
    if (d.crossing_count() == 0) throw BadInput("concordance_pair_surgery: need a crossing");
    const Crossing& x = d.crossings()[0];
    int u = x.under_out(), o = x.over_out();
    if (u == o) throw BadInput("concordance_pair_surgery: crossing exits close up immediately");
    // a cancelling pair of full twists on the exit strands of crossing 0: a
    // positive parallel clasp stacked on a negative one, jointly isotopic to
    // nothing
    int n = d.crossing_count();
    Diagram d1 = stallings_full_twist(d, u, o, 1).first;
    Diagram d2 = stallings_full_twist(d1, u, o, -1).first;
    ConwayPoly before = conway_skein(d, std::max(kDefaultSkeinLimit, d.crossing_count()));
    ConwayPoly mid = conway_skein(d2, std::max(kDefaultSkeinLimit, d2.crossing_count()));
    if (!(mid == before))
        throw InternalError("concordance_pair_surgery: the twist pair changed the polynomial");
    // the second twist reheads the same arcs, so it sits above the first:
    // the positive clasp is {n, n+1}, the negative one {n+2, n+3}
    Diagram r = apply_tangle_surgery(d2, {n, n + 1}, t, false);
    // removing the positive pair shifted the negative pair down by two
    r = apply_tangle_surgery(r, {n, n + 1}, t, true);
    return r;
}

std::pair<Diagram, ConwayPoly> stallings_full_twist(const Diagram& d, int arc_a, int arc_b,
                                                    int sense) {
    if (sense != 1 && sense != -1) throw BadInput("stallings_full_twist: sense must be +-1");
    if (arc_a == arc_b) throw BadInput("stallings_full_twist: needs two distinct arcs");
    std::vector<Crossing> xs = d.crossings();
    int a2 = max_arc(d) + 1, b2 = a2 + 1, next = a2 + 2;
    auto rehead = [&](int arc, int repl) {
        for (Crossing& c : xs)
            for (int s : {0, c.sign > 0 ? 3 : 1})
                if (c.a[s] == arc) {
                    c.a[s] = repl;
                    return;
                }
        throw BadInput("stallings_full_twist: arc head not found");
    };
    rehead(arc_a, a2);
    rehead(arc_b, b2);
    int first_new = (int)xs.size();
    std::vector<Crossing> tw;
    BandEnds be = emit_band(tw, next, 2, sense < 0, arc_a, arc_b, true, true);
    relabel_arc(tw, be.bl, a2);
    relabel_arc(tw, be.br, b2);
    for (const Crossing& c : tw) xs.push_back(c);
    Diagram r;
    r.add_free_loops(d.free_loops());
    for (const Crossing& c : xs) r.add_crossing(c);
    r.validate();
    if (r.crossing_sign(first_new) != sense)
        throw InternalError("stallings_full_twist: twist sign came out wrong");
    // switching the first new crossing cancels the pair by R2, so the skein
    // relation gives nabla(result) = nabla(d) + sense * z * nabla(smoothed)
    Diagram sm = r.smoothed(first_new);
    ConwayPoly residual = ConwayPoly::term(sense, 1) *
                          conway_skein(sm, std::max(kDefaultSkeinLimit, sm.crossing_count()));
    return {r, residual};
}

std::string FamilySpec::to_jsonl() const {
    std::ostringstream os;
    for (const FamilyMember& m : members) {
        nlohmann::json j;
        j["pd"] = m.diagram.to_pd();
        j["nabla"] = nabla.to_string();
        j["parameters"] = m.parameters;
        j["verified"] = m.verified;
        j["twist_lengths"] = m.twist_lengths;
        j["linking_numbers"] = m.linking_numbers;
        os << j.dump() << '\n';
    }
    return os.str();
}

namespace {

// parallel-clasp candidates: two crossings of equal sign sharing exactly two
// arcs; hinted sites from the realization go first
std::vector<std::vector<int>> clasp_candidates(const RealizedLink& base) {
    const Diagram& d = base.diagram;
    std::vector<std::vector<int>> out;
    auto push = [&](int i, int j) {
        if (i < 0 || j < 0 || i >= d.crossing_count() || j >= d.crossing_count() || i == j) return;
        std::vector<int> s = {i, j};
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    };
    if (base.unknotting_site) push(*base.unknotting_site, *base.unknotting_site + 1);
    for (auto it = base.clasp_sites.rbegin(); it != base.clasp_sites.rend(); ++it)
        for (size_t a = 0; a + 1 < it->size(); ++a) push((*it)[a], (*it)[a + 1]);
    for (int i = 0; i < d.crossing_count(); ++i)
        for (int j = i + 1; j < d.crossing_count(); ++j) {
            const Crossing &x = d.crossings()[i], &y = d.crossings()[j];
            if (x.sign != y.sign) continue;
            int shared = 0;
            for (int a : x.a)
                for (int b : y.a)
                    if (a == b) ++shared;
            if (shared == 2) push(i, j);
        }
    return out;
}

FamilyMember make_member(const Diagram& dg, const ConwayPoly& target, std::string params,
                         std::vector<int> twists) {
    FamilyMember m;
    m.diagram = dg;
    m.parameters = std::move(params);
    m.verified = conway_skein(dg, std::max(kDefaultSkeinLimit, dg.crossing_count())) == target;
    m.twist_lengths = std::move(twists);
    if (dg.component_count() >= 2) {
        LinkingGraph lg = dg.linking_graph();
        for (const auto& e : lg.edges) m.linking_numbers.push_back(e.lk);
        std::sort(m.linking_numbers.begin(), m.linking_numbers.end());
    }
    return m;
}

} // namespace

FamilySpec enumerate_family(const RealizedLink& base, int count) {
    if (count < 0) throw BadInput("enumerate_family: count must be >= 0");
    FamilySpec fam;
    fam.nabla = base.nabla;
    ConwayPoly target =
        conway_skein(base.diagram, std::max(kDefaultSkeinLimit, base.diagram.crossing_count()));
    fam.members.push_back(make_member(base.diagram, target, "base", {}));
    if (count == 0) return fam;
    // find one clasp the Eq.-(q,r) family applies to; the n = 1 triple is the
    // probe, the surviving site is then reused for every member
    std::vector<int> site;
    bool mirrored = false;
    for (const std::vector<int>& cand : clasp_candidates(base)) {
        bool m = base.diagram.crossings()[cand[0]].sign < 0;
        try {
            apply_tangle_surgery(base.diagram, cand, surgery_triples(1, 1), m);
            site = cand;
            mirrored = m;
            break;
        } catch (const std::exception&) {
        }
    }
    if (!site.empty()) {
        for (int n = 1; fam.members.size() < (size_t)count + 1; ++n) {
            SurgeryTriple t = surgery_triples(1, n);
            Diagram dg = apply_tangle_surgery(base.diagram, site, t, mirrored);
            std::ostringstream ps;
            ps << "tangle p=" << t.p << " q=" << t.q << " r=" << t.r << " site=[" << site[0]
               << "," << site[1] << "]" << (mirrored ? " mirrored" : "");
            fam.members.push_back(
                make_member(dg, target, ps.str(), {(int)t.p, (int)t.q, (int)t.r}));
        }
        return fam;
    }
    // fallback: a Stallings twist site, i.e. an arc pair whose full twist has
    // zero skein residual; members stack repeated twists there
    for (int a = 1; a <= max_arc(base.diagram); ++a)
        for (int b = a + 1; b <= max_arc(base.diagram); ++b)
            for (int sense : {1, -1}) {
                Diagram cur = base.diagram;
                try {
                    std::vector<FamilyMember> ms;
                    for (int k = 1; k <= count; ++k) {
                        auto [tw, res] = stallings_full_twist(cur, a, b, sense);
                        if (!res.is_zero()) throw BadInput("residual");
                        std::ostringstream ps;
                        ps << "stallings twists=" << k << " sense=" << sense << " arcs=[" << a
                           << "," << b << "]";
                        ms.push_back(make_member(tw, target, ps.str(), {2 * k}));
                        cur = tw;
                    }
                    for (FamilyMember& m : ms) fam.members.push_back(std::move(m));
                    return fam;
                } catch (const std::exception&) {
                }
            }
    // last resort: grow the diagram by a cancelling +/- full-twist pair on
    // crossing 0's exit strands (isotopic to the base) and surger the
    // positive clasp it contains
    if (base.diagram.crossing_count() > 0) {
        const Crossing& x = base.diagram.crossings()[0];
        if (x.under_out() != x.over_out()) {
            int nb = base.diagram.crossing_count();
            Diagram d2 =
                stallings_full_twist(
                    stallings_full_twist(base.diagram, x.under_out(), x.over_out(), 1).first,
                    x.under_out(), x.over_out(), -1)
                    .first;
            if (conway_skein(d2, std::max(kDefaultSkeinLimit, d2.crossing_count())) == target) {
                for (int n = 1; fam.members.size() < (size_t)count + 1; ++n) {
                    SurgeryTriple t = surgery_triples(1, n);
                    Diagram dg = apply_tangle_surgery(d2, {nb, nb + 1}, t, false);
                    std::ostringstream ps;
                    ps << "twist-pair tangle p=" << t.p << " q=" << t.q << " r=" << t.r;
                    fam.members.push_back(
                        make_member(dg, target, ps.str(), {(int)t.p, (int)t.q, (int)t.r}));
                }
                return fam;
            }
        }
    }
    throw BadInput("enumerate_family: the realization has no usable surgery site");
}

} // namespace knotforge
