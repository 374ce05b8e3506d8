#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "knotforge/diagram.hpp"

namespace knotforge {

namespace {

struct DSU {
    std::map<int, int> p;
    int find(int x) {
        auto it = p.find(x);
        if (it == p.end() || it->second == x) {
            p.emplace(x, x);
            return x;
        }
        return p[x] = find(it->second);
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) p[b] = a;
    }
};

// Rebuild a diagram with the crossings in `dead` removed and arcs merged per
// the DSU; arc classes left without any incidence become free loops.
Diagram rebuild(const Diagram& d, const std::set<int>& dead, DSU& dsu) {
    Diagram r;
    r.add_free_loops(d.free_loops());
    std::set<int> occur;
    for (int j = 0; j < (int)d.crossings().size(); ++j) {
        if (dead.count(j)) continue;
        Crossing nc = d.crossings()[j];
        for (int s = 0; s < 4; ++s) {
            nc.a[s] = dsu.find(nc.a[s]);
            occur.insert(nc.a[s]);
        }
        r.add_crossing(nc);
    }
    std::set<int> gone;
    for (int j : dead)
        for (int s = 0; s < 4; ++s) {
            int root = dsu.find(d.crossings()[j].a[s]);
            if (!occur.count(root)) gone.insert(root);
        }
    r.add_free_loops((int)gone.size());
    return r;
}

// Reidemeister I: remove one kink (a crossing with the same arc on two
// adjacent slots).  Returns true if a kink was removed.
bool try_r1(Diagram& d) {
    const auto& xs = d.crossings();
    for (int i = 0; i < (int)xs.size(); ++i) {
        const Crossing& c = xs[i];
        for (int s = 0; s < 4; ++s) {
            int t = (s + 1) % 4;
            if (c.a[s] != c.a[t]) continue;
            int p = c.a[(s + 2) % 4], q = c.a[(s + 3) % 4];
            Diagram r;
            r.add_free_loops(d.free_loops());
            if (p == q) {
                // isolated one-crossing circle
                r.add_free_loops(1);
                for (int j = 0; j < (int)xs.size(); ++j)
                    if (j != i) r.add_crossing(xs[j]);
            } else {
                DSU dsu;
                dsu.unite(p, q);
                dsu.unite(p, c.a[s]); // the kink's loop arc is absorbed, not freed
                std::set<int> dead{i};
                r = rebuild(d, dead, dsu);
            }
            d = r;
            return true;
        }
    }
    return false;
}

std::vector<int> shared_arcs(const Crossing& ci, const Crossing& cj) {
    std::vector<int> shared;
    for (int s = 0; s < 4; ++s) {
        int arc = ci.a[s];
        bool in_j = false, loop_i = false;
        for (int t = 0; t < 4; ++t) {
            in_j |= cj.a[t] == arc;
            loop_i |= t != s && ci.a[t] == arc;
        }
        if (in_j && !loop_i) shared.push_back(arc);
    }
    std::sort(shared.begin(), shared.end());
    shared.erase(std::unique(shared.begin(), shared.end()), shared.end());
    return shared;
}

// Reidemeister II: cancel a bigon pair with opposite signs.
bool try_r2(Diagram& d) {
    const auto& xs = d.crossings();
    for (int i = 0; i < (int)xs.size(); ++i) {
        for (int j = i + 1; j < (int)xs.size(); ++j) {
            if (xs[i].sign == xs[j].sign) continue;
            if (shared_arcs(xs[i], xs[j]).size() != 2) continue;
            DSU dsu;
            for (int k : {i, j}) {
                const Crossing& c = xs[k];
                dsu.unite(c.a[0], c.a[2]);
                dsu.unite(c.over_in(), c.over_out());
            }
            std::set<int> dead{i, j};
            d = rebuild(d, dead, dsu);
            return true;
        }
    }
    return false;
}

bool is_split(const Diagram& d) {
    const auto& xs = d.crossings();
    if (d.free_loops() > 0) return !xs.empty() || d.free_loops() > 1;
    if (xs.empty()) return false;
    // connectivity of the crossing graph under shared arcs
    std::map<int, std::vector<int>> arc_to_x;
    for (int i = 0; i < (int)xs.size(); ++i)
        for (int s = 0; s < 4; ++s) arc_to_x[xs[i].a[s]].push_back(i);
    std::vector<bool> vis(xs.size(), false);
    std::vector<int> stack{0};
    vis[0] = true;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int s = 0; s < 4; ++s)
            for (int w : arc_to_x[xs[v].a[s]])
                if (!vis[w]) {
                    vis[w] = true;
                    ++cnt;
                    stack.push_back(w);
                }
    }
    return cnt < (int)xs.size();
}

std::string memo_key(const Diagram& d) {
    Diagram n = d.normalized();
    std::vector<Crossing> v = n.crossings();
    std::sort(v.begin(), v.end(), [](const Crossing& a, const Crossing& b) {
        return std::tie(a.a, a.sign) < std::tie(b.a, b.sign);
    });
    std::ostringstream os;
    os << n.free_loops() << ';';
    for (const Crossing& c : v)
        os << c.a[0] << ',' << c.a[1] << ',' << c.a[2] << ',' << c.a[3] << ',' << c.sign << ';';
    return os.str();
}

class SkeinEvaluator {
  public:
    explicit SkeinEvaluator(int limit) : limit_(limit) {}

    ConwayPoly eval(Diagram d) {
        while (try_r1(d) || try_r2(d)) {
        }
        if (d.crossings().empty())
            return d.free_loops() == 1 ? ConwayPoly::term(1, 0) : ConwayPoly();
        if (is_split(d)) return ConwayPoly();
        std::string key = memo_key(d);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        int bad = find_bad_crossing(d);
        ConwayPoly r;
        if (bad < 0) {
            // descending diagram: unknot or unlink
            r = d.component_count() == 1 ? ConwayPoly::term(1, 0) : ConwayPoly();
        } else {
            int s = d.crossing_sign(bad);
            r = eval(d.switched(bad)) + ConwayPoly::term(s, 1) * eval(d.smoothed(bad));
        }
        memo_.emplace(std::move(key), r);
        return r;
    }

  private:
    // First crossing (in the fixed traversal order) whose first passage is on
    // the under-strand; -1 if the diagram is descending.
    static int find_bad_crossing(const Diagram& d) {
        std::map<int, std::pair<int, int>> entry; // arc -> (crossing, in-slot)
        const auto& xs = d.crossings();
        for (int i = 0; i < (int)xs.size(); ++i) {
            entry[xs[i].a[0]] = {i, 0};
            entry[xs[i].over_in()] = {i, 1};
        }
        std::set<int> seen;
        for (const auto& comp : d.components()) {
            for (int arc : comp) {
                auto [x, under] = entry.at(arc);
                if (seen.count(x)) continue;
                if (under == 0) return x; // first passage goes under
                seen.insert(x);
            }
        }
        return -1;
    }

    int limit_;
    std::unordered_map<std::string, ConwayPoly> memo_;
};

} // namespace

ConwayPoly conway_skein(const Diagram& d, int limit) {
    if (d.crossing_count() > limit) {
        std::ostringstream os;
        os << "diagram has " << d.crossing_count() << " crossings, exceeding the evaluator limit "
           << limit;
        throw ResourceLimit(os.str());
    }
    d.validate();
    SkeinEvaluator ev(limit);
    return ev.eval(d);
}

// ---------------------------------------------------------------------------
// Determinant route: Wirtinger free-derivative minor, Bareiss elimination.
// ---------------------------------------------------------------------------

namespace {

// Shift to the symmetric representative when possible and fix the sign via
// Delta(1) = 1 for knots / positive leading coefficient otherwise.
IntLaurent normalize_units(IntLaurent p) {
    if (p.is_zero()) return p;
    Degrees d = p.degrees();
    int s = d.mindeg + d.maxdeg;
    // center (floor when the unit is an odd power of u)
    p = p.shifted(-(s - ((s % 2 + 2) % 2)) / 2);
    Coef at1 = p.eval_at_one();
    if (at1 == -1)
        p = -p;
    else if (at1 != 1 && p.degrees().leading < 0)
        p = -p;
    return p;
}

} // namespace

bool equal_up_to_units(const IntLaurent& a, const IntLaurent& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    IntLaurent bs = b.shifted(a.degrees().maxdeg - b.degrees().maxdeg);
    return a == bs || a == -bs;
}

IntLaurent alexander_det(const Diagram& d) {
    SeifertData sd = d.validate();
    if (d.free_loops() > 0 && (sd.c > 0 || d.free_loops() > 1))
        throw BadInput("alexander_det requires a connected diagram");
    const auto& xs = d.crossings();
    int c = (int)xs.size();
    if (c == 0) return IntLaurent::term(1, 0);
    {
        // connectivity of the crossing graph
        std::map<int, std::vector<int>> arc_to_x;
        for (int i = 0; i < c; ++i)
            for (int s = 0; s < 4; ++s) arc_to_x[xs[i].a[s]].push_back(i);
        std::vector<bool> vis(c, false);
        std::vector<int> stack{0};
        vis[0] = true;
        int cnt = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int s = 0; s < 4; ++s)
                for (int w : arc_to_x[xs[v].a[s]])
                    if (!vis[w]) {
                        vis[w] = true;
                        ++cnt;
                        stack.push_back(w);
                    }
        }
        if (cnt < c) throw BadInput("alexander_det requires a connected diagram");
    }
    // Wirtinger generators: arcs merged across over-passages.
    DSU gen;
    for (const Crossing& x : xs) gen.unite(x.over_in(), x.over_out());
    std::map<int, int> col;
    for (const Crossing& x : xs)
        for (int s = 0; s < 4; ++s) {
            int r = gen.find(x.a[s]);
            if (!col.count(r)) {
                int id = (int)col.size();
                col[r] = id;
            }
        }
    int g = (int)col.size();
    IntLaurent t = IntLaurent::t_power(1, 1);
    IntLaurent one = IntLaurent::term(1, 0);
    std::vector<std::vector<IntLaurent>> m(c, std::vector<IntLaurent>(g));
    for (int i = 0; i < c; ++i) {
        const Crossing& x = xs[i];
        int cin = col[gen.find(x.a[0])];
        int cout = col[gen.find(x.a[2])];
        int cover = col[gen.find(x.over_in())];
        if (x.sign > 0) {
            m[i][cin] = m[i][cin] + t;
            m[i][cout] = m[i][cout] - one;
            m[i][cover] = m[i][cover] + (one - t);
        } else {
            m[i][cin] = m[i][cin] + one;
            m[i][cout] = m[i][cout] - t;
            m[i][cover] = m[i][cover] + (t - one);
        }
    }
    // delete last row and column
    std::vector<std::vector<IntLaurent>> minor;
    for (int i = 0; i + 1 < c; ++i) {
        std::vector<IntLaurent> row;
        for (int j = 0; j < g; ++j)
            if (j != g - 1) row.push_back(m[i][j]);
        minor.push_back(std::move(row));
    }
    if ((int)minor.size() != g - 1) throw InternalError("Wirtinger matrix is not square");
    return normalize_units(laurent_det(std::move(minor)));
}

} // namespace knotforge
