#include "knotforge/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace knotforge {

namespace {

struct ArcInc {
    int in_x = -1, in_s = -1;
    int out_x = -1, out_s = -1;
    int count = 0;
};

int over_in_slot(const Crossing& c) { return c.sign > 0 ? 3 : 1; }
int over_out_slot(const Crossing& c) { return c.sign > 0 ? 1 : 3; }

std::map<int, ArcInc> incidence(const std::vector<Crossing>& xs) {
    std::map<int, ArcInc> m;
    for (int i = 0; i < (int)xs.size(); ++i) {
        const Crossing& c = xs[i];
        if (c.sign != 1 && c.sign != -1) {
            std::ostringstream os;
            os << "crossing " << i << ": invalid sign";
            throw BadInput(os.str());
        }
        int ins[2] = {0, over_in_slot(c)};
        int outs[2] = {2, over_out_slot(c)};
        for (int s : ins) {
            ArcInc& a = m[c.a[s]];
            ++a.count;
            if (a.in_x != -1) {
                std::ostringstream os;
                os << "crossing " << i << ": arc " << c.a[s] << " consumed twice";
                throw BadInput(os.str());
            }
            a.in_x = i;
            a.in_s = s;
        }
        for (int s : outs) {
            ArcInc& a = m[c.a[s]];
            ++a.count;
            if (a.out_x != -1) {
                std::ostringstream os;
                os << "crossing " << i << ": arc " << c.a[s] << " produced twice";
                throw BadInput(os.str());
            }
            a.out_x = i;
            a.out_s = s;
        }
    }
    for (const auto& [arc, inc] : m) {
        if (inc.count != 2 || inc.in_x == -1 || inc.out_x == -1) {
            std::ostringstream os;
            os << "arc " << arc << " has malformed incidence (crossing "
               << (inc.in_x != -1 ? inc.in_x : inc.out_x) << ")";
            throw BadInput(os.str());
        }
    }
    return m;
}

// Arc id -> successor arc along the oriented strand.
int next_arc(const std::vector<Crossing>& xs, const std::map<int, ArcInc>& inc, int arc) {
    const ArcInc& a = inc.at(arc);
    const Crossing& c = xs[a.in_x];
    return a.in_s == 0 ? c.a[2] : c.a[over_out_slot(c)];
}

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
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[b] = a;
        return true;
    }
};

} // namespace

SeifertData Diagram::validate() const {
    auto inc = incidence(xs_);
    int n = component_count();
    DSU seifert;
    for (const Crossing& c : xs_) {
        seifert.unite(c.a[0], c.over_out());
        seifert.unite(c.over_in(), c.a[2]);
    }
    std::set<int> roots;
    for (const auto& [arc, _] : inc) roots.insert(seifert.find(arc));
    int s = (int)roots.size() + free_loops_;
    int c = (int)xs_.size();
    int chi = s - c;
    if (n < 1) throw BadInput("diagram has no components");
    if (c > 0) {
        // Planarity: faces of the rotation system must satisfy Euler's
        // formula V - E + F = 2 per connected piece of the crossing graph.
        std::map<int, std::vector<std::pair<int, int>>> ends;
        DSU graph;
        for (int i = 0; i < c; ++i)
            for (int t = 0; t < 4; ++t) {
                ends[xs_[i].a[t]].push_back({i, t});
                graph.unite(4 * i, 4 * xs_[i].a[t] + 1000000);
            }
        std::map<std::pair<int, int>, std::pair<int, int>> other;
        for (auto& [arc, v] : ends) {
            other[v[0]] = v[1];
            other[v[1]] = v[0];
        }
        std::set<std::pair<int, int>> seen_dart;
        int faces = 0;
        for (auto& [d0, unused] : other) {
            if (seen_dart.count(d0)) continue;
            ++faces;
            auto d = d0;
            do {
                seen_dart.insert(d);
                auto [y, t] = other.at(d);
                d = {y, (t + 1) % 4};
            } while (d != d0);
        }
        std::set<int> comps;
        for (int i = 0; i < c; ++i) comps.insert(graph.find(4 * i));
        if (faces - c != 2 * (int)comps.size()) {
            std::ostringstream os;
            os << "diagram is not planar (V-E+F = " << (faces - c) << " over "
               << comps.size() << " pieces)";
            throw BadInput(os.str());
        }
    }
    // Genus of the canonical surface, summed over its connected pieces.
    DSU piece;
    for (const Crossing& x : xs_) piece.unite(seifert.find(x.a[0]), seifert.find(x.over_in()));
    std::set<int> piece_roots;
    for (int r : roots) piece_roots.insert(piece.find(r));
    int p = (int)piece_roots.size() + free_loops_;
    if ((2 * p - n - chi) % 2 != 0 || 2 * p - n - chi < 0) {
        std::ostringstream os;
        os << "diagram is not planar-consistent (n=" << n << ", chi=" << chi << ")";
        throw BadInput(os.str());
    }
    return SeifertData{s, c, chi, (2 * p - n - chi) / 2, n};
}

std::vector<std::vector<int>> Diagram::components() const {
    auto inc = incidence(xs_);
    std::vector<std::vector<int>> comps;
    std::set<int> seen;
    for (const auto& [start, _] : inc) {
        if (seen.count(start)) continue;
        std::vector<int> cyc;
        int a = start;
        do {
            cyc.push_back(a);
            seen.insert(a);
            a = next_arc(xs_, inc, a);
        } while (a != start);
        comps.push_back(std::move(cyc));
    }
    for (int i = 0; i < free_loops_; ++i) comps.emplace_back();
    return comps;
}

int Diagram::component_count() const { return (int)components().size(); }

int Diagram::crossing_sign(int i) const {
    if (i < 0 || i >= (int)xs_.size()) throw BadInput("crossing index out of range");
    return xs_[i].sign;
}

namespace {
Crossing switch_one(const Crossing& c) {
    if (c.sign > 0) return Crossing{{c.a[3], c.a[0], c.a[1], c.a[2]}, -1};
    return Crossing{{c.a[1], c.a[2], c.a[3], c.a[0]}, +1};
}
} // namespace

Diagram Diagram::mirror() const {
    Diagram d;
    d.free_loops_ = free_loops_;
    for (const Crossing& c : xs_) d.xs_.push_back(switch_one(c));
    return d;
}

Diagram Diagram::switched(int i) const {
    if (i < 0 || i >= (int)xs_.size()) throw BadInput("crossing index out of range");
    Diagram d = *this;
    d.xs_[i] = switch_one(d.xs_[i]);
    return d;
}

Diagram Diagram::smoothed(int i) const {
    if (i < 0 || i >= (int)xs_.size()) throw BadInput("crossing index out of range");
    const Crossing& c = xs_[i];
    DSU dsu;
    dsu.unite(c.a[0], c.over_out());
    dsu.unite(c.over_in(), c.a[2]);
    Diagram d;
    d.free_loops_ = free_loops_;
    std::map<int, int> occur;
    for (int j = 0; j < (int)xs_.size(); ++j) {
        if (j == i) continue;
        Crossing nc = xs_[j];
        for (int s = 0; s < 4; ++s) {
            nc.a[s] = dsu.find(nc.a[s]);
            ++occur[nc.a[s]];
        }
        d.xs_.push_back(nc);
    }
    std::set<int> gone;
    for (int s = 0; s < 4; ++s) {
        int r = dsu.find(c.a[s]);
        if (occur.find(r) == occur.end()) gone.insert(r);
    }
    d.free_loops_ += (int)gone.size();
    return d;
}

Diagram Diagram::component_reversed(int comp) const {
    auto comps = components();
    if (comp < 0 || comp >= (int)comps.size()) throw BadInput("component index out of range");
    std::set<int> rev(comps[comp].begin(), comps[comp].end());
    Diagram d;
    d.free_loops_ = free_loops_;
    for (const Crossing& c : xs_) {
        bool under_rev = rev.count(c.a[0]) > 0;
        bool over_rev = rev.count(c.over_in()) > 0;
        int r = under_rev ? 2 : 0;
        Crossing nc;
        for (int s = 0; s < 4; ++s) nc.a[s] = c.a[(r + s) % 4];
        int ov_in_slot = c.sign > 0 ? 3 : 1;
        int ov_out_slot = c.sign > 0 ? 1 : 3;
        int slot = over_rev ? ov_out_slot : ov_in_slot;
        nc.sign = ((slot - r + 4) % 4) == 3 ? 1 : -1;
        d.xs_.push_back(nc);
    }
    return d;
}

long long Diagram::linking_number(int comp_i, int comp_j) const {
    if (comp_i == comp_j) throw BadInput("linking number needs two distinct components");
    auto comps = components();
    int n = (int)comps.size();
    if (comp_i < 0 || comp_i >= n || comp_j < 0 || comp_j >= n)
        throw BadInput("component index out of range");
    std::map<int, int> comp_of;
    for (int k = 0; k < n; ++k)
        for (int a : comps[k]) comp_of[a] = k;
    long long sum = 0;
    for (const Crossing& c : xs_) {
        int cu = comp_of[c.a[0]];
        int co = comp_of[c.over_in()];
        if ((cu == comp_i && co == comp_j) || (cu == comp_j && co == comp_i)) sum += c.sign;
    }
    return sum / 2;
}

LinkingGraph Diagram::linking_graph() const {
    int n = component_count();
    if (n < 2) throw BadInput("linking graph requires at least 2 components");
    LinkingGraph g;
    g.vertices = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            long long lk = linking_number(i, j);
            if (lk != 0) g.edges.push_back({i, j, lk});
        }
    return g;
}

bool LinkingGraph::connected() const {
    if (vertices <= 1) return true;
    std::vector<std::vector<int>> adj(vertices);
    for (const Edge& e : edges) {
        adj[e.i].push_back(e.j);
        adj[e.j].push_back(e.i);
    }
    std::vector<bool> vis(vertices, false);
    std::vector<int> stack{0};
    vis[0] = true;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!vis[w]) {
                vis[w] = true;
                ++cnt;
                stack.push_back(w);
            }
    }
    return cnt == vertices;
}

bool LinkingGraph::has_cut_vertex() const {
    // n is tiny; brute force removal.
    for (int v = 0; v < vertices; ++v) {
        std::vector<std::vector<int>> adj(vertices);
        for (const Edge& e : edges) {
            if (e.i == v || e.j == v) continue;
            adj[e.i].push_back(e.j);
            adj[e.j].push_back(e.i);
        }
        int start = v == 0 ? 1 : 0;
        if (vertices <= 2) return false;
        std::vector<bool> vis(vertices, false);
        vis[v] = true;
        std::vector<int> stack{start};
        vis[start] = true;
        int cnt = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int w : adj[x])
                if (!vis[w]) {
                    vis[w] = true;
                    ++cnt;
                    stack.push_back(w);
                }
        }
        if (cnt < vertices - 1) return true;
    }
    return false;
}

std::optional<long long> LinkingGraph::label(int i, int j) const {
    for (const Edge& e : edges)
        if ((e.i == i && e.j == j) || (e.i == j && e.j == i)) return e.lk;
    return std::nullopt;
}

TwistCounts Diagram::twist_classes() const {
    int c = (int)xs_.size();
    if (c == 0) return TwistCounts{0, 0};
    // Def. df22 exception: the 2-crossing Hopf link diagram.
    if (c == 2 && component_count() == 2) {
        std::multiset<int> s0(xs_[0].a.begin(), xs_[0].a.end());
        std::multiset<int> s1(xs_[1].a.begin(), xs_[1].a.end());
        if (s0 == s1) return TwistCounts{1, 1, true};
    }
    auto inc = incidence(xs_);
    DSU rev, tw;
    for (int i = 0; i < c; ++i) rev.find(i), tw.find(i);
    for (int i = 0; i < c; ++i) {
        for (int j = i + 1; j < c; ++j) {
            std::vector<int> shared;
            for (int s = 0; s < 4; ++s) {
                int arc = xs_[i].a[s];
                bool in_j = false;
                for (int t = 0; t < 4; ++t) in_j |= xs_[j].a[t] == arc;
                bool loop_i = false;
                for (int t = 0; t < 4; ++t) loop_i |= t != s && xs_[i].a[t] == arc;
                if (in_j && !loop_i) shared.push_back(arc);
            }
            std::sort(shared.begin(), shared.end());
            shared.erase(std::unique(shared.begin(), shared.end()), shared.end());
            if (shared.size() < 2) continue;
            if (shared.size() > 2) {
                rev.unite(i, j);
                tw.unite(i, j);
                continue;
            }
            // Bigon: classify by strand orientation.  Both shared arcs
            // flowing the same way means parallel strands.
            bool d0 = inc.at(shared[0]).out_x == i;
            bool d1 = inc.at(shared[1]).out_x == i;
            bool parallel = d0 == d1;
            tw.unite(i, j);
            if (!parallel) rev.unite(i, j);
        }
    }
    std::set<int> rr, tr;
    for (int i = 0; i < c; ++i) {
        rr.insert(rev.find(i));
        tr.insert(tw.find(i));
    }
    return TwistCounts{(int)rr.size(), (int)tr.size()};
}

double Diagram::volume_bound() const {
    if (xs_.empty()) throw BadInput("volume bound needs a non-trivial diagram");
    return 10.0 * V0 * (twist_classes().t_strong - 1);
}

Diagram Diagram::normalized() const {
    auto comps = components();
    std::map<int, int> relabel;
    int next = 1;
    for (auto& comp : comps) {
        if (comp.empty()) continue;
        // rotate to start at the smallest arc id for determinism
        auto it = std::min_element(comp.begin(), comp.end());
        std::rotate(comp.begin(), it, comp.end());
        for (int a : comp) relabel[a] = next++;
    }
    Diagram d;
    d.free_loops_ = free_loops_;
    for (Crossing c : xs_) {
        for (int s = 0; s < 4; ++s) c.a[s] = relabel.at(c.a[s]);
        d.xs_.push_back(c);
    }
    return d;
}

std::string Diagram::to_pd() const {
    std::ostringstream os;
    for (const Crossing& c : xs_) {
        os << "X[" << c.a[0] << ',' << c.a[1] << ',' << c.a[2] << ',' << c.a[3] << "] "
           << (c.sign > 0 ? "+1" : "-1") << '\n';
    }
    for (int i = 0; i < free_loops_; ++i) os << "O\n";
    return os.str();
}

Diagram Diagram::parse_pd(const std::string& text) {
    Diagram d;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        std::ostringstream err;
        err << "PD syntax error on line " << lineno;
        if (line[b] == 'O') {
            d.free_loops_ += 1;
            continue;
        }
        if (line[b] != 'X') throw BadInput(err.str());
        std::istringstream ls(line.substr(b + 1));
        char ch;
        Crossing c{};
        if (!(ls >> ch) || ch != '[') throw BadInput(err.str());
        for (int s = 0; s < 4; ++s) {
            if (!(ls >> c.a[s])) throw BadInput(err.str());
            if (!(ls >> ch) || ch != (s == 3 ? ']' : ',')) throw BadInput(err.str());
        }
        std::string sgn;
        if (!(ls >> sgn)) throw BadInput(err.str());
        if (sgn == "+" || sgn == "+1")
            c.sign = 1;
        else if (sgn == "-" || sgn == "-1")
            c.sign = -1;
        else
            throw BadInput(err.str());
        d.xs_.push_back(c);
    }
    return d;
}

std::string seifert_json(const SeifertData& s) {
    nlohmann::json j{{"seifert_circles", s.s},
                     {"crossings", s.c},
                     {"chi", s.chi},
                     {"genus", s.genus},
                     {"components", s.n}};
    return j.dump();
}

std::string linking_graph_json(const LinkingGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges) edges.push_back({{"i", e.i}, {"j", e.j}, {"lk", e.lk}});
    nlohmann::json j{{"vertices", g.vertices}, {"edges", edges}};
    return j.dump();
}

// ---------------------------------------------------------------------------
// DiagramBuilder
// ---------------------------------------------------------------------------

int DiagramBuilder::find(int p) {
    while (dsu_[p] != p) p = dsu_[p] = dsu_[dsu_[p]];
    return p;
}

DiagramBuilder::Port DiagramBuilder::make_port() {
    int id = (int)dsu_.size();
    dsu_.push_back(id);
    terminal_.emplace_back(-1, -1);
    return Port{id};
}

std::array<DiagramBuilder::Port, 4> DiagramBuilder::add_crossing_over13(bool over13) {
    std::array<Port, 4> ps{make_port(), make_port(), make_port(), make_port()};
    int xi = (int)xs_.size();
    xs_.push_back(XRec{{ps[0].id, ps[1].id, ps[2].id, ps[3].id}, true, over13, 0});
    for (int s = 0; s < 4; ++s) terminal_[ps[s].id] = {xi, s};
    return ps;
}

std::array<DiagramBuilder::Port, 4> DiagramBuilder::add_crossing_signed(int desired_sign) {
    std::array<Port, 4> ps{make_port(), make_port(), make_port(), make_port()};
    int xi = (int)xs_.size();
    xs_.push_back(XRec{{ps[0].id, ps[1].id, ps[2].id, ps[3].id}, false, false, desired_sign});
    for (int s = 0; s < 4; ++s) terminal_[ps[s].id] = {xi, s};
    return ps;
}

void DiagramBuilder::splice(Port a, Port b) {
    int ra = find(a.id), rb = find(b.id);
    if (ra == rb) {
        // closing a wire into a loop
        ++free_loops_;
        return;
    }
    dsu_[rb] = ra;
}

Diagram DiagramBuilder::build() {
    // Collect nets and their crossing terminals.
    std::map<int, std::vector<std::pair<int, int>>> nets; // root -> terminals
    for (int p = 0; p < (int)dsu_.size(); ++p)
        if (terminal_[p].first != -1) nets[find(p)].push_back(terminal_[p]);
    std::map<int, int> arc_of_root;
    // arc id -> its two (crossing, slot) endpoints
    std::vector<std::array<std::pair<int, int>, 2>> arc_ends;
    for (auto& [root, ts] : nets) {
        if (ts.size() != 2) throw InternalError("dangling wire in diagram builder");
        arc_of_root[root] = (int)arc_ends.size();
        arc_ends.push_back({ts[0], ts[1]});
    }
    int nx = (int)xs_.size();
    // crossing slot -> internal arc id
    std::vector<std::array<int, 4>> slot_arc(nx);
    for (int i = 0; i < nx; ++i)
        for (int s = 0; s < 4; ++s) slot_arc[i][s] = arc_of_root.at(find(xs_[i].ports[s]));

    // Orientation pass: walk strands, record in-slots and arc order.
    int na = (int)arc_ends.size();
    std::vector<int> arc_number(na, 0);
    std::vector<std::array<int, 2>> in_slot(nx, {-1, -1}); // per diagonal (slot%2)
    int next_no = 1;
    for (int a0 = 0; a0 < na; ++a0) {
        if (arc_number[a0]) continue;
        int arc = a0;
        auto [cx, cs] = arc_ends[a0][1]; // direct the arc into its second endpoint
        while (true) {
            arc_number[arc] = next_no++;
            in_slot[cx][cs % 2] = cs;
            int out = (cs + 2) % 4;
            int narc = slot_arc[cx][out];
            if (narc == a0) break;
            // find the endpoint of narc that is not (cx, out)
            auto e0 = arc_ends[narc][0];
            auto e1 = arc_ends[narc][1];
            std::pair<int, int> nxt = (e0 == std::make_pair(cx, out)) ? e1 : e0;
            arc = narc;
            cx = nxt.first;
            cs = nxt.second;
        }
    }

    Diagram d;
    for (int i = 0; i < nx; ++i) {
        int in0 = in_slot[i][0], in1 = in_slot[i][1];
        if (in0 < 0 || in1 < 0) throw InternalError("crossing not fully traversed");
        auto make = [&](bool over13) {
            int u = over13 ? in0 : in1; // under-strand entry slot
            int v = over13 ? in1 : in0; // over-strand entry slot
            Crossing c;
            for (int s = 0; s < 4; ++s) c.a[s] = arc_number[slot_arc[i][(u + s) % 4]];
            c.sign = ((v - u) % 4 + 4) % 4 == 3 ? 1 : -1;
            return c;
        };
        const XRec& x = xs_[i];
        if (x.has_over13) {
            d.add_crossing(make(x.over13));
        } else {
            Crossing c = make(true);
            if (c.sign != x.desired_sign) c = make(false);
            d.add_crossing(c);
        }
    }
    d.add_free_loops(free_loops_);
    return d;
}

} // namespace knotforge
