#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "knotforge/poly.hpp"

namespace knotforge {

// One crossing of an oriented PD code.  a[0..3] are arc identifiers in
// counterclockwise planar order with a[0] the incoming under-strand and a[2]
// the outgoing under-strand.  sign = +1 means the over-strand enters at a[3]
// (and leaves at a[1]); sign = -1 means it enters at a[1].  This makes the
// stored sign equal to the usual oriented crossing sign.
struct Crossing {
    std::array<int, 4> a;
    int sign;

    int under_in() const { return a[0]; }
    int under_out() const { return a[2]; }
    int over_in() const { return sign > 0 ? a[3] : a[1]; }
    int over_out() const { return sign > 0 ? a[1] : a[3]; }
    bool operator==(const Crossing& o) const { return a == o.a && sign == o.sign; }
};

struct SeifertData {
    int s;     // Seifert circles
    int c;     // crossings
    int chi;   // s - c
    int genus; // (2 - n - chi)/2
    int n;     // link components
};

struct LinkingGraph {
    int vertices = 0;
    struct Edge {
        int i, j;
        long long lk;
    };
    std::vector<Edge> edges;

    bool connected() const;
    bool has_cut_vertex() const;
    std::optional<long long> label(int i, int j) const;
};

struct TwistCounts {
    int t_strong_reverse;
    int t_strong;
    bool hopf_exception = false;
};

class Diagram {
  public:
    Diagram() = default;

    const std::vector<Crossing>& crossings() const { return xs_; }
    int crossing_count() const { return (int)xs_.size(); }
    int free_loops() const { return free_loops_; }

    void add_crossing(const Crossing& c) { xs_.push_back(c); }
    void add_free_loops(int k) { free_loops_ += k; }

    // Structural validation + Seifert's algorithm.  Throws BadInput with the
    // offending crossing index on malformed arc incidences.
    SeifertData validate() const;

    // Oriented components as arc sequences in traversal order.  Free loops
    // are appended as empty sequences.
    std::vector<std::vector<int>> components() const;
    int component_count() const;

    int crossing_sign(int i) const;
    Diagram mirror() const;
    Diagram switched(int i) const;
    Diagram smoothed(int i) const;
    // Reverse the orientation of one component (index per components()).
    Diagram component_reversed(int comp) const;

    long long linking_number(int comp_i, int comp_j) const;
    LinkingGraph linking_graph() const;

    TwistCounts twist_classes() const;
    double volume_bound() const; // 10 V0 (t_strong - 1); needs >= 1 crossing

    // Renumber arcs canonically (component traversal order, arcs from 1).
    Diagram normalized() const;

    std::string to_pd() const;
    static Diagram parse_pd(const std::string& text);

    bool operator==(const Diagram& o) const {
        return xs_ == o.xs_ && free_loops_ == o.free_loops_;
    }

  private:
    std::vector<Crossing> xs_;
    int free_loops_ = 0;
};

// Volume of the regular ideal tetrahedron, vol(4_1)/2.
inline constexpr double V0 = 1.014941606409653625;

// Normalized Conway polynomial by skein recursion (descending-diagram method
// with R1/R2 reduction and memoization).  Throws ResourceLimit when the
// diagram exceeds `limit` crossings.
inline constexpr int kDefaultSkeinLimit = 64;
ConwayPoly conway_skein(const Diagram& d, int limit = kDefaultSkeinLimit);

// Alexander polynomial up to +-u^k via the Wirtinger/free-derivative minor;
// normalization to the symmetric representative is attempted.  Requires a
// connected diagram.
IntLaurent alexander_det(const Diagram& d);

bool equal_up_to_units(const IntLaurent& a, const IntLaurent& b);

std::string seifert_json(const SeifertData& s);
std::string linking_graph_json(const LinkingGraph& g);

// ---------------------------------------------------------------------------
// DiagramBuilder: assembles a diagram from crossings and wire splices, then
// orients it by traversal.  Crossings are created with their four ports in
// counterclockwise order; the strand through ports 0-2 and the strand through
// ports 1-3 get their directions from the final traversal.  Over/under is
// specified either directly (over13) or as a desired skein sign, resolved
// once orientations are known.
// ---------------------------------------------------------------------------
class DiagramBuilder {
  public:
    struct Port {
        int id;
    };

    // Returns the four ports of the new crossing, CCW.
    std::array<Port, 4> add_crossing_over13(bool over13);
    std::array<Port, 4> add_crossing_signed(int desired_sign);

    Port make_port(); // plain wire end (tangle boundary etc.)
    void splice(Port a, Port b);
    void add_free_loop() { ++free_loops_; }

    // Consumes the builder.  Throws InternalError on dangling wires.
    Diagram build();

  private:
    struct XRec {
        std::array<int, 4> ports;
        bool has_over13;
        bool over13;
        int desired_sign;
    };
    int find(int p);
    std::vector<int> dsu_;
    std::vector<XRec> xs_;
    // port id -> (crossing, slot) or (-1,-1)
    std::vector<std::pair<int, int>> terminal_;
    int free_loops_ = 0;
};

} // namespace knotforge
