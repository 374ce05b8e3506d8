#pragma once

#include <string>
#include <utility>
#include <vector>

#include "knotforge/construct.hpp"
#include "knotforge/diagram.hpp"
#include "knotforge/poly.hpp"

namespace knotforge {

// A solution (p,q,r) of (p-1)q+(p-1)r+qr+1 = 0 and (p+1)q+(p+1)r+qr+1 = 4k,
// the condition for the pretzel tangle T_{p-1,q,r} to substitute for the
// (1,2k-1)-pretzel tangle S_k without changing the Alexander polynomial.
struct SurgeryTriple {
    long long p, q, r;
    int k = 1;

    bool operator==(const SurgeryTriple& o) const {
        return p == o.p && q == o.q && r == o.r && k == o.k;
    }
};

// The q = 1+2nk, r = 2k-1-2nk family; p comes out even and integral.
SurgeryTriple surgery_triples(int k, int n);

// v_2 = Delta''(1)/2 of the (a,b,c)-pretzel knot, a,b,c odd.
long long v2_pretzel(long long a, long long b, long long c);

// Triples with p,q,-r > 1 odd, q+r = 2 and pq+pr+qr = -1, ordered by q.
std::vector<SurgeryTriple> large_volume_triples(int q_max);

// Replace crossing i by a parallel clasp of the given sign.  The first clasp
// crossing takes index i, the second is appended at the end; all other
// indices are unchanged.  Component count changes by exactly one.
Diagram clasping(const Diagram& d, int i, int sign);

// Push one outgoing arc of crossing `at` over the other by a Reidemeister II
// move, creating a trivial +/- parallel clasp pair next to the crossing.
// The isotopy class and hence every invariant is unchanged.
struct ClaspPairInsertion {
    Diagram diagram;
    int pos_crossing; // the +1 crossing of the new pair
    int neg_crossing; // the -1 crossing
};
ClaspPairInsertion insert_clasp_pair(const Diagram& d, int at);

// Put a small curl of the given sign on `arc` (a Reidemeister I move); the
// kink crossing is appended at the end.  Clasping that crossing with the same
// sign s then attaches an unknotted component and multiplies nabla by s*z.
Diagram insert_kink(const Diagram& d, int arc, int sign);

// Replace a (1,2k-1)-pretzel tangle occurrence (for k = 1, a parallel clasp
// given by its two crossing indices; general k, the single crossing followed
// by the 2k-1 twist crossings) by the tangle T_{p-1,q,r}.  `mirrored`
// substitutes the mirror tangle at a mirrored site.  The Conway polynomial
// is re-evaluated and must match the input exactly.
Diagram apply_tangle_surgery(const Diagram& d, const std::vector<int>& site,
                             const SurgeryTriple& t, bool mirrored = false);

// Insert a +/- parallel clasp pair by R2 next to crossing 0 and surger the
// two clasps with mutually mirrored tangles; the result is concordant, so
// chi_s is unchanged and the diagram genus grows by at most two.
Diagram concordance_pair_surgery(const Diagram& d, const SurgeryTriple& t);

// Insert a full twist (two crossings of the given sense) across the parallel
// strands `arc_a`, `arc_b`.  Returns the new diagram and the skein residual
// z * nabla(smoothed intermediate); nabla(result) = nabla(d) + residual, so a
// zero residual certifies polynomial preservation.
std::pair<Diagram, ConwayPoly> stallings_full_twist(const Diagram& d, int arc_a, int arc_b,
                                                    int sense);

struct FamilyMember {
    Diagram diagram;
    std::string parameters;
    bool verified = false;
    // structural distinctness metadata only; no equivalence proof
    std::vector<int> twist_lengths;
    std::vector<long long> linking_numbers;
};

struct FamilySpec {
    ConwayPoly nabla;
    std::vector<FamilyMember> members;

    std::string to_jsonl() const;
};

// `count` polynomial-preserving rewrites of the base realization: tangle
// surgeries over the Eq.-(q,r) family at a marked clasp, or Stallings twists
// when the base carries a twist site.  Every member is skein-verified.
FamilySpec enumerate_family(const RealizedLink& base, int count);

} // namespace knotforge
