#pragma once

#include <string>
#include <vector>

#include "knotforge/diagram.hpp"

namespace knotforge {

// Reduced fraction p/q with q >= 0; infinity is 1/0.
struct Fraction {
    long long p = 0;
    long long q = 1;

    bool is_infinite() const { return q == 0; }
    bool operator==(const Fraction& o) const { return p == o.p && q == o.q; }
};

Fraction make_fraction(long long p, long long q);

// Iterated fraction [[c_1,...,c_r]] = c_r + 1/[[c_1,...,c_{r-1}]].
Fraction cf_eval(const std::vector<long long>& c);

// Inverse of cf_eval; entries share the sign of p/q, except for a possible
// trailing 0 when |p| < q.  The contract is the round trip, not the sequence.
std::vector<long long> cf_expand(Fraction f);

struct TangleExpr {
    enum class Kind { Integer, Infinity, Product, Ramification, Closure };
    Kind kind = Kind::Integer;
    long long value = 0;
    std::vector<TangleExpr> children;

    static TangleExpr integer(long long n);
    static TangleExpr infinity();
    static TangleExpr product(std::vector<TangleExpr> cs);
    static TangleExpr ramification(std::vector<TangleExpr> cs);
    static TangleExpr closure(TangleExpr inner);

    bool operator==(const TangleExpr& o) const {
        return kind == o.kind && value == o.value && children == o.children;
    }
};

// Conway notation: juxtaposition is the tangle product, commas inside
// parentheses build ramifications, a bare digit run like `213` is the product
// 2 1 3 (integers >= 10 need an explicit sign or separation), `inf` is the
// infinity tangle, and a leading `N` closes the expression.
TangleExpr parse_conway(const std::string& s);
std::string print_conway(const TangleExpr& t);

// M(q_1/p_1,...,q_n/p_n; e) with p_i > 0, 0 < |q_i| < p_i, gcd(p_i,q_i) = 1.
struct MontesinosForm {
    std::vector<Fraction> fractions; // entry i is q_i / p_i
    long long e = 0;
};

// Move every numerator into 0 < q_i < p_i, adjusting e; the rational entry
// sum is preserved and the map is idempotent.
MontesinosForm montesinos_canonical(const MontesinosForm& m);

// Equality per the Montesinos classification: canonical forms agree up to
// cyclic permutation and reversal; with try_mirror also up to mirror image.
// Lengths < 3 are rejected (those are rational links).
bool montesinos_equal(const MontesinosForm& a, const MontesinosForm& b, bool try_mirror = false);

TangleExpr rational_tangle(Fraction f);
TangleExpr montesinos_to_conway(const MontesinosForm& m);

std::string montesinos_to_string(const MontesinosForm& m);
MontesinosForm parse_montesinos(const std::string& s);

// Render to a PD diagram; a non-Closure root gets the numerator closure.
// Orientations are assigned by component traversal.
Diagram tangle_to_diagram(const TangleExpr& t);

// Standard vertical-twist pretzel diagram.
Diagram pretzel_diagram(const std::vector<long long>& params);

} // namespace knotforge
