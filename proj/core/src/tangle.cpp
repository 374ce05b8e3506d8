#include "knotforge/tangle.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace knotforge {

Fraction make_fraction(long long p, long long q) {
    if (p == 0 && q == 0) throw BadInput("fraction 0/0");
    long long g = std::gcd(std::llabs(p), std::llabs(q));
    if (g > 1) {
        p /= g;
        q /= g;
    }
    if (q < 0) {
        p = -p;
        q = -q;
    }
    if (q == 0) p = 1;
    return Fraction{p, q};
}

Fraction cf_eval(const std::vector<long long>& c) {
    if (c.empty()) throw BadInput("cf_eval needs a non-empty sequence");
    Fraction f = make_fraction(c[0], 1);
    for (size_t i = 1; i < c.size(); ++i)
        f = make_fraction(c[i] * f.p + f.q, f.p); // c + 1/f
    return f;
}

namespace {

std::vector<long long> expand_rec(long long p, long long q) {
    if (q < 0) {
        q = -q;
        p = -p;
    }
    if (q == 1) return {p};
    if (std::llabs(p) < q) {
        // proper fraction: invert and append a trailing 0
        std::vector<long long> v = expand_rec(q, p);
        v.push_back(0);
        return v;
    }
    long long c = p / q, rem = p - c * q; // truncation keeps entry signs uniform
    std::vector<long long> v = expand_rec(q, rem);
    v.push_back(c);
    return v;
}

} // namespace

std::vector<long long> cf_expand(Fraction f) {
    if (f.is_infinite()) return {0, 0}; // 0 + 1/0
    if (f.p == 0) return {0};
    return expand_rec(f.p, f.q);
}

// ---------------------------------------------------------------------------
// AST
// ---------------------------------------------------------------------------

TangleExpr TangleExpr::integer(long long n) {
    TangleExpr t;
    t.kind = Kind::Integer;
    t.value = n;
    return t;
}

TangleExpr TangleExpr::infinity() {
    TangleExpr t;
    t.kind = Kind::Infinity;
    return t;
}

TangleExpr TangleExpr::product(std::vector<TangleExpr> cs) {
    if (cs.size() < 2) throw BadInput("tangle product needs at least two factors");
    TangleExpr t;
    t.kind = Kind::Product;
    t.children = std::move(cs);
    return t;
}

TangleExpr TangleExpr::ramification(std::vector<TangleExpr> cs) {
    if (cs.size() < 2) throw BadInput("tangle ramification needs at least two entries");
    TangleExpr t;
    t.kind = Kind::Ramification;
    t.children = std::move(cs);
    return t;
}

TangleExpr TangleExpr::closure(TangleExpr inner) {
    if (inner.kind == Kind::Closure) throw BadInput("closure applies only once, at the root");
    TangleExpr t;
    t.kind = Kind::Closure;
    t.children.push_back(std::move(inner));
    return t;
}

// ---------------------------------------------------------------------------
// Conway notation
// ---------------------------------------------------------------------------

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;

    explicit Parser(const std::string& text) : s(text) {}

    [[noreturn]] void fail(const std::string& why) {
        std::ostringstream os;
        os << "conway syntax error at position " << i << ": " << why;
        throw BadInput(os.str());
    }
    void skip_ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool peek(char c) {
        skip_ws();
        return i < s.size() && s[i] == c;
    }
    bool eat(char c) {
        if (!peek(c)) return false;
        ++i;
        return true;
    }

    // One syntactic item; a bare digit run contributes several factors.
    void factors(std::vector<TangleExpr>& out) {
        skip_ws();
        if (i >= s.size()) fail("expected a tangle");
        char c = s[i];
        if (c == '(') {
            ++i;
            std::vector<TangleExpr> entries{expr()};
            while (eat(',')) entries.push_back(expr());
            if (!eat(')')) fail("expected ')'");
            out.push_back(entries.size() == 1 ? std::move(entries[0])
                                              : TangleExpr::ramification(std::move(entries)));
            return;
        }
        if (s.compare(i, 3, "inf") == 0) {
            i += 3;
            out.push_back(TangleExpr::infinity());
            return;
        }
        if (c == '+' || c == '-') {
            size_t j = i + 1, start = i;
            while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
            if (j == i + 1) fail("expected digits after sign");
            out.push_back(TangleExpr::integer(std::stoll(s.substr(start, j - start))));
            i = j;
            return;
        }
        if (std::isdigit((unsigned char)c)) {
            // digit run: each decimal digit is its own integer tangle
            while (i < s.size() && std::isdigit((unsigned char)s[i]))
                out.push_back(TangleExpr::integer(s[i++] - '0'));
            return;
        }
        fail("unexpected character");
    }

    bool at_factor() {
        skip_ws();
        if (i >= s.size()) return false;
        char c = s[i];
        return c == '(' || c == '+' || c == '-' || std::isdigit((unsigned char)c) ||
               s.compare(i, 3, "inf") == 0;
    }

    TangleExpr expr() {
        std::vector<TangleExpr> fs;
        factors(fs);
        while (at_factor()) factors(fs);
        return fs.size() == 1 ? std::move(fs[0]) : TangleExpr::product(std::move(fs));
    }
};

void print_rec(const TangleExpr& t, std::ostream& os) {
    switch (t.kind) {
    case TangleExpr::Kind::Integer:
        if (t.value >= 10) os << '+'; // bare digit runs split apart
        os << t.value;
        break;
    case TangleExpr::Kind::Infinity:
        os << "inf";
        break;
    case TangleExpr::Kind::Product:
        for (size_t i = 0; i < t.children.size(); ++i) {
            if (i) os << ' ';
            const TangleExpr& c = t.children[i];
            bool wrap = c.kind == TangleExpr::Kind::Product;
            if (wrap) os << '(';
            print_rec(c, os);
            if (wrap) os << ')';
        }
        break;
    case TangleExpr::Kind::Ramification:
        os << '(';
        for (size_t i = 0; i < t.children.size(); ++i) {
            if (i) os << ',';
            print_rec(t.children[i], os);
        }
        os << ')';
        break;
    case TangleExpr::Kind::Closure:
        os << "N ";
        print_rec(t.children[0], os);
        break;
    }
}

} // namespace

TangleExpr parse_conway(const std::string& s) {
    Parser p(s);
    p.skip_ws();
    bool closed = false;
    if (p.i < s.size() && s[p.i] == 'N') {
        ++p.i;
        closed = true;
    }
    TangleExpr t = p.expr();
    p.skip_ws();
    if (p.i != s.size()) p.fail("trailing input");
    return closed ? TangleExpr::closure(std::move(t)) : t;
}

std::string print_conway(const TangleExpr& t) {
    std::ostringstream os;
    print_rec(t, os);
    return os.str();
}

// ---------------------------------------------------------------------------
// Montesinos forms
// ---------------------------------------------------------------------------

namespace {

void check_montesinos(const MontesinosForm& m) {
    for (const Fraction& f : m.fractions) {
        if (f.q < 2 || f.p == 0 || std::llabs(f.p) >= f.q ||
            std::gcd(std::llabs(f.p), f.q) != 1)
            throw BadInput("Montesinos entry must be a reduced q/p with 0 < |q| < p");
    }
}

long long floordiv(long long a, long long b) {
    long long d = a / b;
    return d * b > a ? d - 1 : d;
}

} // namespace

MontesinosForm montesinos_canonical(const MontesinosForm& m) {
    check_montesinos(m);
    MontesinosForm r = m;
    for (Fraction& f : r.fractions) {
        long long shift = floordiv(f.p, f.q);
        f.p -= shift * f.q;
        r.e += shift;
    }
    return r;
}

bool montesinos_equal(const MontesinosForm& a, const MontesinosForm& b, bool try_mirror) {
    if (a.fractions.size() < 3 || b.fractions.size() < 3)
        throw BadInput("montesinos_equal needs length >= 3; shorter forms are rational links");
    MontesinosForm ca = montesinos_canonical(a);
    auto matches = [&](const MontesinosForm& cb) {
        if (ca.e != cb.e || ca.fractions.size() != cb.fractions.size()) return false;
        int n = (int)ca.fractions.size();
        for (int rev = 0; rev < 2; ++rev) {
            std::vector<Fraction> seq = cb.fractions;
            if (rev) std::reverse(seq.begin(), seq.end());
            for (int rot = 0; rot < n; ++rot) {
                bool same = true;
                for (int k = 0; k < n && same; ++k)
                    same = ca.fractions[k] == seq[(k + rot) % n];
                if (same) return true;
            }
        }
        return false;
    };
    if (matches(montesinos_canonical(b))) return true;
    if (!try_mirror) return false;
    MontesinosForm mb = b;
    mb.e = -mb.e;
    for (Fraction& f : mb.fractions) f.p = -f.p;
    return matches(montesinos_canonical(mb));
}

TangleExpr rational_tangle(Fraction f) {
    std::vector<TangleExpr> cs;
    for (long long c : cf_expand(f)) cs.push_back(TangleExpr::integer(c));
    return cs.size() == 1 ? std::move(cs[0]) : TangleExpr::product(std::move(cs));
}

TangleExpr montesinos_to_conway(const MontesinosForm& m) {
    check_montesinos(m);
    std::vector<TangleExpr> entries;
    // entry q/p renders as the p/q rational tangle turned by the ramification
    for (const Fraction& f : m.fractions) entries.push_back(rational_tangle(make_fraction(f.q, f.p)));
    entries.push_back(TangleExpr::product({TangleExpr::integer(m.e), TangleExpr::integer(0)}));
    return TangleExpr::ramification(std::move(entries));
}

std::string montesinos_to_string(const MontesinosForm& m) {
    std::ostringstream os;
    os << "M(";
    for (size_t i = 0; i < m.fractions.size(); ++i) {
        if (i) os << ',';
        os << m.fractions[i].p << '/' << m.fractions[i].q;
    }
    os << ';' << m.e << ')';
    return os.str();
}

MontesinosForm parse_montesinos(const std::string& s) {
    size_t i = 0;
    auto ws = [&] {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    };
    auto expect = [&](char c) {
        ws();
        if (i >= s.size() || s[i] != c) {
            std::ostringstream os;
            os << "Montesinos syntax error at position " << i << ": expected '" << c << "'";
            throw BadInput(os.str());
        }
        ++i;
    };
    auto number = [&]() -> long long {
        ws();
        size_t j = i;
        if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
        size_t k = j;
        while (k < s.size() && std::isdigit((unsigned char)s[k])) ++k;
        if (k == j) throw BadInput("Montesinos syntax error: expected an integer");
        long long v = std::stoll(s.substr(i, k - i));
        i = k;
        return v;
    };
    expect('M');
    expect('(');
    MontesinosForm m;
    while (true) {
        long long p = number();
        expect('/');
        long long q = number();
        m.fractions.push_back(make_fraction(p, q));
        ws();
        if (i < s.size() && s[i] == ',') {
            ++i;
            continue;
        }
        break;
    }
    expect(';');
    m.e = number();
    expect(')');
    ws();
    if (i != s.size()) throw BadInput("Montesinos syntax error: trailing input");
    check_montesinos(m);
    return m;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

namespace {

// A tangle under construction: crossings hold four abstract port ids in CCW
// order (initially SW, SE, NE, NW); joins connect port pairs.  Transposing a
// sub-tangle (flip across the NW-SE diagonal) reverses the CCW order of its
// crossings, which over/under survives, and swaps its NE/SW corners.
struct TNet {
    struct X {
        std::array<int, 4> p;
        bool over13;
    };
    std::vector<X> xs;
    std::vector<std::pair<int, int>> joins;
    int next_port = 0;

    int port() { return next_port++; }
};

struct TRef {
    int nw, ne, sw, se;
    int x0, x1; // crossing range
};

TRef twist_h(TNet& t, long long n) {
    if (n == 0) {
        TRef r{t.port(), t.port(), t.port(), t.port(), (int)t.xs.size(), (int)t.xs.size()};
        t.joins.emplace_back(r.nw, r.ne);
        t.joins.emplace_back(r.sw, r.se);
        return r;
    }
    int x0 = (int)t.xs.size();
    bool over13 = n < 0; // positive crossing: the SW-NE strand on top
    TNet::X prev{{t.port(), t.port(), t.port(), t.port()}, over13};
    t.xs.push_back(prev);
    TRef r{prev.p[3], -1, prev.p[0], -1, x0, 0};
    for (long long i = 1; i < std::llabs(n); ++i) {
        TNet::X cur{{t.port(), t.port(), t.port(), t.port()}, over13};
        t.xs.push_back(cur);
        t.joins.emplace_back(prev.p[1], cur.p[0]); // SE -> SW
        t.joins.emplace_back(prev.p[2], cur.p[3]); // NE -> NW
        prev = cur;
    }
    r.ne = prev.p[2];
    r.se = prev.p[1];
    r.x1 = (int)t.xs.size();
    return r;
}

TRef transpose(TNet& t, TRef r) {
    for (int i = r.x0; i < r.x1; ++i) std::swap(t.xs[i].p[1], t.xs[i].p[3]);
    std::swap(r.ne, r.sw);
    return r;
}

TRef hsum(TNet& t, TRef a, TRef b) {
    t.joins.emplace_back(a.ne, b.nw);
    t.joins.emplace_back(a.se, b.sw);
    return TRef{a.nw, b.ne, a.sw, b.se, std::min(a.x0, b.x0), std::max(a.x1, b.x1)};
}

TRef render(TNet& t, const TangleExpr& e) {
    switch (e.kind) {
    case TangleExpr::Kind::Integer:
        return twist_h(t, e.value);
    case TangleExpr::Kind::Infinity:
        return transpose(t, twist_h(t, 0));
    case TangleExpr::Kind::Product: {
        // Conway's product AB: A is turned onto its NW-SE diagonal and B is
        // summed on the right
        TRef acc = render(t, e.children[0]);
        for (size_t i = 1; i < e.children.size(); ++i)
            acc = hsum(t, transpose(t, acc), render(t, e.children[i]));
        return acc;
    }
    case TangleExpr::Kind::Ramification: {
        // (A,B,...) = sum of the diagonally-turned factors
        TRef acc = transpose(t, render(t, e.children[0]));
        for (size_t i = 1; i < e.children.size(); ++i)
            acc = hsum(t, acc, transpose(t, render(t, e.children[i])));
        return acc;
    }
    case TangleExpr::Kind::Closure:
        throw BadInput("closure may appear only at the root");
    }
    throw InternalError("unhandled tangle node");
}

Diagram emit(TNet& t, TRef r) {
    // numerator closure
    t.joins.emplace_back(r.nw, r.ne);
    t.joins.emplace_back(r.sw, r.se);
    DiagramBuilder b;
    std::vector<DiagramBuilder::Port> port_of(t.next_port, DiagramBuilder::Port{-1});
    for (const TNet::X& x : t.xs) {
        auto ps = b.add_crossing_over13(x.over13);
        for (int s = 0; s < 4; ++s) port_of[x.p[s]] = ps[s];
    }
    for (auto& p : port_of)
        if (p.id < 0) p = b.make_port();
    for (auto [u, v] : t.joins) b.splice(port_of[u], port_of[v]);
    Diagram d = b.build();
    d.validate();
    return d;
}

} // namespace

Diagram tangle_to_diagram(const TangleExpr& e) {
    TNet t;
    const TangleExpr& inner = e.kind == TangleExpr::Kind::Closure ? e.children[0] : e;
    return emit(t, render(t, inner));
}

Diagram pretzel_diagram(const std::vector<long long>& params) {
    if (params.empty()) throw BadInput("pretzel_diagram needs at least one twist length");
    TNet t;
    TRef acc = transpose(t, twist_h(t, params[0]));
    for (size_t i = 1; i < params.size(); ++i)
        acc = hsum(t, acc, transpose(t, twist_h(t, params[i])));
    return emit(t, acc);
}

} // namespace knotforge
