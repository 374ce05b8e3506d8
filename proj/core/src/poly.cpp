#include "knotforge/poly.hpp"

#include <cctype>
#include <sstream>

namespace knotforge {

namespace {

void add_term(std::map<int, Coef>& m, int e, Coef c) {
    if (c == 0) return;
    auto it = m.find(e);
    if (it == m.end()) {
        m.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) m.erase(it);
    }
}

Degrees degrees_of(const std::map<int, Coef>& m) {
    if (m.empty()) throw BadInput("degree undefined for the zero polynomial");
    int lo = m.begin()->first;
    int hi = m.rbegin()->first;
    return Degrees{lo, hi, hi - lo, m.rbegin()->second};
}

std::map<int, Coef> mul(const std::map<int, Coef>& a, const std::map<int, Coef>& b) {
    std::map<int, Coef> r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) add_term(r, ea + eb, ca * cb);
    return r;
}

struct Term {
    Coef coef;
    char var; // 0 = none
    int exp;
};

// Shared term-list parser for "1 - 2z^2 + 2z^4" style input.
std::vector<Term> parse_terms(const std::string& s, const std::string& vars) {
    std::vector<Term> out;
    size_t i = 0;
    auto skip = [&] { while (i < s.size() && std::isspace((unsigned char)s[i])) ++i; };
    auto fail = [&](const std::string& what) {
        std::ostringstream os;
        os << "polynomial syntax error at position " << i << ": " << what;
        throw BadInput(os.str());
    };
    auto read_int = [&]() -> long long {
        bool neg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
        if (i >= s.size() || !std::isdigit((unsigned char)s[i])) fail("expected integer");
        long long v = 0;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) v = v * 10 + (s[i++] - '0');
        return neg ? -v : v;
    };
    skip();
    if (i >= s.size()) fail("empty input");
    bool first = true;
    while (true) {
        skip();
        if (i >= s.size()) break;
        Coef sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            fail("expected '+' or '-' between terms");
        }
        Term t{sign, 0, 0};
        bool have_coef = false;
        if (i < s.size() && std::isdigit((unsigned char)s[i])) {
            t.coef = sign * read_int();
            have_coef = true;
            skip();
            if (i < s.size() && s[i] == '*') { ++i; skip(); }
        }
        if (i < s.size() && vars.find(s[i]) != std::string::npos) {
            t.var = s[i++];
            t.exp = 1;
            skip();
            if (i < s.size() && s[i] == '^') {
                ++i;
                skip();
                bool paren = i < s.size() && s[i] == '(';
                if (paren) { ++i; skip(); }
                t.exp = (int)read_int();
                if (paren) {
                    skip();
                    if (i >= s.size() || s[i] != ')') fail("expected ')'");
                    ++i;
                }
            }
        } else if (!have_coef) {
            fail("expected coefficient or variable");
        }
        out.push_back(t);
        first = false;
    }
    return out;
}

void print_term(std::ostringstream& os, bool first, Coef c, const std::string& var_part) {
    if (first) {
        if (c < 0) os << '-';
    } else {
        os << (c < 0 ? " - " : " + ");
    }
    Coef m = c < 0 ? -c : c;
    if (var_part.empty()) {
        os << m;
    } else {
        if (m != 1) os << m;
        os << var_part;
    }
}

std::string power_name(const std::string& var, int e) {
    if (e == 1) return var;
    std::ostringstream os;
    os << var << '^' << e;
    return os.str();
}

} // namespace

IntLaurent IntLaurent::term(Coef c, int uexp) {
    IntLaurent p;
    add_term(p.c_, uexp, c);
    return p;
}

Coef IntLaurent::coeff(int uexp) const {
    auto it = c_.find(uexp);
    return it == c_.end() ? 0 : it->second;
}

void IntLaurent::set(int uexp, Coef c) {
    c_.erase(uexp);
    if (c != 0) c_.emplace(uexp, c);
}

Degrees IntLaurent::degrees() const { return degrees_of(c_); }

bool IntLaurent::is_monic() const {
    Coef l = degrees().leading;
    return l == 1 || l == -1;
}

IntLaurent IntLaurent::operator+(const IntLaurent& o) const {
    IntLaurent r = *this;
    for (const auto& [e, c] : o.c_) add_term(r.c_, e, c);
    return r;
}

IntLaurent IntLaurent::operator-(const IntLaurent& o) const { return *this + (-o); }

IntLaurent IntLaurent::operator-() const {
    IntLaurent r;
    for (const auto& [e, c] : c_) r.c_.emplace(e, -c);
    return r;
}

IntLaurent IntLaurent::operator*(const IntLaurent& o) const {
    IntLaurent r;
    r.c_ = mul(c_, o.c_);
    return r;
}

IntLaurent IntLaurent::shifted(int uexp) const {
    IntLaurent r;
    for (const auto& [e, c] : c_) r.c_.emplace(e + uexp, c);
    return r;
}

Coef IntLaurent::eval_at_one() const {
    Coef s = 0;
    for (const auto& [e, c] : c_) s += c;
    return s;
}

std::string IntLaurent::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending in u, so t-powers come highest first: "t - 1 + t^-1"
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        int e = it->first;
        std::string var;
        if (e != 0) var = e % 2 == 0 ? power_name("t", e / 2) : power_name("u", e);
        print_term(os, first, it->second, var);
        first = false;
    }
    return os.str();
}

IntLaurent IntLaurent::parse(const std::string& s) {
    IntLaurent p;
    for (const Term& t : parse_terms(s, "tu")) {
        int e = t.var == 't' ? 2 * t.exp : (t.var == 'u' ? t.exp : 0);
        add_term(p.c_, e, t.coef);
    }
    return p;
}

ConwayPoly ConwayPoly::term(Coef c, int zexp) {
    if (zexp < 0) throw BadInput("Conway polynomial exponents must be >= 0");
    ConwayPoly p;
    add_term(p.c_, zexp, c);
    return p;
}

Coef ConwayPoly::coeff(int zexp) const {
    auto it = c_.find(zexp);
    return it == c_.end() ? 0 : it->second;
}

void ConwayPoly::set(int zexp, Coef c) {
    if (zexp < 0) throw BadInput("Conway polynomial exponents must be >= 0");
    c_.erase(zexp);
    if (c != 0) c_.emplace(zexp, c);
}

Degrees ConwayPoly::degrees() const { return degrees_of(c_); }

bool ConwayPoly::is_monic() const {
    Coef l = degrees().leading;
    return l == 1 || l == -1;
}

ConwayPoly ConwayPoly::operator+(const ConwayPoly& o) const {
    ConwayPoly r = *this;
    for (const auto& [e, c] : o.c_) add_term(r.c_, e, c);
    return r;
}

ConwayPoly ConwayPoly::operator-(const ConwayPoly& o) const { return *this + (-o); }

ConwayPoly ConwayPoly::operator-() const {
    ConwayPoly r;
    for (const auto& [e, c] : c_) r.c_.emplace(e, -c);
    return r;
}

ConwayPoly ConwayPoly::operator*(const ConwayPoly& o) const {
    ConwayPoly r;
    r.c_ = mul(c_, o.c_);
    return r;
}

std::string ConwayPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // ascending in z: "1 - 2z^2 + 2z^4"
    for (const auto& [e, c] : c_) {
        std::string var = e == 0 ? "" : power_name("z", e);
        print_term(os, first, c, var);
        first = false;
    }
    return os.str();
}

ConwayPoly ConwayPoly::parse(const std::string& s) {
    ConwayPoly p;
    for (const Term& t : parse_terms(s, "z")) {
        if (t.exp < 0) throw BadInput("negative z-exponent");
        add_term(p.c_, t.var == 'z' ? t.exp : 0, t.coef);
    }
    return p;
}

bool is_admissible(const ConwayPoly& nabla, int n) {
    if (n < 1) throw BadInput("component count must be >= 1");
    if (n == 1) {
        if (nabla.coeff(0) != 1) return false;
        for (const auto& [e, c] : nabla.coeffs())
            if (e % 2 != 0) return false;
        return true;
    }
    for (const auto& [e, c] : nabla.coeffs())
        if (e < n - 1 || (e - (n - 1)) % 2 != 0) return false;
    return true; // zero polynomial is admissible for links
}

IntLaurent conway_to_alexander(const ConwayPoly& nabla) {
    IntLaurent z = IntLaurent::term(1, 1) - IntLaurent::term(1, -1);
    IntLaurent result, zk = IntLaurent::term(1, 0);
    int k = 0;
    for (const auto& [e, c] : nabla.coeffs()) {
        while (k < e) {
            zk = zk * z;
            ++k;
        }
        result = result + zk.shifted(0) * IntLaurent::term(c, 0);
    }
    return result;
}

ConwayPoly alexander_to_conway(const IntLaurent& delta) {
    IntLaurent z = IntLaurent::term(1, 1) - IntLaurent::term(1, -1);
    IntLaurent rem = delta;
    ConwayPoly result;
    while (!rem.is_zero()) {
        Degrees d = rem.degrees();
        if (d.maxdeg < 0)
            throw BadInput("polynomial is not in the image of the z = u - 1/u substitution");
        result.set(d.maxdeg, result.coeff(d.maxdeg) + d.leading);
        IntLaurent zk = IntLaurent::term(d.leading, 0);
        for (int k = 0; k < d.maxdeg; ++k) zk = zk * z;
        rem = rem - zk;
    }
    if (!(conway_to_alexander(result) == delta))
        throw BadInput("polynomial is not in the image of the z = u - 1/u substitution");
    return result;
}

std::vector<Coef> coeff_vector(const ConwayPoly& nabla) {
    if (!is_admissible(nabla, 1)) throw BadInput("coeff_vector requires a knot-admissible polynomial");
    int d = nabla.degrees().maxdeg / 2;
    std::vector<Coef> a;
    for (int i = 1; i <= d; ++i) a.push_back((i % 2 ? -1 : 1) * nabla.coeff(2 * i));
    return a;
}

namespace {

// Exact polynomial division; Bareiss guarantees divisibility.
IntLaurent exact_div(IntLaurent a, const IntLaurent& b) {
    if (b.is_zero()) throw InternalError("division by zero polynomial");
    IntLaurent q;
    Degrees db = b.degrees();
    while (!a.is_zero()) {
        Degrees da = a.degrees();
        if (da.leading % db.leading != 0) throw InternalError("inexact polynomial division");
        IntLaurent t = IntLaurent::term(da.leading / db.leading, da.maxdeg - db.maxdeg);
        q = q + t;
        a = a - t * b;
        if (!a.is_zero() && a.degrees().maxdeg >= da.maxdeg)
            throw InternalError("inexact polynomial division");
    }
    return q;
}

} // namespace

IntLaurent laurent_det(std::vector<std::vector<IntLaurent>> m) {
    int k = (int)m.size();
    if (k == 0) return IntLaurent::term(1, 0);
    int sign = 1;
    IntLaurent prev = IntLaurent::term(1, 0);
    for (int p = 0; p < k - 1; ++p) {
        if (m[p][p].is_zero()) {
            int swap_row = -1;
            for (int i = p + 1; i < k; ++i)
                if (!m[i][p].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return IntLaurent();
            std::swap(m[p], m[swap_row]);
            sign = -sign;
        }
        for (int i = p + 1; i < k; ++i)
            for (int j = p + 1; j < k; ++j)
                m[i][j] = exact_div(m[i][j] * m[p][p] - m[i][p] * m[p][j], prev);
        prev = m[p][p];
    }
    IntLaurent det = m[k - 1][k - 1];
    return sign < 0 ? -det : det;
}

} // namespace knotforge
