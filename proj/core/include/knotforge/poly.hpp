#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "knotforge/errors.hpp"

namespace knotforge {

using Coef = long long;

struct Degrees {
    int mindeg;
    int maxdeg;
    int span;
    Coef leading;
};

// Laurent polynomial over Z in u = t^{1/2}.  Even u-exponents are integer
// powers of t; odd exponents occur for even-component links.  Zero stored
// coefficients are never kept.
class IntLaurent {
  public:
    IntLaurent() = default;
    static IntLaurent term(Coef c, int uexp);
    static IntLaurent t_power(Coef c, int texp) { return term(c, 2 * texp); }

    bool is_zero() const { return c_.empty(); }
    Coef coeff(int uexp) const;
    const std::map<int, Coef>& coeffs() const { return c_; }
    void set(int uexp, Coef c);

    Degrees degrees() const; // throws BadInput on zero polynomial
    bool is_monic() const;

    IntLaurent operator+(const IntLaurent& o) const;
    IntLaurent operator-(const IntLaurent& o) const;
    IntLaurent operator*(const IntLaurent& o) const;
    IntLaurent operator-() const;
    IntLaurent shifted(int uexp) const; // multiply by u^uexp
    bool operator==(const IntLaurent& o) const { return c_ == o.c_; }

    Coef eval_at_one() const; // u = 1, i.e. t = 1

    std::string to_string() const;
    static IntLaurent parse(const std::string& s);

  private:
    std::map<int, Coef> c_;
};

// Conway polynomial in z; exponents >= 0.
class ConwayPoly {
  public:
    ConwayPoly() = default;
    static ConwayPoly term(Coef c, int zexp);

    bool is_zero() const { return c_.empty(); }
    Coef coeff(int zexp) const;
    const std::map<int, Coef>& coeffs() const { return c_; }
    void set(int zexp, Coef c);

    Degrees degrees() const;
    bool is_monic() const;

    ConwayPoly operator+(const ConwayPoly& o) const;
    ConwayPoly operator-(const ConwayPoly& o) const;
    ConwayPoly operator*(const ConwayPoly& o) const;
    ConwayPoly operator-() const;
    bool operator==(const ConwayPoly& o) const { return c_ == o.c_; }

    std::string to_string() const;
    static ConwayPoly parse(const std::string& s);

  private:
    std::map<int, Coef> c_;
};

// Admissibility per the degree/parity constraints on realizable Conway
// polynomials: knots need constant term 1 and even exponents; n-component
// links need all exponents >= n-1 and congruent to n-1 mod 2 (zero allowed
// for n > 1).
bool is_admissible(const ConwayPoly& nabla, int n);

// Substitute z = u - u^{-1}.
IntLaurent conway_to_alexander(const ConwayPoly& nabla);

// Exact inverse of conway_to_alexander; throws BadInput when delta is not in
// the substitution image.
ConwayPoly alexander_to_conway(const IntLaurent& delta);

// a_i = (-1)^i [nabla]_{2i}, i = 1..maxdeg/2; requires is_admissible(nabla,1).
std::vector<Coef> coeff_vector(const ConwayPoly& nabla);

// Exact determinant of a Laurent-polynomial matrix (fraction-free Bareiss).
IntLaurent laurent_det(std::vector<std::vector<IntLaurent>> m);

} // namespace knotforge
