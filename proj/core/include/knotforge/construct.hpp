#pragma once

#include <optional>
#include <vector>

#include "knotforge/diagram.hpp"
#include "knotforge/poly.hpp"

namespace knotforge {

struct SeifertMatrix {
    std::vector<std::vector<long long>> m;
    int dim() const { return (int)m.size(); }
};

// The block-tridiagonal V_d family realizing a coefficient vector (a_1..a_d).
SeifertMatrix seifert_matrix_V(const std::vector<Coef>& a);

// t^{-d} det(V - t V^T), exact.
IntLaurent alexander_from_seifert(const SeifertMatrix& V);

struct RealizedLink {
    Diagram diagram;
    ConwayPoly nabla;
    std::optional<SeifertMatrix> matrix;
    std::optional<int> unknotting_site;            // one crossing of clasp *
    std::vector<std::vector<int>> clasp_sites;     // crossing indices of the 2a_i -+ 1 regions
    int n = 1;
    int d = 0;
    int t_strong = 0;
    int t_strong_reverse = 0;
    double volume_bound = 0.0;
    bool fibered_necessary = false;
    std::optional<int> slice_chi_bound; // chi_s >= -1 bookkeeping where the paper grants it

    std::string to_json() const;
};

RealizedLink realize_knot(const ConwayPoly& nabla);
RealizedLink realize_link2(const ConwayPoly& nabla_L, bool mirror_trick = false);
RealizedLink realize_link_n(const ConwayPoly& nabla, int n, bool monic_mode = false);

// Necessary (not sufficient) fiberedness test: monic and maxdeg = 1 - chi.
bool fibered_necessary(const Diagram& d, const ConwayPoly& nabla);

} // namespace knotforge
