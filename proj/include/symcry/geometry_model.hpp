#pragma once

// Reference combinatorial model for the rank-one (sl_3 with swap involution)
// case: vertices IC_r^n with 0 <= 2r <= n, two labelled edges out of every
// vertex, and a forced-propagation isomorphism check against a computed
// crystal graph.

#include "symcry/crystal.hpp"

#include <vector>

namespace symcry {

struct ICVertex {
    long n = 0;  // number of F-letters applied
    long r = 0;  // stratum parameter, 0 <= 2r <= n
};

struct RefEdge {
    int src;
    int label;  // +1 or -1
    int dst;
};

struct ReferenceCrystal {
    std::vector<ICVertex> vertices;
    std::vector<RefEdge> edges;

    int id_of(long n, long r) const;       // -1 when absent
    std::vector<int> level(long n) const;  // ids with that n, ascending r
    int edge_target(int src, int label) const;  // -1 when absent
};

// Levels 0..n_max. Edge rule: label +1 preserves r; label -1 preserves r
// when n is even and increments r when n is odd.
ReferenceCrystal reference_graph(long n_max);

long reference_eps1(const ICVertex& v);  // n - 2r

// the hand-drawn picture for n <= 5, checked against the generative rule
CheckReport reference_figure_check();

// Forced level-by-level bijection: the vacuum maps to IC_0^0 and every edge
// determines its target's image. idx_plus / idx_minus are the module's
// internal indices playing the roles of labels +1 / -1.
CheckReport check_isomorphism(const CrystalGraph& g, const ReferenceCrystal& ref, int idx_plus,
                              int idx_minus);

}  // namespace symcry
