#pragma once

#include "symdisc/hypergraph.hpp"

namespace symdisc {

// max over edges E and colors i of | |chi^-1(i) ∩ E| - |E|/c |, exactly.
// A hypergraph without edges has discrepancy 0 (max over the empty set).
DiscValue disc_of_coloring(const Hypergraph& h, const Coloring& chi);

struct ExactSolveResult {
    DiscValue value;
    Coloring witness; // lexicographically least optimal coloring
};

inline constexpr int kDefaultExactCap = 14;

// Exact minimum over all c^n colorings, by depth-first search over vertices.
// Color-permutation symmetry is broken: vertex 1 gets color 1 and vertex k may
// only use colors up to 1 + (max color used among vertices < k). A subtree is
// pruned once some edge's guaranteed deviation already reaches the incumbent.
// Neither affects the returned value; the witness is the lexicographically
// least optimal coloring.
ExactSolveResult disc_exact(const Hypergraph& h, int c, int vertex_cap = kDefaultExactCap);

} // namespace symdisc
