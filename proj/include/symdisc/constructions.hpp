#pragma once

#include "symdisc/product.hpp"

namespace symdisc {

// The divisibility condition c | k! * S(d,k) for all k in 2..d governs when
// discrepancy transfers from a hypergraph to its d-fold symmetric product.
struct GateEntry {
    int k = 0;
    BigInt count;          // k! * S(d,k)
    long long residue = 0; // count mod c
    bool pass = false;
};

struct GateReport {
    int c = 0;
    int d = 0;
    std::vector<GateEntry> entries; // k = 2..d; empty for d = 1
    bool pass = true;
    int first_failing_k = 0; // 0 when pass
};

GateReport divisibility_gate(int c, int d);

// Monochromatic-simplex coloring of [n]^d: simplices of each dimension k >= 2
// get colors round-robin in enumeration order (so each color receives exactly
// k! S(d,k) / c of them), the diagonal is colored by psi. Requires the gate to
// pass for (psi.c, d).
ProductColoring simplex_balanced_coloring(const Coloring& psi, int d);

struct ShiftOrbit {
    std::vector<std::vector<int>> points; // x, Sx, S^2 x, ... (period elements)
    int period = 0;                       // minimal k in [c] with S^k x = x
};

// Orbit of x under the cyclic left shift of its first c coordinates
// (coordinates c+1..d are fixed). Requires d >= c; the period divides c.
ShiftOrbit shift_orbit(const std::vector<int>& x, int c);

// Prime-power reduction: c = p^q, d >= c, inner of dimension
// s = d - (p-1)p^(q-1). Full orbits get the rainbow rule
// color(S^i r) = 1 + (i mod c) from the lexicographically least orbit element
// r; short-orbit points map to the inner coloring through
// psi(x) = (x_1..x_{p^(q-1)}, x_{c+1}..x_d).
ProductColoring shift_reduced_coloring(ProductColoring inner, int p, int q, int d);

// First-d'-coordinates reduction: points whose first d' coordinates are
// constant evaluate the inner coloring of dimension d-d'+1; all others get the
// round-robin balanced color of their simplex in [n]^d', independent of the
// tail. Requires the gate to pass for (c, d').
ProductColoring block_reduced_coloring(ProductColoring inner, int d, int dprime);

} // namespace symdisc
