#include "symdisc/constructions.hpp"

#include "symdisc/errors.hpp"

namespace symdisc {

GateReport divisibility_gate(int c, int d) {
    if (c < 2) throw argument_error("divisibility_gate: need at least 2 colors");
    if (d < 1) throw argument_error("divisibility_gate: d must be positive");
    GateReport report;
    report.c = c;
    report.d = d;
    for (int k = 2; k <= d; ++k) {
        GateEntry entry;
        entry.k = k;
        entry.count = factorial(k) * stirling2(d, k);
        entry.residue = static_cast<long long>(entry.count % c);
        entry.pass = entry.residue == 0;
        if (!entry.pass && report.pass) {
            report.pass = false;
            report.first_failing_k = k;
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

ProductColoring simplex_balanced_coloring(const Coloring& psi, int d) {
    psi.validate();
    if (d < 1) throw argument_error("simplex_balanced_coloring: d must be positive");
    const GateReport gate = divisibility_gate(psi.c, d);
    if (!gate.pass)
        throw precondition_error(
            "simplex_balanced_coloring: divisibility gate fails at k = " +
            std::to_string(gate.first_failing_k) + " (" + std::to_string(psi.c) +
            " does not divide k! S(d,k))");
    return ProductColoring::make_simplex_assigned(
        psi.n(), d, SimplexAssignment::round_robin(d, psi.c), psi);
}

ShiftOrbit shift_orbit(const std::vector<int>& x, int c) {
    if (c < 1) throw argument_error("shift_orbit: c must be positive");
    if (static_cast<int>(x.size()) < c) throw argument_error("shift_orbit: need d >= c");
    for (int v : x)
        if (v < 1) throw argument_error("shift_orbit: coordinates must be positive");

    ShiftOrbit orbit;
    std::vector<int> y = x;
    do {
        orbit.points.push_back(y);
        // cyclic left shift of the first c coordinates
        const int first = y[0];
        for (int i = 0; i + 1 < c; ++i) y[i] = y[i + 1];
        y[c - 1] = first;
        ++orbit.period;
    } while (y != x && orbit.period < c);
    return orbit;
}

ProductColoring shift_reduced_coloring(ProductColoring inner, int p, int q, int d) {
    return ProductColoring::make_shift_reduced(p, q, d, std::move(inner));
}

ProductColoring block_reduced_coloring(ProductColoring inner, int d, int dprime) {
    if (dprime < 2 || dprime > d)
        throw argument_error("block_reduced_coloring: need 2 <= d' <= d");
    const GateReport gate = divisibility_gate(inner.c(), dprime);
    if (!gate.pass)
        throw precondition_error(
            "block_reduced_coloring: divisibility gate fails at k = " +
            std::to_string(gate.first_failing_k) + " (" + std::to_string(inner.c()) +
            " does not divide k! S(d',k))");
    SimplexAssignment assignment = SimplexAssignment::round_robin(dprime, inner.c());
    return ProductColoring::make_block_reduced(dprime, d, std::move(assignment), std::move(inner));
}

} // namespace symdisc
