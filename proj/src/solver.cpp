#include "symdisc/solver.hpp"

#include <algorithm>

#include "symdisc/errors.hpp"

namespace symdisc {

DiscValue disc_of_coloring(const Hypergraph& h, const Coloring& chi) {
    h.validate();
    chi.validate();
    if (chi.n() != h.n) throw argument_error("disc_of_coloring: coloring domain mismatch");

    const int c = chi.c;
    long long best = 0; // numerator of the max deviation, denominator c
    std::vector<long long> counts(c);
    for (const auto& e : h.edges) {
        std::fill(counts.begin(), counts.end(), 0);
        for (int v : e) ++counts[chi.color(v) - 1];
        const long long size = static_cast<long long>(e.size());
        for (int i = 0; i < c; ++i) {
            long long dev = c * counts[i] - size;
            if (dev < 0) dev = -dev;
            best = std::max(best, dev);
        }
    }
    return DiscValue{BigInt(best), c};
}

namespace {

// DFS state for the exact solve. Incidence lists plus per-edge running counts
// keep the pruning bound cheap to maintain.
struct ExactSearch {
    const Hypergraph& h;
    int c;
    std::vector<std::vector<int>> vertex_edges;   // per vertex, incident edge indices
    std::vector<std::vector<long long>> counts;   // per edge, per color
    std::vector<long long> remaining;             // per edge, uncolored vertices
    std::vector<long long> edge_size;
    std::vector<int> assignment;                  // per vertex, 0 = unassigned

    bool have_best = false;
    long long best_num = 0;
    std::vector<int> best_assignment;

    ExactSearch(const Hypergraph& hg, int colors) : h(hg), c(colors) {
        vertex_edges.resize(h.n + 1);
        counts.assign(h.edges.size(), std::vector<long long>(c, 0));
        remaining.resize(h.edges.size());
        edge_size.resize(h.edges.size());
        assignment.assign(h.n + 1, 0);
        for (std::size_t e = 0; e < h.edges.size(); ++e) {
            edge_size[e] = static_cast<long long>(h.edges[e].size());
            remaining[e] = edge_size[e];
            for (int v : h.edges[e]) vertex_edges[v].push_back(static_cast<int>(e));
        }
    }

    // Deviation the edge can no longer avoid: a color already over |E|/c only
    // grows, and a color that cannot reach |E|/c even taking every uncolored
    // vertex stays short.
    long long edge_bound(int e) const {
        long long b = 0;
        for (int i = 0; i < c; ++i) {
            b = std::max(b, c * counts[e][i] - edge_size[e]);
            b = std::max(b, edge_size[e] - c * (counts[e][i] + remaining[e]));
        }
        return b;
    }

    long long full_value() const {
        long long val = 0;
        for (std::size_t e = 0; e < h.edges.size(); ++e)
            for (int i = 0; i < c; ++i) {
                long long dev = c * counts[e][i] - edge_size[e];
                if (dev < 0) dev = -dev;
                val = std::max(val, dev);
            }
        return val;
    }

    void dfs(int v, int max_color_used, long long path_bound) {
        if (have_best && path_bound >= best_num) return;
        if (v > h.n) {
            long long val = full_value();
            if (!have_best || val < best_num) {
                have_best = true;
                best_num = val;
                best_assignment.assign(assignment.begin() + 1, assignment.end());
            }
            return;
        }
        const int limit = std::min(c, max_color_used + 1);
        for (int col = 1; col <= limit; ++col) {
            assignment[v] = col;
            for (int e : vertex_edges[v]) {
                ++counts[e][col - 1];
                --remaining[e];
            }
            long long bound = path_bound;
            for (int e : vertex_edges[v]) bound = std::max(bound, edge_bound(e));
            dfs(v + 1, std::max(max_color_used, col), bound);
            for (int e : vertex_edges[v]) {
                --counts[e][col - 1];
                ++remaining[e];
            }
            assignment[v] = 0;
        }
    }
};

} // namespace

ExactSolveResult disc_exact(const Hypergraph& h, int c, int vertex_cap) {
    h.validate();
    if (c < 2) throw argument_error("disc_exact: need at least 2 colors");
    if (h.n > vertex_cap)
        throw size_cap_error("disc_exact: n = " + std::to_string(h.n) +
                             " exceeds the vertex cap " + std::to_string(vertex_cap));

    if (h.edges.empty()) {
        // Max over the empty edge set is 0; the all-ones coloring is lex-least.
        return {DiscValue{BigInt(0), c}, Coloring{c, std::vector<int>(h.n, 1)}};
    }

    ExactSearch search(h, c);
    search.dfs(1, 0, 0);
    return {DiscValue{BigInt(search.best_num), c}, Coloring{c, std::move(search.best_assignment)}};
}

} // namespace symdisc
