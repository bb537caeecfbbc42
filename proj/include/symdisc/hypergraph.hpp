#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symdisc/bigint.hpp"

namespace symdisc {

// Vertices are 1..n. Every edge is a nonempty subset of [n], stored with its
// vertices in ascending order. Duplicate edges are allowed; normalized() drops
// them.
struct Hypergraph {
    int n = 0;
    std::vector<std::vector<int>> edges;

    void validate() const; // throws argument_error on malformed input
};

// Total assignment of one color in 1..c to each vertex 1..n.
struct Coloring {
    int c = 0;
    std::vector<int> colors; // colors[v-1] is the color of vertex v

    int n() const { return static_cast<int>(colors.size()); }
    int color(int v) const { return colors[v - 1]; }
    void validate() const;
};

bool operator==(const Coloring& a, const Coloring& b);

// Exact discrepancy value numerator/denominator. The denominator is always the
// color count c: every attainable discrepancy is an integer multiple of 1/c.
// Values are never reduced and never converted to floating point.
struct DiscValue {
    BigInt numerator;
    int denominator = 1;

    std::string str() const; // "p/q"
};

bool operator==(const DiscValue& a, const DiscValue& b);
bool operator!=(const DiscValue& a, const DiscValue& b);
bool operator<(const DiscValue& a, const DiscValue& b);
bool operator<=(const DiscValue& a, const DiscValue& b);
bool operator>(const DiscValue& a, const DiscValue& b);
bool operator>=(const DiscValue& a, const DiscValue& b);

bool has_duplicate_edges(const Hypergraph& h);

// Sorts the edge list lexicographically and removes duplicates.
Hypergraph normalized(const Hypergraph& h);

// All C(n,m) m-subsets of [n] as edges, in lexicographic order.
Hypergraph complete_uniform(int n, int m);

// Deterministic seeded instance generator. Stream: SplitMix64 over the seed.
// Each edge: size s = 1 + (next mod max_edge_size), then s distinct vertices
// by a partial Fisher-Yates over [n] with j = i + (next mod (n - i)), sorted
// ascending. This exact procedure is part of the contract so instances
// reproduce across implementations.
Hypergraph random_hypergraph(int n, int edge_count, int max_edge_size, std::uint64_t seed);

} // namespace symdisc
