#include "symdisc/hypergraph.hpp"

#include <algorithm>
#include <set>

#include "symdisc/errors.hpp"

namespace symdisc {

void Hypergraph::validate() const {
    if (n < 1) throw argument_error("hypergraph: vertex count must be positive");
    for (const auto& e : edges) {
        if (e.empty()) throw argument_error("hypergraph: empty edge");
        int prev = 0;
        for (int v : e) {
            if (v < 1 || v > n) throw argument_error("hypergraph: vertex out of range");
            if (v <= prev) throw argument_error("hypergraph: edge vertices must be strictly ascending");
            prev = v;
        }
    }
}

void Coloring::validate() const {
    if (c < 2) throw argument_error("coloring: need at least 2 colors");
    if (colors.empty()) throw argument_error("coloring: empty vertex set");
    for (int col : colors)
        if (col < 1 || col > c) throw argument_error("coloring: color out of range");
}

bool operator==(const Coloring& a, const Coloring& b) {
    return a.c == b.c && a.colors == b.colors;
}

std::string DiscValue::str() const {
    return numerator.str() + "/" + std::to_string(denominator);
}

// Comparisons cross-multiply so values with different color counts stay exact.
bool operator==(const DiscValue& a, const DiscValue& b) {
    return a.numerator * b.denominator == b.numerator * a.denominator;
}
bool operator!=(const DiscValue& a, const DiscValue& b) { return !(a == b); }
bool operator<(const DiscValue& a, const DiscValue& b) {
    return a.numerator * b.denominator < b.numerator * a.denominator;
}
bool operator<=(const DiscValue& a, const DiscValue& b) { return !(b < a); }
bool operator>(const DiscValue& a, const DiscValue& b) { return b < a; }
bool operator>=(const DiscValue& a, const DiscValue& b) { return !(a < b); }

bool has_duplicate_edges(const Hypergraph& h) {
    std::set<std::vector<int>> seen;
    for (const auto& e : h.edges)
        if (!seen.insert(e).second) return true;
    return false;
}

Hypergraph normalized(const Hypergraph& h) {
    Hypergraph out = h;
    std::sort(out.edges.begin(), out.edges.end());
    out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
    return out;
}

Hypergraph complete_uniform(int n, int m) {
    if (n < 1) throw argument_error("complete_uniform: n must be positive");
    if (m < 1 || m > n) throw argument_error("complete_uniform: need 1 <= m <= n");
    if (binomial(n, m) > 10'000'000)
        throw size_cap_error("complete_uniform: C(n,m) edges exceed the enumeration guard");
    Hypergraph h;
    h.n = n;
    std::vector<int> pick(m);
    for (int i = 0; i < m; ++i) pick[i] = i + 1;
    while (true) {
        h.edges.push_back(pick);
        int i = m - 1;
        while (i >= 0 && pick[i] == n - (m - 1 - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
    }
    return h;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

Hypergraph random_hypergraph(int n, int edge_count, int max_edge_size, std::uint64_t seed) {
    if (n < 1) throw argument_error("random_hypergraph: n must be positive");
    if (edge_count < 1) throw argument_error("random_hypergraph: need at least one edge");
    if (max_edge_size < 1 || max_edge_size > n)
        throw argument_error("random_hypergraph: need 1 <= max_edge_size <= n");

    Hypergraph h;
    h.n = n;
    std::uint64_t state = seed;
    std::vector<int> pool(n);
    for (int e = 0; e < edge_count; ++e) {
        int size = 1 + static_cast<int>(splitmix64(state) % static_cast<std::uint64_t>(max_edge_size));
        for (int i = 0; i < n; ++i) pool[i] = i + 1;
        for (int i = 0; i < size; ++i) {
            int j = i + static_cast<int>(splitmix64(state) % static_cast<std::uint64_t>(n - i));
            std::swap(pool[i], pool[j]);
        }
        std::vector<int> edge(pool.begin(), pool.begin() + size);
        std::sort(edge.begin(), edge.end());
        h.edges.push_back(std::move(edge));
    }
    return h;
}

} // namespace symdisc
