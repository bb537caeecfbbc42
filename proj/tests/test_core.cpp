#include <doctest.h>

#include <algorithm>
#include <optional>

#include "symdisc/errors.hpp"
#include "symdisc/solver.hpp"

using namespace symdisc;

namespace {

// Test-only oracle: full enumeration over all c^n colorings, no symmetry
// breaking, no pruning. Enumeration order is lexicographic (last vertex
// fastest), so the kept witness is the lexicographically least optimum.
ExactSolveResult naive_min_disc(const Hypergraph& h, int c) {
    std::vector<int> colors(h.n, 1);
    std::optional<DiscValue> best;
    Coloring best_chi;
    while (true) {
        Coloring chi{c, colors};
        const DiscValue v = disc_of_coloring(h, chi);
        if (!best || v < *best) {
            best = v;
            best_chi = chi;
        }
        int i = h.n - 1;
        while (i >= 0 && colors[i] == c) colors[i--] = 1;
        if (i < 0) break;
        ++colors[i];
    }
    return {*best, best_chi};
}

DiscValue dv(long long num, int den) { return DiscValue{BigInt(num), den}; }

} // namespace

TEST_CASE("hypergraph validation") {
    CHECK_THROWS_AS((Hypergraph{0, {}}).validate(), argument_error);
    CHECK_THROWS_AS((Hypergraph{2, {{}}}).validate(), argument_error);
    CHECK_THROWS_AS((Hypergraph{2, {{2, 1}}}).validate(), argument_error);
    CHECK_THROWS_AS((Hypergraph{2, {{1, 1}}}).validate(), argument_error);
    CHECK_THROWS_AS((Hypergraph{2, {{1, 3}}}).validate(), argument_error);
    CHECK_NOTHROW((Hypergraph{3, {{1, 3}, {2}}}).validate());

    const Hypergraph dup{2, {{1}, {1}}};
    CHECK(has_duplicate_edges(dup));
    CHECK(normalized(dup).edges.size() == 1);
    CHECK_FALSE(has_duplicate_edges(Hypergraph{2, {{1}, {1, 2}}}));
}

TEST_CASE("disc value arithmetic is exact and unreduced") {
    CHECK(dv(4, 3).str() == "4/3");
    CHECK(dv(2, 4) == dv(1, 2));
    CHECK(dv(1, 3) < dv(1, 2));
    CHECK(dv(0, 2) == dv(0, 5));
    CHECK(dv(3, 2) > dv(4, 3));
}

TEST_CASE("disc_of_coloring on the defining examples") {
    CHECK(disc_of_coloring(Hypergraph{2, {{1, 2}}}, Coloring{2, {1, 2}}) == dv(0, 2));
    CHECK(disc_of_coloring(Hypergraph{3, {{1, 2, 3}}}, Coloring{2, {1, 1, 2}}) == dv(1, 2));
    // two edges, three colors: edge {1,2} carries the worst color deviation
    // |2 - 2/3| = 4/3; edge {1,2,3,4} only reaches 2/3
    CHECK(disc_of_coloring(Hypergraph{4, {{1, 2, 3, 4}, {1, 2}}}, Coloring{3, {1, 1, 2, 3}}) ==
          dv(4, 3));
}

TEST_CASE("disc_of_coloring error paths and conventions") {
    CHECK_THROWS_AS(disc_of_coloring(Hypergraph{3, {{1}}}, Coloring{2, {1, 2}}), argument_error);
    // no edges: max over the empty set is 0
    CHECK(disc_of_coloring(Hypergraph{2, {}}, Coloring{2, {1, 2}}) == dv(0, 2));
}

TEST_CASE("disc_of_coloring is invariant under color relabeling") {
    const auto h = random_hypergraph(6, 5, 4, 7);
    const Coloring chi{3, {1, 3, 2, 3, 1, 2}};
    const Coloring relabeled{3, {2, 1, 3, 1, 2, 3}}; // colors mapped 1->2, 2->3, 3->1
    CHECK(disc_of_coloring(h, chi) == disc_of_coloring(h, relabeled));
}

TEST_CASE("disc_exact on small instances") {
    CHECK(disc_exact(Hypergraph{2, {{1}, {1, 2}}}, 2).value == dv(1, 2));
    CHECK(disc_exact(Hypergraph{4, {{1, 2, 3, 4}}}, 3).value == dv(2, 3));
    CHECK(disc_exact(complete_uniform(4, 2), 2).value == dv(2, 2)); // = 1, frozen from naive
    CHECK(naive_min_disc(complete_uniform(4, 2), 2).value == dv(2, 2));
}

TEST_CASE("disc_exact returns a witness achieving its value") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const auto h = random_hypergraph(5, 4, 3, seed);
        const auto res = disc_exact(h, 3);
        CHECK(disc_of_coloring(h, res.witness) == res.value);
    }
}

TEST_CASE("symmetry-broken search equals full enumeration, witness included") {
    for (int n = 2; n <= 6; n += 2)
        for (int c = 2; c <= 3; ++c)
            for (std::uint64_t seed = 1; seed <= 5; ++seed) {
                const auto h = random_hypergraph(n, 1 + static_cast<int>(seed) % 4, n, seed * 31);
                const auto fast = disc_exact(h, c);
                const auto slow = naive_min_disc(h, c);
                CHECK(fast.value == slow.value);
                CHECK(fast.witness.colors == slow.witness.colors);
            }
}

TEST_CASE("disc_exact lower-bounds every coloring") {
    const auto h = random_hypergraph(5, 5, 4, 11);
    const auto best = disc_exact(h, 3).value;
    std::uint64_t state = 99;
    for (int trial = 0; trial < 20; ++trial) {
        Coloring chi{3, {}};
        for (int v = 0; v < h.n; ++v) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            chi.colors.push_back(1 + static_cast<int>((state >> 33) % 3));
        }
        CHECK(best <= disc_of_coloring(h, chi));
    }
}

TEST_CASE("zero discrepancy iff an exactly even split exists") {
    CHECK(disc_exact(Hypergraph{2, {{1, 2}}}, 2).value == dv(0, 2));
    CHECK(disc_exact(Hypergraph{4, {{1, 2}, {3, 4}, {1, 2, 3, 4}}}, 2).value == dv(0, 2));
    CHECK(disc_exact(Hypergraph{3, {{1, 2, 3}}}, 2).value != dv(0, 2));
    CHECK(disc_exact(Hypergraph{2, {{1}}}, 2).value != dv(0, 2));
}

TEST_CASE("disc_exact cap and degenerate edge sets") {
    CHECK_THROWS_WITH_AS(static_cast<void>(disc_exact(complete_uniform(6, 2), 2, 5)),
                         doctest::Contains("cap 5"), size_cap_error);
    const auto res = disc_exact(Hypergraph{3, {}}, 2);
    CHECK(res.value == dv(0, 2));
    CHECK(res.witness.colors == std::vector<int>{1, 1, 1});
}

TEST_CASE("complete_uniform") {
    const auto h32 = complete_uniform(3, 2);
    CHECK(h32.edges == std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(complete_uniform(4, 4).edges == std::vector<std::vector<int>>{{1, 2, 3, 4}});
    CHECK(complete_uniform(5, 3).edges.size() == 10);
    CHECK_THROWS_AS(complete_uniform(3, 4), argument_error);
    CHECK_THROWS_AS(complete_uniform(3, 0), argument_error);
}

TEST_CASE("random_hypergraph is deterministic and honors its bounds") {
    const auto a = random_hypergraph(3, 2, 3, 1);
    const auto b = random_hypergraph(3, 2, 3, 1);
    CHECK(a.edges == b.edges);

    CHECK(random_hypergraph(1, 1, 1, 123).edges == std::vector<std::vector<int>>{{1}});

    const auto h = random_hypergraph(5, 6, 4, 42);
    CHECK(h.edges.size() == 6);
    for (const auto& e : h.edges) {
        CHECK(e.size() >= 1);
        CHECK(e.size() <= 4);
        CHECK(std::is_sorted(e.begin(), e.end()));
        CHECK(e.back() <= 5);
        CHECK(e.front() >= 1);
    }
    CHECK_NOTHROW(h.validate());

    CHECK_THROWS_AS(random_hypergraph(0, 1, 1, 0), argument_error);
    CHECK_THROWS_AS(random_hypergraph(3, 0, 1, 0), argument_error);
    CHECK_THROWS_AS(random_hypergraph(3, 1, 4, 0), argument_error);
}
