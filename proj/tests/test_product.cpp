#include <doctest.h>

#include <numeric>

#include "symdisc/constructions.hpp"
#include "symdisc/errors.hpp"
#include "symdisc/product.hpp"
#include "symdisc/solver.hpp"

using namespace symdisc;

namespace {

DiscValue dv(long long num, int den) { return DiscValue{BigInt(num), den}; }

// Small deterministic generator for arbitrary table assignments.
struct Rng {
    std::uint64_t state;
    int next(int bound) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<int>((state >> 33) % static_cast<std::uint64_t>(bound));
    }
};

ProductColoring random_simplex_assigned(int n, int d, int c, std::uint64_t seed) {
    Rng rng{seed};
    std::vector<std::vector<int>> table(std::max(0, d - 1));
    for (int k = 2; k <= d; ++k) {
        table[k - 2].resize(static_cast<std::size_t>(simplex_count(d, k)));
        for (auto& col : table[k - 2]) col = 1 + rng.next(c);
    }
    Coloring base{c, {}};
    for (int v = 0; v < n; ++v) base.colors.push_back(1 + rng.next(c));
    return ProductColoring::make_simplex_assigned(
        n, d, SimplexAssignment::from_table(d, c, std::move(table)), std::move(base));
}

} // namespace

TEST_CASE("tuple ranks use coordinate 1 as most significant") {
    CHECK(tuple_rank({1, 1}, 2) == 0);
    CHECK(tuple_rank({1, 2}, 2) == 1);
    CHECK(tuple_rank({2, 1}, 2) == 2);
    for (long long r = 0; r < 27; ++r) CHECK(tuple_rank(tuple_unrank(r, 3, 3), 3) == r);
    CHECK_THROWS_AS(tuple_rank({0, 1}, 2), argument_error);
    CHECK_THROWS_AS(tuple_unrank(4, 2, 2), argument_error);
}

TEST_CASE("symmetric product, explicit form") {
    const auto p1 = symmetric_product_explicit(Hypergraph{2, {{1, 2}}}, 2);
    CHECK(p1.n == 4);
    REQUIRE(p1.edges.size() == 1);
    CHECK(p1.edges[0].size() == 4);

    const auto p2 = symmetric_product_explicit(Hypergraph{3, {{1, 2}}}, 2);
    CHECK(p2.n == 9);
    CHECK(p2.edges[0] == std::vector<int>{1, 2, 4, 5}); // (1,1),(1,2),(2,1),(2,2)

    const auto p3 = symmetric_product_explicit(Hypergraph{2, {{1}, {1, 2}}}, 3);
    CHECK(p3.edges[0].size() == 1);
    CHECK(p3.edges[1].size() == 8);

    CHECK_THROWS_AS(symmetric_product_explicit(Hypergraph{10, {{1}}}, 6), size_cap_error);
}

TEST_CASE("direct product") {
    const Hypergraph one_edge{2, {{1, 2}}};
    CHECK(direct_product(one_edge, 2).edges == symmetric_product_explicit(one_edge, 2).edges);

    const auto singletons = direct_product(Hypergraph{2, {{1}, {2}}}, 2);
    CHECK(singletons.edges.size() == 4);
    for (const auto& e : singletons.edges) CHECK(e.size() == 1);

    const auto two = direct_product(Hypergraph{2, {{1}, {1, 2}}}, 3);
    CHECK(two.edges.size() <= 8);

    // duplicated factors collapse to one product edge
    const auto dup = direct_product(Hypergraph{2, {{1, 2}, {1, 2}}}, 2);
    CHECK(dup.edges.size() == 1);
}

TEST_CASE("evaluate across the coloring variants") {
    const auto table = ProductColoring::make_explicit(2, 2, 3, {1, 2, 3, 1});
    for (long long r = 0; r < 4; ++r)
        CHECK(evaluate(table, tuple_unrank(r, 2, 2)) == std::vector<int>{1, 2, 3, 1}[r]);

    SimplexAssignment assignment = SimplexAssignment::round_robin(2, 3);
    assignment.set_color(parse_simplex_id("k=2;J=1|2;sigma=1,2"), 3);
    const auto chi = ProductColoring::make_simplex_assigned(2, 2, assignment, Coloring{3, {1, 2}});
    CHECK(evaluate(chi, {1, 2}) == 3);
    CHECK(evaluate(chi, {1, 1}) == 1); // diagonal -> base
    CHECK(evaluate(chi, {2, 2}) == 2);

    CHECK_THROWS_AS(evaluate(chi, {1, 2, 1}), argument_error);
    CHECK_THROWS_AS(evaluate(chi, {0, 2}), argument_error);
}

TEST_CASE("edge power counts: balanced three-color example on E = {1,2}, d = 3") {
    const Coloring psi{3, {1, 2}};
    const auto chi = simplex_balanced_coloring(psi, 3);
    const auto fast = edge_power_counts(chi, {1, 2});
    CHECK(fast.total == 8);
    CHECK(fast.counts == std::vector<BigInt>{3, 3, 2});

    const auto slow = edge_power_counts(chi, {1, 2}, CountStrategy::Slow);
    CHECK(slow.counts == fast.counts);
    CHECK(slow.total == fast.total);
}

TEST_CASE("edge power counts: singleton edge is the base indicator") {
    const Coloring psi{3, {2, 1}};
    const auto chi = simplex_balanced_coloring(psi, 3);
    const auto counts = edge_power_counts(chi, {1});
    CHECK(counts.total == 1);
    CHECK(counts.counts == std::vector<BigInt>{0, 1, 0}); // psi(1) = 2
}

TEST_CASE("fast equals slow for arbitrary simplex assignments") {
    for (int n = 2; n <= 4; ++n)
        for (int d = 1; d <= 4; ++d)
            for (std::uint64_t seed = 1; seed <= 3; ++seed) {
                const auto chi = random_simplex_assigned(n, d, 3, seed * 131 + n + d);
                std::vector<int> edge;
                for (int v = 1 + static_cast<int>(seed) % 2; v <= n; ++v) edge.push_back(v);
                const auto fast = edge_power_counts(chi, edge);
                const auto slow = edge_power_counts(chi, edge, CountStrategy::Slow);
                CHECK(fast.counts == slow.counts);
                CHECK(fast.total == slow.total);
                CHECK(std::accumulate(fast.counts.begin(), fast.counts.end(), BigInt(0)) ==
                      fast.total);
            }
}

TEST_CASE("product discrepancy of structured and degenerate colorings") {
    const Hypergraph h{2, {{1, 2}}};
    const auto chi = simplex_balanced_coloring(Coloring{3, {1, 2}}, 3);
    CHECK(product_disc_of_coloring(h, chi) == dv(2, 3)); // max(|3-8/3|, |2-8/3|)

    // constant explicit coloring on one edge: the worst case (1 - 1/c)|E|^d
    const auto constant = ProductColoring::make_explicit(2, 2, 2, {1, 1, 1, 1});
    CHECK(product_disc_of_coloring(h, constant) == dv(4, 2)); // (1 - 1/2) * 4

    // singleton edge: product discrepancy equals the base imbalance there
    const Hypergraph hs{2, {{2}}};
    const auto chi2 = simplex_balanced_coloring(Coloring{3, {1, 2}}, 3);
    CHECK(product_disc_of_coloring(hs, chi2) == dv(2, 3)); // |1 - 1/3| on one vertex
}

TEST_CASE("implicit counting matches full materialization") {
    for (int n = 2; n <= 4; ++n)
        for (int d = 1; d <= 3; ++d) {
            const auto h = random_hypergraph(n, 3, n, static_cast<std::uint64_t>(10 * n + d));
            const auto chi = random_simplex_assigned(n, d, 3, static_cast<std::uint64_t>(n * d));
            const auto implicit = product_disc_of_coloring(h, chi);
            const auto flat = flatten_to_coloring(chi);
            const auto power = symmetric_product_explicit(h, d);
            CHECK(disc_of_coloring(power, flat) == implicit);
        }
}

TEST_CASE("R(E) splits exactly evenly under a balanced assignment") {
    // gate-passing combinations: every color count on E^d minus the diagonal
    // share is |R(E)|/c
    const std::vector<std::pair<int, int>> combos = {{2, 2}, {2, 3}, {2, 4}, {3, 3}, {6, 3}};
    for (const auto& [c, d] : combos) {
        Coloring psi{c, {}};
        for (int v = 0; v < 5; ++v) psi.colors.push_back(1 + v % c);
        const auto chi = simplex_balanced_coloring(psi, d);
        for (int esize = 1; esize <= 5; ++esize) {
            std::vector<int> edge;
            for (int v = 1; v <= esize; ++v) edge.push_back(v);
            const auto counts = edge_power_counts(chi, edge);
            const BigInt redge = counts.total - esize; // |R(E)| = |E|^d - |E|
            CHECK(redge % c == 0);
            for (int i = 0; i < c; ++i) {
                long long base_i = 0;
                for (int v : edge)
                    if (psi.color(v) == i + 1) ++base_i;
                CHECK(counts.counts[i] - base_i == redge / c);
            }
        }
    }
}

TEST_CASE("slow path cap is enforced; fast path needs none") {
    const Coloring psi{2, {1, 2}};
    const auto chi = simplex_balanced_coloring(psi, 17); // gate(2,d) always passes
    CHECK_THROWS_AS(edge_power_counts(chi, {1, 2}, CountStrategy::Slow), size_cap_error);
    const auto counts = edge_power_counts(chi, {1, 2});
    CHECK(counts.total == int_pow(BigInt(2), 17));
    CHECK(counts.counts[0] + counts.counts[1] == counts.total);
    // 2^17 - 2 off-diagonal points split evenly, the diagonal is balanced too
    BigInt dev = 2 * counts.counts[0] - counts.total;
    if (dev < 0) dev = -dev;
    CHECK(dev == 0);
}

TEST_CASE("structural validation of product colorings") {
    CHECK_THROWS_AS(ProductColoring::make_explicit(2, 2, 2, {1, 1, 1}), argument_error);
    CHECK_THROWS_AS(ProductColoring::make_explicit(2, 2, 2, {1, 1, 1, 3}), argument_error);
    CHECK_THROWS_AS(
        ProductColoring::make_simplex_assigned(3, 2, SimplexAssignment::round_robin(2, 2),
                                               Coloring{2, {1, 2}}),
        argument_error);
    CHECK_THROWS_AS(SimplexAssignment::from_table(2, 2, {{1, 2, 1}}), argument_error);
}
