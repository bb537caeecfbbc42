#include <doctest.h>

#include "symdisc/bounds.hpp"
#include "symdisc/errors.hpp"

using namespace symdisc;

namespace {

// Direct rational evaluation of the threshold inequality; independent of the
// scaled-integer route inside min_m_for_lower_bound.
bool threshold_holds(int k, int d, long long m) {
    for (int kappa = k; kappa <= d; ++kappa) {
        BigRational lhs(binomial(m, kappa), 2);
        for (int l = 1; l < kappa; ++l)
            lhs -= BigRational(factorial(l) * stirling2(d, l) * binomial(m, l));
        if (lhs < BigRational(int_pow(BigInt(m), k), 3 * factorial(k))) return false;
    }
    return true;
}

// [3]^2 colored 1 above the diagonal, 2 below, diagonal as given.
ProductColoring plane3(const std::vector<int>& diagonal, int c) {
    std::vector<int> colors(9);
    for (int x = 1; x <= 3; ++x)
        for (int y = 1; y <= 3; ++y)
            colors[static_cast<std::size_t>((x - 1) * 3 + (y - 1))] =
                x < y ? 1 : (x > y ? 2 : diagonal[static_cast<std::size_t>(x - 1)]);
    return ProductColoring::make_explicit(3, 2, c, colors);
}

} // namespace

TEST_CASE("threshold m for the lower-bound chain") {
    CHECK(min_m_for_lower_bound(2, 2) == 15); // frozen from the rational oracle
    CHECK(threshold_holds(2, 2, 15));
    CHECK_FALSE(threshold_holds(2, 2, 14));

    for (const auto& [k, d] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {2, 4}}) {
        const long long m = min_m_for_lower_bound(k, d);
        CHECK(threshold_holds(k, d, m));
        CHECK_FALSE(threshold_holds(k, d, m - 1));
    }

    CHECK_THROWS_AS(min_m_for_lower_bound(1, 2), argument_error);
    CHECK_THROWS_AS(min_m_for_lower_bound(3, 2), argument_error);
}

TEST_CASE("census of a plane coloring") {
    const auto chi = plane3({1, 2, 1}, 2);
    const auto census = census_of_coloring(chi, {1, 2, 3});
    CHECK(census.d == 2);
    CHECK(census.m == 3);
    CHECK(census.non_mono[0] == 1); // diagonal carries two colors
    CHECK(census.mono_counts[1] == std::vector<long long>{1, 1});
    CHECK(census.non_mono[1] == 0);

    CHECK_THROWS_AS(census_of_coloring(chi, {2, 1}), argument_error);
    CHECK_THROWS_AS(census_of_coloring(chi, {1, 4}), argument_error);
}

TEST_CASE("imbalance lower bound, monochromatic plane") {
    // every off-diagonal point color 1: both 2-simplices in color 1
    const auto chi = ProductColoring::make_explicit(3, 2, 2, std::vector<int>(9, 1));
    const auto census = census_of_coloring(chi, {1, 2, 3});
    REQUIRE(census.non_mono[1] == 0);
    const BigRational bound = imbalance_lower_bound(census, 2);
    // first term 3, correction (1/2)(9 - 6) = 3/2
    CHECK(bound == BigRational(3, 2));

    // the chain's first line: the bound never exceeds the true deviation
    CHECK(bound <= BigRational(BigInt(2 * 9 - 9), 2));
}

TEST_CASE("imbalance lower bound is negative for a balanced census") {
    const auto chi = plane3({1, 1, 1}, 2); // triangles in different colors
    const auto census = census_of_coloring(chi, {1, 2, 3});
    CHECK(imbalance_lower_bound(census, 2) == BigRational(-3, 2));
}

TEST_CASE("imbalance lower bound rejects incomplete censuses") {
    std::vector<int> colors(9, 1);
    colors[1] = 2; // (1,2) and (1,3) in different colors: dim-2 simplex not mono
    const auto chi = ProductColoring::make_explicit(3, 2, 2, colors);
    const auto census = census_of_coloring(chi, {1, 2, 3});
    REQUIRE(census.non_mono[1] == 1);
    CHECK_THROWS_AS(imbalance_lower_bound(census, 2), argument_error);
    CHECK_THROWS_AS(imbalance_lower_bound(census, 1), argument_error);
}

TEST_CASE("find_monochromatic_subgrid basics") {
    const auto constant = ProductColoring::make_explicit(3, 2, 2, std::vector<int>(9, 1));
    CHECK(find_monochromatic_subgrid(constant, 2) == std::vector<int>{1, 2});
    CHECK(find_monochromatic_subgrid(constant, 3) == std::vector<int>{1, 2, 3});

    // all three diagonal colors distinct: no monochromatic pair survives
    const auto distinct = plane3({1, 2, 3}, 3);
    CHECK_FALSE(find_monochromatic_subgrid(distinct, 2).has_value());

    CHECK_THROWS_AS(find_monochromatic_subgrid(constant, 4), argument_error);
}

TEST_CASE("every 2-coloring of [3]^2 has a monochromatic pair") {
    for (int mask = 0; mask < (1 << 9); ++mask) {
        std::vector<int> colors(9);
        for (int b = 0; b < 9; ++b) colors[static_cast<std::size_t>(b)] = 1 + ((mask >> b) & 1);
        const auto chi = ProductColoring::make_explicit(3, 2, 2, colors);
        const auto T = find_monochromatic_subgrid(chi, 2);
        REQUIRE(T.has_value());
        // re-check independently: all simplices of T^2 monochromatic
        for (int l = 1; l <= 2; ++l)
            for (const auto& id : enumerate_simplices(2, {l})) {
                int color = 0;
                for (const auto& p : simplex_points(id, *T)) {
                    const int col = evaluate(chi, p);
                    if (color == 0) color = col;
                    CHECK(col == color);
                }
            }
    }
}

TEST_CASE("ramsey desk search") {
    const auto r1 = ramsey_search(2, 2, 2, 4);
    CHECK(r1.status == RamseySearchResult::Status::Found);
    CHECK(r1.n == 3);
    CHECK(r1.largest_counterexample_n == 2);
    REQUIRE(r1.counterexample.has_value());
    CHECK_FALSE(find_monochromatic_subgrid(*r1.counterexample, 2).has_value());

    // scan limit below the answer: conclusive counterexamples, no minimal n
    const auto r2 = ramsey_search(3, 2, 2, 3);
    CHECK(r2.status == RamseySearchResult::Status::Unknown);
    CHECK_FALSE(r2.budget_exhausted);
    CHECK(r2.largest_counterexample_n == 3);

    // exhausted budget is reported, never silently wrong
    const auto r3 = ramsey_search(2, 2, 2, 4, 2);
    CHECK(r3.status == RamseySearchResult::Status::Unknown);
    CHECK(r3.budget_exhausted);

    CHECK_THROWS_AS(ramsey_search(2, 2, 3, 2), argument_error);

    // m = 1 is witnessed by any single grid point
    const auto r4 = ramsey_search(2, 2, 1, 2);
    CHECK(r4.status == RamseySearchResult::Status::Found);
    CHECK(r4.n == 1);
}

TEST_CASE("kappa is the largest unbalanced dimension") {
    const auto mono = ProductColoring::make_explicit(3, 2, 2, std::vector<int>(9, 1));
    CHECK(largest_unbalanced_dimension(census_of_coloring(mono, {1, 2, 3})) == 2);
    const auto split = plane3({1, 1, 1}, 2);
    CHECK(largest_unbalanced_dimension(census_of_coloring(split, {1, 2, 3})) == 0);
}

TEST_CASE("end-to-end lower-bound chain at toy scale: c=3, d=2, m=2") {
    // The gate fails at k=2 (3 does not divide 2! S(2,2) = 2) and the Ramsey
    // search puts n = 4; from there every coloring of [4]^2 yields a size-2
    // grid whose census drives the chain.
    REQUIRE(ramsey_search(3, 2, 2, 5).n == 4);
    std::uint64_t state = 4242;
    for (int trial = 0; trial < 400; ++trial) {
        std::vector<int> colors(16);
        for (auto& col : colors) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            col = 1 + static_cast<int>((state >> 33) % 3);
        }
        const auto chi = ProductColoring::make_explicit(4, 2, 3, colors);
        const auto T = find_monochromatic_subgrid(chi, 2);
        REQUIRE(T.has_value());
        const auto census = census_of_coloring(chi, *T);
        const int kappa = largest_unbalanced_dimension(census);
        // three colors can never split two simplices evenly
        REQUIRE(kappa == 2);
        const BigRational bound = imbalance_lower_bound(census, kappa);
        // the chain's first line: bound <= max_i | |chi^-1(i) ∩ T^2| - |T^2|/3 |
        std::vector<long long> counts(3, 0);
        for (int x : *T)
            for (int y : *T) ++counts[static_cast<std::size_t>(evaluate(chi, {x, y}) - 1)];
        BigInt dev = 0;
        for (long long cnt : counts) {
            BigInt v = 3 * BigInt(cnt) - 4;
            if (v < 0) v = -v;
            dev = std::max(dev, v);
        }
        CHECK(bound <= BigRational(dev, 3));
    }
}

TEST_CASE("ramsey prover agrees with full coloring enumeration") {
    // Oracle: enumerate every c-coloring of [n]^2 and test each one through
    // find_monochromatic_subgrid; compare against the pruned search verdict.
    const auto oracle_all_good = [](int c, int n, int m) {
        const int points = n * n;
        long long total = 1;
        for (int i = 0; i < points; ++i) total *= c;
        for (long long code = 0; code < total; ++code) {
            long long v = code;
            std::vector<int> colors(static_cast<std::size_t>(points));
            for (auto& col : colors) {
                col = 1 + static_cast<int>(v % c);
                v /= c;
            }
            const auto chi = ProductColoring::make_explicit(n, 2, c, colors);
            if (!find_monochromatic_subgrid(chi, m).has_value()) return false;
        }
        return true;
    };

    CHECK_FALSE(oracle_all_good(2, 2, 2));
    CHECK(oracle_all_good(2, 3, 2));
    CHECK_FALSE(oracle_all_good(3, 3, 2));
    const auto r2 = ramsey_search(2, 2, 2, 3);
    CHECK(r2.n == 3); // matches: fails at 2, holds at 3
    const auto r3 = ramsey_search(3, 2, 2, 3);
    CHECK(r3.status == RamseySearchResult::Status::Unknown); // matches: still fails at 3
}

TEST_CASE("complete hypergraph discrepancy") {
    CHECK(complete_disc_value(4, 2, 2) == disc_exact(complete_uniform(4, 2), 2).value);
    CHECK(complete_disc_value(4, 2, 2).str() == "2/2");
    CHECK(complete_disc_value(6, 2, 3).str() == "4/3");

    // below the pigeonhole threshold: exact fallback on the single edge
    CHECK(complete_disc_value(3, 3, 2) == disc_exact(complete_uniform(3, 3), 2).value);
    CHECK(complete_disc_value(3, 3, 2).str() == "1/2");

    CHECK_THROWS_AS(complete_disc_value(3, 4, 2), argument_error);
    // fallback honors the exact-solver cap
    CHECK_THROWS_AS(complete_disc_value(12, 7, 13, 5), size_cap_error);
}
