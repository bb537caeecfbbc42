#pragma once

#include <optional>

#include "symdisc/product.hpp"
#include "symdisc/solver.hpp"

namespace symdisc {

// Smallest m with  (1/2) C(m,kappa) - sum_{l=0}^{kappa-1} l! S(d,l) C(m,l)
// >= m^k / (3 k!)  for every kappa in {k,...,d}, found by scanning m upward
// with exact arithmetic. Conventions: S(d,0) = 0 for d >= 1, C(m,l) = 0 for
// l > m.
long long min_m_for_lower_bound(int k, int d);

// Per-dimension, per-color counts of monochromatic simplices of T^d under a
// coloring, plus the number of non-monochromatic simplices per dimension.
// Simplices that are empty on T (dimension > |T|) are not counted either way.
struct SimplexColorCensus {
    int d = 0;
    int c = 0;
    int m = 0;                                       // |T|
    std::vector<std::vector<long long>> mono_counts; // [l-1][i-1]
    std::vector<long long> non_mono;                 // [l-1]
};

SimplexColorCensus census_of_coloring(const ProductColoring& chi, const std::vector<int>& T);

// kappa of the lower-bound chain: the largest dimension >= 2 whose per-color
// monochromatic counts are not all equal, scanning downward from d. Returns 0
// when every dimension >= 2 is balanced.
int largest_unbalanced_dimension(const SimplexColorCensus& census);

// The lower-bound chain evaluated at one kappa:
//   max_i | cnt_kappa(i) C(m,kappa) - (kappa! S(d,kappa)/c) C(m,kappa) |
//   - (c-1)/c * ( m^d - sum_{l=kappa}^{d} l! S(d,l) C(m,l) ).
// Requires every simplex of dimension >= kappa monochromatic in the census.
// May be negative (a vacuous bound); it is returned as-is.
BigRational imbalance_lower_bound(const SimplexColorCensus& census, int kappa);

// First T (lexicographic subset order) of size m with every simplex of T^d
// monochromatic under chi, or nothing.
std::optional<std::vector<int>> find_monochromatic_subgrid(const ProductColoring& chi, int m);

struct RamseySearchResult {
    enum class Status { Found, Unknown };
    Status status = Status::Unknown;
    int n = 0;     // minimal n when Found
    int n_max = 0; // scan limit
    bool budget_exhausted = false;
    int largest_counterexample_n = 0;               // 0 when none found
    std::optional<ProductColoring> counterexample;  // at largest_counterexample_n
    unsigned long long nodes = 0;                   // search nodes visited
};

inline constexpr unsigned long long kDefaultRamseyBudget = 200'000'000ULL;

// Smallest n <= n_max such that every c-coloring of [n]^d contains a size-m
// subset T with all simplices of T^d monochromatic. Each n is settled
// exhaustively: either a counterexample coloring is exhibited or the
// color-symmetry-broken search space is exhausted. Exceeding the node budget
// yields a partial result, never a wrong one.
RamseySearchResult ramsey_search(int c, int d, int m, int n_max,
                                 unsigned long long node_budget = kDefaultRamseyBudget);

// disc of ([n], all m-subsets) with c colors: (1 - 1/c) m whenever
// n >= c(m-1) + 1 (pigeonhole forces a monochromatic edge and no edge can
// deviate further); below that threshold falls back to the exact solver.
DiscValue complete_disc_value(int n, int m, int c, int exact_cap = kDefaultExactCap);

} // namespace symdisc
