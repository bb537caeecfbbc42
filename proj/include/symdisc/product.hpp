#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "symdisc/hypergraph.hpp"
#include "symdisc/simplex.hpp"

namespace symdisc {

inline constexpr long long kDefaultExplicitCap = 100000;

// Tuples of [n]^d are ranked mixed-radix with coordinate 1 most significant:
// rank(x) = sum_i (x_i - 1) * n^(d-i), in [0, n^d). Product-hypergraph vertex
// ids are rank + 1. File formats expose these ranks.
long long tuple_rank(const std::vector<int>& x, int n);
std::vector<int> tuple_unrank(long long rank, int n, int d);

// Hypergraph on n^d vertices with one edge E^d per base edge.
Hypergraph symmetric_product_explicit(const Hypergraph& h, int d,
                                      long long cap = kDefaultExplicitCap);

// All edges E_1 x ... x E_d, deduplicated by vertex set, in first-occurrence
// order of the edge-index odometer.
Hypergraph direct_product(const Hypergraph& h, int d,
                          long long vertex_cap = kDefaultExplicitCap,
                          long long edge_cap = kDefaultExplicitCap);

// Color assignment for the simplices of [n]^d, dimensions 2..d. Either the
// computed round-robin rule color(rank) = 1 + (rank mod c) over the fixed
// enumeration order (no storage, any d the rank arithmetic supports) or a
// stored per-dimension table indexed by simplex rank.
class SimplexAssignment {
public:
    static SimplexAssignment round_robin(int d, int c);
    // per_dim[k-2] must hold simplex_count(d,k) colors in 1..c, for k = 2..d.
    static SimplexAssignment from_table(int d, int c, std::vector<std::vector<int>> per_dim);

    int d() const { return d_; }
    int c() const { return c_; }
    bool is_round_robin() const { return round_robin_; }

    int color_of(int dim, long long rank) const;
    int color_of(const SimplexId& id) const;

    // Materializes the table form if needed.
    void set_color(const SimplexId& id, int color, long long cap = kDefaultExplicitCap);

    // Per-color counts of dimension-dim simplices.
    std::vector<long long> dimension_counts(int dim) const;

    SimplexAssignment materialized(long long cap = kDefaultExplicitCap) const;
    const std::vector<std::vector<int>>& table() const; // table form only

private:
    SimplexAssignment(int d, int c, bool rr, std::vector<std::vector<int>> table);

    int d_ = 0;
    int c_ = 0;
    bool round_robin_ = true;
    std::vector<std::vector<int>> table_; // [dim-2][rank], empty when round robin
};

// A coloring of [n]^d, evaluable pointwise, in one of four shapes:
//   Explicit        - stored table over tuple ranks
//   SimplexAssigned - per-simplex colors plus a base coloring for the diagonal
//   ShiftReduced    - prime-power reduction to an inner coloring of dimension
//                     s = d - (p-1)p^(q-1), c = p^q
//   BlockReduced    - first-d'-coordinates reduction to an inner coloring of
//                     dimension d - d' + 1
// Values are immutable after construction and safe to share across threads.
class ProductColoring {
public:
    struct Explicit {
        std::vector<int> colors; // indexed by tuple_rank
    };
    struct SimplexAssigned {
        SimplexAssignment assignment;
        Coloring base; // colors the diagonal
    };
    struct ShiftReduced {
        int p = 0;
        int q = 0;
        std::shared_ptr<const ProductColoring> inner;
    };
    struct BlockReduced {
        int dprime = 0;
        SimplexAssignment assignment; // over the simplices of [n]^dprime
        std::shared_ptr<const ProductColoring> inner;
    };
    using Data = std::variant<Explicit, SimplexAssigned, ShiftReduced, BlockReduced>;

    static ProductColoring make_explicit(int n, int d, int c, std::vector<int> colors);
    static ProductColoring make_simplex_assigned(int n, int d, SimplexAssignment assignment,
                                                 Coloring base);
    static ProductColoring make_shift_reduced(int p, int q, int d, ProductColoring inner);
    static ProductColoring make_block_reduced(int dprime, int d, SimplexAssignment assignment,
                                              ProductColoring inner);
    // Dimension-1 view of a base coloring.
    static ProductColoring from_base(const Coloring& base);

    int n() const { return n_; }
    int d() const { return d_; }
    int c() const { return c_; }
    const Data& data() const { return *data_; }

private:
    ProductColoring(int n, int d, int c, Data data);

    int n_ = 0, d_ = 0, c_ = 0;
    std::shared_ptr<const Data> data_;
};

// Exact per-color counts |chi^-1(i) ∩ E^d| for one base edge E.
struct EdgePowerCounts {
    std::vector<BigInt> counts; // counts[i-1] for color i; they sum to total
    BigInt total;               // |E|^d
};

enum class CountStrategy {
    Fast, // combinatorial recursion; enumeration only for Explicit leaves
    Slow  // enumerate all |E|^d points (oracle; capped)
};

int evaluate(const ProductColoring& chi, const std::vector<int>& x);

EdgePowerCounts edge_power_counts(const ProductColoring& chi, const std::vector<int>& edge,
                                  CountStrategy strategy = CountStrategy::Fast,
                                  long long slow_cap = kDefaultExplicitCap);

// max over base edges E and colors i of |count_i(E^d) - |E|^d / c|.
DiscValue product_disc_of_coloring(const Hypergraph& h, const ProductColoring& chi,
                                   CountStrategy strategy = CountStrategy::Fast,
                                   long long slow_cap = kDefaultExplicitCap);

// Materializations (capped by n^d <= cap).
Coloring flatten_to_coloring(const ProductColoring& chi, long long cap = kDefaultExplicitCap);
ProductColoring materialize_explicit(const ProductColoring& chi,
                                     long long cap = kDefaultExplicitCap);

} // namespace symdisc
