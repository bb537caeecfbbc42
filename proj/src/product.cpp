#include "symdisc/product.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "symdisc/errors.hpp"

namespace symdisc {

namespace {

// n^d as long long, or throws when it does not fit.
long long checked_pow_ll(int n, int d, const char* what) {
    long long r = 1;
    for (int i = 0; i < d; ++i) {
        if (r > std::numeric_limits<long long>::max() / n)
            throw size_cap_error(std::string(what) + ": n^d exceeds 64-bit range");
        r *= n;
    }
    return r;
}

void check_edge(const std::vector<int>& edge, int n, const char* what) {
    if (edge.empty()) throw argument_error(std::string(what) + ": empty edge");
    int prev = 0;
    for (int v : edge) {
        if (v < 1 || v > n) throw argument_error(std::string(what) + ": edge vertex out of range");
        if (v <= prev)
            throw argument_error(std::string(what) + ": edge vertices must be strictly ascending");
        prev = v;
    }
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int q = 2; static_cast<long long>(q) * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

} // namespace

long long tuple_rank(const std::vector<int>& x, int n) {
    if (n < 1) throw argument_error("tuple_rank: n must be positive");
    if (x.empty()) throw argument_error("tuple_rank: empty tuple");
    long long rank = 0;
    for (int v : x) {
        if (v < 1 || v > n) throw argument_error("tuple_rank: coordinate out of range");
        if (rank > (std::numeric_limits<long long>::max() - (v - 1)) / n)
            throw size_cap_error("tuple_rank: rank exceeds 64-bit range");
        rank = rank * n + (v - 1);
    }
    return rank;
}

std::vector<int> tuple_unrank(long long rank, int n, int d) {
    if (n < 1 || d < 1) throw argument_error("tuple_unrank: n and d must be positive");
    const long long total = checked_pow_ll(n, d, "tuple_unrank");
    if (rank < 0 || rank >= total) throw argument_error("tuple_unrank: rank out of range");
    std::vector<int> x(d);
    for (int i = d - 1; i >= 0; --i) {
        x[i] = static_cast<int>(rank % n) + 1;
        rank /= n;
    }
    return x;
}

Hypergraph symmetric_product_explicit(const Hypergraph& h, int d, long long cap) {
    h.validate();
    if (d < 1) throw argument_error("symmetric_product_explicit: d must be positive");
    const long long total = checked_pow_ll(h.n, d, "symmetric_product_explicit");
    if (total > cap || total > std::numeric_limits<int>::max())
        throw size_cap_error("symmetric_product_explicit: n^d = " + std::to_string(total) +
                             " exceeds cap " + std::to_string(cap));

    Hypergraph out;
    out.n = static_cast<int>(total);
    for (const auto& e : h.edges) {
        // Odometer over E^d with the last coordinate fastest; since E is
        // ascending this emits ranks in ascending order already.
        std::vector<int> idx(d, 0);
        std::vector<int> edge;
        while (true) {
            long long rank = 0;
            for (int i = 0; i < d; ++i) rank = rank * h.n + (e[idx[i]] - 1);
            edge.push_back(static_cast<int>(rank) + 1);
            int i = d - 1;
            while (i >= 0 && idx[i] + 1 == static_cast<int>(e.size())) idx[i--] = 0;
            if (i < 0) break;
            ++idx[i];
        }
        out.edges.push_back(std::move(edge));
    }
    return out;
}

Hypergraph direct_product(const Hypergraph& h, int d, long long vertex_cap, long long edge_cap) {
    h.validate();
    if (d < 1) throw argument_error("direct_product: d must be positive");
    const long long total = checked_pow_ll(h.n, d, "direct_product");
    if (total > vertex_cap || total > std::numeric_limits<int>::max())
        throw size_cap_error("direct_product: n^d = " + std::to_string(total) + " exceeds cap " +
                             std::to_string(vertex_cap));
    const long long m = static_cast<long long>(h.edges.size());
    long long tuples = 1;
    for (int i = 0; i < d; ++i) {
        if (m != 0 && tuples > edge_cap / m + 1) {
            tuples = edge_cap + 1;
            break;
        }
        tuples *= m;
    }
    if (tuples > edge_cap)
        throw size_cap_error("direct_product: |E|^d edge tuples exceed cap " +
                             std::to_string(edge_cap));

    Hypergraph out;
    out.n = static_cast<int>(total);
    std::set<std::vector<int>> seen; // dedup by sorted vertex set
    if (h.edges.empty()) return out;

    std::vector<int> which(d, 0); // edge index per coordinate
    while (true) {
        std::vector<int> edge;
        std::vector<int> idx(d, 0);
        while (true) {
            long long rank = 0;
            for (int i = 0; i < d; ++i) rank = rank * h.n + (h.edges[which[i]][idx[i]] - 1);
            edge.push_back(static_cast<int>(rank) + 1);
            int i = d - 1;
            while (i >= 0 && idx[i] + 1 == static_cast<int>(h.edges[which[i]].size())) idx[i--] = 0;
            if (i < 0) break;
            ++idx[i];
        }
        std::sort(edge.begin(), edge.end());
        if (seen.insert(edge).second) out.edges.push_back(std::move(edge));
        int i = d - 1;
        while (i >= 0 && which[i] + 1 == static_cast<int>(m)) which[i--] = 0;
        if (i < 0) break;
        ++which[i];
    }
    return out;
}

// ---------------------------------------------------------------------------
// SimplexAssignment

SimplexAssignment::SimplexAssignment(int d, int c, bool rr, std::vector<std::vector<int>> table)
    : d_(d), c_(c), round_robin_(rr), table_(std::move(table)) {}

SimplexAssignment SimplexAssignment::round_robin(int d, int c) {
    if (d < 1) throw argument_error("simplex assignment: d must be positive");
    if (c < 2) throw argument_error("simplex assignment: need at least 2 colors");
    for (int k = 2; k <= d; ++k) simplex_count(d, k); // fail early if ranks overflow
    return SimplexAssignment(d, c, true, {});
}

SimplexAssignment SimplexAssignment::from_table(int d, int c,
                                                std::vector<std::vector<int>> per_dim) {
    if (d < 1) throw argument_error("simplex assignment: d must be positive");
    if (c < 2) throw argument_error("simplex assignment: need at least 2 colors");
    if (static_cast<int>(per_dim.size()) != std::max(0, d - 1))
        throw argument_error("simplex assignment: expected one table per dimension 2..d");
    for (int k = 2; k <= d; ++k) {
        const auto& t = per_dim[k - 2];
        if (static_cast<long long>(t.size()) != simplex_count(d, k))
            throw argument_error("simplex assignment: table size mismatch at dimension " +
                                 std::to_string(k));
        for (int col : t)
            if (col < 1 || col > c) throw argument_error("simplex assignment: color out of range");
    }
    return SimplexAssignment(d, c, false, std::move(per_dim));
}

int SimplexAssignment::color_of(int dim, long long rank) const {
    if (dim < 2 || dim > d_)
        throw argument_error("simplex assignment: dimension out of range (diagonal simplices "
                             "are colored by the base coloring)");
    if (rank < 0 || rank >= simplex_count(d_, dim))
        throw argument_error("simplex assignment: rank out of range");
    if (round_robin_) return 1 + static_cast<int>(rank % c_);
    return table_[dim - 2][static_cast<std::size_t>(rank)];
}

int SimplexAssignment::color_of(const SimplexId& id) const {
    if (id.partition.d != d_) throw argument_error("simplex assignment: ambient dimension mismatch");
    return color_of(id.dimension(), simplex_rank(id));
}

void SimplexAssignment::set_color(const SimplexId& id, int color, long long cap) {
    if (id.partition.d != d_) throw argument_error("simplex assignment: ambient dimension mismatch");
    if (color < 1 || color > c_) throw argument_error("simplex assignment: color out of range");
    const int dim = id.dimension();
    if (dim < 2 || dim > d_) throw argument_error("simplex assignment: dimension out of range");
    if (round_robin_) *this = materialized(cap);
    table_[dim - 2][static_cast<std::size_t>(simplex_rank(id))] = color;
}

std::vector<long long> SimplexAssignment::dimension_counts(int dim) const {
    if (dim < 2 || dim > d_) throw argument_error("simplex assignment: dimension out of range");
    std::vector<long long> counts(c_, 0);
    const long long total = simplex_count(d_, dim);
    if (round_robin_) {
        const long long base = total / c_;
        const long long rem = total % c_;
        for (int i = 0; i < c_; ++i) counts[i] = base + (i < rem ? 1 : 0);
    } else {
        for (int col : table_[dim - 2]) ++counts[col - 1];
    }
    return counts;
}

SimplexAssignment SimplexAssignment::materialized(long long cap) const {
    if (!round_robin_) return *this;
    long long total = 0;
    for (int k = 2; k <= d_; ++k) total += simplex_count(d_, k);
    if (total > cap)
        throw size_cap_error("simplex assignment: " + std::to_string(total) +
                             " simplices exceed cap " + std::to_string(cap));
    std::vector<std::vector<int>> per_dim(std::max(0, d_ - 1));
    for (int k = 2; k <= d_; ++k) {
        const long long count = simplex_count(d_, k);
        auto& t = per_dim[k - 2];
        t.resize(static_cast<std::size_t>(count));
        for (long long r = 0; r < count; ++r) t[static_cast<std::size_t>(r)] = 1 + static_cast<int>(r % c_);
    }
    return SimplexAssignment(d_, c_, false, std::move(per_dim));
}

const std::vector<std::vector<int>>& SimplexAssignment::table() const {
    if (round_robin_) throw argument_error("simplex assignment: round-robin rule has no table");
    return table_;
}

// ---------------------------------------------------------------------------
// ProductColoring

ProductColoring::ProductColoring(int n, int d, int c, Data data)
    : n_(n), d_(d), c_(c), data_(std::make_shared<const Data>(std::move(data))) {}

ProductColoring ProductColoring::make_explicit(int n, int d, int c, std::vector<int> colors) {
    if (n < 1 || d < 1) throw argument_error("explicit coloring: n and d must be positive");
    if (c < 2) throw argument_error("explicit coloring: need at least 2 colors");
    const long long total = checked_pow_ll(n, d, "explicit coloring");
    if (static_cast<long long>(colors.size()) != total)
        throw argument_error("explicit coloring: expected n^d = " + std::to_string(total) +
                             " colors, got " + std::to_string(colors.size()));
    for (int col : colors)
        if (col < 1 || col > c) throw argument_error("explicit coloring: color out of range");
    return ProductColoring(n, d, c, Explicit{std::move(colors)});
}

ProductColoring ProductColoring::make_simplex_assigned(int n, int d, SimplexAssignment assignment,
                                                       Coloring base) {
    base.validate();
    if (base.n() != n) throw argument_error("simplex-assigned coloring: base coloring domain mismatch");
    if (assignment.d() != d) throw argument_error("simplex-assigned coloring: assignment dimension mismatch");
    if (assignment.c() != base.c) throw argument_error("simplex-assigned coloring: color count mismatch");
    const int c = base.c;
    return ProductColoring(n, d, c, SimplexAssigned{std::move(assignment), std::move(base)});
}

ProductColoring ProductColoring::make_shift_reduced(int p, int q, int d, ProductColoring inner) {
    if (!is_prime(p)) throw argument_error("shift-reduced coloring: p must be prime");
    if (q < 1) throw argument_error("shift-reduced coloring: q must be positive");
    long long c = 1;
    for (int i = 0; i < q; ++i) {
        c *= p;
        if (c > 1'000'000) throw size_cap_error("shift-reduced coloring: p^q too large");
    }
    if (inner.c() != c)
        throw argument_error("shift-reduced coloring: inner coloring must use c = p^q = " +
                             std::to_string(c) + " colors");
    if (d < c) throw argument_error("shift-reduced coloring: need d >= c");
    long long pq1 = 1;
    for (int i = 0; i < q - 1; ++i) pq1 *= p;
    const long long s = d - (p - 1) * pq1;
    if (inner.d() != s)
        throw argument_error("shift-reduced coloring: inner dimension must be s = " +
                             std::to_string(s) + ", got " + std::to_string(inner.d()));
    const int n = inner.n();
    return ProductColoring(n, d, static_cast<int>(c),
                           ShiftReduced{p, q, std::make_shared<const ProductColoring>(std::move(inner))});
}

ProductColoring ProductColoring::make_block_reduced(int dprime, int d, SimplexAssignment assignment,
                                                    ProductColoring inner) {
    if (dprime < 2 || dprime > d) throw argument_error("block-reduced coloring: need 2 <= d' <= d");
    if (inner.d() != d - dprime + 1)
        throw argument_error("block-reduced coloring: inner dimension must be d - d' + 1 = " +
                             std::to_string(d - dprime + 1) + ", got " + std::to_string(inner.d()));
    if (assignment.d() != dprime)
        throw argument_error("block-reduced coloring: assignment must cover simplices of [n]^d'");
    if (assignment.c() != inner.c())
        throw argument_error("block-reduced coloring: color count mismatch");
    const int n = inner.n();
    const int c = inner.c();
    return ProductColoring(n, d, c,
                           BlockReduced{dprime, std::move(assignment),
                                        std::make_shared<const ProductColoring>(std::move(inner))});
}

ProductColoring ProductColoring::from_base(const Coloring& base) {
    base.validate();
    return make_explicit(base.n(), 1, base.c, base.colors);
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

// Minimal k >= 1 with the length-c prefix of x equal to itself rotated left k
// times.
int prefix_period(const std::vector<int>& x, int c) {
    for (int k = 1; k <= c; ++k) {
        bool same = true;
        for (int i = 0; i < c && same; ++i) same = x[(i + k) % c] == x[i];
        if (same) return k;
    }
    return c;
}

// Rotation offset j in [0,c) whose left-rotation of the prefix is
// lexicographically least (unique when the period is c).
int lex_least_rotation(const std::vector<int>& x, int c) {
    int best = 0;
    for (int j = 1; j < c; ++j) {
        for (int i = 0; i < c; ++i) {
            const int a = x[(i + j) % c];
            const int b = x[(i + best) % c];
            if (a != b) {
                if (a < b) best = j;
                break;
            }
        }
    }
    return best;
}

int evaluate_impl(const ProductColoring& chi, const std::vector<int>& x);

struct EvaluateVisitor {
    const ProductColoring& chi;
    const std::vector<int>& x;

    int operator()(const ProductColoring::Explicit& e) const {
        return e.colors[static_cast<std::size_t>(tuple_rank(x, chi.n()))];
    }

    int operator()(const ProductColoring::SimplexAssigned& s) const {
        const PointClass pc = classify_point(x);
        if (pc.id.dimension() == 1) return s.base.color(pc.alpha[0]); // diagonal
        return s.assignment.color_of(pc.id);
    }

    int operator()(const ProductColoring::ShiftReduced& sr) const {
        const int c = chi.c();
        const int period = prefix_period(x, c);
        if (period == c) {
            // x = S^i r for the lex-least orbit element r; the orbit is rainbow.
            const int jstar = lex_least_rotation(x, c);
            const int i = (c - jstar) % c;
            return 1 + i % c;
        }
        // Short orbit: the prefix has period dividing p^(q-1), so the point is
        // determined by its first p^(q-1) coordinates plus the fixed tail.
        long long keep = 1;
        for (int i = 0; i < sr.q - 1; ++i) keep *= sr.p;
        std::vector<int> y;
        y.reserve(static_cast<std::size_t>(keep) + (x.size() - static_cast<std::size_t>(c)));
        for (long long i = 0; i < keep; ++i) y.push_back(x[static_cast<std::size_t>(i)]);
        for (std::size_t i = static_cast<std::size_t>(c); i < x.size(); ++i) y.push_back(x[i]);
        return evaluate_impl(*sr.inner, y);
    }

    int operator()(const ProductColoring::BlockReduced& br) const {
        const int dp = br.dprime;
        bool diagonal = true;
        for (int i = 1; i < dp && diagonal; ++i) diagonal = x[i] == x[0];
        if (diagonal) {
            std::vector<int> y;
            y.reserve(x.size() - static_cast<std::size_t>(dp) + 1);
            y.push_back(x[0]);
            for (std::size_t i = static_cast<std::size_t>(dp); i < x.size(); ++i) y.push_back(x[i]);
            return evaluate_impl(*br.inner, y);
        }
        const std::vector<int> head(x.begin(), x.begin() + dp);
        return br.assignment.color_of(classify_point(head).id);
    }
};

int evaluate_impl(const ProductColoring& chi, const std::vector<int>& x) {
    return std::visit(EvaluateVisitor{chi, x}, chi.data());
}

} // namespace

int evaluate(const ProductColoring& chi, const std::vector<int>& x) {
    if (static_cast<int>(x.size()) != chi.d())
        throw argument_error("evaluate: point dimension mismatch");
    for (int v : x)
        if (v < 1 || v > chi.n()) throw argument_error("evaluate: coordinate out of range");
    return evaluate_impl(chi, x);
}

// ---------------------------------------------------------------------------
// Edge power counts

namespace {

EdgePowerCounts slow_counts(const ProductColoring& chi, const std::vector<int>& edge,
                            long long slow_cap) {
    const int d = chi.d();
    const auto esize = static_cast<long long>(edge.size());
    long long total = 1;
    for (int i = 0; i < d; ++i) {
        if (total > slow_cap / esize + 1) {
            total = slow_cap + 1;
            break;
        }
        total *= esize;
    }
    if (total > slow_cap)
        throw size_cap_error("edge_power_counts: |E|^d exceeds the slow-path cap " +
                             std::to_string(slow_cap));

    EdgePowerCounts out;
    out.counts.assign(chi.c(), 0);
    out.total = total;
    std::vector<int> idx(d, 0);
    std::vector<int> point(d);
    while (true) {
        for (int i = 0; i < d; ++i) point[i] = edge[idx[i]];
        ++out.counts[evaluate_impl(chi, point) - 1];
        int i = d - 1;
        while (i >= 0 && idx[i] + 1 == static_cast<int>(edge.size())) idx[i--] = 0;
        if (i < 0) break;
        ++idx[i];
    }
    return out;
}

EdgePowerCounts fast_counts(const ProductColoring& chi, const std::vector<int>& edge,
                            long long slow_cap);

struct CountsVisitor {
    const ProductColoring& chi;
    const std::vector<int>& edge;
    long long slow_cap;

    // No combinatorial shortcut for a stored table; fall back to enumeration.
    EdgePowerCounts operator()(const ProductColoring::Explicit&) const {
        return slow_counts(chi, edge, slow_cap);
    }

    // Each k-dimensional simplex meets E^d in C(|E|,k) points, the diagonal is
    // colored by the base coloring.
    EdgePowerCounts operator()(const ProductColoring::SimplexAssigned& s) const {
        const int c = chi.c();
        const int d = chi.d();
        EdgePowerCounts out;
        out.counts.assign(c, 0);
        out.total = int_pow(BigInt(edge.size()), d);
        for (int v : edge) ++out.counts[s.base.color(v) - 1];
        for (int k = 2; k <= d; ++k) {
            const BigInt choose = binomial(static_cast<long long>(edge.size()), k);
            if (choose == 0) continue;
            const auto dim_counts = s.assignment.dimension_counts(k);
            for (int i = 0; i < c; ++i) out.counts[i] += choose * dim_counts[i];
        }
        return out;
    }

    // E^d minus its short-orbit part splits into full orbits, each rainbow;
    // the short-orbit part bijects onto E^s under the coordinate projection.
    EdgePowerCounts operator()(const ProductColoring::ShiftReduced& sr) const {
        const int c = chi.c();
        EdgePowerCounts inner = fast_counts(*sr.inner, edge, slow_cap);
        EdgePowerCounts out;
        out.total = int_pow(BigInt(edge.size()), chi.d());
        const BigInt share = (out.total - inner.total) / c; // exact: full orbits have size c
        out.counts.assign(c, 0);
        for (int i = 0; i < c; ++i) out.counts[i] = inner.counts[i] + share;
        return out;
    }

    // Points with non-constant head contribute, per tail, C(|E|,k) points for
    // every k-dimensional simplex of [n]^d'; constant heads follow the inner
    // coloring.
    EdgePowerCounts operator()(const ProductColoring::BlockReduced& br) const {
        const int c = chi.c();
        EdgePowerCounts inner = fast_counts(*br.inner, edge, slow_cap);
        EdgePowerCounts out;
        out.total = int_pow(BigInt(edge.size()), chi.d());
        out.counts.assign(c, 0);
        const BigInt tails = int_pow(BigInt(edge.size()), chi.d() - br.dprime);
        for (int i = 0; i < c; ++i) out.counts[i] = inner.counts[i];
        for (int k = 2; k <= br.dprime; ++k) {
            const BigInt choose = binomial(static_cast<long long>(edge.size()), k);
            if (choose == 0) continue;
            const auto dim_counts = br.assignment.dimension_counts(k);
            for (int i = 0; i < c; ++i) out.counts[i] += tails * choose * dim_counts[i];
        }
        return out;
    }
};

EdgePowerCounts fast_counts(const ProductColoring& chi, const std::vector<int>& edge,
                            long long slow_cap) {
    return std::visit(CountsVisitor{chi, edge, slow_cap}, chi.data());
}

} // namespace

EdgePowerCounts edge_power_counts(const ProductColoring& chi, const std::vector<int>& edge,
                                  CountStrategy strategy, long long slow_cap) {
    check_edge(edge, chi.n(), "edge_power_counts");
    return strategy == CountStrategy::Fast ? fast_counts(chi, edge, slow_cap)
                                           : slow_counts(chi, edge, slow_cap);
}

DiscValue product_disc_of_coloring(const Hypergraph& h, const ProductColoring& chi,
                                   CountStrategy strategy, long long slow_cap) {
    h.validate();
    if (h.n != chi.n()) throw argument_error("product_disc_of_coloring: vertex count mismatch");
    const int c = chi.c();
    BigInt best = 0; // numerator over denominator c
    for (const auto& e : h.edges) {
        const EdgePowerCounts counts = edge_power_counts(chi, e, strategy, slow_cap);
        for (const BigInt& cnt : counts.counts) {
            BigInt dev = c * cnt - counts.total;
            if (dev < 0) dev = -dev;
            if (dev > best) best = dev;
        }
    }
    return DiscValue{best, c};
}

Coloring flatten_to_coloring(const ProductColoring& chi, long long cap) {
    const long long total = checked_pow_ll(chi.n(), chi.d(), "flatten_to_coloring");
    if (total > cap || total > std::numeric_limits<int>::max())
        throw size_cap_error("flatten_to_coloring: n^d = " + std::to_string(total) +
                             " exceeds cap " + std::to_string(cap));
    Coloring out;
    out.c = chi.c();
    out.colors.resize(static_cast<std::size_t>(total));
    for (long long r = 0; r < total; ++r)
        out.colors[static_cast<std::size_t>(r)] =
            evaluate_impl(chi, tuple_unrank(r, chi.n(), chi.d()));
    return out;
}

ProductColoring materialize_explicit(const ProductColoring& chi, long long cap) {
    Coloring flat = flatten_to_coloring(chi, cap);
    return ProductColoring::make_explicit(chi.n(), chi.d(), chi.c(), std::move(flat.colors));
}

} // namespace symdisc
