#include "symdisc/bounds.hpp"

#include <algorithm>

#include "symdisc/errors.hpp"

namespace symdisc {

namespace {

// The inequality multiplied through by 6 k! so every quantity is an integer:
//   3 k! C(m,kappa) - 6 k! sum_{l=1}^{kappa-1} l! S(d,l) C(m,l)  >=  2 m^k.
// The l = 0 term vanishes under the convention S(d,0) = 0 for d >= 1.
bool lower_bound_inequality_holds(int k, int d, long long m) {
    const BigInt rhs = 2 * int_pow(BigInt(m), k);
    const BigInt kfact6 = 6 * factorial(k);
    for (int kappa = k; kappa <= d; ++kappa) {
        BigInt lhs = (kfact6 / 2) * binomial(m, kappa);
        for (int l = 1; l < kappa; ++l)
            lhs -= kfact6 * factorial(l) * stirling2(d, l) * binomial(m, l);
        if (lhs < rhs) return false;
    }
    return true;
}

std::vector<std::vector<int>> combinations(int n, int m) {
    std::vector<std::vector<int>> out;
    if (m > n) return out;
    std::vector<int> pick(m);
    for (int i = 0; i < m; ++i) pick[i] = i + 1;
    while (true) {
        out.push_back(pick);
        int i = m - 1;
        while (i >= 0 && pick[i] == n - (m - 1 - i)) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
    }
    return out;
}

} // namespace

long long min_m_for_lower_bound(int k, int d) {
    if (k < 2 || k > d) throw argument_error("min_m_for_lower_bound: need 2 <= k <= d");
    for (long long m = 1;; ++m) {
        if (lower_bound_inequality_holds(k, d, m)) return m;
        if (m > 100'000'000)
            throw size_cap_error("min_m_for_lower_bound: no m found within scan limit");
    }
}

SimplexColorCensus census_of_coloring(const ProductColoring& chi, const std::vector<int>& T) {
    int prev = 0;
    for (int t : T) {
        if (t <= prev) throw argument_error("census: T must be strictly ascending and positive");
        if (t > chi.n()) throw argument_error("census: T value exceeds the vertex range");
        prev = t;
    }
    if (T.empty()) throw argument_error("census: empty T");

    SimplexColorCensus census;
    census.d = chi.d();
    census.c = chi.c();
    census.m = static_cast<int>(T.size());
    census.mono_counts.assign(census.d, std::vector<long long>(census.c, 0));
    census.non_mono.assign(census.d, 0);

    for (int l = 1; l <= census.d; ++l) {
        if (l > census.m) continue; // all dimension-l simplices are empty on T
        for (const auto& id : enumerate_simplices(census.d, {l})) {
            int color = 0;
            bool mono = true;
            for (const auto& point : simplex_points(id, T)) {
                const int col = evaluate(chi, point);
                if (color == 0)
                    color = col;
                else if (col != color) {
                    mono = false;
                    break;
                }
            }
            if (mono)
                ++census.mono_counts[l - 1][color - 1];
            else
                ++census.non_mono[l - 1];
        }
    }
    return census;
}

int largest_unbalanced_dimension(const SimplexColorCensus& census) {
    for (int l = census.d; l >= 2; --l) {
        const auto& counts = census.mono_counts[l - 1];
        for (long long cnt : counts)
            if (cnt != counts[0]) return l;
    }
    return 0;
}

BigRational imbalance_lower_bound(const SimplexColorCensus& census, int kappa) {
    const int d = census.d;
    const int c = census.c;
    const long long m = census.m;
    if (kappa < 2 || kappa > d) throw argument_error("imbalance_lower_bound: need 2 <= kappa <= d");
    for (int l = kappa; l <= d; ++l)
        if (census.non_mono[l - 1] != 0)
            throw argument_error("imbalance_lower_bound: census has non-monochromatic simplices "
                                 "of dimension " + std::to_string(l));

    const BigInt kappa_total = factorial(kappa) * stirling2(d, kappa);
    const BigInt choose_kappa = binomial(m, kappa);
    BigRational first = 0;
    for (int i = 0; i < c; ++i) {
        BigInt dev = c * census.mono_counts[kappa - 1][i] - kappa_total;
        if (dev < 0) dev = -dev;
        const BigRational candidate = BigRational(dev * choose_kappa, c);
        if (candidate > first) first = candidate;
    }

    BigInt rest = int_pow(BigInt(m), d);
    for (int l = kappa; l <= d; ++l)
        rest -= factorial(l) * stirling2(d, l) * binomial(m, l);
    const BigRational second = BigRational(c - 1, c) * BigRational(rest);

    return first - second;
}

std::optional<std::vector<int>> find_monochromatic_subgrid(const ProductColoring& chi, int m) {
    if (m < 1) throw argument_error("find_monochromatic_subgrid: m must be positive");
    if (m > chi.n()) throw argument_error("find_monochromatic_subgrid: m exceeds the vertex count");

    const int d = chi.d();
    std::vector<int> dims;
    for (int l = 1; l <= std::min(d, m); ++l) dims.push_back(l);
    const auto ids = enumerate_simplices(d, dims);

    for (const auto& T : combinations(chi.n(), m)) {
        bool all_mono = true;
        for (const auto& id : ids) {
            int color = 0;
            for (const auto& point : simplex_points(id, T)) {
                const int col = evaluate(chi, point);
                if (color == 0)
                    color = col;
                else if (col != color) {
                    all_mono = false;
                    break;
                }
            }
            if (!all_mono) break;
        }
        if (all_mono) return T;
    }
    return std::nullopt;
}

namespace {

// Exhaustive settlement of one n: either some c-coloring of [n]^d leaves every
// size-m subset with a non-monochromatic simplex (counterexample), or no such
// coloring exists. Grid points are assigned in rank order with
// color-permutation symmetry broken (restricted-growth colorings only, which
// is sound because the target property is color-permutation invariant). A
// subtree is cut as soon as some subset is fully colored and monochromatic;
// a partial coloring with every subset already killed completes arbitrarily
// into a counterexample.
struct RamseyProver {
    int c, d, m, n;
    long long total_points;
    // per subset T: its simplices as lists of point ranks
    std::vector<std::vector<std::vector<long long>>> subset_simplices;
    std::vector<int> colors; // by rank; only [0, depth) is meaningful
    unsigned long long budget;
    unsigned long long nodes = 0;
    bool budget_exhausted = false;
    std::vector<int> counterexample;

    RamseyProver(int c_, int d_, int m_, int n_, unsigned long long budget_)
        : c(c_), d(d_), m(m_), n(n_), budget(budget_) {
        total_points = 1;
        for (int i = 0; i < d; ++i) {
            total_points *= n;
            if (total_points > 100'000'000)
                throw size_cap_error("ramsey_search: n^d grid too large to settle exhaustively");
        }
        std::vector<int> dims;
        for (int l = 1; l <= std::min(d, m); ++l) dims.push_back(l);
        const auto ids = enumerate_simplices(d, dims);
        for (const auto& T : combinations(n, m)) {
            std::vector<std::vector<long long>> simplices;
            for (const auto& id : ids) {
                std::vector<long long> ranks;
                for (const auto& point : simplex_points(id, T))
                    ranks.push_back(tuple_rank(point, n));
                simplices.push_back(std::move(ranks));
            }
            subset_simplices.push_back(std::move(simplices));
        }
        colors.assign(static_cast<std::size_t>(total_points), 0);
    }

    bool found_counterexample(int depth) {
        counterexample.assign(colors.begin(), colors.begin() + depth);
        counterexample.resize(static_cast<std::size_t>(total_points), 1);
        return true;
    }

    bool dfs(int depth, int max_used) {
        if (budget_exhausted) return false;
        if (++nodes > budget) {
            budget_exhausted = true;
            return false;
        }

        bool all_dead = true;
        for (const auto& simplices : subset_simplices) {
            bool dead = false;
            bool fully_colored = true;
            for (const auto& ranks : simplices) {
                int color = 0;
                for (long long r : ranks) {
                    if (r >= depth) {
                        fully_colored = false;
                        continue;
                    }
                    const int col = colors[static_cast<std::size_t>(r)];
                    if (color == 0)
                        color = col;
                    else if (col != color) {
                        dead = true;
                        break;
                    }
                }
                if (dead) break;
            }
            if (!dead) {
                all_dead = false;
                if (fully_colored) return false; // monochromatic subset in every completion
            }
        }
        if (all_dead) return found_counterexample(depth);
        if (depth == total_points) return false; // unreachable; every subset is settled here

        const int limit = std::min(c, max_used + 1);
        for (int col = 1; col <= limit; ++col) {
            colors[static_cast<std::size_t>(depth)] = col;
            if (dfs(depth + 1, std::max(max_used, col))) return true;
        }
        colors[static_cast<std::size_t>(depth)] = 0;
        return false;
    }
};

} // namespace

RamseySearchResult ramsey_search(int c, int d, int m, int n_max, unsigned long long node_budget) {
    if (c < 2) throw argument_error("ramsey_search: need at least 2 colors");
    if (d < 1) throw argument_error("ramsey_search: d must be positive");
    if (m < 1) throw argument_error("ramsey_search: m must be positive");
    if (n_max < m) throw argument_error("ramsey_search: n_max below m");

    RamseySearchResult result;
    result.n_max = n_max;
    unsigned long long remaining = node_budget;
    for (int n = m; n <= n_max; ++n) {
        RamseyProver prover(c, d, m, n, remaining);
        const bool has_counterexample = prover.dfs(0, 0);
        result.nodes += prover.nodes;
        remaining = remaining > prover.nodes ? remaining - prover.nodes : 0;
        if (prover.budget_exhausted) {
            result.budget_exhausted = true;
            result.status = RamseySearchResult::Status::Unknown;
            return result;
        }
        if (has_counterexample) {
            result.largest_counterexample_n = n;
            result.counterexample =
                ProductColoring::make_explicit(n, d, c, std::move(prover.counterexample));
            continue;
        }
        result.status = RamseySearchResult::Status::Found;
        result.n = n;
        return result;
    }
    result.status = RamseySearchResult::Status::Unknown;
    return result;
}

DiscValue complete_disc_value(int n, int m, int c, int exact_cap) {
    if (n < 1) throw argument_error("complete_disc_value: n must be positive");
    if (m < 1 || m > n) throw argument_error("complete_disc_value: need 1 <= m <= n");
    if (c < 2) throw argument_error("complete_disc_value: need at least 2 colors");
    if (n >= static_cast<long long>(c) * (m - 1) + 1) {
        // Some color class reaches size m, giving a monochromatic edge with
        // deviation (1 - 1/c) m; no edge of size m can deviate further.
        return DiscValue{BigInt(c - 1) * m, c};
    }
    return disc_exact(complete_uniform(n, m), c, exact_cap).value;
}

} // namespace symdisc
