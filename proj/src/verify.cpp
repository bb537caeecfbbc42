#include "symdisc/verify.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "symdisc/bounds.hpp"
#include "symdisc/constructions.hpp"
#include "symdisc/errors.hpp"
#include "symdisc/solver.hpp"

namespace symdisc {

namespace {

struct Checker {
    SuiteResult result;

    explicit Checker(std::string name) { result.name = std::move(name); }

    void check(bool ok, const std::string& detail) {
        ++result.cases;
        if (!ok) {
            ++result.failures;
            if (result.notes.size() < 25) result.notes.push_back("FAIL " + detail);
        }
    }

    void note(const std::string& s) { result.notes.push_back(s); }
};

// Every hypergraph with n <= max_n vertices and 1..2 edges (edges are the
// nonempty subsets of [n]); the deterministic micro-scale test family.
std::vector<Hypergraph> small_hypergraph_family(int max_n) {
    std::vector<Hypergraph> out;
    for (int n = 1; n <= max_n; ++n) {
        std::vector<std::vector<int>> subsets;
        for (int mask = 1; mask < (1 << n); ++mask) {
            std::vector<int> e;
            for (int v = 1; v <= n; ++v)
                if (mask & (1 << (v - 1))) e.push_back(v);
            subsets.push_back(std::move(e));
        }
        for (std::size_t i = 0; i < subsets.size(); ++i) {
            out.push_back(Hypergraph{n, {subsets[i]}});
            for (std::size_t j = i + 1; j < subsets.size(); ++j)
                out.push_back(Hypergraph{n, {subsets[i], subsets[j]}});
        }
    }
    return out;
}

std::vector<BigInt> sorted_deviations(const std::vector<BigInt>& counts, const BigInt& total,
                                      int c) {
    std::vector<BigInt> devs;
    devs.reserve(counts.size());
    for (const BigInt& cnt : counts) devs.push_back(c * cnt - total);
    std::sort(devs.begin(), devs.end());
    return devs;
}

// ---------------------------------------------------------------------------

SuiteResult suite_partition_identity(const SuiteOptions&) {
    Checker ck("partition-identity");
    for (int d = 1; d <= 6; ++d)
        for (int t = 1; t <= 6; ++t) {
            BigInt sum = 0;
            for (int l = 1; l <= d; ++l) sum += factorial(l) * stirling2(d, l) * binomial(t, l);
            ck.check(sum == int_pow(BigInt(t), d),
                     "counting identity at d=" + std::to_string(d) + " t=" + std::to_string(t));
        }
    return ck.result;
}

SuiteResult suite_partition_property(const SuiteOptions&) {
    Checker ck("partition-property");
    const std::vector<int> spread = {2, 5, 6, 9};
    for (int d = 1; d <= 4; ++d)
        for (int t = 1; t <= 4; ++t)
            for (int variant = 0; variant < 2; ++variant) {
                std::vector<int> T;
                T.reserve(static_cast<std::size_t>(t));
                for (int i = 0; i < t; ++i) T.push_back(variant == 0 ? i + 1 : spread[i]);

                std::vector<int> dims;
                for (int l = 1; l <= d; ++l) dims.push_back(l);
                std::set<std::vector<int>> seen;
                bool disjoint = true, roundtrip = true, inside = true;
                for (const auto& id : enumerate_simplices(d, dims)) {
                    for (const auto& p : simplex_points(id, T)) {
                        if (!seen.insert(p).second) disjoint = false;
                        if (!(classify_point(p).id == id)) roundtrip = false;
                        for (int v : p)
                            if (std::find(T.begin(), T.end(), v) == T.end()) inside = false;
                    }
                }
                BigInt expected = int_pow(BigInt(t), d);
                const bool covering = BigInt(seen.size()) == expected && inside;
                ck.check(disjoint && covering && roundtrip,
                         "partition of T^d at d=" + std::to_string(d) + " |T|=" +
                             std::to_string(t) + " variant=" + std::to_string(variant));
            }
    return ck.result;
}

SuiteResult suite_stirling(const SuiteOptions&) {
    Checker ck("stirling");
    for (int d = 1; d <= 8; ++d)
        for (int l = 0; l <= d; ++l) {
            const BigInt rec = stirling2(d, l);
            const BigInt form = stirling2_formula(d, l);
            bool ok = rec == form;
            if (l >= 1) ok = ok && rec == BigInt(enumerate_partitions(d, l).size());
            ck.check(ok, "stirling routes at d=" + std::to_string(d) + " l=" + std::to_string(l));
        }
    for (int d = 1; d <= 12; ++d)
        ck.check(stirling2(d, 2) == int_pow(BigInt(2), d - 1) - 1,
                 "S(d,2) = 2^(d-1) - 1 at d=" + std::to_string(d));
    return ck.result;
}

SuiteResult suite_gate_corollaries(const SuiteOptions&) {
    Checker ck("gate-corollaries");
    for (int d = 1; d <= 12; ++d)
        ck.check(divisibility_gate(2, d).pass, "gate(2,d) at d=" + std::to_string(d));
    for (int d = 2; d <= 12; ++d)
        ck.check(divisibility_gate(3, d).pass == (d % 2 == 1),
                 "gate(3,d) iff d odd at d=" + std::to_string(d));
    for (int d = 2; d <= 12; ++d)
        for (int l = 1; l <= 2; ++l)
            ck.check(!divisibility_gate(4 * l, d).pass,
                     "gate(4l,d) fails at c=" + std::to_string(4 * l) + " d=" + std::to_string(d));
    for (int c : {3, 5, 7})
        for (int d = 1; d <= 12; ++d)
            ck.check(divisibility_gate(c, d).pass == divisibility_gate(2 * c, d).pass,
                     "gate(c,d) iff gate(2c,d) at c=" + std::to_string(c) +
                         " d=" + std::to_string(d));
    return ck.result;
}

SuiteResult suite_transfer_equality(const SuiteOptions& opts) {
    Checker ck("transfer-equality");
    const std::vector<std::pair<int, int>> combos = {{2, 2}, {2, 3}, {3, 3}, {2, 4}};
    int combo_index = 0;
    for (const auto& [c, d] : combos) {
        ++combo_index;
        for (int i = 0; i < 24; ++i) {
            const int n = 2 + i % 3;
            const std::uint64_t seed =
                opts.seed * 7919 + static_cast<std::uint64_t>(combo_index) * 1000 + i;
            const auto h = random_hypergraph(n, 1 + i % 5, n, seed);
            const auto solved = disc_exact(h, c);
            const Coloring& psi = solved.witness;
            const ProductColoring chi = simplex_balanced_coloring(psi, d);
            const std::string tag = "c=" + std::to_string(c) + " d=" + std::to_string(d) +
                                    " instance " + std::to_string(i);

            bool multisets_equal = true;
            bool slow_matches = true;
            for (const auto& e : h.edges) {
                const auto fast = edge_power_counts(chi, e, CountStrategy::Fast);
                // base-coloring deviations on E
                std::vector<BigInt> base_counts(c, 0);
                for (int v : e) ++base_counts[psi.color(v) - 1];
                if (sorted_deviations(fast.counts, fast.total, c) !=
                    sorted_deviations(base_counts, BigInt(e.size()), c))
                    multisets_equal = false;
                const auto slow = edge_power_counts(chi, e, CountStrategy::Slow);
                if (slow.counts != fast.counts || slow.total != fast.total) slow_matches = false;
            }
            ck.check(multisets_equal, "per-edge deviation multisets, " + tag);
            ck.check(slow_matches, "fast path = explicit enumeration, " + tag);

            const DiscValue product = product_disc_of_coloring(h, chi);
            ck.check(product == disc_of_coloring(h, psi), "transfer equality, " + tag);

            // cross-check through full materialization
            const auto flat = flatten_to_coloring(chi);
            const auto power = symmetric_product_explicit(h, d);
            ck.check(disc_of_coloring(power, flat) == product,
                     "explicit materialization, " + tag);
        }
    }
    return ck.result;
}

SuiteResult suite_shift_transfer(const SuiteOptions&) {
    Checker ck("shift-transfer");
    const auto family = small_hypergraph_family(3);
    const std::vector<std::array<int, 3>> params = {{2, 1, 2}, {2, 1, 3}, {2, 2, 4}};
    for (const auto& [p, q, d] : params) {
        int c = 1;
        for (int i = 0; i < q; ++i) c *= p;
        int keep = 1;
        for (int i = 0; i < q - 1; ++i) keep *= p;
        const int s = d - (p - 1) * keep;
        for (std::size_t hi = 0; hi < family.size(); ++hi) {
            const Hypergraph& h = family[hi];
            const std::string tag = "p=" + std::to_string(p) + " q=" + std::to_string(q) +
                                    " d=" + std::to_string(d) + " H#" + std::to_string(hi);

            ProductColoring inner = [&] {
                if (s == 1) return ProductColoring::from_base(disc_exact(h, c).witness);
                const auto power = symmetric_product_explicit(h, s);
                auto solved = disc_exact(power, c);
                return ProductColoring::make_explicit(h.n, s, c,
                                                      std::move(solved.witness.colors));
            }();
            const ProductColoring chi = shift_reduced_coloring(inner, p, q, d);

            bool per_edge_ok = true;
            bool bijection_ok = true;
            bool slow_matches = true;
            for (const auto& e : h.edges) {
                const auto outer = edge_power_counts(chi, e, CountStrategy::Fast);
                const auto inner_counts = edge_power_counts(inner, e, CountStrategy::Fast);
                BigInt outer_dev = 0, inner_dev = 0;
                for (const auto& cnt : outer.counts) {
                    BigInt v = c * cnt - outer.total;
                    if (v < 0) v = -v;
                    outer_dev = std::max(outer_dev, v);
                }
                for (const auto& cnt : inner_counts.counts) {
                    BigInt v = c * cnt - inner_counts.total;
                    if (v < 0) v = -v;
                    inner_dev = std::max(inner_dev, v);
                }
                if (outer_dev > inner_dev) per_edge_ok = false;

                const auto slow = edge_power_counts(chi, e, CountStrategy::Slow);
                if (slow.counts != outer.counts) slow_matches = false;

                // psi restricted to E^d ∩ D must biject onto E^s
                std::set<std::vector<int>> images;
                long long short_orbit_points = 0;
                std::vector<int> idx(d, 0);
                while (true) {
                    std::vector<int> x(d);
                    for (int i = 0; i < d; ++i) x[i] = e[idx[i]];
                    if (shift_orbit(x, c).period < c) {
                        ++short_orbit_points;
                        std::vector<int> y(x.begin(), x.begin() + keep);
                        y.insert(y.end(), x.begin() + c, x.end());
                        for (int v : y)
                            if (std::find(e.begin(), e.end(), v) == e.end()) bijection_ok = false;
                        images.insert(std::move(y));
                    }
                    int i = d - 1;
                    while (i >= 0 && idx[i] + 1 == static_cast<int>(e.size())) idx[i--] = 0;
                    if (i < 0) break;
                    ++idx[i];
                }
                BigInt expected = int_pow(BigInt(e.size()), s);
                if (BigInt(short_orbit_points) != expected ||
                    BigInt(images.size()) != expected)
                    bijection_ok = false;
            }
            ck.check(per_edge_ok, "per-edge imbalance transfer, " + tag);
            ck.check(bijection_ok, "E^d ∩ D bijection onto E^s, " + tag);
            ck.check(slow_matches, "fast path = explicit enumeration, " + tag);
        }
    }
    return ck.result;
}

SuiteResult suite_block_transfer(const SuiteOptions&) {
    Checker ck("block-transfer");
    const auto family = small_hypergraph_family(3);
    for (std::size_t hi = 0; hi < family.size(); ++hi) {
        const Hypergraph& h = family[hi];
        const std::string tag = "H#" + std::to_string(hi);
        const auto solved = disc_exact(h, 6);
        const ProductColoring inner = ProductColoring::from_base(solved.witness);
        const ProductColoring chi = block_reduced_coloring(inner, 3, 3);
        const DiscValue product = product_disc_of_coloring(h, chi);
        ck.check(product <= solved.value, "block transfer bound, " + tag);
        ck.check(product_disc_of_coloring(h, chi, CountStrategy::Slow) == product,
                 "fast path = explicit enumeration, " + tag);
    }
    // c = 4, d' = 3 must be rejected: 4 does not divide 2! S(3,2) = 6.
    const Hypergraph h{2, {{1, 2}}};
    const auto solved4 = disc_exact(h, 4);
    bool rejected = false;
    std::string message;
    try {
        block_reduced_coloring(ProductColoring::from_base(solved4.witness), 3, 3);
    } catch (const precondition_error& e) {
        rejected = true;
        message = e.what();
    }
    ck.check(rejected && message.find("k = 2") != std::string::npos,
             "c=4 d'=3 rejected naming k = 2");
    return ck.result;
}

SuiteResult suite_bounds_arithmetic(const SuiteOptions&) {
    Checker ck("bounds-arithmetic");

    // Minimality of min_m_for_lower_bound against a direct rational evaluation.
    const auto inequality_holds = [](int k, int d, long long m) {
        for (int kappa = k; kappa <= d; ++kappa) {
            BigRational lhs(binomial(m, kappa), 2);
            for (int l = 1; l < kappa; ++l)
                lhs -= BigRational(factorial(l) * stirling2(d, l) * binomial(m, l));
            if (lhs < BigRational(int_pow(BigInt(m), k), 3 * factorial(k))) return false;
        }
        return true;
    };
    for (int d = 2; d <= 5; ++d)
        for (int k = 2; k <= d; ++k) {
            const long long m = min_m_for_lower_bound(k, d);
            const std::string tag = "k=" + std::to_string(k) + " d=" + std::to_string(d) +
                                    " m=" + std::to_string(m);
            ck.check(inequality_holds(k, d, m), "inequality holds at m, " + tag);
            ck.check(m == 1 || !inequality_holds(k, d, m - 1), "inequality fails at m-1, " + tag);
        }

    // imbalance_lower_bound never exceeds the true single-edge imbalance, over
    // every 2-coloring of [m]^2 whose 2-dimensional simplices are monochromatic.
    for (int m = 2; m <= 4; ++m) {
        const int c = 2;
        const long long total_points = static_cast<long long>(m) * m;
        std::vector<int> T(m);
        for (int i = 0; i < m; ++i) T[i] = i + 1;
        long long tested = 0;
        bool all_ok = true;
        for (long long mask = 0; mask < (1LL << total_points); ++mask) {
            std::vector<int> colors(total_points);
            for (long long b = 0; b < total_points; ++b)
                colors[static_cast<std::size_t>(b)] = 1 + static_cast<int>((mask >> b) & 1);
            const auto chi = ProductColoring::make_explicit(m, 2, c, colors);
            const auto census = census_of_coloring(chi, T);
            if (census.non_mono[1] != 0) continue; // 2-dim simplices not monochromatic
            ++tested;
            const BigRational bound = imbalance_lower_bound(census, 2);
            std::vector<long long> point_counts(c, 0);
            for (int col : colors) ++point_counts[col - 1];
            BigInt dev = 0;
            for (int i = 0; i < c; ++i) {
                BigInt v = BigInt(c) * point_counts[i] - total_points;
                if (v < 0) v = -v;
                dev = std::max(dev, v);
            }
            if (bound > BigRational(dev, c)) all_ok = false;
        }
        ck.check(all_ok && tested > 0,
                 "imbalance bound vs direct count over " + std::to_string(tested) +
                     " colorings at m=" + std::to_string(m));
    }
    return ck.result;
}

SuiteResult suite_ramsey(const SuiteOptions& opts) {
    Checker ck("ramsey");
    if (opts.c != 0 || opts.d != 0 || opts.m != 0) {
        const int c = opts.c ? opts.c : 2;
        const int d = opts.d ? opts.d : 2;
        const int m = opts.m ? opts.m : 2;
        const int n_max = opts.n_max ? opts.n_max : m + 3;
        const auto res = ramsey_search(c, d, m, n_max);
        if (res.status == RamseySearchResult::Status::Found) {
            ck.note("n = " + std::to_string(res.n));
            ck.check(true, "search conclusive");
        } else {
            ck.note(std::string("unknown up to n = ") + std::to_string(n_max) +
                    (res.budget_exhausted ? " (budget exhausted)" : "") +
                    ", largest counterexample at n = " +
                    std::to_string(res.largest_counterexample_n));
            ck.check(!res.budget_exhausted, "search within budget");
        }
        return ck.result;
    }

    const auto check_known = [&](int c, int expected) {
        const auto res = ramsey_search(c, 2, 2, expected + 1);
        const std::string tag = "c=" + std::to_string(c);
        ck.check(res.status == RamseySearchResult::Status::Found && res.n == expected,
                 "minimal n, " + tag);
        ck.check(res.largest_counterexample_n == expected - 1, "counterexample at n-1, " + tag);
        if (res.counterexample) {
            ck.check(!find_monochromatic_subgrid(*res.counterexample, 2).has_value(),
                     "counterexample verified, " + tag);
            ck.note("n = " + std::to_string(res.n) + " for " + tag +
                    ", counterexample at n = " + std::to_string(res.largest_counterexample_n));
        } else {
            ck.check(false, "counterexample produced, " + tag);
        }
    };
    check_known(2, 3);
    check_known(3, 4);
    return ck.result;
}

SuiteResult suite_product_bound(const SuiteOptions&) {
    Checker ck("product-bound");
    const auto family = small_hypergraph_family(3);
    for (std::size_t hi = 0; hi < family.size(); ++hi) {
        const Hypergraph& h = family[hi];
        for (int c : {2, 3}) {
            const auto base = disc_exact(h, c);
            const auto square = direct_product(h, 2);
            const auto lhs = disc_exact(square, c);
            // disc(H^2, c) <= c * disc(H,c)^2, i.e. numerators lhs <= base^2.
            ck.check(lhs.value.numerator <= base.value.numerator * base.value.numerator,
                     "product bound, c=" + std::to_string(c) + " H#" + std::to_string(hi));
        }
    }
    return ck.result;
}

SuiteResult suite_complete_disc(const SuiteOptions&) {
    Checker ck("complete-disc");
    for (int c : {2, 3})
        for (int n = 1; n <= 6; ++n)
            for (int m = 1; m <= n; ++m) {
                const DiscValue value = complete_disc_value(n, m, c);
                const DiscValue brute = disc_exact(complete_uniform(n, m), c).value;
                const std::string tag = "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                        " c=" + std::to_string(c);
                ck.check(value == brute, "value matches brute force, " + tag);
                if (n >= c * (m - 1) + 1)
                    ck.check(value.numerator == BigInt(c - 1) * m && value.denominator == c,
                             "formula branch, " + tag);
            }
    return ck.result;
}

struct SuiteEntry {
    const char* name;
    SuiteResult (*run)(const SuiteOptions&);
};

constexpr SuiteEntry kSuites[] = {
    {"partition-identity", suite_partition_identity},
    {"partition-property", suite_partition_property},
    {"stirling", suite_stirling},
    {"gate-corollaries", suite_gate_corollaries},
    {"transfer-equality", suite_transfer_equality},
    {"shift-transfer", suite_shift_transfer},
    {"block-transfer", suite_block_transfer},
    {"bounds-arithmetic", suite_bounds_arithmetic},
    {"ramsey", suite_ramsey},
    {"product-bound", suite_product_bound},
    {"complete-disc", suite_complete_disc},
};

} // namespace

std::vector<std::string> verify_suite_names() {
    std::vector<std::string> names;
    for (const auto& entry : kSuites) names.push_back(entry.name);
    return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opts) {
    if (name == "all") {
        SuiteResult total;
        total.name = "all";
        for (const auto& entry : kSuites) {
            const SuiteResult r = entry.run(opts);
            total.cases += r.cases;
            total.failures += r.failures;
            for (const auto& note : r.notes) total.notes.push_back(r.name + ": " + note);
        }
        return total;
    }
    for (const auto& entry : kSuites)
        if (name == entry.name) return entry.run(opts);
    throw argument_error("unknown verification suite: " + name);
}

} // namespace symdisc
