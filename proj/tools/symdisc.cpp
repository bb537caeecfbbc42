// Command-line surface for the symmetric-product discrepancy toolkit.
//
// Exit codes: 0 success, 2 usage/parse error, 3 violated precondition,
// 4 size cap exceeded, 5 verification failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "symdisc/bounds.hpp"
#include "symdisc/constructions.hpp"
#include "symdisc/errors.hpp"
#include "symdisc/io.hpp"
#include "symdisc/solver.hpp"
#include "symdisc/verify.hpp"

namespace {

using namespace symdisc;

std::vector<int> parse_csv_ints(const std::string& s, const char* what) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw parse_error(std::string("bad ") + what + " list: '" + s + "'");
        }
    }
    if (out.empty()) throw parse_error(std::string("empty ") + what + " list");
    return out;
}

// "5" or "2..7"
std::pair<int, int> parse_range(const std::string& s, const char* what) {
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(s);
            return {v, v};
        }
        const int lo = std::stoi(s.substr(0, dots));
        const int hi = std::stoi(s.substr(dots + 2));
        if (lo > hi) throw std::invalid_argument(s);
        return {lo, hi};
    } catch (const std::exception&) {
        throw parse_error(std::string("bad ") + what + " range: '" + s + "'");
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) throw parse_error("cannot open file for writing: " + out_path);
        out << text;
    }
}

struct ConstructReport {
    ProductColoring coloring;
    DiscValue left;
    DiscValue right;
};

void print_transfer(const ConstructReport& report, const std::string& out_path, long long cap) {
    std::cout << "left = " << report.left.str() << "\n";
    std::cout << "right = " << report.right.str() << "\n";
    std::cout << "verdict = " << (report.left <= report.right ? "holds" : "violated") << "\n";
    if (!out_path.empty()) save_product_coloring(out_path, report.coloring, cap);
}

// Inner coloring for the shift/block constructions: the exact base coloring at
// dimension 1, otherwise an exact coloring of the materialized s-fold product.
ProductColoring exact_inner(const Hypergraph& h, int c, int s, long long cap) {
    if (s == 1) return ProductColoring::from_base(disc_exact(h, c).witness);
    const Hypergraph power = symmetric_product_explicit(h, s, cap);
    auto solved = disc_exact(power, c);
    return ProductColoring::make_explicit(h.n, s, c, std::move(solved.witness.colors));
}

int run(int argc, char** argv) {
    CLI::App app{"Exact discrepancy toolkit for symmetric products of hypergraphs"};
    app.require_subcommand(1);
    int exit_code = 0;

    std::string hypergraph_path, coloring_path, base_path, out_path, point_str, t_str;
    std::string format = "tsv";
    std::string c_range = "2", d_range = "2";
    int c = 0, d = 0, dprime = 0, k = 0, m = 0, n = 0, p = 0, q = 0;
    int edges = 1, max_size = 1, n_max = 0, kappa = 0;
    long long cap = 0;
    std::uint64_t seed = 1;
    std::string suite = "all";
    std::vector<std::string> dims;

    // disc
    auto* cmd_disc = app.add_subcommand("disc", "Exact c-color discrepancy of a hypergraph");
    cmd_disc->add_option("--hypergraph,-H", hypergraph_path, "hypergraph file")->required();
    cmd_disc->add_option("--c", c, "number of colors")->required();
    cmd_disc->add_option("--cap", cap, "vertex cap for the exact solver");
    cmd_disc->add_option("--out", out_path, "write the witness coloring here");
    cmd_disc->callback([&] {
        const Hypergraph h = load_hypergraph(hypergraph_path);
        const auto res = disc_exact(h, c, cap > 0 ? static_cast<int>(cap) : kDefaultExactCap);
        std::cout << res.value.str() << "\n";
        if (out_path.empty()) {
            std::ostringstream ss;
            write_coloring(ss, res.witness);
            std::cout << ss.str();
        } else {
            save_coloring(out_path, res.witness);
        }
    });

    // eval
    auto* cmd_eval = app.add_subcommand("eval", "Evaluate a stored coloring");
    cmd_eval->add_option("--hypergraph,-H", hypergraph_path, "hypergraph file");
    cmd_eval->add_option("--coloring", coloring_path, "product coloring document (JSON)");
    cmd_eval->add_option("--base", base_path, "base coloring file (text)");
    cmd_eval->add_option("--point", point_str, "comma-separated point, e.g. 1,2,2");
    cmd_eval->add_option("--cap", cap, "slow-path enumeration cap");
    cmd_eval->callback([&] {
        const long long slow_cap = cap > 0 ? cap : kDefaultExplicitCap;
        if (!point_str.empty()) {
            if (coloring_path.empty())
                throw argument_error("eval: --point requires --coloring");
            const ProductColoring chi = load_product_coloring(coloring_path);
            std::cout << evaluate(chi, parse_csv_ints(point_str, "point")) << "\n";
            return;
        }
        if (hypergraph_path.empty())
            throw argument_error("eval: need --point or --hypergraph");
        const Hypergraph h = load_hypergraph(hypergraph_path);
        if (!coloring_path.empty()) {
            const ProductColoring chi = load_product_coloring(coloring_path);
            std::cout << product_disc_of_coloring(h, chi, CountStrategy::Fast, slow_cap).str()
                      << "\n";
        } else if (!base_path.empty()) {
            std::cout << disc_of_coloring(h, load_coloring(base_path)).str() << "\n";
        } else {
            throw argument_error("eval: need --coloring or --base");
        }
    });

    // gate
    auto* cmd_gate = app.add_subcommand("gate", "Divisibility gate c | k! S(d,k), k = 2..d");
    cmd_gate->add_option("--c", c_range, "color count or range, e.g. 3 or 2..6")->required();
    cmd_gate->add_option("--d", d_range, "dimension or range, e.g. 4 or 2..7")->required();
    cmd_gate->add_option("--format", format, "tsv or json")
        ->check(CLI::IsMember({"tsv", "json"}));
    cmd_gate->add_option("--out", out_path, "write the report here");
    cmd_gate->callback([&] {
        const auto [c_lo, c_hi] = parse_range(c_range, "--c");
        const auto [d_lo, d_hi] = parse_range(d_range, "--d");
        std::ostringstream ss;
        if (format == "json") {
            nlohmann::json arr = nlohmann::json::array();
            for (int ci = c_lo; ci <= c_hi; ++ci)
                for (int di = d_lo; di <= d_hi; ++di) {
                    const GateReport report = divisibility_gate(ci, di);
                    nlohmann::json entry;
                    entry["c"] = ci;
                    entry["d"] = di;
                    entry["pass"] = report.pass;
                    entry["first_failing_k"] = report.first_failing_k;
                    nlohmann::json rows = nlohmann::json::array();
                    for (const auto& row : report.entries)
                        rows.push_back({{"k", row.k},
                                        {"count", row.count.str()},
                                        {"residue", row.residue},
                                        {"pass", row.pass}});
                    entry["rows"] = rows;
                    arr.push_back(entry);
                }
            ss << arr.dump(2) << "\n";
        } else {
            ss << "c\td\tverdict\tfirst_failing_k\n";
            for (int ci = c_lo; ci <= c_hi; ++ci)
                for (int di = d_lo; di <= d_hi; ++di) {
                    const GateReport report = divisibility_gate(ci, di);
                    ss << ci << "\t" << di << "\t" << (report.pass ? "pass" : "fail") << "\t"
                       << report.first_failing_k << "\n";
                }
        }
        emit(ss.str(), out_path);
    });

    // stirling
    auto* cmd_stirling = app.add_subcommand("stirling", "Stirling number S(d,k)");
    cmd_stirling->add_option("--d", d, "d")->required();
    cmd_stirling->add_option("--k", k, "k")->required();
    cmd_stirling->callback([&] {
        const BigInt rec = stirling2(d, k);
        if (rec != stirling2_formula(d, k))
            throw error("stirling: the two computation routes disagree");
        std::cout << rec.str() << "\n";
    });

    // simplices list / classify
    auto* cmd_simplices = app.add_subcommand("simplices", "Simplex enumeration and lookup");
    cmd_simplices->require_subcommand(1);
    auto* cmd_list = cmd_simplices->add_subcommand("list", "List simplices in enumeration order");
    cmd_list->add_option("--d", d, "ambient dimension")->required();
    cmd_list->add_option("--dims", dims, "dimensions to list (default all)");
    cmd_list->add_option("--out", out_path, "write the list here");
    cmd_list->callback([&] {
        std::vector<int> ls;
        if (dims.empty())
            for (int l = 1; l <= d; ++l) ls.push_back(l);
        else
            for (const auto& s : dims)
                for (int v : parse_csv_ints(s, "dims")) ls.push_back(v);
        std::ostringstream ss;
        for (const auto& id : enumerate_simplices(d, ls)) ss << to_string(id) << "\n";
        emit(ss.str(), out_path);
    });
    auto* cmd_classify = cmd_simplices->add_subcommand("classify", "Simplex containing a point");
    cmd_classify->add_option("--point", point_str, "comma-separated point")->required();
    cmd_classify->callback([&] {
        const auto pc = classify_point(parse_csv_ints(point_str, "point"));
        std::cout << to_string(pc.id) << "\n";
        std::cout << "alpha =";
        for (int a : pc.alpha) std::cout << " " << a;
        std::cout << "\n";
    });

    // construct sym / shift / block
    auto* cmd_construct = app.add_subcommand("construct", "Build a transfer coloring");
    cmd_construct->require_subcommand(1);

    auto* cmd_sym = cmd_construct->add_subcommand(
        "sym", "Simplex-balanced coloring of [n]^d (requires the gate)");
    cmd_sym->add_option("--hypergraph,-H", hypergraph_path, "hypergraph file")->required();
    cmd_sym->add_option("--c", c, "number of colors")->required();
    cmd_sym->add_option("--d", d, "product dimension")->required();
    cmd_sym->add_option("--base", base_path, "base coloring (default: exact witness)");
    cmd_sym->add_option("--out", out_path, "write the coloring document here");
    cmd_sym->add_option("--cap", cap, "materialization cap");
    cmd_sym->callback([&] {
        const long long lim = cap > 0 ? cap : kDefaultExplicitCap;
        const Hypergraph h = load_hypergraph(hypergraph_path);
        const Coloring psi =
            base_path.empty() ? disc_exact(h, c).witness : load_coloring(base_path);
        if (psi.c != c) throw argument_error("construct sym: base coloring has wrong color count");
        ConstructReport report{simplex_balanced_coloring(psi, d), DiscValue{}, DiscValue{}};
        report.left = product_disc_of_coloring(h, report.coloring);
        report.right = disc_of_coloring(h, psi);
        print_transfer(report, out_path, lim);
    });

    auto* cmd_shift = cmd_construct->add_subcommand(
        "shift", "Shift-orbit reduction for c = p^q, d >= c");
    cmd_shift->add_option("--hypergraph,-H", hypergraph_path, "hypergraph file")->required();
    cmd_shift->add_option("--p", p, "prime p")->required();
    cmd_shift->add_option("--q", q, "exponent q")->required();
    cmd_shift->add_option("--d", d, "product dimension")->required();
    cmd_shift->add_option("--out", out_path, "write the coloring document here");
    cmd_shift->add_option("--cap", cap, "materialization cap");
    cmd_shift->callback([&] {
        const long long lim = cap > 0 ? cap : kDefaultExplicitCap;
        const Hypergraph h = load_hypergraph(hypergraph_path);
        int pc = 1;
        for (int i = 0; i < q; ++i) pc *= p;
        int keep = 1;
        for (int i = 0; i < q - 1; ++i) keep *= p;
        const int s = d - (p - 1) * keep;
        const ProductColoring inner = exact_inner(h, pc, s, lim);
        ConstructReport report{shift_reduced_coloring(inner, p, q, d), DiscValue{}, DiscValue{}};
        report.left = product_disc_of_coloring(h, report.coloring);
        report.right = product_disc_of_coloring(h, inner);
        print_transfer(report, out_path, lim);
    });

    auto* cmd_block = cmd_construct->add_subcommand(
        "block", "Block reduction over the first d' coordinates (requires the gate at d')");
    cmd_block->add_option("--hypergraph,-H", hypergraph_path, "hypergraph file")->required();
    cmd_block->add_option("--c", c, "number of colors")->required();
    cmd_block->add_option("--d", d, "product dimension")->required();
    cmd_block->add_option("--dprime", dprime, "reduced prefix length d'")->required();
    cmd_block->add_option("--out", out_path, "write the coloring document here");
    cmd_block->add_option("--cap", cap, "materialization cap");
    cmd_block->callback([&] {
        const long long lim = cap > 0 ? cap : kDefaultExplicitCap;
        const Hypergraph h = load_hypergraph(hypergraph_path);
        const ProductColoring inner = exact_inner(h, c, d - dprime + 1, lim);
        ConstructReport report{block_reduced_coloring(inner, d, dprime), DiscValue{}, DiscValue{}};
        report.left = product_disc_of_coloring(h, report.coloring);
        report.right = product_disc_of_coloring(h, inner);
        print_transfer(report, out_path, lim);
    });

    // bounds min-m / imbalance
    auto* cmd_bounds = app.add_subcommand("bounds", "Lower-bound arithmetic");
    cmd_bounds->require_subcommand(1);
    auto* cmd_minm = cmd_bounds->add_subcommand("min-m", "Threshold m for the lower-bound chain");
    cmd_minm->add_option("--k", k, "k")->required();
    cmd_minm->add_option("--d", d, "d")->required();
    cmd_minm->callback([&] { std::cout << "m = " << min_m_for_lower_bound(k, d) << "\n"; });

    auto* cmd_imb = cmd_bounds->add_subcommand("imbalance", "Census-based imbalance lower bound");
    cmd_imb->add_option("--coloring", coloring_path, "product coloring document")->required();
    cmd_imb->add_option("--kappa", kappa, "largest unbalanced dimension")->required();
    cmd_imb->add_option("--t", t_str, "grid values, e.g. 1,2,3");
    cmd_imb->add_option("--m", m, "use T = 1..m");
    cmd_imb->add_option("--format", format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
    cmd_imb->callback([&] {
        const ProductColoring chi = load_product_coloring(coloring_path);
        std::vector<int> T;
        if (!t_str.empty())
            T = parse_csv_ints(t_str, "--t");
        else if (m > 0)
            for (int i = 1; i <= m; ++i) T.push_back(i);
        else
            throw argument_error("bounds imbalance: need --t or --m");
        const auto census = census_of_coloring(chi, T);
        const BigRational bound = imbalance_lower_bound(census, kappa);
        if (format == "json") {
            nlohmann::json j;
            j["d"] = census.d;
            j["c"] = census.c;
            j["m"] = census.m;
            j["kappa"] = kappa;
            nlohmann::json rows = nlohmann::json::array();
            for (int l = 1; l <= census.d; ++l)
                rows.push_back({{"dimension", l},
                                {"mono_counts", census.mono_counts[l - 1]},
                                {"non_monochromatic", census.non_mono[l - 1]}});
            j["census"] = rows;
            j["bound"] = {{"numerator", boost::multiprecision::numerator(bound).str()},
                          {"denominator", boost::multiprecision::denominator(bound).str()}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "dimension\tmono_counts\tnon_monochromatic\n";
            for (int l = 1; l <= census.d; ++l) {
                std::cout << l << "\t";
                for (int i = 0; i < census.c; ++i)
                    std::cout << (i ? "," : "") << census.mono_counts[l - 1][i];
                std::cout << "\t" << census.non_mono[l - 1] << "\n";
            }
            std::cout << "bound = " << boost::multiprecision::numerator(bound).str() << "/"
                      << boost::multiprecision::denominator(bound).str() << "\n";
        }
    });

    // ramsey
    auto* cmd_ramsey = app.add_subcommand("ramsey", "Desk-scale monochromatic-subgrid search");
    cmd_ramsey->add_option("--c", c, "number of colors")->required();
    cmd_ramsey->add_option("--d", d, "dimension")->required();
    cmd_ramsey->add_option("--m", m, "target subset size")->required();
    cmd_ramsey->add_option("--nmax", n_max, "scan limit (default m+3)");
    cmd_ramsey->add_option("--cap", cap, "search node budget");
    cmd_ramsey->add_option("--format", format, "tsv or json")
        ->check(CLI::IsMember({"tsv", "json"}));
    cmd_ramsey->add_option("--out", out_path, "write the largest counterexample here");
    cmd_ramsey->callback([&] {
        const int lim = n_max > 0 ? n_max : m + 3;
        const auto res = ramsey_search(c, d, m, lim,
                                       cap > 0 ? static_cast<unsigned long long>(cap)
                                               : kDefaultRamseyBudget);
        const bool found = res.status == RamseySearchResult::Status::Found;
        if (format == "json") {
            nlohmann::json j;
            j["c"] = c;
            j["d"] = d;
            j["m"] = m;
            j["n_max"] = lim;
            j["status"] = found ? "found" : "unknown";
            if (found) j["n"] = res.n;
            j["budget_exhausted"] = res.budget_exhausted;
            j["largest_counterexample_n"] = res.largest_counterexample_n;
            j["nodes"] = res.nodes;
            std::cout << j.dump(2) << "\n";
        } else {
            if (found) {
                std::cout << "n = " << res.n << "\n";
            } else {
                std::cout << "unknown up to n = " << lim
                          << (res.budget_exhausted ? " (budget exhausted)" : "") << "\n";
            }
            if (res.largest_counterexample_n > 0)
                std::cout << "counterexample at n = " << res.largest_counterexample_n << "\n";
        }
        if (!out_path.empty()) {
            if (!res.counterexample) throw argument_error("ramsey: no counterexample to write");
            save_product_coloring(out_path, *res.counterexample);
        }
    });

    // gen complete / random
    auto* cmd_gen = app.add_subcommand("gen", "Instance generators");
    cmd_gen->require_subcommand(1);
    auto* cmd_complete = cmd_gen->add_subcommand("complete", "Complete m-uniform hypergraph");
    cmd_complete->add_option("--n", n, "vertex count")->required();
    cmd_complete->add_option("--m", m, "edge size")->required();
    cmd_complete->add_option("--out", out_path, "write the hypergraph here");
    cmd_complete->callback([&] {
        std::ostringstream ss;
        write_hypergraph(ss, complete_uniform(n, m));
        emit(ss.str(), out_path);
    });
    auto* cmd_random = cmd_gen->add_subcommand("random", "Seeded random hypergraph");
    cmd_random->add_option("--n", n, "vertex count")->required();
    cmd_random->add_option("--edges", edges, "edge count")->required();
    cmd_random->add_option("--max-size", max_size, "maximum edge size")->required();
    cmd_random->add_option("--seed", seed, "seed");
    cmd_random->add_option("--out", out_path, "write the hypergraph here");
    cmd_random->callback([&] {
        std::ostringstream ss;
        write_hypergraph(ss, random_hypergraph(n, edges, max_size, seed));
        emit(ss.str(), out_path);
    });

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "Run a named invariant suite");
    std::string suite_help = "suite name or 'all'; suites:";
    for (const auto& name : verify_suite_names()) suite_help += " " + name;
    cmd_verify->add_option("suite", suite, suite_help);
    cmd_verify->add_option("--seed", seed, "seed for sampled suites");
    cmd_verify->add_option("--c", c, "suite parameter c");
    cmd_verify->add_option("--d", d, "suite parameter d");
    cmd_verify->add_option("--m", m, "suite parameter m");
    cmd_verify->add_option("--nmax", n_max, "suite parameter n_max");
    cmd_verify->callback([&] {
        SuiteOptions opts;
        opts.seed = seed;
        opts.c = c;
        opts.d = d;
        opts.m = m;
        opts.n_max = n_max;
        const SuiteResult res = run_suite(suite, opts);
        std::cout << res.name << ": " << (res.pass() ? "pass" : "FAIL") << ", " << res.cases
                  << " cases, " << res.failures << " failures\n";
        for (const auto& note : res.notes) std::cout << note << "\n";
        if (!res.pass()) exit_code = 5;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e); // prints help or the usage error
        return code == 0 ? 0 : 2;
    }
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const size_cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const argument_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
