#include "symdisc/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "symdisc/errors.hpp"

namespace symdisc {

namespace {

// Strips comments ('#' to end of line) and surrounding whitespace.
std::string clean_line(const std::string& raw) {
    std::string line = raw;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = line.find_last_not_of(" \t\r");
    return line.substr(begin, end - begin + 1);
}

long long parse_ll(const std::string& tok, int line_no, const char* what) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw parse_error(std::string("expected ") + what + ", got '" + tok + "'", line_no);
    }
}

std::ifstream open_for_read(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    return in;
}

std::ofstream open_for_write(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open file for writing: " + path);
    return out;
}

} // namespace

Hypergraph read_hypergraph(std::istream& in) {
    Hypergraph h;
    bool have_n = false;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = clean_line(raw);
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (!have_n) {
            if (tag != "n") throw parse_error("expected 'n <count>' first", line_no);
            std::string tok;
            if (!(ss >> tok)) throw parse_error("missing vertex count", line_no);
            const long long n = parse_ll(tok, line_no, "vertex count");
            if (n < 1) throw parse_error("vertex count must be positive", line_no);
            std::string extra;
            if (ss >> extra) throw parse_error("trailing content after vertex count", line_no);
            h.n = static_cast<int>(n);
            have_n = true;
            continue;
        }
        if (tag != "e") throw parse_error("expected 'e <v1> <v2> ...'", line_no);
        std::vector<int> edge;
        std::string tok;
        while (ss >> tok) {
            const long long v = parse_ll(tok, line_no, "vertex id");
            if (v < 1 || v > h.n) throw parse_error("vertex id out of range", line_no);
            if (!edge.empty() && v <= edge.back())
                throw parse_error("edge vertices must be strictly ascending", line_no);
            edge.push_back(static_cast<int>(v));
        }
        if (edge.empty()) throw parse_error("empty edge", line_no);
        h.edges.push_back(std::move(edge));
    }
    if (!have_n) throw parse_error("missing 'n <count>' line");
    h.validate();
    return h;
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
    out << "n " << h.n << "\n";
    for (const auto& e : h.edges) {
        out << "e";
        for (int v : e) out << " " << v;
        out << "\n";
    }
}

Hypergraph load_hypergraph(const std::string& path) {
    auto in = open_for_read(path);
    return read_hypergraph(in);
}

void save_hypergraph(const std::string& path, const Hypergraph& h) {
    auto out = open_for_write(path);
    write_hypergraph(out, h);
}

Coloring read_coloring(std::istream& in) {
    bool have_c = false;
    int c = 0;
    std::map<int, int> by_vertex;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string line = clean_line(raw);
        if (line.empty()) continue;
        std::istringstream ss(line);
        if (!have_c) {
            std::string tag, tok, extra;
            ss >> tag;
            if (tag != "c") throw parse_error("expected 'c <count>' first", line_no);
            if (!(ss >> tok)) throw parse_error("missing color count", line_no);
            const long long count = parse_ll(tok, line_no, "color count");
            if (count < 2) throw parse_error("need at least 2 colors", line_no);
            if (ss >> extra) throw parse_error("trailing content after color count", line_no);
            c = static_cast<int>(count);
            have_c = true;
            continue;
        }
        std::string vtok, ctok, extra;
        if (!(ss >> vtok >> ctok)) throw parse_error("expected '<vertex> <color>'", line_no);
        if (ss >> extra) throw parse_error("trailing content after color", line_no);
        const long long v = parse_ll(vtok, line_no, "vertex id");
        const long long col = parse_ll(ctok, line_no, "color");
        if (v < 1) throw parse_error("vertex id must be positive", line_no);
        if (col < 1 || col > c) throw parse_error("color out of range", line_no);
        if (!by_vertex.emplace(static_cast<int>(v), static_cast<int>(col)).second)
            throw parse_error("vertex assigned twice", line_no);
    }
    if (!have_c) throw parse_error("missing 'c <count>' line");
    if (by_vertex.empty()) throw parse_error("coloring has no vertices");
    const int n = by_vertex.rbegin()->first;
    if (static_cast<int>(by_vertex.size()) != n)
        throw parse_error("vertices must cover 1..n exactly once");
    Coloring chi;
    chi.c = c;
    chi.colors.resize(n);
    for (const auto& [v, col] : by_vertex) chi.colors[v - 1] = col;
    chi.validate();
    return chi;
}

void write_coloring(std::ostream& out, const Coloring& chi) {
    out << "c " << chi.c << "\n";
    for (int v = 1; v <= chi.n(); ++v) out << v << " " << chi.color(v) << "\n";
}

Coloring load_coloring(const std::string& path) {
    auto in = open_for_read(path);
    return read_coloring(in);
}

void save_coloring(const std::string& path, const Coloring& chi) {
    auto out = open_for_write(path);
    write_coloring(out, chi);
}

namespace {

nlohmann::json assignment_to_json(const SimplexAssignment& assignment, long long cap) {
    const SimplexAssignment table = assignment.materialized(cap);
    nlohmann::json j = nlohmann::json::object();
    for (int k = 2; k <= table.d(); ++k) {
        const long long count = simplex_count(table.d(), k);
        for (long long r = 0; r < count; ++r)
            j[to_string(simplex_unrank(table.d(), k, r))] = table.color_of(k, r);
    }
    return j;
}

SimplexAssignment assignment_from_json(const nlohmann::json& j, int d, int c) {
    if (!j.is_object()) throw parse_error("product coloring: 'assignment' must be an object");
    std::vector<std::vector<int>> per_dim(std::max(0, d - 1));
    std::vector<std::vector<char>> filled(std::max(0, d - 1));
    for (int k = 2; k <= d; ++k) {
        per_dim[k - 2].assign(static_cast<std::size_t>(simplex_count(d, k)), 0);
        filled[k - 2].assign(static_cast<std::size_t>(simplex_count(d, k)), 0);
    }
    for (const auto& [key, value] : j.items()) {
        const SimplexId id = parse_simplex_id(key);
        if (id.partition.d != d)
            throw parse_error("product coloring: simplex '" + key + "' has wrong ambient dimension");
        const int dim = id.dimension();
        if (dim < 2 || dim > d)
            throw parse_error("product coloring: simplex '" + key + "' has dimension outside 2..d");
        if (!value.is_number_integer())
            throw parse_error("product coloring: color for '" + key + "' must be an integer");
        const long long color = value.get<long long>();
        if (color < 1 || color > c)
            throw parse_error("product coloring: color out of range for '" + key + "'");
        const long long rank = simplex_rank(id);
        if (filled[dim - 2][static_cast<std::size_t>(rank)])
            throw parse_error("product coloring: simplex '" + key + "' assigned twice");
        filled[dim - 2][static_cast<std::size_t>(rank)] = 1;
        per_dim[dim - 2][static_cast<std::size_t>(rank)] = static_cast<int>(color);
    }
    for (int k = 2; k <= d; ++k)
        for (char f : filled[k - 2])
            if (!f) throw parse_error("product coloring: assignment misses a dimension-" +
                                      std::to_string(k) + " simplex");
    return SimplexAssignment::from_table(d, c, std::move(per_dim));
}

std::vector<int> colors_from_json(const nlohmann::json& j, const char* what) {
    if (!j.is_array()) throw parse_error(std::string("product coloring: '") + what + "' must be an array");
    std::vector<int> colors;
    colors.reserve(j.size());
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw parse_error(std::string("product coloring: '") + what + "' entries must be integers");
        colors.push_back(v.get<int>());
    }
    return colors;
}

int require_int(const nlohmann::json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_integer())
        throw parse_error(std::string("product coloring: missing integer field '") + field + "'");
    return j[field].get<int>();
}

} // namespace

nlohmann::json to_json(const ProductColoring& chi, long long cap) {
    nlohmann::json j;
    j["n"] = chi.n();
    j["d"] = chi.d();
    j["c"] = chi.c();
    if (const auto* e = std::get_if<ProductColoring::Explicit>(&chi.data())) {
        j["kind"] = "explicit";
        j["colors"] = e->colors;
    } else if (const auto* s = std::get_if<ProductColoring::SimplexAssigned>(&chi.data())) {
        j["kind"] = "simplex_assigned";
        j["assignment"] = assignment_to_json(s->assignment, cap);
        j["base_colors"] = s->base.colors;
    } else if (const auto* sr = std::get_if<ProductColoring::ShiftReduced>(&chi.data())) {
        j["kind"] = "shift_reduced";
        j["p"] = sr->p;
        j["q"] = sr->q;
        j["inner"] = to_json(*sr->inner, cap);
    } else {
        const auto& br = std::get<ProductColoring::BlockReduced>(chi.data());
        j["kind"] = "block_reduced";
        j["dprime"] = br.dprime;
        j["assignment"] = assignment_to_json(br.assignment, cap);
        j["inner"] = to_json(*br.inner, cap);
    }
    return j;
}

ProductColoring product_coloring_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw parse_error("product coloring: document must be an object");
    if (!j.contains("kind") || !j["kind"].is_string())
        throw parse_error("product coloring: missing 'kind'");
    const std::string kind = j["kind"].get<std::string>();
    const int n = require_int(j, "n");
    const int d = require_int(j, "d");
    const int c = require_int(j, "c");

    try {
        if (kind == "explicit") {
            return ProductColoring::make_explicit(n, d, c, colors_from_json(j.at("colors"), "colors"));
        }
        if (kind == "simplex_assigned") {
            if (!j.contains("assignment")) throw parse_error("product coloring: missing 'assignment'");
            Coloring base;
            base.c = c;
            base.colors = colors_from_json(j.at("base_colors"), "base_colors");
            return ProductColoring::make_simplex_assigned(
                n, d, assignment_from_json(j["assignment"], d, c), std::move(base));
        }
        if (kind == "shift_reduced") {
            if (!j.contains("inner")) throw parse_error("product coloring: missing 'inner'");
            return ProductColoring::make_shift_reduced(require_int(j, "p"), require_int(j, "q"), d,
                                                       product_coloring_from_json(j["inner"]));
        }
        if (kind == "block_reduced") {
            if (!j.contains("inner") || !j.contains("assignment"))
                throw parse_error("product coloring: missing 'inner' or 'assignment'");
            const int dprime = require_int(j, "dprime");
            return ProductColoring::make_block_reduced(
                dprime, d, assignment_from_json(j["assignment"], dprime, c),
                product_coloring_from_json(j["inner"]));
        }
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("product coloring: ") + e.what());
    }
    throw parse_error("product coloring: unknown kind '" + kind + "'");
}

ProductColoring load_product_coloring(const std::string& path) {
    auto in = open_for_read(path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return product_coloring_from_json(j);
}

void save_product_coloring(const std::string& path, const ProductColoring& chi, long long cap) {
    auto out = open_for_write(path);
    out << to_json(chi, cap).dump(2) << "\n";
}

} // namespace symdisc
