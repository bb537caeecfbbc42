#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "symdisc/hypergraph.hpp"
#include "symdisc/product.hpp"

namespace symdisc {

// Hypergraph text format: UTF-8 lines, '#' starts a comment, first content
// line "n <count>", then one "e <v1> <v2> ..." line per edge with ascending
// vertex ids.
Hypergraph read_hypergraph(std::istream& in);
void write_hypergraph(std::ostream& out, const Hypergraph& h);
Hypergraph load_hypergraph(const std::string& path);
void save_hypergraph(const std::string& path, const Hypergraph& h);

// Coloring text format: first content line "c <count>", then one
// "<vertex> <color>" line per vertex; vertices 1..n each exactly once.
Coloring read_coloring(std::istream& in);
void write_coloring(std::ostream& out, const Coloring& chi);
Coloring load_coloring(const std::string& path);
void save_coloring(const std::string& path, const Coloring& chi);

// ProductColoring document: {"kind", "n", "d", "c", ...variant payload}.
// kinds: "explicit" (colors by tuple rank), "simplex_assigned" (canonical
// simplex-id strings -> colors, plus base_colors), "shift_reduced" (p, q,
// inner), "block_reduced" (dprime, assignment, inner). Round-robin
// assignments are materialized on write, subject to cap.
nlohmann::json to_json(const ProductColoring& chi, long long cap = kDefaultExplicitCap);
ProductColoring product_coloring_from_json(const nlohmann::json& j);
ProductColoring load_product_coloring(const std::string& path);
void save_product_coloring(const std::string& path, const ProductColoring& chi,
                           long long cap = kDefaultExplicitCap);

} // namespace symdisc
