#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "switchlab/graph.hpp"

namespace switchlab {

/// Edge-list text: a header line "n m" followed by m lines "u v" (1-based).
LabeledGraph parse_edge_list(std::string_view text);
std::string to_edge_list(const LabeledGraph& g);

/// JSON mirror: {"n": int, "edges": [[u, v], ...]}.
LabeledGraph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const LabeledGraph& g);

/// Accepts either format; JSON is recognized by a leading '{'.
LabeledGraph parse_graph(std::string_view text);
LabeledGraph read_graph_file(const std::string& path);

/// Graphviz rendering of an undirected graph.
std::string to_dot(const LabeledGraph& g, std::string_view name = "G");

/// Compact hex encoding of the upper-triangle edge bits, row by row.
std::string edge_code(const LabeledGraph& g);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace switchlab
