#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "switchlab/graph.hpp"

namespace switchlab {

enum class ParamId {
  matching,
  edge_cover,
  independence,
  vertex_cover,
  clique,
  domination,
  components,
  path_cover,
  zero_forcing,
  z_grundy,
  chromatic,
  rank,
  nullity,
  diameter,
};

const char* to_string(ParamId p) noexcept;
/// Throws ParseError for unknown identifiers.
ParamId parse_param(std::string_view name);
std::span<const ParamId> all_params() noexcept;

/// edge_cover and z_grundy need a graph without isolated vertices; diameter
/// needs a connected graph with at least one vertex. Everything else is
/// always defined.
bool is_defined(const LabeledGraph& g, ParamId p);

/// Throws UndefinedParameterError outside the domain reported by is_defined.
int evaluate(const LabeledGraph& g, ParamId p);
std::optional<int> try_evaluate(const LabeledGraph& g, ParamId p);

int matching_number(const LabeledGraph& g);

/// n - matching_number. With verification on, also runs the direct search.
int edge_cover_number(const LabeledGraph& g);
/// Smallest edge set touching every vertex, by direct search.
int min_edge_cover_direct(const LabeledGraph& g);

int independence_number(const LabeledGraph& g);
int vertex_cover_number(const LabeledGraph& g);
int clique_number(const LabeledGraph& g);
int domination_number(const LabeledGraph& g);

/// Most edges in a spanning subgraph whose components are paths.
int max_linear_forest_size(const LabeledGraph& g);
int path_cover_number(const LabeledGraph& g);

/// Vertices infected from `seed` by repeated forcing.
VertexSet forcing_closure(const LabeledGraph& g, VertexSet seed);
int zero_forcing_number(const LabeledGraph& g);

/// Length of a longest Z-sequence: each vertex has an open neighbor outside
/// the closed neighborhoods of the earlier ones. Memoized over footprints;
/// throws RangeError above 24 vertices.
int longest_z_sequence(const LabeledGraph& g);
/// n - zero_forcing_number. With verification on and n <= 16, also runs
/// longest_z_sequence.
int z_grundy_number(const LabeledGraph& g);

int chromatic_number(const LabeledGraph& g);

struct RankNullity {
  int rank = 0;
  int nullity = 0;
};

/// Rank of the adjacency matrix over the rationals (Bareiss elimination).
RankNullity adjacency_rank(const LabeledGraph& g);

}  // namespace switchlab
