#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "switchlab/graph.hpp"
#include "switchlab/switch_ops.hpp"

namespace switchlab {

enum class Filter { all, forest, connected, unicyclic, pseudoforest, bipartite, nonbipartite };

const char* to_string(Filter f) noexcept;
/// Throws ParseError for unknown names.
Filter parse_filter(std::string_view name);
bool satisfies(const LabeledGraph& g, Filter f);

inline constexpr std::size_t kDefaultRealizationBudget = 2'000'000;

/// All labeled graphs with degree vector d that satisfy `filter`, sorted by
/// LabeledGraph ordering. Throws BudgetError when more than `budget` would be
/// produced. An infeasible vector yields an empty list.
std::vector<LabeledGraph> enumerate_realizations(
    const DegreeVector& d, Filter filter = Filter::all,
    std::size_t budget = kDefaultRealizationBudget);

/// One adjacency of the realization graph: `sw` turns the source into
/// vertex `target`.
struct Arc {
  std::uint32_t target = 0;
  TwoSwitch sw;
};

/// Realizations of a degree vector under a filter, joined when one switch
/// apart. Arcs are stored in both directions.
class RealizationGraph {
 public:
  RealizationGraph(DegreeVector degree, Filter filter, std::vector<LabeledGraph> vertices);

  const DegreeVector& degree() const noexcept { return degree_; }
  Filter filter() const noexcept { return filter_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return arcs_.size() / 2; }

  const LabeledGraph& vertex(std::size_t id) const { return vertices_[id]; }
  const std::vector<LabeledGraph>& vertices() const noexcept { return vertices_; }

  /// Arcs out of `id`, sorted by target.
  std::span<const Arc> arcs(std::size_t id) const {
    return {arcs_.data() + offsets_[id], offsets_[id + 1] - offsets_[id]};
  }

  std::optional<std::size_t> find(const LabeledGraph& g) const;
  /// Throws MembershipError when g is not a vertex.
  std::size_t id_of(const LabeledGraph& g) const;

 private:
  DegreeVector degree_;
  Filter filter_;
  std::vector<LabeledGraph> vertices_;
  std::unordered_map<LabeledGraph, std::uint32_t> index_;
  std::vector<std::size_t> offsets_;
  std::vector<Arc> arcs_;
};

RealizationGraph build_realization_graph(const DegreeVector& d, Filter filter = Filter::all,
                                         std::size_t budget = kDefaultRealizationBudget);

struct ExplorationReport {
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::size_t component_count = 0;
  /// Nonincreasing.
  std::vector<std::size_t> component_sizes;
  std::optional<int> diameter_of_largest;
};

/// Component id per vertex, numbered in order of lowest member.
std::vector<std::uint32_t> component_ids(const RealizationGraph& rg);

ExplorationReport connectivity(const RealizationGraph& rg, bool with_diameter = false);

/// BFS distances from `source`; -1 marks unreachable vertices.
std::vector<int> distances_from(const RealizationGraph& rg, std::size_t source);

/// Switch distance between two vertices, or nullopt when unreachable.
std::optional<int> distance(const RealizationGraph& rg, const LabeledGraph& g,
                            const LabeledGraph& h);

enum class Counterexample { B, Bprime, N, Nprime };

Counterexample parse_counterexample(std::string_view name);
const char* to_string(Counterexample c) noexcept;

/// The bipartite/non-bipartite separating constructions, labeled so that the
/// degree vector is nonincreasing:
///  - B(n):  K_{n,n} plus a leaf on each side (leaves at distance 3), n >= 3
///  - B'(n): K_{n,n} plus two leaves on one side (distance 4), n >= 3
///  - N(k):  a triangle and a disjoint star of order k, k >= 4
///  - N'(k): a path of order 3 and a triangle with k-3 leaves on one vertex
LabeledGraph construct_counterexample(Counterexample which, int parameter);

/// Exact isomorphism test by color refinement plus backtracking.
bool are_isomorphic(const LabeledGraph& g, const LabeledGraph& h);

/// Every graphical degree vector of length n (labeled, lexicographic order).
std::vector<DegreeVector> graphical_degree_vectors(int n);

}  // namespace switchlab
