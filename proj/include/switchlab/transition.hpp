#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "switchlab/graph.hpp"
#include "switchlab/switch_ops.hpp"

namespace switchlab {

/// Switches together with the graphs they pass through: trace[0] is the
/// source, trace[i] = apply(trace[i-1], switches[i-1]).
struct SwitchSequence {
  std::vector<TwoSwitch> switches;
  std::vector<LabeledGraph> trace;

  std::size_t length() const noexcept { return switches.size(); }
  const LabeledGraph& source() const { return trace.front(); }
  const LabeledGraph& target() const { return trace.back(); }
};

/// Replays `switches` from `source`, recording the trace.
SwitchSequence replay(const LabeledGraph& source, std::vector<TwoSwitch> switches);

/// True when the trace is consistent with the switches, starts at `source`,
/// ends at `target` and every element satisfies `predicate`.
bool trace_valid(const SwitchSequence& seq, const LabeledGraph& source,
                 const LabeledGraph& target,
                 const std::function<bool(const LabeledGraph&)>& predicate);

/// Leaves whose single edge is present in both graphs.
VertexSet trimmable_leaves(const LabeledGraph& g, const LabeledGraph& h);

/// Change in |E(g) & E(target)| when `s` is applied to g.
int common_edge_gain(const LabeledGraph& target, const TwoSwitch& s);

/// A forest-preserving switch (l v / u w) on `forest` after which leaf l is
/// trimmable against `target`. Requires no trimmable leaves; isolated
/// vertices are ignored. Candidates are ordered by l, then w; with
/// `prefer_gaining` the first one that grows the common edge set wins,
/// otherwise (or when none does) the first one.
TwoSwitch make_trimmable(const LabeledGraph& forest, const LabeledGraph& target,
                         bool prefer_gaining = true);

/// Lowest forest-preserving switch that grows the common edge set.
std::optional<TwoSwitch> gaining_forest_switch(const LabeledGraph& forest,
                                               const LabeledGraph& target);

inline constexpr std::size_t kDefaultBridgeBudget = 1'000'000;

enum class ForestPolicy {
  /// Plain leaf trimming with lowest-index leaf-fixing switches.
  leaf_trimming,
  /// Leaf trimming that only takes switches growing the common edge set,
  /// so the length stays within |E(target) - E(source)| - 1. When no forest
  /// switch grows it, the result is a shortest path found by bidirectional
  /// BFS instead.
  bounded,
};

/// Transition between two forests with the same degree vector through
/// forests only. `search_budget` caps the BFS fallback (BudgetError).
SwitchSequence forest_transition(const LabeledGraph& source, const LabeledGraph& target,
                                 ForestPolicy policy = ForestPolicy::bounded,
                                 std::size_t search_budget = kDefaultBridgeBudget);

/// Glues the unicyclic components of a pseudoforest whose nontrivial
/// components are all unicyclic into one, one switch per merge.
SwitchSequence pseudoforest_to_unicyclic(const LabeledGraph& g);

/// Turns a pseudoforest having a nontrivial tree component into a forest.
SwitchSequence pseudoforest_to_forest(const LabeledGraph& g);

/// Pseudoforest-preserving transition between two pseudoforests with the
/// same degree vector. The unicyclic bridge is found by bidirectional BFS
/// limited to `bridge_budget` node expansions (BudgetError beyond).
SwitchSequence pseudoforest_transition(const LabeledGraph& source,
                                       const LabeledGraph& target,
                                       std::size_t bridge_budget = kDefaultBridgeBudget);

/// |E(g) - E(h)|; never 1 for graphs with equal degree vectors.
int check_edge_difference(const LabeledGraph& g, const LabeledGraph& h);

/// |E(target) - E(source)| - 1, or 0 for equal graphs.
int forest_transition_bound(const LabeledGraph& source, const LabeledGraph& target);

}  // namespace switchlab
