#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "switchlab/params.hpp"
#include "switchlab/realization.hpp"

namespace switchlab {

/// An edge of the realization graph across which the parameter jumps by two
/// or more. Replaying `sw` on `graph` reproduces `after`.
struct StabilityWitness {
  LabeledGraph graph;
  TwoSwitch sw;
  int before = 0;
  int after = 0;

  int delta() const noexcept { return after - before; }
};

struct ParamReport {
  ParamId param = ParamId::matching;
  DegreeVector degree;
  Filter filter = Filter::all;
  /// Indexed like the realization graph vertices; nullopt where undefined.
  std::vector<std::optional<int>> values;
  std::size_t excluded_count = 0;
  std::size_t edges_checked = 0;
  std::optional<int> min;
  std::optional<int> max;
  /// Largest |delta| over the checked edges.
  int max_jump = 0;
  bool is_stable = true;
  std::optional<StabilityWitness> witness;
  /// Sorted distinct values.
  std::vector<int> attained;
  std::vector<int> missing_values;
  bool has_interval_property = true;
  /// Whether the realization graph restricted to defined vertices is connected.
  bool domain_connected = true;

  bool empty() const noexcept { return attained.empty(); }
};

/// Evaluates `param` on every vertex of `rg` and measures |delta| on every
/// edge whose endpoints are both in the domain. Vertices outside the domain
/// are counted in excluded_count. Asserts that stable and connected implies
/// the interval property (TheoremViolation otherwise).
ParamReport check_stability(const RealizationGraph& rg, ParamId param);
ParamReport check_stability(const DegreeVector& d, ParamId param, Filter filter = Filter::all,
                            std::size_t budget = kDefaultRealizationBudget);

/// Recomputes contiguity from `report.attained`, checks it agrees with the
/// stored flag and asserts the stable-and-connected implication.
bool check_interval_property(const ParamReport& report);

/// Parameters that the stability theorems cover for this family.
bool proven_stable(ParamId param, Filter filter);

/// Adjacency-rank jumps across every f-switch edge of the forest realization
/// graph of d all lie in {0, 2}.
bool rank_jump_check(const DegreeVector& d, std::size_t budget = kDefaultRealizationBudget);
bool rank_jump_check(const RealizationGraph& forests);

/// dist(G, H) >= |param(G) - param(H)| for every pair of connected vertices
/// on which the parameter is defined.
bool distance_lower_bound_check(const RealizationGraph& rg, ParamId param);
bool distance_lower_bound_check(const DegreeVector& d, ParamId param, Filter filter,
                                std::size_t budget = kDefaultRealizationBudget);

}  // namespace switchlab
