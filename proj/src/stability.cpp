#include "switchlab/stability.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace switchlab {

namespace {

bool contiguous(const std::vector<int>& sorted_distinct) {
  return sorted_distinct.empty() ||
         sorted_distinct.back() - sorted_distinct.front() + 1 ==
             static_cast<int>(sorted_distinct.size());
}

// Connectivity of the subgraph induced by vertices with a value.
bool domain_is_connected(const RealizationGraph& rg,
                         const std::vector<std::optional<int>>& values) {
  std::size_t start = rg.vertex_count();
  std::size_t domain = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i]) continue;
    if (start == rg.vertex_count()) start = i;
    ++domain;
  }
  if (domain <= 1) return true;
  std::vector<char> seen(rg.vertex_count(), 0);
  std::vector<std::uint32_t> stack{static_cast<std::uint32_t>(start)};
  seen[start] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::uint32_t x = stack.back();
    stack.pop_back();
    for (const Arc& a : rg.arcs(x)) {
      if (!seen[a.target] && values[a.target]) {
        seen[a.target] = 1;
        ++reached;
        stack.push_back(a.target);
      }
    }
  }
  return reached == domain;
}

}  // namespace

ParamReport check_stability(const RealizationGraph& rg, ParamId param) {
  ParamReport report;
  report.param = param;
  report.degree = rg.degree();
  report.filter = rg.filter();
  report.values.reserve(rg.vertex_count());
  for (const LabeledGraph& g : rg.vertices()) {
    report.values.push_back(try_evaluate(g, param));
    if (!report.values.back()) ++report.excluded_count;
  }

  for (std::size_t x = 0; x < rg.vertex_count(); ++x) {
    const auto& here = report.values[x];
    if (!here) continue;
    for (const Arc& a : rg.arcs(x)) {
      const auto& there = report.values[a.target];
      if (!there) continue;
      // Each edge is measured from both endpoints.
      ++report.edges_checked;
      const int jump = std::abs(*there - *here);
      report.max_jump = std::max(report.max_jump, jump);
      // Witnesses are oriented so the parameter goes up.
      if (jump >= 2 && !report.witness) {
        report.witness = *there > *here
                             ? StabilityWitness{rg.vertex(x), a.sw, *here, *there}
                             : StabilityWitness{rg.vertex(a.target), inverse(a.sw), *there, *here};
      }
    }
  }
  report.edges_checked /= 2;
  report.is_stable = !report.witness.has_value();

  for (const auto& v : report.values) {
    if (v) report.attained.push_back(*v);
  }
  std::sort(report.attained.begin(), report.attained.end());
  report.attained.erase(std::unique(report.attained.begin(), report.attained.end()),
                        report.attained.end());
  if (!report.attained.empty()) {
    report.min = report.attained.front();
    report.max = report.attained.back();
    for (int v = *report.min, i = 0; v <= *report.max; ++v) {
      if (report.attained[i] == v) {
        ++i;
      } else {
        report.missing_values.push_back(v);
      }
    }
  }
  report.has_interval_property = report.missing_values.empty();
  report.domain_connected = domain_is_connected(rg, report.values);
  check_interval_property(report);
  return report;
}

ParamReport check_stability(const DegreeVector& d, ParamId param, Filter filter,
                            std::size_t budget) {
  return check_stability(build_realization_graph(d, filter, budget), param);
}

bool check_interval_property(const ParamReport& report) {
  const bool interval = contiguous(report.attained);
  if (interval != report.has_interval_property) {
    throw PreconditionError("report interval flag disagrees with its attained values");
  }
  if (report.is_stable && report.domain_connected && !interval) {
    throw TheoremViolation(std::string("stable parameter ") + to_string(report.param) +
                           " misses values on a connected realization graph");
  }
  return interval;
}

bool proven_stable(ParamId param, Filter filter) {
  switch (param) {
    case ParamId::matching:
    case ParamId::edge_cover:
    case ParamId::independence:
    case ParamId::vertex_cover:
    case ParamId::clique:
    case ParamId::domination:
    case ParamId::components:
    case ParamId::path_cover:
    case ParamId::chromatic: return true;
    case ParamId::zero_forcing:
    case ParamId::z_grundy: return filter == Filter::forest;
    default: return false;
  }
}

bool rank_jump_check(const RealizationGraph& forests) {
  if (forests.filter() != Filter::forest) {
    throw PreconditionError("rank jump check needs the forest realization graph");
  }
  std::vector<int> rank;
  rank.reserve(forests.vertex_count());
  for (const LabeledGraph& f : forests.vertices()) rank.push_back(adjacency_rank(f).rank);
  for (std::size_t x = 0; x < forests.vertex_count(); ++x) {
    for (const Arc& a : forests.arcs(x)) {
      const int jump = std::abs(rank[a.target] - rank[x]);
      if (jump != 0 && jump != 2) return false;
    }
  }
  return true;
}

bool rank_jump_check(const DegreeVector& d, std::size_t budget) {
  return rank_jump_check(build_realization_graph(d, Filter::forest, budget));
}

bool distance_lower_bound_check(const RealizationGraph& rg, ParamId param) {
  std::vector<std::optional<int>> values;
  values.reserve(rg.vertex_count());
  for (const LabeledGraph& g : rg.vertices()) values.push_back(try_evaluate(g, param));
  for (std::size_t s = 0; s < rg.vertex_count(); ++s) {
    if (!values[s]) continue;
    const std::vector<int> dist = distances_from(rg, s);
    for (std::size_t t = 0; t < rg.vertex_count(); ++t) {
      if (!values[t] || dist[t] < 0) continue;
      if (dist[t] < std::abs(*values[t] - *values[s])) return false;
    }
  }
  return true;
}

bool distance_lower_bound_check(const DegreeVector& d, ParamId param, Filter filter,
                                std::size_t budget) {
  return distance_lower_bound_check(build_realization_graph(d, filter, budget), param);
}

}  // namespace switchlab
