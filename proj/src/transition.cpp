#include "switchlab/transition.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <unordered_map>

namespace switchlab {

namespace {

void require_same_degrees(const LabeledGraph& g, const LabeledGraph& h) {
  if (g.order() != h.order()) {
    throw PreconditionError("graphs have different orders");
  }
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (g.degree(v) != h.degree(v)) {
      throw PreconditionError("degree vectors differ at vertex " + std::to_string(v));
    }
  }
}

int edge_difference(const LabeledGraph& g, const LabeledGraph& h) {
  int twice = 0;
  for (Vertex v = 1; v <= g.order(); ++v) {
    twice += popcount(g.neighbors(v) & ~h.neighbors(v));
  }
  return twice / 2;
}

VertexSet leaves(const LabeledGraph& g) {
  VertexSet s = 0;
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (g.degree(v) == 1) s |= vertex_bit(v);
  }
  return s;
}

Vertex only_neighbor(const LabeledGraph& g, Vertex leaf) {
  return lowest(g.neighbors(leaf));
}

// Components that carry at least one edge.
std::vector<VertexSet> nontrivial_components(const LabeledGraph& g) {
  std::vector<VertexSet> out;
  for (VertexSet comp : components(g)) {
    if (popcount(comp) > 1) out.push_back(comp);
  }
  return out;
}

bool has_cycle_vertex(VertexSet comp, VertexSet cyc_vertices) {
  return (comp & cyc_vertices) != 0;
}

Edge lowest_edge_within(const LabeledGraph& g, VertexSet s) {
  for (Vertex u = 1; u <= g.order(); ++u) {
    if (!(s & vertex_bit(u))) continue;
    VertexSet higher = g.neighbors(u) & s & ~first_vertices(u);
    if (higher != 0) return Edge{u, lowest(higher)};
  }
  throw PreconditionError("vertex set spans no edge");
}

// Merges the two lowest unicyclic components until one remains. The switch
// takes one cycle edge from each, which joins the two cycles into one.
void glue_cycles(LabeledGraph& work, std::vector<TwoSwitch>& switches) {
  for (;;) {
    const VertexSet core = two_core(work);
    std::vector<VertexSet> cyclic;
    for (VertexSet comp : components(work)) {
      if (has_cycle_vertex(comp, core)) cyclic.push_back(comp);
    }
    if (cyclic.size() < 2) return;
    const Edge e1 = lowest_edge_within(work, cyclic[0] & core);
    const Edge e2 = lowest_edge_within(work, cyclic[1] & core);
    const TwoSwitch s{e1.u, e1.v, e2.u, e2.v};
    work = apply(work, s);
    switches.push_back(s);
  }
}

void require_trace(const SwitchSequence& seq, const LabeledGraph& source,
                   const LabeledGraph& target,
                   const std::function<bool(const LabeledGraph&)>& predicate,
                   const char* what) {
  if (!trace_valid(seq, source, target, predicate)) {
    throw TheoremViolation(std::string(what) +
                           " produced a trace leaving its graph family");
  }
}

// Nontrivial part connected with exactly one cycle; isolated vertices are
// ignored because no switch touches them.
bool unicyclic_core(const LabeledGraph& g) {
  const int active = g.order() - popcount(isolated_vertices(g));
  if (g.size() != active || active == 0) return false;
  return nontrivial_components(g).size() == 1;
}

// Shortest switch path from `from` to `to` through graphs satisfying `keep`,
// by bidirectional BFS.
std::vector<TwoSwitch> bridge_between(const LabeledGraph& from, const LabeledGraph& to,
                              std::size_t budget, bool (*keep)(const LabeledGraph&),
                              const char* family) {
  if (from == to) return {};
  struct Link {
    LabeledGraph other;
    TwoSwitch step;
    bool root = false;
  };
  std::unordered_map<LabeledGraph, Link> forward;
  std::unordered_map<LabeledGraph, Link> backward;
  forward.emplace(from, Link{from, {}, true});
  backward.emplace(to, Link{to, {}, true});
  std::vector<LabeledGraph> front_f{from};
  std::vector<LabeledGraph> front_b{to};
  std::size_t expansions = 0;
  std::optional<LabeledGraph> meet;

  while (!meet && !front_f.empty() && !front_b.empty()) {
    const bool go_forward = front_f.size() <= front_b.size();
    auto& frontier = go_forward ? front_f : front_b;
    auto& mine = go_forward ? forward : backward;
    auto& theirs = go_forward ? backward : forward;
    std::vector<LabeledGraph> next;
    for (const LabeledGraph& x : frontier) {
      if (++expansions > budget) {
        throw BudgetError(std::string(family) + " bridge search exceeded " +
                          std::to_string(budget) + " expansions");
      }
      for (const TwoSwitch& s : enumerate_switches(x)) {
        LabeledGraph y = apply(x, s);
        if (!keep(y) || mine.count(y)) continue;
        // Forward links store the step into y; backward links store the
        // step out of y towards `to`.
        mine.emplace(y, Link{x, go_forward ? s : inverse(s), false});
        if (theirs.count(y)) {
          meet = y;
          break;
        }
        next.push_back(std::move(y));
      }
      if (meet) break;
    }
    frontier = std::move(next);
  }
  if (!meet) {
    throw TheoremViolation(std::string("no switch path between two ") + family +
                           " realizations");
  }
  std::vector<TwoSwitch> path;
  for (LabeledGraph x = *meet; !forward.at(x).root;) {
    const Link& link = forward.at(x);
    path.push_back(link.step);
    x = link.other;
  }
  std::reverse(path.begin(), path.end());
  for (LabeledGraph x = *meet; !backward.at(x).root;) {
    const Link& link = backward.at(x);
    path.push_back(link.step);
    x = link.other;
  }
  return path;
}

}  // namespace

SwitchSequence replay(const LabeledGraph& source, std::vector<TwoSwitch> switches) {
  SwitchSequence seq;
  seq.trace.reserve(switches.size() + 1);
  seq.trace.push_back(source);
  for (const TwoSwitch& s : switches) seq.trace.push_back(apply(seq.trace.back(), s));
  seq.switches = std::move(switches);
  return seq;
}

bool trace_valid(const SwitchSequence& seq, const LabeledGraph& source,
                 const LabeledGraph& target,
                 const std::function<bool(const LabeledGraph&)>& predicate) {
  if (seq.trace.size() != seq.switches.size() + 1) return false;
  if (seq.trace.front() != source || seq.trace.back() != target) return false;
  for (std::size_t i = 0; i < seq.trace.size(); ++i) {
    if (!predicate(seq.trace[i])) return false;
    if (i > 0) {
      const TwoSwitch& s = seq.switches[i - 1];
      if (!is_valid(seq.trace[i - 1], s) || apply(seq.trace[i - 1], s) != seq.trace[i]) {
        return false;
      }
    }
  }
  return true;
}

VertexSet trimmable_leaves(const LabeledGraph& g, const LabeledGraph& h) {
  require_same_degrees(g, h);
  VertexSet out = 0;
  for_each_vertex(leaves(g), [&](Vertex l) {
    if (g.neighbors(l) == h.neighbors(l)) out |= vertex_bit(l);
  });
  return out;
}

int common_edge_gain(const LabeledGraph& target, const TwoSwitch& s) {
  return static_cast<int>(target.has_edge(s.a, s.c)) + static_cast<int>(target.has_edge(s.b, s.d)) -
         static_cast<int>(target.has_edge(s.a, s.b)) - static_cast<int>(target.has_edge(s.c, s.d));
}

TwoSwitch make_trimmable(const LabeledGraph& forest, const LabeledGraph& target,
                         bool prefer_gaining) {
  if (!is_forest(forest) || !is_forest(target)) {
    throw PreconditionError("make_trimmable needs two forests");
  }
  if (trimmable_leaves(forest, target) != 0) {
    throw PreconditionError("nothing to fix: a trimmable leaf already exists");
  }
  if (forest == target) throw PreconditionError("nothing to fix: graphs are equal");

  const VertexSet leaf_set = leaves(forest);
  const VertexSet active = forest.vertices() & ~isolated_vertices(forest);
  const bool matching = leaf_set == active;
  // Candidate switches (l v / u w) in order of l, then w. A candidate gains
  // a common edge with the target unless it removes one, that is unless uw
  // is a target edge and vw is not.
  std::optional<TwoSwitch> first;
  std::optional<TwoSwitch> gaining;
  for_each_vertex(leaf_set, [&](Vertex l) {
    if (gaining) return;
    const Vertex v = only_neighbor(forest, l);
    const Vertex u = only_neighbor(target, l);
    if (!matching && target.degree(u) < 2) return;
    VertexSet candidates = forest.neighbors(u);
    for (Vertex x : forest_path(forest, l, u)) candidates &= ~vertex_bit(x);
    for_each_vertex(candidates, [&](Vertex w) {
      if (gaining) return;
      const TwoSwitch c{l, v, u, w};
      if (!first) first = c;
      if (prefer_gaining && common_edge_gain(target, c) > 0) gaining = c;
    });
  });
  if (!first) {
    throw TheoremViolation("no leaf-fixing switch although no leaf is trimmable");
  }
  const TwoSwitch s = gaining ? *gaining : *first;
  if (!is_valid(forest, s) || !is_forest(apply(forest, s)) ||
      !(trimmable_leaves(apply(forest, s), target) & vertex_bit(s.a))) {
    throw TheoremViolation("leaf-fixing switch " + to_string(s) +
                           " is not a forest switch creating a trimmable leaf");
  }
  return s;
}

std::optional<TwoSwitch> gaining_forest_switch(const LabeledGraph& forest,
                                               const LabeledGraph& target) {
  std::optional<TwoSwitch> found;
  for_each_switch(forest, [&](const TwoSwitch& s) {
    if (!found && common_edge_gain(target, s) > 0 && is_forest(apply(forest, s))) {
      found = s;
    }
  });
  return found;
}

SwitchSequence forest_transition(const LabeledGraph& source, const LabeledGraph& target,
                                 ForestPolicy policy, std::size_t search_budget) {
  if (!is_forest(source) || !is_forest(target)) {
    throw PreconditionError("forest transition needs two forests");
  }
  require_same_degrees(source, target);
  const bool bounded = policy == ForestPolicy::bounded;

  // Trimmed leaves stay as isolated vertices, so switches keep their labels.
  LabeledGraph work = source;
  LabeledGraph goal = target;
  std::vector<TwoSwitch> switches;
  bool stuck = false;
  while (work != goal && !stuck) {
    VertexSet trim = trimmable_leaves(work, goal);
    if (trim == 0) {
      TwoSwitch s = make_trimmable(work, goal, bounded);
      if (bounded && common_edge_gain(goal, s) <= 0) {
        // No leaf-fixing switch grows the common edge set; any forest
        // switch that does keeps the length bound.
        if (auto g = gaining_forest_switch(work, goal)) {
          s = *g;
        } else {
          stuck = true;
          break;
        }
      }
      work = apply(work, s);
      switches.push_back(s);
      trim = trimmable_leaves(work, goal);
    }
    work = work.without_vertices(trim);
    goal = goal.without_vertices(trim);
  }
  if (stuck) {
    // Greedy progress is impossible; fall back to a shortest path, which
    // meets the bound whenever any sequence does.
    switches = bridge_between(source, target, search_budget, is_forest, "forest");
  }

  SwitchSequence seq = replay(source, std::move(switches));
  require_trace(seq, source, target, [](const LabeledGraph& g) { return is_forest(g); },
                "forest transition");
  return seq;
}

SwitchSequence pseudoforest_to_unicyclic(const LabeledGraph& g) {
  if (!is_pseudoforest(g)) throw PreconditionError("input is not a pseudoforest");
  const VertexSet core = two_core(g);
  for (VertexSet comp : nontrivial_components(g)) {
    if (!has_cycle_vertex(comp, core)) {
      throw PreconditionError("pseudoforest has a tree component (zeta != 0)");
    }
  }
  LabeledGraph work = g;
  std::vector<TwoSwitch> switches;
  glue_cycles(work, switches);
  SwitchSequence seq = replay(g, std::move(switches));
  require_trace(seq, g, work, [](const LabeledGraph& x) { return is_pseudoforest(x); },
                "cycle gluing");
  return seq;
}

SwitchSequence pseudoforest_to_forest(const LabeledGraph& g) {
  if (!is_pseudoforest(g)) throw PreconditionError("input is not a pseudoforest");
  const VertexSet core = two_core(g);
  const auto nontrivial = nontrivial_components(g);
  auto tree = std::find_if(nontrivial.begin(), nontrivial.end(), [&](VertexSet comp) {
    return !has_cycle_vertex(comp, core);
  });
  if (tree == nontrivial.end()) {
    throw PreconditionError("pseudoforest has no tree component with an edge");
  }
  const VertexSet tree_comp = *tree;

  LabeledGraph work = g;
  std::vector<TwoSwitch> switches;
  if (core != 0) {
    glue_cycles(work, switches);
    // One switch between a tree edge and a cycle edge opens the last cycle.
    const Edge e1 = lowest_edge_within(work, tree_comp);
    const Edge e2 = lowest_edge_within(work, two_core(work));
    const TwoSwitch s{e1.u, e1.v, e2.u, e2.v};
    work = apply(work, s);
    switches.push_back(s);
  }
  SwitchSequence seq = replay(g, std::move(switches));
  require_trace(seq, g, work, [](const LabeledGraph& x) { return is_pseudoforest(x); },
                "cycle opening");
  if (!is_forest(work)) throw TheoremViolation("cycle opening did not reach a forest");
  return seq;
}

SwitchSequence pseudoforest_transition(const LabeledGraph& source,
                                       const LabeledGraph& target,
                                       std::size_t bridge_budget) {
  if (!is_pseudoforest(source) || !is_pseudoforest(target)) {
    throw PreconditionError("pseudoforest transition needs two pseudoforests");
  }
  require_same_degrees(source, target);
  if (source == target) return replay(source, {});

  auto tree_components = [](const LabeledGraph& g) {
    const VertexSet core = two_core(g);
    int count = 0;
    for (VertexSet comp : nontrivial_components(g)) {
      if (!has_cycle_vertex(comp, core)) ++count;
    }
    return count;
  };
  const bool source_all_cyclic = tree_components(source) == 0;
  if (source_all_cyclic != (tree_components(target) == 0)) {
    throw TheoremViolation("equal degree vectors but only one side has a tree component");
  }

  SwitchSequence down_source;
  SwitchSequence down_target;
  std::vector<TwoSwitch> bridge;
  if (source_all_cyclic) {
    down_source = pseudoforest_to_unicyclic(source);
    down_target = pseudoforest_to_unicyclic(target);
    bridge = bridge_between(down_source.target(), down_target.target(), bridge_budget,
                            unicyclic_core, "unicyclic");
  } else {
    down_source = pseudoforest_to_forest(source);
    down_target = pseudoforest_to_forest(target);
    bridge = forest_transition(down_source.target(), down_target.target()).switches;
  }

  std::vector<TwoSwitch> switches = down_source.switches;
  switches.insert(switches.end(), bridge.begin(), bridge.end());
  for (auto it = down_target.switches.rbegin(); it != down_target.switches.rend(); ++it) {
    switches.push_back(inverse(*it));
  }
  SwitchSequence seq = replay(source, std::move(switches));
  require_trace(seq, source, target,
                [](const LabeledGraph& x) { return is_pseudoforest(x); },
                "pseudoforest transition");
  return seq;
}

int check_edge_difference(const LabeledGraph& g, const LabeledGraph& h) {
  require_same_degrees(g, h);
  const int diff = edge_difference(g, h);
  if (diff == 1) {
    throw TheoremViolation("two realizations differ in exactly one edge");
  }
  return diff;
}

int forest_transition_bound(const LabeledGraph& source, const LabeledGraph& target) {
  const int diff = edge_difference(target, source);
  return diff == 0 ? 0 : diff - 1;
}

}  // namespace switchlab
