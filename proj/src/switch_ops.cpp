#include "switchlab/switch_ops.hpp"

#include <algorithm>
#include <optional>

namespace switchlab {

std::string to_string(const TwoSwitch& s) {
  return "(" + std::to_string(s.a) + " " + std::to_string(s.b) + " / " +
         std::to_string(s.c) + " " + std::to_string(s.d) + ")";
}

const char* to_string(SwitchKind kind) noexcept {
  switch (kind) {
    case SwitchKind::t: return "t";
    case SwitchKind::f: return "f";
    case SwitchKind::u: return "u";
    case SwitchKind::p: return "p";
    case SwitchKind::none: return "none";
  }
  return "none";
}

bool is_valid(const LabeledGraph& g, const TwoSwitch& s) {
  for (Vertex v : {s.a, s.b, s.c, s.d}) {
    if (!g.contains(v)) {
      throw RangeError("switch vertex " + std::to_string(v) + " outside [1," +
                       std::to_string(g.order()) + "]");
    }
  }
  if (s.a == s.b || s.a == s.c || s.a == s.d || s.b == s.c || s.b == s.d ||
      s.c == s.d) {
    return false;
  }
  return g.has_edge(s.a, s.b) && g.has_edge(s.c, s.d) && !g.has_edge(s.a, s.c) &&
         !g.has_edge(s.b, s.d);
}

LabeledGraph apply(const LabeledGraph& g, const TwoSwitch& s) {
  if (!is_valid(g, s)) {
    std::string why;
    if (s.a == s.b || s.a == s.c || s.a == s.d || s.b == s.c || s.b == s.d ||
        s.c == s.d) {
      why = "vertices are not distinct";
    } else if (!g.has_edge(s.a, s.b)) {
      why = "edge ab is absent";
    } else if (!g.has_edge(s.c, s.d)) {
      why = "edge cd is absent";
    } else if (g.has_edge(s.a, s.c)) {
      why = "edge ac is already present";
    } else {
      why = "edge bd is already present";
    }
    throw PreconditionError("invalid switch " + to_string(s) + ": " + why);
  }
  const std::array<Edge, 2> removed{s.first_removed(), s.second_removed()};
  const std::array<Edge, 2> added{s.first_added(), s.second_added()};
  return g.edited(removed, added);
}

TwoSwitch canonical(const TwoSwitch& s) noexcept {
  return std::min({s, TwoSwitch{s.c, s.d, s.a, s.b}, TwoSwitch{s.b, s.a, s.d, s.c},
                   TwoSwitch{s.d, s.c, s.b, s.a}});
}

std::vector<TwoSwitch> enumerate_switches(const LabeledGraph& g) {
  std::vector<TwoSwitch> out;
  for_each_switch(g, [&](const TwoSwitch& s) { out.push_back(s); });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Forest rule: the path between the two removed edges runs a-b...c-d or
// b-a...d-c. Returns the matching rule name, if any.
std::optional<const char*> tree_path_rule(const LabeledGraph& forest,
                                          const TwoSwitch& s) {
  std::vector<Vertex> p = forest_path(forest, s.a, s.d);
  if (p.size() >= 4 && p[1] == s.b && p[p.size() - 2] == s.c) {
    return "tree-path-ab-cd";
  }
  p = forest_path(forest, s.b, s.c);
  if (p.size() >= 4 && p[1] == s.a && p[p.size() - 2] == s.d) {
    return "tree-path-ba-dc";
  }
  return std::nullopt;
}

void require_valid(const LabeledGraph& g, const TwoSwitch& s) {
  if (!is_valid(g, s)) {
    throw PreconditionError("switch " + to_string(s) + " is not valid on the graph");
  }
}

SwitchVerdict verdict(bool preserves, SwitchKind kind, std::string reason) {
  return SwitchVerdict{preserves, preserves ? kind : SwitchKind::none,
                       std::move(reason)};
}

template <class Predicate>
void cross_check(const LabeledGraph& g, const TwoSwitch& s, const SwitchVerdict& v,
                 const char* family, Predicate&& holds) {
  if (!verification_enabled()) return;
  const bool actual = holds(structural_class(apply(g, s)));
  if (actual != v.preserves) {
    throw TheoremViolation(std::string(family) + " classifier rule '" + v.reason +
                           "' says preserves=" + (v.preserves ? "true" : "false") +
                           " for " + to_string(s) + " but the image says " +
                           (actual ? "true" : "false"));
  }
}

// Tree rule on U - e for every cycle edge e of the component `comp`.
bool tree_rule_for_all_cycle_edges(const LabeledGraph& g, const CycForDecomposition& cf,
                                   VertexSet comp, const TwoSwitch& s) {
  for (const Edge& e : cf.cyc_edges) {
    if (!(comp & vertex_bit(e.u))) continue;
    if (!tree_path_rule(g.without_edge(e), s)) return false;
  }
  return true;
}

// Parent pointers of the hanging forest, rooted at the cycle vertices.
std::array<Vertex, kMaxVertices + 1> hanging_parents(const LabeledGraph& g,
                                                     VertexSet cyc_vertices) {
  std::array<Vertex, kMaxVertices + 1> parent{};
  VertexSet seen = cyc_vertices;
  VertexSet frontier = cyc_vertices;
  while (frontier != 0) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](Vertex x) {
      VertexSet fresh = g.neighbors(x) & ~seen & ~next;
      for_each_vertex(fresh, [&](Vertex y) { parent[y] = x; });
      next |= fresh;
    });
    seen |= next;
    frontier = next;
  }
  return parent;
}

// Hanging edges xy and zw are nested when one lies on the path from the
// other to the cycle.
bool nested(const std::array<Vertex, kMaxVertices + 1>& parent, Edge x, Edge y) {
  auto lower = [&](Edge e) { return parent[e.u] == e.v ? e.u : e.v; };
  auto upper = [&](Edge e) { return parent[e.u] == e.v ? e.v : e.u; };
  auto above = [&](Vertex top, Vertex from) {
    for (Vertex v = from; v != 0; v = parent[v]) {
      if (v == top) return true;
    }
    return false;
  };
  return above(lower(x), upper(y)) || above(lower(y), upper(x));
}

}  // namespace

SwitchVerdict classify_t(const LabeledGraph& tree, const TwoSwitch& s) {
  if (!structural_class(tree).is_tree) {
    throw PreconditionError("t-switch classification needs a tree");
  }
  require_valid(tree, s);
  auto rule = tree_path_rule(tree, s);
  SwitchVerdict v = verdict(rule.has_value(), SwitchKind::t,
                            rule ? *rule : "tree-path-mismatch");
  cross_check(tree, s, v, "t", [](const StructuralClass& sc) { return sc.is_tree; });
  return v;
}

SwitchVerdict classify_f(const LabeledGraph& forest, const TwoSwitch& s) {
  if (!is_forest(forest)) {
    throw PreconditionError("f-switch classification needs a forest");
  }
  require_valid(forest, s);
  SwitchVerdict v;
  if (!(component_of(forest, s.a) & vertex_bit(s.c))) {
    v = verdict(true, SwitchKind::f, "forest-different-components");
  } else {
    auto rule = tree_path_rule(forest, s);
    v = verdict(rule.has_value(), SwitchKind::f, rule ? *rule : "tree-path-mismatch");
  }
  cross_check(forest, s, v, "f", [](const StructuralClass& sc) { return sc.is_forest; });
  return v;
}

SwitchVerdict classify_u(const LabeledGraph& unicyclic, const TwoSwitch& s) {
  if (!structural_class(unicyclic).is_unicyclic) {
    throw PreconditionError("u-switch classification needs a unicyclic graph");
  }
  require_valid(unicyclic, s);
  const CycForDecomposition cf = cyc_for(unicyclic);
  const bool first_on_cycle = cf.is_cycle_edge(s.first_removed());
  const bool second_on_cycle = cf.is_cycle_edge(s.second_removed());

  SwitchVerdict v;
  if (!first_on_cycle && !second_on_cycle) {
    bool ok = tree_rule_for_all_cycle_edges(unicyclic, cf, unicyclic.vertices(), s);
    v = verdict(ok, SwitchKind::u, ok ? "unicyclic-hanging-edges-tree-rule"
                                      : "unicyclic-hanging-edges-disconnect");
  } else if (first_on_cycle != second_on_cycle) {
    v = verdict(true, SwitchKind::u, "unicyclic-cycle-and-hanging-edge");
  } else {
    const int length = popcount(cf.cyc_vertices);
    if (length <= 5) {
      v = verdict(true, SwitchKind::u, "unicyclic-short-cycle");
    } else {
      const LabeledGraph cycle = unicyclic.induced_edges(cf.cyc_vertices);
      const LabeledGraph image = apply(cycle, s);
      bool ok = component_of(image, s.a) == cf.cyc_vertices;
      v = verdict(ok, SwitchKind::u, ok ? "unicyclic-cycle-edges-rotate"
                                        : "unicyclic-cycle-edges-split");
    }
  }
  cross_check(unicyclic, s, v, "u",
              [](const StructuralClass& sc) { return sc.is_unicyclic; });
  return v;
}

SwitchVerdict classify_p(const LabeledGraph& g, const TwoSwitch& s) {
  if (!is_pseudoforest(g)) {
    throw PreconditionError("p-switch classification needs a pseudoforest");
  }
  require_valid(g, s);
  const CycForDecomposition cf = cyc_for(g);
  const Edge ab = s.first_removed();
  const Edge cd = s.second_removed();
  const bool ab_on_cycle = cf.is_cycle_edge(ab);
  const bool cd_on_cycle = cf.is_cycle_edge(cd);

  SwitchVerdict v;
  if (ab_on_cycle || cd_on_cycle) {
    v = verdict(true, SwitchKind::p,
                ab_on_cycle && cd_on_cycle ? "pseudoforest-cycle-edges"
                                           : "pseudoforest-cycle-and-other-edge");
  } else {
    const VertexSet comp_ab = component_of(g, s.a);
    const VertexSet comp_cd = component_of(g, s.c);
    const bool ab_unicyclic = (comp_ab & cf.cyc_vertices) != 0;
    const bool cd_unicyclic = (comp_cd & cf.cyc_vertices) != 0;
    if (comp_ab == comp_cd && ab_unicyclic) {
      // Both edges hang off the cycle of one unicyclic component U.
      const auto parent = hanging_parents(g, cf.cyc_vertices);
      auto root = [&](Vertex x) {
        while (parent[x] != 0) x = parent[x];
        return x;
      };
      if (nested(parent, ab, cd)) {
        v = verdict(true, SwitchKind::p, "pseudoforest-nested-hanging-edges");
      } else {
        bool ok = tree_rule_for_all_cycle_edges(g, cf, comp_ab, s);
        const char* where = root(s.a) == root(s.c) ? "pseudoforest-hanging-branches"
                                                   : "pseudoforest-hanging-trees";
        v = verdict(ok, SwitchKind::p, where);
      }
    } else if (comp_ab != comp_cd && ab_unicyclic && cd_unicyclic) {
      // Hanging edges of two distinct unicyclic components: an added edge
      // must not join the two cycle-bearing pieces. The condition is tested
      // on both encodings (a b / c d) and (b a / d c) of the same switch.
      const std::array<Edge, 2> removed{ab, cd};
      const LabeledGraph cut = g.edited(removed, {});
      auto in_tree_piece = [&](Vertex x) {
        return (component_of(cut, x) & cf.cyc_vertices) == 0;
      };
      bool ok = (in_tree_piece(s.b) && in_tree_piece(s.c)) ||
                (in_tree_piece(s.a) && in_tree_piece(s.d));
      v = verdict(ok, SwitchKind::p, "pseudoforest-two-unicyclic-hanging-edges");
    } else {
      v = verdict(true, SwitchKind::p, "pseudoforest-tree-component-edge");
    }
  }
  cross_check(g, s, v, "p",
              [](const StructuralClass& sc) { return sc.is_pseudoforest; });
  return v;
}

SwitchVerdict classify(const LabeledGraph& g, const TwoSwitch& s) {
  if (!is_valid(g, s)) return SwitchVerdict{false, SwitchKind::none, "invalid-switch"};
  const StructuralClass sc = structural_class(g);
  if (sc.is_tree) return classify_t(g, s);
  if (sc.is_forest) return classify_f(g, s);
  if (sc.is_unicyclic) return classify_u(g, s);
  if (sc.is_pseudoforest) return classify_p(g, s);
  return SwitchVerdict{false, SwitchKind::none, "unclassified-graph"};
}

}  // namespace switchlab
