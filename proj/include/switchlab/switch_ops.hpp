#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "switchlab/graph.hpp"

namespace switchlab {

/// The switch (a b / c d): remove ab and cd, add ac and bd.
struct TwoSwitch {
  Vertex a = 0;
  Vertex b = 0;
  Vertex c = 0;
  Vertex d = 0;

  Edge first_removed() const noexcept { return make_edge(a, b); }
  Edge second_removed() const noexcept { return make_edge(c, d); }
  Edge first_added() const noexcept { return make_edge(a, c); }
  Edge second_added() const noexcept { return make_edge(b, d); }

  friend auto operator<=>(const TwoSwitch&, const TwoSwitch&) = default;
};

std::string to_string(const TwoSwitch& s);

/// True iff a,b,c,d are distinct, ab,cd are edges and ac,bd are not.
/// Throws RangeError for vertices outside [1, n].
bool is_valid(const LabeledGraph& g, const TwoSwitch& s);

/// G - ab - cd + ac + bd. Throws PreconditionError naming the violated
/// condition when the switch is not valid on g.
LabeledGraph apply(const LabeledGraph& g, const TwoSwitch& s);

/// (a c / b d), which undoes s.
constexpr TwoSwitch inverse(const TwoSwitch& s) noexcept {
  return TwoSwitch{s.a, s.c, s.b, s.d};
}

/// The four encodings (a,b,c,d), (c,d,a,b), (b,a,d,c), (d,c,b,a) describe the
/// same edge replacement; this returns the lexicographically smallest.
TwoSwitch canonical(const TwoSwitch& s) noexcept;

/// Calls f(s) for every valid switch class of g, each in canonical form.
/// The order is deterministic but not sorted.
template <class F>
void for_each_switch(const LabeledGraph& g, F&& f) {
  std::array<Edge, kMaxVertices * (kMaxVertices - 1) / 2> edges;
  int m = 0;
  g.for_each_edge([&](Edge e) { edges[m++] = e; });
  for (int i = 0; i < m; ++i) {
    const Edge x = edges[i];
    for (int j = i + 1; j < m; ++j) {
      const Edge y = edges[j];
      if (x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v) continue;
      // x precedes y, so x.u is the smallest of the four vertices.
      if (!g.has_edge(x.u, y.u) && !g.has_edge(x.v, y.v)) {
        f(TwoSwitch{x.u, x.v, y.u, y.v});
      }
      if (!g.has_edge(x.u, y.v) && !g.has_edge(x.v, y.u)) {
        f(TwoSwitch{x.u, x.v, y.v, y.u});
      }
    }
  }
}

/// Every valid switch class, canonical form, lexicographic order.
std::vector<TwoSwitch> enumerate_switches(const LabeledGraph& g);

enum class SwitchKind { t, f, u, p, none };

const char* to_string(SwitchKind kind) noexcept;

struct SwitchVerdict {
  bool preserves = false;
  SwitchKind kind = SwitchKind::none;
  /// Identifier of the rule that decided the verdict.
  std::string reason;
};

// The classifiers below decide structure preservation combinatorially, from
// the switch's position relative to paths and cycles, without applying it.
// When verification is enabled they also apply the switch and compare with
// the structural predicate, throwing TheoremViolation on disagreement.

/// Tree T stays a tree iff T contains the path a-b...c-d or b-a...d-c.
SwitchVerdict classify_t(const LabeledGraph& tree, const TwoSwitch& s);

/// Forest stays a forest iff the edges lie in different components or the
/// tree rule holds inside their common component.
SwitchVerdict classify_f(const LabeledGraph& forest, const TwoSwitch& s);

/// Unicyclic graph stays unicyclic; decided by where the two removed edges
/// lie with respect to the cycle.
SwitchVerdict classify_u(const LabeledGraph& unicyclic, const TwoSwitch& s);

/// Pseudoforest stays a pseudoforest.
SwitchVerdict classify_p(const LabeledGraph& pseudoforest, const TwoSwitch& s);

/// Picks t, f, u or p by the structural class of g. Graphs outside those
/// classes get a validity-only verdict with kind none.
SwitchVerdict classify(const LabeledGraph& g, const TwoSwitch& s);

}  // namespace switchlab
