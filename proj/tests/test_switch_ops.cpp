#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "switchlab/realization.hpp"
#include "switchlab/switch_ops.hpp"

using namespace switchlab;

namespace {

LabeledGraph path(int n) {
  std::vector<Edge> es;
  for (int v = 1; v < n; ++v) es.push_back({v, v + 1});
  return LabeledGraph::from_edges(n, es);
}

LabeledGraph cycle(int n) {
  std::vector<Edge> es;
  for (int v = 1; v < n; ++v) es.push_back({v, v + 1});
  es.push_back({1, n});
  return LabeledGraph::from_edges(n, es);
}

int symmetric_difference(const LabeledGraph& g, const LabeledGraph& h) {
  int count = 0;
  for (Vertex v = 1; v <= g.order(); ++v) count += popcount(g.neighbors(v) ^ h.neighbors(v));
  return count / 2;
}

struct VerificationScope {
  explicit VerificationScope(bool on) : saved(verification_enabled()) { set_verification(on); }
  ~VerificationScope() { set_verification(saved); }
  bool saved;
};

}  // namespace

TEST_CASE("is_valid") {
  const LabeledGraph p4 = path(4);
  CHECK(is_valid(p4, {1, 2, 3, 4}));
  CHECK_FALSE(is_valid(p4, {2, 1, 3, 4}));
  CHECK_FALSE(is_valid(p4, {1, 2, 1, 4}));
  CHECK_THROWS_AS(is_valid(p4, {1, 2, 3, 5}), RangeError);
}

TEST_CASE("apply") {
  CHECK(apply(path(4), {1, 2, 3, 4}) == LabeledGraph::from_edges(4, {{1, 3}, {2, 3}, {2, 4}}));
  const LabeledGraph image = apply(path(6), {2, 1, 4, 5});
  CHECK(image == LabeledGraph::from_edges(6, {{2, 3}, {3, 4}, {2, 4}, {1, 5}, {5, 6}}));
  CHECK_FALSE(is_forest(image));
  CHECK_THROWS_AS(apply(path(4), {2, 1, 3, 4}), PreconditionError);
}

TEST_CASE("inverse") {
  CHECK(inverse(TwoSwitch{1, 2, 3, 4}) == TwoSwitch{1, 3, 2, 4});
  CHECK(inverse(inverse(TwoSwitch{5, 2, 7, 1})) == TwoSwitch{5, 2, 7, 1});
  const LabeledGraph p4 = path(4);
  CHECK(apply(apply(p4, {1, 2, 3, 4}), inverse(TwoSwitch{1, 2, 3, 4})) == p4);
}

TEST_CASE("enumerate_switches on small graphs") {
  CHECK(enumerate_switches(cycle(3)).empty());
  CHECK(enumerate_switches(path(4)).size() == 1);
  CHECK(enumerate_switches(LabeledGraph::from_edges(4, {{1, 2}, {3, 4}})).size() == 2);
  const LabeledGraph star = LabeledGraph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}});
  CHECK(enumerate_switches(star).empty());
  CHECK(canonical(TwoSwitch{4, 3, 2, 1}) == TwoSwitch{1, 2, 3, 4});
}

TEST_CASE("switch images agree with the four-tuple oracle up to 6 vertices") {
  for (int n = 0; n <= 6; ++n) {
    for (const auto& g : oracle::all_graphs(n)) {
      std::set<LabeledGraph> mine;
      const auto switches = enumerate_switches(g);
      for (const auto& s : switches) {
        REQUIRE(s == canonical(s));
        mine.insert(apply(g, s));
      }
      REQUIRE(mine.size() == switches.size());
      REQUIRE(mine == oracle::switch_images(g));
    }
  }
}

TEST_CASE("degree preservation, involution and symmetric difference up to 7 vertices") {
  for (int n = 4; n <= 7; ++n) {
    for (const auto& g : oracle::all_graphs(n)) {
      const DegreeVector d = degree_vector(g);
      for_each_switch(g, [&](const TwoSwitch& s) {
        const LabeledGraph h = apply(g, s);
        REQUIRE(degree_vector(h) == d);
        REQUIRE(apply(h, inverse(s)) == g);
        REQUIRE(symmetric_difference(g, h) == 4);
      });
    }
  }
}

TEST_CASE("classify_t") {
  VerificationScope verify(true);
  const SwitchVerdict p4 = classify_t(path(4), {1, 2, 3, 4});
  CHECK(p4.preserves);
  CHECK(p4.kind == SwitchKind::t);
  CHECK_FALSE(classify_t(path(6), {2, 1, 4, 5}).preserves);
  CHECK_THROWS_AS(classify_t(cycle(4), {1, 2, 3, 4}), PreconditionError);
}

TEST_CASE("classify_f") {
  VerificationScope verify(true);
  const SwitchVerdict two = classify_f(LabeledGraph::from_edges(4, {{1, 2}, {3, 4}}), {1, 2, 3, 4});
  CHECK(two.preserves);
  CHECK(two.kind == SwitchKind::f);
  CHECK(two.reason == "forest-different-components");
  CHECK_FALSE(classify_f(path(6), {2, 1, 4, 5}).preserves);
  CHECK(classify_f(path(4), {1, 2, 3, 4}).preserves);
  CHECK_THROWS_AS(classify_f(cycle(3), {1, 2, 3, 1}), PreconditionError);
}

TEST_CASE("classify_u") {
  VerificationScope verify(true);
  // C4 1-2-3-4 with leaves 5 on 1 and 6 on 3; both removed edges on the cycle.
  const LabeledGraph c4 =
      LabeledGraph::from_edges(6, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 5}, {3, 6}});
  const SwitchVerdict short_cycle = classify_u(c4, {1, 2, 3, 4});
  CHECK(short_cycle.preserves);
  CHECK(short_cycle.kind == SwitchKind::u);
  CHECK(structural_class(apply(c4, {1, 2, 3, 4})).is_unicyclic);

  // On C6 the switch (1 2 / 5 4) splits the hexagon into triangles 1-5-6 and
  // 2-3-4, while (1 2 / 4 5) only reorders it into 1-4-3-2-5-6.
  const LabeledGraph c6 = cycle(6);
  const SwitchVerdict split = classify_u(c6, {1, 2, 5, 4});
  CHECK_FALSE(split.preserves);
  CHECK(apply(c6, {1, 2, 5, 4}) ==
        LabeledGraph::from_edges(6, {{1, 5}, {1, 6}, {5, 6}, {2, 3}, {3, 4}, {2, 4}}));
  CHECK(classify_p(c6, {1, 2, 5, 4}).preserves);
  CHECK(classify_u(c6, {1, 2, 4, 5}).preserves);

  // Triangle 1-2-3 with pendant paths 3-4-5 and 3-6-7; one cycle edge and
  // one hanging edge.
  const LabeledGraph tri =
      LabeledGraph::from_edges(7, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {3, 6}, {6, 7}});
  const SwitchVerdict mixed = classify_u(tri, {1, 2, 4, 5});
  CHECK(mixed.preserves);
  CHECK(mixed.reason == "unicyclic-cycle-and-hanging-edge");
  CHECK_THROWS_AS(classify_u(path(4), {1, 2, 3, 4}), PreconditionError);
}

TEST_CASE("classify_p") {
  VerificationScope verify(true);
  const LabeledGraph triangles =
      LabeledGraph::from_edges(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
  const SwitchVerdict glue = classify_p(triangles, {1, 2, 4, 5});
  CHECK(glue.preserves);
  CHECK(glue.kind == SwitchKind::p);
  CHECK(structural_class(apply(triangles, {1, 2, 4, 5})).is_unicyclic);

  // Triangles 1-2-3 and 4-5-6 with leaves 7 on 3 and 8 on 6.
  const LabeledGraph leafy = LabeledGraph::from_edges(
      8, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}, {3, 7}, {6, 8}});
  CHECK_FALSE(classify_p(leafy, {3, 7, 6, 8}).preserves);
  CHECK(classify_p(leafy, {3, 7, 8, 6}).preserves);
  CHECK_THROWS_AS(classify_p(LabeledGraph(4).complement(), {1, 2, 3, 4}), PreconditionError);
}

TEST_CASE("classifiers agree with the oracle predicates on every pseudoforest up to 7 vertices") {
  VerificationScope verify(false);
  std::size_t checked = 0;
  for (int n = 4; n <= 7; ++n) {
    for (const auto& d : graphical_degree_vectors(n)) {
      for (const auto& g : enumerate_realizations(d, Filter::pseudoforest)) {
        const StructuralClass sc = structural_class(g);
        for_each_switch(g, [&](const TwoSwitch& s) {
          const LabeledGraph h = apply(g, s);
          REQUIRE(classify_p(g, s).preserves == oracle::is_pseudoforest(h));
          if (sc.is_forest) REQUIRE(classify_f(g, s).preserves == oracle::is_forest(h));
          if (sc.is_tree) {
            REQUIRE(classify_t(g, s).preserves ==
                    (oracle::is_forest(h) && oracle::is_connected(h)));
          }
          if (sc.is_unicyclic) REQUIRE(classify_u(g, s).preserves == oracle::is_unicyclic(h));
          ++checked;
        });
      }
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("classify picks the family and rejects other graphs") {
  VerificationScope verify(true);
  CHECK(classify(path(4), {1, 2, 3, 4}).kind == SwitchKind::t);
  CHECK(classify(LabeledGraph::from_edges(4, {{1, 2}, {3, 4}}), {1, 2, 3, 4}).kind ==
        SwitchKind::f);
  CHECK(classify(cycle(6), {1, 2, 4, 5}).kind == SwitchKind::u);
  const LabeledGraph k4_minus = LabeledGraph::from_edges(5, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {1, 4}, {4, 5}});
  CHECK(classify(k4_minus, {2, 3, 4, 5}).kind == SwitchKind::none);
}
