#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "oracles.hpp"
#include "switchlab/realization.hpp"

using namespace switchlab;

namespace {

LabeledGraph g(int n, std::initializer_list<Edge> edges) {
  return LabeledGraph::from_edges(n, edges);
}

bool oracle_filter(const LabeledGraph& x, Filter f) {
  switch (f) {
    case Filter::all: return true;
    case Filter::forest: return oracle::is_forest(x);
    case Filter::connected: return oracle::is_connected(x);
    case Filter::unicyclic: return oracle::is_unicyclic(x);
    case Filter::pseudoforest: return oracle::is_pseudoforest(x);
    case Filter::bipartite: return oracle::is_bipartite(x);
    case Filter::nonbipartite: return !oracle::is_bipartite(x);
  }
  return false;
}

constexpr Filter kFilters[] = {Filter::all,          Filter::forest,    Filter::connected,
                               Filter::unicyclic,    Filter::pseudoforest, Filter::bipartite,
                               Filter::nonbipartite};

std::vector<int> sorted_degrees(const LabeledGraph& x) { return degree_vector(x).sorted(); }

}  // namespace

TEST_CASE("filter names") {
  for (Filter f : kFilters) CHECK(parse_filter(to_string(f)) == f);
  CHECK_THROWS_AS(parse_filter("trees"), ParseError);
}

TEST_CASE("enumerate_realizations examples") {
  const auto matchings = enumerate_realizations(DegreeVector({1, 1, 1, 1}));
  CHECK(matchings.size() == 3);
  CHECK(std::set<LabeledGraph>(matchings.begin(), matchings.end()) ==
        std::set<LabeledGraph>{g(4, {{1, 2}, {3, 4}}), g(4, {{1, 3}, {2, 4}}),
                               g(4, {{1, 4}, {2, 3}})});
  CHECK(enumerate_realizations(DegreeVector({2, 2, 2}), Filter::forest).empty());
  CHECK(enumerate_realizations(DegreeVector({3, 3, 1, 1})).empty());
  CHECK_THROWS_AS(enumerate_realizations(DegreeVector({1, 1, 1, 1}), Filter::all, 2), BudgetError);

  const LabeledGraph b3 = construct_counterexample(Counterexample::B, 3);
  const LabeledGraph b3p = construct_counterexample(Counterexample::Bprime, 3);
  const auto bip = enumerate_realizations(degree_vector(b3), Filter::bipartite);
  CHECK(std::binary_search(bip.begin(), bip.end(), b3));
  CHECK(std::binary_search(bip.begin(), bip.end(), b3p));
}

TEST_CASE("enumeration matches filtering every labeled graph up to 6 vertices") {
  for (int n = 1; n <= 6; ++n) {
    std::map<std::vector<int>, std::vector<LabeledGraph>> by_degree;
    for (const auto& x : oracle::all_graphs(n)) by_degree[oracle::degrees(x)].push_back(x);
    for (const auto& [d, graphs] : by_degree) {
      for (Filter f : kFilters) {
        std::vector<LabeledGraph> expected;
        for (const auto& x : graphs)
          if (oracle_filter(x, f)) expected.push_back(x);
        std::sort(expected.begin(), expected.end());
        REQUIRE(enumerate_realizations(DegreeVector(d), f) == expected);
      }
    }
  }
}

TEST_CASE("graphical_degree_vectors lists exactly the realized vectors") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::vector<int>> realized;
    for (const auto& x : oracle::all_graphs(n)) realized.insert(oracle::degrees(x));
    std::set<std::vector<int>> listed;
    for (const auto& d : graphical_degree_vectors(n)) listed.insert(d.values());
    CHECK(listed == realized);
  }
}

TEST_CASE("realization graph of the perfect matchings on 4 vertices is a triangle") {
  const RealizationGraph rg = build_realization_graph(DegreeVector({1, 1, 1, 1}));
  CHECK(rg.vertex_count() == 3);
  CHECK(rg.edge_count() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(rg.arcs(i).size() == 2);
  CHECK(distance(rg, g(4, {{1, 2}, {3, 4}}), g(4, {{1, 3}, {2, 4}})) == 1);
  CHECK(distance(rg, g(4, {{1, 2}, {3, 4}}), g(4, {{1, 2}, {3, 4}})) == 0);
  CHECK_THROWS_AS(distance(rg, g(4, {{1, 2}, {2, 3}}), g(4, {{1, 2}, {3, 4}})), MembershipError);
}

TEST_CASE("realization graph edges are exactly the filtered switch images up to 6 vertices") {
  for (int n = 4; n <= 6; ++n) {
    for (const auto& d : graphical_degree_vectors(n)) {
      for (Filter f : {Filter::all, Filter::forest, Filter::pseudoforest, Filter::bipartite}) {
        const RealizationGraph rg = build_realization_graph(d, f);
        std::size_t arcs = 0;
        for (std::size_t i = 0; i < rg.vertex_count(); ++i) {
          std::set<LabeledGraph> expected;
          for (const auto& y : oracle::switch_images(rg.vertex(i)))
            if (oracle_filter(y, f)) expected.insert(y);
          std::set<LabeledGraph> mine;
          for (const Arc& a : rg.arcs(i)) {
            REQUIRE(apply(rg.vertex(i), a.sw) == rg.vertex(a.target));
            mine.insert(rg.vertex(a.target));
          }
          REQUIRE(mine == expected);
          arcs += rg.arcs(i).size();
        }
        REQUIRE(arcs == 2 * rg.edge_count());
      }
    }
  }
}

TEST_CASE("connectivity reports") {
  const RealizationGraph rg = build_realization_graph(DegreeVector({1, 1, 1, 1}));
  const ExplorationReport r = connectivity(rg, true);
  CHECK(r.vertex_count == 3);
  CHECK(r.component_count == 1);
  CHECK(r.component_sizes == std::vector<std::size_t>{3});
  CHECK(r.diameter_of_largest == 1);

  // Full realization graphs are connected.
  for (int n = 1; n <= 6; ++n) {
    for (const auto& d : graphical_degree_vectors(n)) {
      const ExplorationReport all = connectivity(build_realization_graph(d));
      REQUIRE(all.component_count == 1);
      std::size_t total = 0;
      for (auto s : all.component_sizes) total += s;
      REQUIRE(total == all.vertex_count);
    }
  }
}

TEST_CASE("tree degree vectors give connected forest realization graphs") {
  const DegreeVector spider({3, 2, 2, 2, 2, 2, 2, 1, 1, 1});
  const ExplorationReport r = connectivity(build_realization_graph(spider, Filter::forest));
  CHECK(r.component_count == 1);
  CHECK(r.vertex_count == 20160);
}

TEST_CASE("bipartite separation of B3 and B'3") {
  const LabeledGraph b3 = construct_counterexample(Counterexample::B, 3);
  const LabeledGraph b3p = construct_counterexample(Counterexample::Bprime, 3);
  CHECK(degree_vector(b3).values() == std::vector<int>{4, 4, 3, 3, 3, 3, 1, 1});
  CHECK(degree_vector(b3p).sorted() == degree_vector(b3).sorted());
  CHECK(is_bipartite(b3));
  CHECK(is_bipartite(b3p));
  CHECK_FALSE(are_isomorphic(b3, b3p));

  const RealizationGraph rg = build_realization_graph(degree_vector(b3), Filter::bipartite);
  const ExplorationReport r = connectivity(rg);
  CHECK(r.component_count >= 2);
  CHECK_FALSE(distance(rg, b3, b3p).has_value());
  const auto ids = component_ids(rg);
  // The component of B3 holds only relabelings of B3.
  for (std::size_t i = 0; i < rg.vertex_count(); ++i) {
    if (ids[i] == ids[*rg.find(b3)]) REQUIRE(are_isomorphic(rg.vertex(i), b3));
  }
}

TEST_CASE("non-bipartite isolation of N4") {
  const LabeledGraph n4 = construct_counterexample(Counterexample::N, 4);
  const LabeledGraph n4p = construct_counterexample(Counterexample::Nprime, 4);
  CHECK(degree_vector(n4).values() == std::vector<int>{3, 2, 2, 2, 1, 1, 1});
  CHECK(sorted_degrees(n4p) == sorted_degrees(n4));
  CHECK_FALSE(are_isomorphic(n4, n4p));
  CHECK(oracle::isomorphic(n4, n4) == are_isomorphic(n4, n4));
  CHECK_FALSE(oracle::isomorphic(n4, n4p));

  const RealizationGraph rg = build_realization_graph(degree_vector(n4), Filter::nonbipartite);
  CHECK(rg.arcs(*rg.find(n4)).empty());
  CHECK_FALSE(distance(rg, n4, n4p).has_value());
  for (const auto& y : oracle::switch_images(n4)) CHECK(structural_class(y).is_tree);
}

TEST_CASE("counterexample constructions at larger parameters") {
  for (int n = 3; n <= 6; ++n) {
    const LabeledGraph b = construct_counterexample(Counterexample::B, n);
    const LabeledGraph bp = construct_counterexample(Counterexample::Bprime, n);
    std::vector<int> expected{n + 1, n + 1};
    expected.insert(expected.end(), 2 * n - 2, n);
    expected.insert(expected.end(), 2, 1);
    CHECK(degree_vector(b).values() == expected);
    CHECK(degree_vector(bp).sorted() == expected);
    CHECK(is_bipartite(bp));
    CHECK_FALSE(are_isomorphic(b, bp));
  }
  for (int k = 4; k <= 8; ++k) {
    const LabeledGraph nk = construct_counterexample(Counterexample::N, k);
    const LabeledGraph nkp = construct_counterexample(Counterexample::Nprime, k);
    std::vector<int> expected{k - 1, 2, 2, 2};
    expected.insert(expected.end(), k - 1, 1);
    CHECK(degree_vector(nk).values() == expected);
    CHECK(degree_vector(nkp).sorted() == expected);
    CHECK_FALSE(are_isomorphic(nk, nkp));
  }
  CHECK_THROWS_AS(construct_counterexample(Counterexample::B, 2), RangeError);
  CHECK_THROWS_AS(construct_counterexample(Counterexample::N, 3), RangeError);
  CHECK(parse_counterexample("Bprime") == Counterexample::Bprime);
  CHECK_THROWS_AS(parse_counterexample("C"), ParseError);
}

TEST_CASE("isomorphism agrees with the permutation oracle") {
  CHECK(are_isomorphic(g(4, {{1, 2}, {2, 3}, {3, 4}}), g(4, {{1, 3}, {3, 2}, {2, 4}})));
  CHECK_FALSE(are_isomorphic(g(3, {{1, 2}, {2, 3}, {1, 3}}), g(3, {{1, 2}, {2, 3}})));
  const auto graphs = oracle::all_graphs(5);
  for (std::size_t i = 0; i < graphs.size(); i += 7) {
    for (std::size_t j = 0; j < graphs.size(); j += 11) {
      REQUIRE(are_isomorphic(graphs[i], graphs[j]) == oracle::isomorphic(graphs[i], graphs[j]));
    }
  }
}
