#include <doctest.h>

#include "oracles.hpp"
#include "switchlab/params.hpp"
#include "switchlab/realization.hpp"

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

LabeledGraph complete(int n) { return LabeledGraph(n).complement(); }

const LabeledGraph kStar = LabeledGraph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}});
const LabeledGraph kEdge = LabeledGraph::from_edges(2, {{1, 2}});

struct VerificationScope {
  explicit VerificationScope(bool on) : saved(verification_enabled()) { set_verification(on); }
  ~VerificationScope() { set_verification(saved); }
  bool saved;
};

// Every labeled forest on n vertices, by adding edges in lexicographic order
// while they join different trees.
void forests_from(int n, int pair, std::vector<int>& root, LabeledGraph current,
                  std::vector<LabeledGraph>& out) {
  const int pairs = n * (n - 1) / 2;
  if (pair == pairs) {
    out.push_back(current);
    return;
  }
  int u = 1;
  int rest = pair;
  while (rest >= n - u) rest -= n - u++;
  const int v = u + 1 + rest;
  forests_from(n, pair + 1, root, current, out);
  const auto find = [&](int x) {
    while (root[x] != x) x = root[x];
    return x;
  };
  const int ru = find(u);
  const int rv = find(v);
  if (ru == rv) return;
  root[rv] = ru;
  forests_from(n, pair + 1, root, current.with_edge({u, v}), out);
  root[rv] = rv;
}

std::vector<LabeledGraph> all_forests(int n) {
  std::vector<int> root(n + 1);
  for (int i = 0; i <= n; ++i) root[i] = i;
  std::vector<LabeledGraph> out;
  forests_from(n, 0, root, LabeledGraph(n), out);
  return out;
}

}  // namespace

TEST_CASE("parameter identifiers") {
  CHECK(all_params().size() == 14);
  for (ParamId p : all_params()) CHECK(parse_param(to_string(p)) == p);
  CHECK_THROWS_AS(parse_param("girth"), ParseError);
}

TEST_CASE("matching number") {
  CHECK(matching_number(path(4)) == 2);
  CHECK(matching_number(complete(3)) == 1);
  CHECK(matching_number(cycle(6)) == 3);
  CHECK(oracle::matching(cycle(6)) == 3);
}

TEST_CASE("edge cover number") {
  VerificationScope verify(true);
  CHECK(edge_cover_number(path(4)) == 2);
  CHECK(edge_cover_number(complete(3)) == 2);
  CHECK(edge_cover_number(kEdge) == 1);
  CHECK(evaluate(path(4), ParamId::edge_cover) == 2);
  CHECK_THROWS_AS(evaluate(LabeledGraph(3), ParamId::edge_cover), UndefinedParameterError);
  CHECK_FALSE(try_evaluate(LabeledGraph(3), ParamId::edge_cover).has_value());
}

TEST_CASE("independence, vertex cover and clique numbers") {
  CHECK(independence_number(path(4)) == 2);
  CHECK(vertex_cover_number(path(4)) == 2);
  CHECK(clique_number(path(4)) == 2);
  CHECK(independence_number(complete(4)) == 1);
  CHECK(vertex_cover_number(complete(4)) == 3);
  CHECK(clique_number(complete(4)) == 4);
  CHECK(independence_number(cycle(5)) == 2);
  CHECK(vertex_cover_number(cycle(5)) == 3);
  CHECK(clique_number(cycle(5)) == 2);
  CHECK(oracle::independence(cycle(5)) == 2);
  CHECK(oracle::clique(cycle(5)) == 2);
}

TEST_CASE("domination number") {
  CHECK(domination_number(kStar) == 1);
  CHECK(domination_number(path(4)) == 2);
  CHECK(domination_number(cycle(6)) == 2);
  CHECK(oracle::domination(path(4)) == 2);
  CHECK(oracle::domination(cycle(6)) == 2);
}

TEST_CASE("components") {
  CHECK(evaluate(path(4), ParamId::components) == 1);
  CHECK(evaluate(LabeledGraph::from_edges(4, {{1, 2}, {3, 4}}), ParamId::components) == 2);
  CHECK(evaluate(LabeledGraph(5), ParamId::components) == 5);
}

TEST_CASE("path cover number") {
  for (int n = 1; n <= 7; ++n) CHECK(path_cover_number(path(n)) == 1);
  CHECK(max_linear_forest_size(kStar) == 2);
  CHECK(path_cover_number(kStar) == 2);
  CHECK(path_cover_number(complete(4)) == 1);
  CHECK(path_cover_number(LabeledGraph(3)) == 3);
  CHECK(oracle::path_cover(kStar) == 2);
}

TEST_CASE("zero forcing number") {
  for (int n = 1; n <= 7; ++n) CHECK(zero_forcing_number(path(n)) == 1);
  CHECK(zero_forcing_number(kStar) == 2);
  CHECK(zero_forcing_number(cycle(5)) == 2);
  CHECK(forcing_closure(path(5), vertex_bit(1)) == path(5).vertices());
  CHECK(oracle::zero_forcing(kStar) == 2);
  CHECK(oracle::zero_forcing(cycle(5)) == 2);
}

TEST_CASE("Z-Grundy domination number") {
  VerificationScope verify(true);
  CHECK(z_grundy_number(path(4)) == 3);
  CHECK(z_grundy_number(kStar) == 2);
  CHECK(z_grundy_number(kEdge) == 1);
  CHECK(longest_z_sequence(path(4)) == 3);
  CHECK(oracle::z_grundy(path(4)) == 3);
  CHECK_THROWS_AS(evaluate(LabeledGraph(2), ParamId::z_grundy), UndefinedParameterError);
}

TEST_CASE("chromatic number") {
  CHECK(chromatic_number(path(5)) == 2);
  CHECK(chromatic_number(kStar) == 2);
  CHECK(chromatic_number(cycle(5)) == 3);
  CHECK(chromatic_number(complete(4)) == 4);
  CHECK(chromatic_number(LabeledGraph(3)) == 1);
  CHECK(chromatic_number(LabeledGraph()) == 0);
}

TEST_CASE("adjacency rank") {
  CHECK(adjacency_rank(path(4)).rank == 4);
  CHECK(adjacency_rank(path(4)).nullity == 0);
  CHECK(adjacency_rank(kStar).rank == 2);
  CHECK(adjacency_rank(kStar).nullity == 2);
  CHECK(adjacency_rank(LabeledGraph(3)).rank == 0);
  CHECK(adjacency_rank(complete(5)).rank == 5);
  CHECK(adjacency_rank(cycle(4)).rank == 2);
  CHECK(oracle::rank(cycle(4)) == 2);
}

TEST_CASE("diameter parameter") {
  CHECK(evaluate(path(5), ParamId::diameter) == 4);
  CHECK_FALSE(is_defined(LabeledGraph(2), ParamId::diameter));
  CHECK_FALSE(is_defined(LabeledGraph(), ParamId::diameter));
  CHECK(is_defined(LabeledGraph(1), ParamId::diameter));
}

TEST_CASE("every parameter matches the naive oracle on every graph up to 6 vertices") {
  VerificationScope verify(true);
  for (int n = 0; n <= 6; ++n) {
    for (const auto& g : oracle::all_graphs(n)) {
      const bool isolated = isolated_vertices(g) != 0;
      REQUIRE(matching_number(g) == oracle::matching(g));
      if (!isolated) {
        REQUIRE(edge_cover_number(g) == oracle::edge_cover(g));
        REQUIRE(z_grundy_number(g) == oracle::z_grundy(g));
      }
      REQUIRE(independence_number(g) == oracle::independence(g));
      REQUIRE(clique_number(g) == oracle::clique(g));
      REQUIRE(domination_number(g) == oracle::domination(g));
      REQUIRE(path_cover_number(g) == oracle::path_cover(g));
      REQUIRE(zero_forcing_number(g) == oracle::zero_forcing(g));
      REQUIRE(chromatic_number(g) == oracle::chromatic(g));
      REQUIRE(adjacency_rank(g).rank == oracle::rank(g));
      REQUIRE(adjacency_rank(g).nullity == n - oracle::rank(g));
      if (n > 0 && oracle::is_connected(g)) REQUIRE(evaluate(g, ParamId::diameter) == oracle::diameter(g));
    }
  }
}

TEST_CASE("Gallai identities, complement clique and Z-sequences on every graph with 7 vertices") {
  VerificationScope verify(false);
  for (const auto& g : oracle::all_graphs(7)) {
    const int n = g.order();
    REQUIRE(vertex_cover_number(g) == n - independence_number(g));
    REQUIRE(clique_number(g) == independence_number(g.complement()));
    const int z = zero_forcing_number(g);
    REQUIRE(path_cover_number(g) <= z);
    if (isolated_vertices(g) == 0) {
      REQUIRE(edge_cover_number(g) == n - matching_number(g));
      REQUIRE(min_edge_cover_direct(g) == n - matching_number(g));
      REQUIRE(longest_z_sequence(g) + z == n);
    }
  }
}

TEST_CASE("path cover equals zero forcing on every tree up to 8 vertices") {
  std::size_t trees = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const auto& f : all_forests(n)) {
      if (!is_connected(f)) continue;
      REQUIRE(path_cover_number(f) == zero_forcing_number(f));
      ++trees;
    }
  }
  // Cayley: sum of n^(n-2) for n = 1..8.
  CHECK(trees == 1 + 1 + 3 + 16 + 125 + 1296 + 16807 + 262144);
}

TEST_CASE("rank is twice the matching number on every forest up to 9 vertices") {
  for (int n = 1; n <= 9; ++n) {
    for (const auto& f : all_forests(n)) REQUIRE(adjacency_rank(f).rank == 2 * matching_number(f));
  }
  // Labeled forests on 5 vertices.
  CHECK(all_forests(5).size() == 291);
}
