#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "switchlab/errors.hpp"

#ifndef SWITCHLAB_MAX_VERTICES
#define SWITCHLAB_MAX_VERTICES 32
#endif

namespace switchlab {

inline constexpr int kMaxVertices = SWITCHLAB_MAX_VERTICES;
static_assert(kMaxVertices >= 4 && kMaxVertices <= 64);

/// Vertices are labeled 1..n.
using Vertex = int;

/// Bitmask over vertices; vertex v occupies bit v-1.
using VertexSet =
    std::conditional_t<(kMaxVertices <= 32), std::uint32_t, std::uint64_t>;

constexpr VertexSet vertex_bit(Vertex v) noexcept {
  return VertexSet{1} << (v - 1);
}

constexpr VertexSet first_vertices(int n) noexcept {
  return n >= static_cast<int>(sizeof(VertexSet) * 8)
             ? ~VertexSet{0}
             : (VertexSet{1} << n) - 1;
}

constexpr int popcount(VertexSet s) noexcept { return std::popcount(s); }

/// Lowest vertex of a non-empty set.
constexpr Vertex lowest(VertexSet s) noexcept {
  return std::countr_zero(s) + 1;
}

template <class F>
constexpr void for_each_vertex(VertexSet s, F&& f) {
  while (s != 0) {
    f(lowest(s));
    s &= s - 1;
  }
}

/// Unordered pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

constexpr Edge make_edge(Vertex a, Vertex b) noexcept {
  return a < b ? Edge{a, b} : Edge{b, a};
}

/// Simple undirected graph on the vertex set {1..n}. Values are immutable;
/// every editing operation returns a new graph.
class LabeledGraph {
 public:
  LabeledGraph() = default;

  /// Edgeless graph on n vertices.
  explicit LabeledGraph(int n);

  /// Rejects loops, duplicates and out-of-range endpoints.
  static LabeledGraph from_edges(int n, std::span<const Edge> edges);
  static LabeledGraph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// Builds a graph from adjacency rows (row v-1 is N(v)). The rows must be
  /// symmetric and loop-free.
  static LabeledGraph from_rows(int n, std::span<const VertexSet> rows);

  int order() const noexcept { return n_; }
  int size() const noexcept { return m_; }

  VertexSet vertices() const noexcept { return first_vertices(n_); }
  VertexSet neighbors(Vertex v) const noexcept { return rows_[v - 1]; }
  int degree(Vertex v) const noexcept { return popcount(rows_[v - 1]); }
  bool contains(Vertex v) const noexcept { return v >= 1 && v <= n_; }
  bool has_edge(Vertex u, Vertex v) const noexcept {
    return (rows_[u - 1] & vertex_bit(v)) != 0;
  }
  bool has_edge(Edge e) const noexcept { return has_edge(e.u, e.v); }

  std::span<const VertexSet> rows() const noexcept {
    return {rows_.data(), static_cast<std::size_t>(n_)};
  }

  /// Edges in lexicographic order.
  std::vector<Edge> edges() const;

  template <class F>
  void for_each_edge(F&& f) const {
    for (Vertex u = 1; u <= n_; ++u) {
      VertexSet higher = rows_[u - 1] & ~first_vertices(u);
      for_each_vertex(higher, [&](Vertex v) { f(Edge{u, v}); });
    }
  }

  /// Removes `removed` (each must be present) and adds `added` (each must be
  /// absent and loop-free).
  LabeledGraph edited(std::span<const Edge> removed,
                      std::span<const Edge> added) const;
  LabeledGraph without_edge(Edge e) const;
  LabeledGraph with_edge(Edge e) const;

  /// Deletes every edge incident to a vertex of `s`; labels are kept, so the
  /// deleted vertices remain as isolated vertices.
  LabeledGraph without_vertices(VertexSet s) const;

  /// Subgraph keeping only the edges with both ends in `s`.
  LabeledGraph induced_edges(VertexSet s) const;

  LabeledGraph complement() const;

  std::size_t hash() const noexcept;

  friend bool operator==(const LabeledGraph& x, const LabeledGraph& y) noexcept {
    return x.n_ == y.n_ && x.rows_ == y.rows_;
  }
  /// Orders by order, then lexicographically by adjacency rows.
  friend std::strong_ordering operator<=>(const LabeledGraph& x,
                                          const LabeledGraph& y) noexcept;

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  int m_ = 0;
  std::array<VertexSet, kMaxVertices> rows_{};
};

struct LabeledGraphHash {
  std::size_t operator()(const LabeledGraph& g) const noexcept {
    return g.hash();
  }
};

/// Vertex degrees d[v-1] = |N(v)|. The entries sum to an even number and
/// lie in [0, n-1].
class DegreeVector {
 public:
  DegreeVector() = default;
  /// Throws InfeasibleError if the sum is odd or an entry leaves [0, n-1].
  explicit DegreeVector(std::vector<int> values);

  int order() const noexcept { return static_cast<int>(d_.size()); }
  int operator[](Vertex v) const noexcept { return d_[v - 1]; }
  const std::vector<int>& values() const noexcept { return d_; }
  int sum() const noexcept;

  /// Entries sorted in nonincreasing order.
  std::vector<int> sorted() const;

  /// Erdos-Gallai test on the sorted sequence.
  bool is_graphical() const;

  /// Multiplicity notation, e.g. "3^1,2^6,1^3", over the sorted sequence.
  std::string to_expression() const;

  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;

 private:
  std::vector<int> d_;
};

DegreeVector degree_vector(const LabeledGraph& g);

enum class Cyclicity { zero, one, at_least_two };

struct StructuralClass {
  bool is_forest = false;
  bool is_tree = false;
  bool is_unicyclic = false;
  bool is_pseudoforest = false;
  bool is_bipartite = false;
  int kappa = 0;
  Cyclicity cyclicity = Cyclicity::zero;
};

StructuralClass structural_class(const LabeledGraph& g);

/// Connected components ordered by their lowest vertex.
std::vector<VertexSet> components(const LabeledGraph& g);

/// Component of g containing v.
VertexSet component_of(const LabeledGraph& g, Vertex v);

int components_count(const LabeledGraph& g);
bool is_connected(const LabeledGraph& g);
bool is_forest(const LabeledGraph& g);
bool is_pseudoforest(const LabeledGraph& g);
bool is_bipartite(const LabeledGraph& g);

/// Vertices of degree 0.
VertexSet isolated_vertices(const LabeledGraph& g);

struct CycForDecomposition {
  VertexSet cyc_vertices = 0;
  std::vector<Edge> cyc_edges;
  std::vector<Edge> for_edges;
  int cycle_count = 0;

  bool is_cycle_edge(Edge e) const noexcept {
    return (cyc_vertices & vertex_bit(e.u)) && (cyc_vertices & vertex_bit(e.v));
  }
};

/// Splits a pseudoforest into the cycle part (the 2-core, a disjoint union
/// of cycles) and the hanging forest. Throws PreconditionError otherwise.
CycForDecomposition cyc_for(const LabeledGraph& g);

/// 2-core of g by iterated removal of vertices of degree <= 1.
VertexSet two_core(const LabeledGraph& g);

/// kappa(G) - cyc(G) for a pseudoforest.
int zeta(const LabeledGraph& g);

/// Largest shortest-path distance; g must be connected.
int diameter(const LabeledGraph& g);

/// BFS distances from `source`; -1 for unreachable vertices. Index v-1.
std::vector<int> bfs_distances(const LabeledGraph& g, Vertex source);

/// Vertex sequence of the unique path between u and v in a forest, or an
/// empty vector when they lie in different components.
std::vector<Vertex> forest_path(const LabeledGraph& forest, Vertex u, Vertex v);

}  // namespace switchlab

template <>
struct std::hash<switchlab::LabeledGraph> {
  std::size_t operator()(const switchlab::LabeledGraph& g) const noexcept {
    return g.hash();
  }
};
