#include "switchlab/params.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace switchlab {

namespace {

constexpr std::array<ParamId, 14> kAllParams = {
    ParamId::matching,   ParamId::edge_cover,   ParamId::independence, ParamId::vertex_cover,
    ParamId::clique,     ParamId::domination,   ParamId::components,   ParamId::path_cover,
    ParamId::zero_forcing, ParamId::z_grundy,   ParamId::chromatic,    ParamId::rank,
    ParamId::nullity,    ParamId::diameter,
};

}  // namespace

const char* to_string(ParamId p) noexcept {
  switch (p) {
    case ParamId::matching: return "matching";
    case ParamId::edge_cover: return "edge_cover";
    case ParamId::independence: return "independence";
    case ParamId::vertex_cover: return "vertex_cover";
    case ParamId::clique: return "clique";
    case ParamId::domination: return "domination";
    case ParamId::components: return "components";
    case ParamId::path_cover: return "path_cover";
    case ParamId::zero_forcing: return "zero_forcing";
    case ParamId::z_grundy: return "z_grundy";
    case ParamId::chromatic: return "chromatic";
    case ParamId::rank: return "rank";
    case ParamId::nullity: return "nullity";
    case ParamId::diameter: return "diameter";
  }
  return "matching";
}

ParamId parse_param(std::string_view name) {
  for (ParamId p : kAllParams) {
    if (name == to_string(p)) return p;
  }
  throw ParseError("unknown parameter '" + std::string(name) + "'");
}

std::span<const ParamId> all_params() noexcept { return kAllParams; }

bool is_defined(const LabeledGraph& g, ParamId p) {
  switch (p) {
    case ParamId::edge_cover:
    case ParamId::z_grundy: return isolated_vertices(g) == 0;
    case ParamId::diameter: return g.order() > 0 && is_connected(g);
    default: return true;
  }
}

int evaluate(const LabeledGraph& g, ParamId p) {
  if (!is_defined(g, p)) {
    throw UndefinedParameterError(std::string(to_string(p)) +
                                  (p == ParamId::diameter
                                       ? " is undefined on a disconnected or empty graph"
                                       : " is undefined on a graph with isolated vertices"));
  }
  switch (p) {
    case ParamId::matching: return matching_number(g);
    case ParamId::edge_cover: return edge_cover_number(g);
    case ParamId::independence: return independence_number(g);
    case ParamId::vertex_cover: return vertex_cover_number(g);
    case ParamId::clique: return clique_number(g);
    case ParamId::domination: return domination_number(g);
    case ParamId::components: return components_count(g);
    case ParamId::path_cover: return path_cover_number(g);
    case ParamId::zero_forcing: return zero_forcing_number(g);
    case ParamId::z_grundy: return z_grundy_number(g);
    case ParamId::chromatic: return chromatic_number(g);
    case ParamId::rank: return adjacency_rank(g).rank;
    case ParamId::nullity: return adjacency_rank(g).nullity;
    case ParamId::diameter: return diameter(g);
  }
  return 0;
}

std::optional<int> try_evaluate(const LabeledGraph& g, ParamId p) {
  if (!is_defined(g, p)) return std::nullopt;
  return evaluate(g, p);
}

// ---------------------------------------------------------------------------
// Matching and edge cover

namespace {

void grow_matching(const LabeledGraph& g, VertexSet avail, int current, int& best) {
  VertexSet live = 0;
  for_each_vertex(avail, [&](Vertex v) {
    if (g.neighbors(v) & avail) live |= vertex_bit(v);
  });
  best = std::max(best, current);
  if (current + popcount(live) / 2 <= best) return;
  const Vertex v = lowest(live);
  const VertexSet rest = live & ~vertex_bit(v);
  for_each_vertex(g.neighbors(v) & live, [&](Vertex w) {
    grow_matching(g, rest & ~vertex_bit(w), current + 1, best);
  });
  grow_matching(g, rest, current, best);
}

bool cover_within(const LabeledGraph& g, VertexSet uncovered, int k) {
  if (uncovered == 0) return true;
  if (2 * k < popcount(uncovered)) return false;
  const Vertex u = lowest(uncovered);
  bool found = false;
  for_each_vertex(g.neighbors(u), [&](Vertex w) {
    if (!found) {
      found = cover_within(g, uncovered & ~vertex_bit(u) & ~vertex_bit(w), k - 1);
    }
  });
  return found;
}

}  // namespace

int matching_number(const LabeledGraph& g) {
  int best = 0;
  grow_matching(g, g.vertices(), 0, best);
  return best;
}

int min_edge_cover_direct(const LabeledGraph& g) {
  if (isolated_vertices(g) != 0) {
    throw UndefinedParameterError("edge_cover is undefined on a graph with isolated vertices");
  }
  for (int k = 0;; ++k) {
    if (cover_within(g, g.vertices(), k)) return k;
  }
}

int edge_cover_number(const LabeledGraph& g) {
  if (isolated_vertices(g) != 0) {
    throw UndefinedParameterError("edge_cover is undefined on a graph with isolated vertices");
  }
  const int value = g.order() - matching_number(g);
  if (verification_enabled() && value != min_edge_cover_direct(g)) {
    throw TheoremViolation("edge cover identity failed on " + std::to_string(g.order()) +
                           "-vertex graph");
  }
  return value;
}

// ---------------------------------------------------------------------------
// Independence, vertex cover, clique

namespace {

void grow_independent(const LabeledGraph& g, VertexSet pool, int current, int& best) {
  if (current + popcount(pool) <= best) return;
  Vertex pick = 0;
  int pick_degree = -1;
  for_each_vertex(pool, [&](Vertex v) {
    const int deg = popcount(g.neighbors(v) & pool);
    if (deg > pick_degree) {
      pick = v;
      pick_degree = deg;
    }
  });
  if (pick_degree <= 0) {
    best = std::max(best, current + popcount(pool));
    return;
  }
  grow_independent(g, pool & ~g.neighbors(pick) & ~vertex_bit(pick), current + 1, best);
  grow_independent(g, pool & ~vertex_bit(pick), current, best);
}

}  // namespace

int independence_number(const LabeledGraph& g) {
  int best = 0;
  grow_independent(g, g.vertices(), 0, best);
  return best;
}

int vertex_cover_number(const LabeledGraph& g) { return g.order() - independence_number(g); }

int clique_number(const LabeledGraph& g) { return independence_number(g.complement()); }

// ---------------------------------------------------------------------------
// Domination

namespace {

bool dominate_within(const LabeledGraph& g, VertexSet undominated, int k) {
  if (undominated == 0) return true;
  if (k == 0) return false;
  const Vertex u = lowest(undominated);
  const VertexSet options = g.neighbors(u) | vertex_bit(u);
  bool found = false;
  for_each_vertex(options, [&](Vertex w) {
    if (!found) {
      found = dominate_within(g, undominated & ~(g.neighbors(w) | vertex_bit(w)), k - 1);
    }
  });
  return found;
}

}  // namespace

int domination_number(const LabeledGraph& g) {
  for (int k = 0;; ++k) {
    if (dominate_within(g, g.vertices(), k)) return k;
  }
}

// ---------------------------------------------------------------------------
// Linear forests

namespace {

struct LinearForestSearch {
  const LabeledGraph& g;
  std::vector<Edge> edges;
  int target = 0;
  int best = 0;
  std::array<int, kMaxVertices + 1> degree{};
  std::array<int, kMaxVertices + 1> parent{};

  int find(int v) const {
    while (parent[v] != v) v = parent[v];
    return v;
  }

  void run(std::size_t i, int current) {
    best = std::max(best, current);
    if (best == target) return;
    if (current + static_cast<int>(edges.size() - i) <= best) return;
    const Edge e = edges[i];
    if (degree[e.u] < 2 && degree[e.v] < 2) {
      const int ru = find(e.u);
      const int rv = find(e.v);
      if (ru != rv) {
        ++degree[e.u];
        ++degree[e.v];
        parent[ru] = rv;
        run(i + 1, current + 1);
        parent[ru] = ru;
        --degree[e.u];
        --degree[e.v];
        if (best == target) return;
      }
    }
    run(i + 1, current);
  }
};

}  // namespace

int max_linear_forest_size(const LabeledGraph& g) {
  LinearForestSearch search{g, g.edges()};
  search.target = g.order() - components_count(g);
  for (int v = 0; v <= kMaxVertices; ++v) search.parent[v] = v;
  if (search.edges.empty()) return 0;
  search.run(0, 0);
  return search.best;
}

int path_cover_number(const LabeledGraph& g) { return g.order() - max_linear_forest_size(g); }

// ---------------------------------------------------------------------------
// Zero forcing and Z-Grundy domination

VertexSet forcing_closure(const LabeledGraph& g, VertexSet seed) {
  VertexSet infected = seed & g.vertices();
  for (bool changed = true; changed;) {
    changed = false;
    for_each_vertex(infected, [&](Vertex v) {
      const VertexSet open = g.neighbors(v) & ~infected;
      if (popcount(open) == 1) {
        infected |= open;
        changed = true;
      }
    });
  }
  return infected;
}

int zero_forcing_number(const LabeledGraph& g) {
  const int n = g.order();
  const VertexSet all = g.vertices();
  for (int k = 0; k <= n; ++k) {
    if (k == 0) {
      if (n == 0) return 0;
      continue;
    }
    // Gosper's hack over k-subsets of n bits.
    std::uint64_t s = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = std::uint64_t{1} << n;
    while (s < limit) {
      if (forcing_closure(g, static_cast<VertexSet>(s)) == all) return k;
      const std::uint64_t c = s & (~s + 1);
      const std::uint64_t r = s + c;
      s = (((r ^ s) >> 2) / c) | r;
    }
  }
  return n;
}

namespace {

int longest_from(const LabeledGraph& g, VertexSet footprint,
                 std::unordered_map<VertexSet, int>& memo) {
  if (auto it = memo.find(footprint); it != memo.end()) return it->second;
  int best = 0;
  for_each_vertex(g.vertices(), [&](Vertex v) {
    if (g.neighbors(v) & ~footprint) {
      best = std::max(best,
                      1 + longest_from(g, footprint | g.neighbors(v) | vertex_bit(v), memo));
    }
  });
  memo.emplace(footprint, best);
  return best;
}

}  // namespace

int longest_z_sequence(const LabeledGraph& g) {
  if (g.order() > 24) throw RangeError("Z-sequence search is limited to 24 vertices");
  std::unordered_map<VertexSet, int> memo;
  return longest_from(g, 0, memo);
}

int z_grundy_number(const LabeledGraph& g) {
  if (isolated_vertices(g) != 0) {
    throw UndefinedParameterError("z_grundy is undefined on a graph with isolated vertices");
  }
  const int value = g.order() - zero_forcing_number(g);
  if (verification_enabled() && g.order() <= 16 && value != longest_z_sequence(g)) {
    throw TheoremViolation("Z-Grundy identity failed on " + std::to_string(g.order()) +
                           "-vertex graph");
  }
  return value;
}

// ---------------------------------------------------------------------------
// Chromatic number

namespace {

bool color_from(const LabeledGraph& g, Vertex v, int k, int used,
                std::array<int, kMaxVertices + 1>& color) {
  if (v > g.order()) return true;
  for (int c = 1; c <= std::min(k, used + 1); ++c) {
    bool clash = false;
    for_each_vertex(g.neighbors(v), [&](Vertex w) {
      if (w < v && color[w] == c) clash = true;
    });
    if (clash) continue;
    color[v] = c;
    if (color_from(g, v + 1, k, std::max(used, c), color)) return true;
  }
  color[v] = 0;
  return false;
}

}  // namespace

int chromatic_number(const LabeledGraph& g) {
  if (g.order() == 0) return 0;
  std::array<int, kMaxVertices + 1> color{};
  for (int k = g.size() > 0 ? 2 : 1;; ++k) {
    color.fill(0);
    if (color_from(g, 1, k, 0, color)) return k;
  }
}

// ---------------------------------------------------------------------------
// Adjacency rank

__extension__ typedef __int128 Wide;

RankNullity adjacency_rank(const LabeledGraph& g) {
  const int n = g.order();
  // Entries stay minors of a 0/1 matrix, below 2^52 for n <= 32, so int64
  // storage with 128-bit products is exact.
  std::vector<std::int64_t> m(static_cast<std::size_t>(n) * n, 0);
  auto at = [&](int i, int j) -> std::int64_t& { return m[static_cast<std::size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) at(i, j) = g.has_edge(i + 1, j + 1) ? 1 : 0;
  }
  int rank = 0;
  std::int64_t previous = 1;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = rank;
    while (pivot < n && at(pivot, col) == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != rank) {
      for (int j = 0; j < n; ++j) std::swap(at(pivot, j), at(rank, j));
    }
    const std::int64_t p = at(rank, col);
    for (int i = rank + 1; i < n; ++i) {
      const std::int64_t f = at(i, col);
      for (int j = col + 1; j < n; ++j) {
        const Wide value = static_cast<Wide>(p) * at(i, j) - static_cast<Wide>(f) * at(rank, j);
        at(i, j) = static_cast<std::int64_t>(value / previous);
      }
      at(i, col) = 0;
    }
    previous = p;
    ++rank;
  }
  return {rank, n - rank};
}

}  // namespace switchlab
