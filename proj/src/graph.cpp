#include "switchlab/graph.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

namespace switchlab {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::construction: return "construction";
    case ErrorKind::range: return "range";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::infeasible: return "infeasible";
    case ErrorKind::parse: return "parse";
    case ErrorKind::membership: return "membership";
    case ErrorKind::undefined: return "undefined";
    case ErrorKind::budget: return "budget";
    case ErrorKind::io: return "io";
    case ErrorKind::theorem: return "theorem";
  }
  return "unknown";
}

namespace {
#ifdef NDEBUG
std::atomic<bool> g_verification{false};
#else
std::atomic<bool> g_verification{true};
#endif

std::string pair_text(Vertex u, Vertex v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}
}  // namespace

bool verification_enabled() noexcept {
  return g_verification.load(std::memory_order_relaxed);
}
void set_verification(bool enabled) noexcept {
  g_verification.store(enabled, std::memory_order_relaxed);
}

// ---------------------------------------------------------------------------
// LabeledGraph

LabeledGraph::LabeledGraph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw RangeError("vertex count " + std::to_string(n) + " outside [0," +
                     std::to_string(kMaxVertices) + "]");
  }
}

void LabeledGraph::check_vertex(Vertex v) const {
  if (v < 1 || v > n_) {
    throw RangeError("vertex " + std::to_string(v) + " outside [1," +
                     std::to_string(n_) + "]");
  }
}

LabeledGraph LabeledGraph::from_edges(int n, std::span<const Edge> edges) {
  LabeledGraph g(n);
  for (const Edge& e : edges) {
    g.check_vertex(e.u);
    g.check_vertex(e.v);
    if (e.u == e.v) {
      throw ConstructionError("self-loop " + pair_text(e.u, e.v));
    }
    if (g.has_edge(e.u, e.v)) {
      throw ConstructionError("duplicate edge " + pair_text(e.u, e.v));
    }
    g.rows_[e.u - 1] |= vertex_bit(e.v);
    g.rows_[e.v - 1] |= vertex_bit(e.u);
    ++g.m_;
  }
  return g;
}

LabeledGraph LabeledGraph::from_rows(int n, std::span<const VertexSet> rows) {
  LabeledGraph g(n);
  if (static_cast<int>(rows.size()) != n) {
    throw ConstructionError("expected " + std::to_string(n) + " adjacency rows");
  }
  const VertexSet all = first_vertices(n);
  int degree_sum = 0;
  for (Vertex v = 1; v <= n; ++v) {
    VertexSet row = rows[v - 1];
    if (row & ~all) throw ConstructionError("adjacency row out of range");
    if (row & vertex_bit(v)) throw ConstructionError("self-loop " + pair_text(v, v));
    for_each_vertex(row, [&](Vertex w) {
      if (!(rows[w - 1] & vertex_bit(v))) {
        throw ConstructionError("asymmetric adjacency at " + pair_text(v, w));
      }
    });
    g.rows_[v - 1] = row;
    degree_sum += popcount(row);
  }
  g.m_ = degree_sum / 2;
  return g;
}

std::vector<Edge> LabeledGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for_each_edge([&](Edge e) { out.push_back(e); });
  return out;
}

LabeledGraph LabeledGraph::edited(std::span<const Edge> removed,
                                  std::span<const Edge> added) const {
  LabeledGraph g = *this;
  for (const Edge& e : removed) {
    check_vertex(e.u);
    check_vertex(e.v);
    if (e.u == e.v || !g.has_edge(e.u, e.v)) {
      throw PreconditionError("cannot remove absent edge " + pair_text(e.u, e.v));
    }
    g.rows_[e.u - 1] &= ~vertex_bit(e.v);
    g.rows_[e.v - 1] &= ~vertex_bit(e.u);
    --g.m_;
  }
  for (const Edge& e : added) {
    check_vertex(e.u);
    check_vertex(e.v);
    if (e.u == e.v) throw ConstructionError("self-loop " + pair_text(e.u, e.v));
    if (g.has_edge(e.u, e.v)) {
      throw ConstructionError("duplicate edge " + pair_text(e.u, e.v));
    }
    g.rows_[e.u - 1] |= vertex_bit(e.v);
    g.rows_[e.v - 1] |= vertex_bit(e.u);
    ++g.m_;
  }
  return g;
}

LabeledGraph LabeledGraph::without_edge(Edge e) const {
  return edited(std::span<const Edge>(&e, 1), {});
}

LabeledGraph LabeledGraph::with_edge(Edge e) const {
  return edited({}, std::span<const Edge>(&e, 1));
}

LabeledGraph LabeledGraph::without_vertices(VertexSet s) const {
  LabeledGraph g = *this;
  int degree_sum = 0;
  for (Vertex v = 1; v <= n_; ++v) {
    g.rows_[v - 1] = (s & vertex_bit(v)) ? 0 : (rows_[v - 1] & ~s);
    degree_sum += popcount(g.rows_[v - 1]);
  }
  g.m_ = degree_sum / 2;
  return g;
}

LabeledGraph LabeledGraph::induced_edges(VertexSet s) const {
  return without_vertices(vertices() & ~s);
}

LabeledGraph LabeledGraph::complement() const {
  LabeledGraph g(n_);
  const VertexSet all = vertices();
  int degree_sum = 0;
  for (Vertex v = 1; v <= n_; ++v) {
    g.rows_[v - 1] = all & ~rows_[v - 1] & ~vertex_bit(v);
    degree_sum += popcount(g.rows_[v - 1]);
  }
  g.m_ = degree_sum / 2;
  return g;
}

std::size_t LabeledGraph::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(n_);
  for (int i = 0; i < n_; ++i) {
    h ^= static_cast<std::uint64_t>(rows_[i]);
    h *= 1099511628211ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const LabeledGraph& x,
                                 const LabeledGraph& y) noexcept {
  if (auto c = x.n_ <=> y.n_; c != 0) return c;
  for (int i = 0; i < x.n_; ++i) {
    if (auto c = x.rows_[i] <=> y.rows_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// DegreeVector

DegreeVector::DegreeVector(std::vector<int> values) : d_(std::move(values)) {
  const int n = order();
  if (n > kMaxVertices) {
    throw RangeError("degree vector longer than the vertex cap " +
                     std::to_string(kMaxVertices));
  }
  long total = 0;
  for (int i = 0; i < n; ++i) {
    if (d_[i] < 0 || d_[i] > n - 1) {
      throw InfeasibleError("degree " + std::to_string(d_[i]) + " of vertex " +
                            std::to_string(i + 1) + " outside [0," +
                            std::to_string(n - 1) + "]");
    }
    total += d_[i];
  }
  if (total % 2 != 0) {
    throw InfeasibleError("degree sum " + std::to_string(total) + " is odd");
  }
}

int DegreeVector::sum() const noexcept {
  int s = 0;
  for (int x : d_) s += x;
  return s;
}

std::vector<int> DegreeVector::sorted() const {
  std::vector<int> s = d_;
  std::sort(s.begin(), s.end(), std::greater<>());
  return s;
}

bool DegreeVector::is_graphical() const {
  const std::vector<int> s = sorted();
  const int n = order();
  long left = 0;
  for (int k = 1; k <= n; ++k) {
    left += s[k - 1];
    long right = static_cast<long>(k) * (k - 1);
    for (int i = k; i < n; ++i) right += std::min(s[i], k);
    if (left > right) return false;
  }
  return sum() % 2 == 0;
}

std::string DegreeVector::to_expression() const {
  const std::vector<int> s = sorted();
  std::ostringstream out;
  for (std::size_t i = 0; i < s.size();) {
    std::size_t j = i;
    while (j < s.size() && s[j] == s[i]) ++j;
    if (i != 0) out << ',';
    out << s[i] << '^' << (j - i);
    i = j;
  }
  return out.str();
}

DegreeVector degree_vector(const LabeledGraph& g) {
  std::vector<int> d(static_cast<std::size_t>(g.order()));
  for (Vertex v = 1; v <= g.order(); ++v) d[v - 1] = g.degree(v);
  return DegreeVector(std::move(d));
}

// ---------------------------------------------------------------------------
// Structure

VertexSet component_of(const LabeledGraph& g, Vertex v) {
  VertexSet comp = vertex_bit(v);
  VertexSet frontier = comp;
  while (frontier != 0) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](Vertex u) { next |= g.neighbors(u); });
    frontier = next & ~comp;
    comp |= frontier;
  }
  return comp;
}

std::vector<VertexSet> components(const LabeledGraph& g) {
  std::vector<VertexSet> out;
  VertexSet remaining = g.vertices();
  while (remaining != 0) {
    VertexSet comp = component_of(g, lowest(remaining));
    out.push_back(comp);
    remaining &= ~comp;
  }
  return out;
}

int components_count(const LabeledGraph& g) {
  int count = 0;
  VertexSet remaining = g.vertices();
  while (remaining != 0) {
    remaining &= ~component_of(g, lowest(remaining));
    ++count;
  }
  return count;
}

bool is_connected(const LabeledGraph& g) { return components_count(g) <= 1; }

VertexSet isolated_vertices(const LabeledGraph& g) {
  VertexSet s = 0;
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (g.neighbors(v) == 0) s |= vertex_bit(v);
  }
  return s;
}

namespace {

struct ComponentShape {
  int vertices = 0;
  int edges = 0;
  bool bipartite = true;
};

ComponentShape shape_of(const LabeledGraph& g, VertexSet comp, bool want_bipartite) {
  ComponentShape shape;
  shape.vertices = popcount(comp);
  int degree_sum = 0;
  for_each_vertex(comp, [&](Vertex v) { degree_sum += g.degree(v); });
  shape.edges = degree_sum / 2;
  if (want_bipartite && shape.edges >= shape.vertices) {
    // Layered BFS: a component is bipartite iff no edge joins two vertices of
    // equal layer parity.
    VertexSet side[2] = {0, 0};
    VertexSet seen = vertex_bit(lowest(comp));
    VertexSet frontier = seen;
    int parity = 0;
    while (frontier != 0) {
      side[parity] |= frontier;
      VertexSet next = 0;
      for_each_vertex(frontier, [&](Vertex u) { next |= g.neighbors(u); });
      frontier = next & ~seen;
      seen |= frontier;
      parity ^= 1;
    }
    for (int p = 0; p < 2 && shape.bipartite; ++p) {
      for_each_vertex(side[p], [&](Vertex v) {
        if (g.neighbors(v) & side[p]) shape.bipartite = false;
      });
    }
  }
  return shape;
}

}  // namespace

StructuralClass structural_class(const LabeledGraph& g) {
  StructuralClass sc;
  sc.is_bipartite = true;
  int max_rank = 0;
  VertexSet remaining = g.vertices();
  while (remaining != 0) {
    VertexSet comp = component_of(g, lowest(remaining));
    remaining &= ~comp;
    ++sc.kappa;
    ComponentShape shape = shape_of(g, comp, true);
    // Forests are always bipartite; only cyclic components need coloring.
    sc.is_bipartite = sc.is_bipartite && shape.bipartite;
    max_rank = std::max(max_rank, shape.edges - shape.vertices + 1);
  }
  sc.cyclicity = max_rank == 0   ? Cyclicity::zero
                 : max_rank == 1 ? Cyclicity::one
                                 : Cyclicity::at_least_two;
  sc.is_forest = max_rank == 0;
  sc.is_pseudoforest = max_rank <= 1;
  sc.is_tree = sc.is_forest && sc.kappa == 1;
  sc.is_unicyclic = sc.kappa == 1 && max_rank == 1;
  return sc;
}

bool is_forest(const LabeledGraph& g) {
  return g.size() == g.order() - components_count(g);
}

bool is_pseudoforest(const LabeledGraph& g) {
  VertexSet remaining = g.vertices();
  while (remaining != 0) {
    VertexSet comp = component_of(g, lowest(remaining));
    remaining &= ~comp;
    ComponentShape shape = shape_of(g, comp, false);
    if (shape.edges > shape.vertices) return false;
  }
  return true;
}

bool is_bipartite(const LabeledGraph& g) { return structural_class(g).is_bipartite; }

VertexSet two_core(const LabeledGraph& g) {
  VertexSet core = g.vertices();
  bool changed = true;
  while (changed) {
    changed = false;
    for_each_vertex(core, [&](Vertex v) {
      if (popcount(g.neighbors(v) & core) <= 1) {
        core &= ~vertex_bit(v);
        changed = true;
      }
    });
  }
  return core;
}

CycForDecomposition cyc_for(const LabeledGraph& g) {
  if (!is_pseudoforest(g)) {
    throw PreconditionError("Cyc/For decomposition needs a pseudoforest");
  }
  CycForDecomposition out;
  out.cyc_vertices = two_core(g);
  g.for_each_edge([&](Edge e) {
    if (out.is_cycle_edge(e)) {
      out.cyc_edges.push_back(e);
    } else {
      out.for_edges.push_back(e);
    }
  });
  VertexSet remaining = out.cyc_vertices;
  while (remaining != 0) {
    remaining &= ~component_of(g, lowest(remaining));
    ++out.cycle_count;
  }
  return out;
}

int zeta(const LabeledGraph& g) {
  const CycForDecomposition cf = cyc_for(g);
  return components_count(g) - cf.cycle_count;
}

std::vector<int> bfs_distances(const LabeledGraph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  VertexSet seen = vertex_bit(source);
  VertexSet frontier = seen;
  int level = 0;
  while (frontier != 0) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](Vertex u) {
      dist[u - 1] = level;
      next |= g.neighbors(u);
    });
    frontier = next & ~seen;
    seen |= frontier;
    ++level;
  }
  return dist;
}

int diameter(const LabeledGraph& g) {
  if (g.order() == 0 || !is_connected(g)) {
    throw PreconditionError("diameter needs a connected graph");
  }
  int best = 0;
  for (Vertex v = 1; v <= g.order(); ++v) {
    for (int d : bfs_distances(g, v)) best = std::max(best, d);
  }
  return best;
}

std::vector<Vertex> forest_path(const LabeledGraph& forest, Vertex u, Vertex v) {
  std::array<Vertex, kMaxVertices + 1> parent{};
  parent[u] = u;
  VertexSet seen = vertex_bit(u);
  VertexSet frontier = seen;
  while (frontier != 0 && !(seen & vertex_bit(v))) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](Vertex x) {
      VertexSet fresh = forest.neighbors(x) & ~seen & ~next;
      for_each_vertex(fresh, [&](Vertex y) { parent[y] = x; });
      next |= fresh;
    });
    seen |= next;
    frontier = next;
  }
  if (!(seen & vertex_bit(v))) return {};
  std::vector<Vertex> path{v};
  while (path.back() != u) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace switchlab
