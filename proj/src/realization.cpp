#include "switchlab/realization.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>

namespace switchlab {

const char* to_string(Filter f) noexcept {
  switch (f) {
    case Filter::all: return "all";
    case Filter::forest: return "forest";
    case Filter::connected: return "connected";
    case Filter::unicyclic: return "unicyclic";
    case Filter::pseudoforest: return "pseudoforest";
    case Filter::bipartite: return "bipartite";
    case Filter::nonbipartite: return "nonbipartite";
  }
  return "all";
}

Filter parse_filter(std::string_view name) {
  for (Filter f : {Filter::all, Filter::forest, Filter::connected, Filter::unicyclic,
                   Filter::pseudoforest, Filter::bipartite, Filter::nonbipartite}) {
    if (name == to_string(f)) return f;
  }
  throw ParseError("unknown filter '" + std::string(name) + "'");
}

bool satisfies(const LabeledGraph& g, Filter f) {
  switch (f) {
    case Filter::all: return true;
    case Filter::forest: return is_forest(g);
    case Filter::connected: return is_connected(g);
    case Filter::unicyclic: return structural_class(g).is_unicyclic;
    case Filter::pseudoforest: return is_pseudoforest(g);
    case Filter::bipartite: return structural_class(g).is_bipartite;
    case Filter::nonbipartite: return !structural_class(g).is_bipartite;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

enum class Prune { none, forest, pseudoforest, bipartite };

Prune prune_for(Filter f) {
  switch (f) {
    case Filter::forest: return Prune::forest;
    case Filter::unicyclic:
    case Filter::pseudoforest: return Prune::pseudoforest;
    case Filter::bipartite: return Prune::bipartite;
    default: return Prune::none;
  }
}

// Union-find over the partial graph, copied by value down the recursion.
// `mark` is a cycle flag per root (pseudoforest pruning) or the parity of a
// vertex relative to its parent (bipartite pruning).
struct Components {
  std::array<std::int8_t, kMaxVertices + 1> parent{};
  std::array<std::uint8_t, kMaxVertices + 1> mark{};

  explicit Components(int n) {
    for (int v = 0; v <= n; ++v) parent[v] = static_cast<std::int8_t>(v);
  }

  std::pair<int, int> find(int v) const {
    int parity = 0;
    while (parent[v] != v) {
      parity ^= mark[v];
      v = parent[v];
    }
    return {v, parity};
  }

  // False when adding edge uv violates the pruned family.
  bool join(int u, int v, Prune prune) {
    auto [ru, pu] = find(u);
    auto [rv, pv] = find(v);
    switch (prune) {
      case Prune::none: return true;
      case Prune::forest:
        if (ru == rv) return false;
        parent[ru] = static_cast<std::int8_t>(rv);
        return true;
      case Prune::pseudoforest:
        if (ru == rv) {
          if (mark[ru]) return false;
          mark[ru] = 1;
          return true;
        }
        if (mark[ru] && mark[rv]) return false;
        parent[ru] = static_cast<std::int8_t>(rv);
        mark[rv] = static_cast<std::uint8_t>(mark[rv] | mark[ru]);
        return true;
      case Prune::bipartite:
        if (ru == rv) return pu != pv;
        parent[ru] = static_cast<std::int8_t>(rv);
        mark[ru] = static_cast<std::uint8_t>(pu ^ pv ^ 1);
        return true;
    }
    return true;
  }
};

class Enumerator {
 public:
  Enumerator(const DegreeVector& d, Filter filter, std::size_t budget)
      : n_(d.order()), filter_(filter), prune_(prune_for(filter)), budget_(budget) {
    for (Vertex v = 1; v <= n_; ++v) residual_[v] = d[v];
  }

  std::vector<LabeledGraph> run() {
    place(1, Components(n_));
    std::sort(out_.begin(), out_.end());
    return std::move(out_);
  }

 private:
  VertexSet positive_after(Vertex v) const {
    VertexSet s = 0;
    for (Vertex w = v + 1; w <= n_; ++w) {
      if (residual_[w] > 0) s |= vertex_bit(w);
    }
    return s;
  }

  void place(Vertex v, const Components& comps) {
    if (v > n_) {
      emit();
      return;
    }
    if (residual_[v] == 0) {
      place(v + 1, comps);
      return;
    }
    choose(v, positive_after(v), residual_[v], comps);
  }

  void choose(Vertex v, VertexSet candidates, int need, const Components& comps) {
    if (need == 0) {
      // Each later vertex must still find enough later partners.
      const VertexSet later = positive_after(v);
      const int pool = popcount(later);
      bool feasible = true;
      for_each_vertex(later, [&](Vertex w) {
        if (residual_[w] > pool - 1) feasible = false;
      });
      if (feasible) place(v + 1, comps);
      return;
    }
    if (popcount(candidates) < need) return;
    const Vertex w = lowest(candidates);
    const VertexSet rest = candidates & ~vertex_bit(w);

    Components joined = comps;
    if (joined.join(v, w, prune_)) {
      rows_[v - 1] |= vertex_bit(w);
      rows_[w - 1] |= vertex_bit(v);
      --residual_[w];
      choose(v, rest, need - 1, joined);
      ++residual_[w];
      rows_[v - 1] &= ~vertex_bit(w);
      rows_[w - 1] &= ~vertex_bit(v);
    }
    choose(v, rest, need, comps);
  }

  void emit() {
    LabeledGraph g = LabeledGraph::from_rows(
        n_, std::span<const VertexSet>(rows_.data(), static_cast<std::size_t>(n_)));
    if (!satisfies(g, filter_)) return;
    if (out_.size() >= budget_) {
      throw BudgetError("more than " + std::to_string(budget_) + " realizations");
    }
    out_.push_back(g);
  }

  int n_;
  Filter filter_;
  Prune prune_;
  std::size_t budget_;
  std::array<int, kMaxVertices + 1> residual_{};
  std::array<VertexSet, kMaxVertices> rows_{};
  std::vector<LabeledGraph> out_;
};

}  // namespace

std::vector<LabeledGraph> enumerate_realizations(const DegreeVector& d, Filter filter,
                                                 std::size_t budget) {
  if (d.sum() % 2 != 0) throw InfeasibleError("degree sum is odd");
  if (!d.is_graphical()) return {};
  return Enumerator(d, filter, budget).run();
}

// ---------------------------------------------------------------------------
// Realization graph

RealizationGraph::RealizationGraph(DegreeVector degree, Filter filter,
                                   std::vector<LabeledGraph> vertices)
    : degree_(std::move(degree)), filter_(filter), vertices_(std::move(vertices)) {
  index_.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    index_.emplace(vertices_[i], static_cast<std::uint32_t>(i));
  }
  offsets_.reserve(vertices_.size() + 1);
  offsets_.push_back(0);
  std::vector<Arc> local;
  for (const LabeledGraph& g : vertices_) {
    local.clear();
    for_each_switch(g, [&](const TwoSwitch& s) {
      auto it = index_.find(apply(g, s));
      if (it != index_.end()) local.push_back(Arc{it->second, s});
    });
    std::sort(local.begin(), local.end(),
              [](const Arc& x, const Arc& y) { return x.target < y.target; });
    arcs_.insert(arcs_.end(), local.begin(), local.end());
    offsets_.push_back(arcs_.size());
  }
}

std::optional<std::size_t> RealizationGraph::find(const LabeledGraph& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t RealizationGraph::id_of(const LabeledGraph& g) const {
  if (auto id = find(g)) return *id;
  throw MembershipError("graph is not a vertex of the realization graph");
}

RealizationGraph build_realization_graph(const DegreeVector& d, Filter filter,
                                         std::size_t budget) {
  return RealizationGraph(d, filter, enumerate_realizations(d, filter, budget));
}

std::vector<std::uint32_t> component_ids(const RealizationGraph& rg) {
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> comp(rg.vertex_count(), kUnset);
  std::uint32_t next = 0;
  std::vector<std::uint32_t> stack;
  for (std::size_t s = 0; s < rg.vertex_count(); ++s) {
    if (comp[s] != kUnset) continue;
    comp[s] = next;
    stack.push_back(static_cast<std::uint32_t>(s));
    while (!stack.empty()) {
      const std::uint32_t x = stack.back();
      stack.pop_back();
      for (const Arc& a : rg.arcs(x)) {
        if (comp[a.target] == kUnset) {
          comp[a.target] = next;
          stack.push_back(a.target);
        }
      }
    }
    ++next;
  }
  return comp;
}

std::vector<int> distances_from(const RealizationGraph& rg, std::size_t source) {
  std::vector<int> dist(rg.vertex_count(), -1);
  std::vector<std::uint32_t> queue{static_cast<std::uint32_t>(source)};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t x = queue[head];
    for (const Arc& a : rg.arcs(x)) {
      if (dist[a.target] < 0) {
        dist[a.target] = dist[x] + 1;
        queue.push_back(a.target);
      }
    }
  }
  return dist;
}

ExplorationReport connectivity(const RealizationGraph& rg, bool with_diameter) {
  ExplorationReport report;
  report.vertex_count = rg.vertex_count();
  report.edge_count = rg.edge_count();
  const std::vector<std::uint32_t> comp = component_ids(rg);
  std::vector<std::size_t> sizes;
  for (std::uint32_t c : comp) {
    if (c >= sizes.size()) sizes.resize(c + 1, 0);
    ++sizes[c];
  }
  report.component_count = sizes.size();
  if (with_diameter && !sizes.empty()) {
    const auto largest = static_cast<std::uint32_t>(
        std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
    int diam = 0;
    for (std::size_t v = 0; v < comp.size(); ++v) {
      if (comp[v] != largest) continue;
      for (int d : distances_from(rg, v)) diam = std::max(diam, d);
    }
    report.diameter_of_largest = diam;
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  report.component_sizes = std::move(sizes);
  return report;
}

std::optional<int> distance(const RealizationGraph& rg, const LabeledGraph& g,
                            const LabeledGraph& h) {
  const std::size_t from = rg.id_of(g);
  const std::size_t to = rg.id_of(h);
  const int d = distances_from(rg, from)[to];
  if (d < 0) return std::nullopt;
  return d;
}

// ---------------------------------------------------------------------------
// Constructions

Counterexample parse_counterexample(std::string_view name) {
  if (name == "B") return Counterexample::B;
  if (name == "Bprime") return Counterexample::Bprime;
  if (name == "N") return Counterexample::N;
  if (name == "Nprime") return Counterexample::Nprime;
  throw ParseError("unknown construction '" + std::string(name) +
                   "' (expected B, Bprime, N or Nprime)");
}

const char* to_string(Counterexample c) noexcept {
  switch (c) {
    case Counterexample::B: return "B";
    case Counterexample::Bprime: return "Bprime";
    case Counterexample::N: return "N";
    case Counterexample::Nprime: return "Nprime";
  }
  return "B";
}

LabeledGraph construct_counterexample(Counterexample which, int parameter) {
  std::vector<Edge> edges;
  switch (which) {
    case Counterexample::B:
    case Counterexample::Bprime: {
      const int n = parameter;
      if (n < 3) throw RangeError("B and Bprime need n >= 3");
      if (2 * n + 2 > kMaxVertices) throw RangeError("B(n) exceeds the vertex cap");
      // The two leaf carriers are vertices 1 and 2; B puts them on opposite
      // sides of K_{n,n}, Bprime on the same side.
      std::vector<Vertex> x{1};
      std::vector<Vertex> y;
      if (which == Counterexample::B) {
        y.push_back(2);
        for (Vertex v = 3; v <= n + 1; ++v) x.push_back(v);
        for (Vertex v = n + 2; v <= 2 * n; ++v) y.push_back(v);
      } else {
        for (Vertex v = 2; v <= n; ++v) x.push_back(v);
        for (Vertex v = n + 1; v <= 2 * n; ++v) y.push_back(v);
      }
      for (Vertex u : x) {
        for (Vertex v : y) edges.push_back(make_edge(u, v));
      }
      edges.push_back(Edge{1, 2 * n + 1});
      edges.push_back(Edge{2, 2 * n + 2});
      return LabeledGraph::from_edges(2 * n + 2, edges);
    }
    case Counterexample::N:
    case Counterexample::Nprime: {
      const int k = parameter;
      if (k < 4) throw RangeError("N and Nprime need k >= 4");
      if (k + 3 > kMaxVertices) throw RangeError("N(k) exceeds the vertex cap");
      if (which == Counterexample::N) {
        // Star center 1, triangle {2,3,4}, star leaves 5..k+3.
        edges = {{2, 3}, {2, 4}, {3, 4}};
        for (Vertex v = 5; v <= k + 3; ++v) edges.push_back(Edge{1, v});
      } else {
        // Triangle {1,2,3} with leaves 5..k+1 on 1, path (k+2)-4-(k+3).
        edges = {{1, 2}, {1, 3}, {2, 3}};
        for (Vertex v = 5; v <= k + 1; ++v) edges.push_back(Edge{1, v});
        edges.push_back(Edge{4, k + 2});
        edges.push_back(Edge{4, k + 3});
      }
      return LabeledGraph::from_edges(k + 3, edges);
    }
  }
  throw RangeError("unknown construction");
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

// Joint color refinement so that colors are comparable across both graphs.
bool refine(const LabeledGraph& g, const LabeledGraph& h, std::vector<int>& cg,
            std::vector<int>& ch) {
  const int n = g.order();
  cg.assign(static_cast<std::size_t>(n) + 1, 0);
  ch.assign(static_cast<std::size_t>(n) + 1, 0);
  for (Vertex v = 1; v <= n; ++v) {
    cg[v] = g.degree(v);
    ch[v] = h.degree(v);
  }
  std::size_t classes = 0;
  for (;;) {
    std::map<std::vector<int>, int> palette;
    auto signature = [](const LabeledGraph& x, const std::vector<int>& c, Vertex v) {
      std::vector<int> sig{c[v]};
      for_each_vertex(x.neighbors(v), [&](Vertex w) { sig.push_back(c[w]); });
      std::sort(sig.begin() + 1, sig.end());
      return sig;
    };
    std::vector<std::vector<int>> sg(n + 1), sh(n + 1);
    for (Vertex v = 1; v <= n; ++v) {
      sg[v] = signature(g, cg, v);
      sh[v] = signature(h, ch, v);
      palette.emplace(sg[v], 0);
      palette.emplace(sh[v], 0);
    }
    int next = 0;
    for (auto& [sig, color] : palette) color = next++;
    std::vector<int> hist_g(palette.size(), 0), hist_h(palette.size(), 0);
    for (Vertex v = 1; v <= n; ++v) {
      cg[v] = palette[sg[v]];
      ch[v] = palette[sh[v]];
      ++hist_g[cg[v]];
      ++hist_h[ch[v]];
    }
    if (hist_g != hist_h) return false;
    if (palette.size() == classes) return true;
    classes = palette.size();
  }
}

bool extend(const LabeledGraph& g, const LabeledGraph& h, const std::vector<int>& cg,
            const std::vector<int>& ch, const std::vector<Vertex>& order,
            std::size_t depth, std::array<Vertex, kMaxVertices + 1>& map,
            VertexSet used) {
  if (depth == order.size()) return true;
  const Vertex v = order[depth];
  for (Vertex w = 1; w <= h.order(); ++w) {
    if ((used & vertex_bit(w)) || ch[w] != cg[v]) continue;
    bool consistent = true;
    for (std::size_t i = 0; i < depth && consistent; ++i) {
      const Vertex u = order[i];
      consistent = g.has_edge(u, v) == h.has_edge(map[u], w);
    }
    if (!consistent) continue;
    map[v] = w;
    if (extend(g, h, cg, ch, order, depth + 1, map, used | vertex_bit(w))) return true;
  }
  return false;
}

}  // namespace

bool are_isomorphic(const LabeledGraph& g, const LabeledGraph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  if (degree_vector(g).sorted() != degree_vector(h).sorted()) return false;
  std::vector<int> cg, ch;
  if (!refine(g, h, cg, ch)) return false;
  // Map rare colors first; within a color, by label.
  std::vector<int> class_size(static_cast<std::size_t>(g.order()) + 1, 0);
  for (Vertex v = 1; v <= g.order(); ++v) ++class_size[cg[v]];
  std::vector<Vertex> order;
  for (Vertex v = 1; v <= g.order(); ++v) order.push_back(v);
  std::stable_sort(order.begin(), order.end(), [&](Vertex x, Vertex y) {
    return std::pair(class_size[cg[x]], cg[x]) < std::pair(class_size[cg[y]], cg[y]);
  });
  std::array<Vertex, kMaxVertices + 1> map{};
  return extend(g, h, cg, ch, order, 0, map, 0);
}

std::vector<DegreeVector> graphical_degree_vectors(int n) {
  std::vector<DegreeVector> out;
  if (n < 0 || n > kMaxVertices) throw RangeError("vertex count outside the cap");
  std::vector<int> d(static_cast<std::size_t>(n), 0);
  // Odometer over [0, n-1]^n in lexicographic order.
  for (;;) {
    int total = 0;
    for (int x : d) total += x;
    if (total % 2 == 0) {
      DegreeVector candidate(d);
      if (candidate.is_graphical()) out.push_back(std::move(candidate));
    }
    int i = n - 1;
    while (i >= 0 && d[i] == n - 1) d[i--] = 0;
    if (i < 0) break;
    ++d[i];
  }
  return out;
}

}  // namespace switchlab
