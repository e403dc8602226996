#ifndef NSP_GRAPH_HPP
#define NSP_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "nsp/errors.hpp"

namespace nsp {

/// Bitmask over vertex indices 0..63.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }
inline constexpr VertexSet prefix_mask(int n) { return n >= 64 ? ~VertexSet{0} : bit(n) - 1; }
inline int count(VertexSet s) { return std::popcount(s); }
inline int lowest(VertexSet s) { return std::countr_zero(s); }

template <typename F>
void for_each_vertex(VertexSet s, F&& f) {
  while (s != 0) {
    f(lowest(s));
    s &= s - 1;
  }
}

inline std::vector<int> to_vector(VertexSet s) {
  std::vector<int> out;
  for_each_vertex(s, [&](int v) { out.push_back(v); });
  return out;
}

inline VertexSet to_set(const std::vector<int>& vs) {
  VertexSet s = 0;
  for (int v : vs) s |= bit(v);
  return s;
}

/// Unordered vertex pair, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : adj_(check_order(n), 0) {}

  Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (const Edge& e : edges) add_edge(e.u, e.v);
  }

  int order() const { return static_cast<int>(adj_.size()); }

  int size() const {
    int twice = 0;
    for (VertexSet a : adj_) twice += count(a);
    return twice / 2;
  }

  VertexSet vertices() const { return prefix_mask(order()); }
  VertexSet neighbors(int v) const { return adj_[check_vertex(v)]; }
  int degree(int v) const { return count(neighbors(v)); }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    return u != v && (adj_[u] & bit(check_vertex(v))) != 0;
  }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InvalidArgument("self-loop " + std::to_string(u) + " rejected");
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }

  void remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[u] &= ~bit(v);
    adj_[v] &= ~bit(u);
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u)
      for_each_vertex(adj_[u] & ~prefix_mask(u + 1), [&](int v) { out.emplace_back(u, v); });
    return out;
  }

  std::vector<Edge> non_edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u)
      for_each_vertex(~adj_[u] & vertices() & ~prefix_mask(u + 1), [&](int v) { out.emplace_back(u, v); });
    return out;
  }

  const std::vector<VertexSet>& adjacency() const { return adj_; }

  /// Optional vertex names for reports; empty or one per vertex.
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && static_cast<int>(labels.size()) != order())
      throw InvalidArgument("label count does not match order");
    labels_ = std::move(labels);
  }
  std::string label(int v) const {
    check_vertex(v);
    return labels_.empty() ? std::to_string(v) : labels_[v];
  }
  int find_label(const std::string& name) const {
    for (int v = 0; v < static_cast<int>(labels_.size()); ++v)
      if (labels_[v] == name) return v;
    throw InvalidArgument("no vertex labelled '" + name + "'");
  }

  /// Structural equality; labels are ignored.
  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  static std::size_t check_order(int n) {
    if (n < 0) throw InvalidArgument("negative order");
    if (n > kMaxVertices) throw TooLarge("graphs are limited to 64 vertices");
    return static_cast<std::size_t>(n);
  }

  int check_vertex(int v) const {
    if (v < 0 || v >= order()) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    return v;
  }

  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

inline Graph complement(const Graph& g) {
  Graph out(g.order());
  for (const Edge& e : g.non_edges()) out.add_edge(e.u, e.v);
  out.set_labels(g.labels());
  return out;
}

/// Graph sum G+H: disjoint union plus every edge between the two vertex sets.
/// Vertices of h are shifted by g.order().
inline Graph join(const Graph& g, const Graph& h) {
  const int n = g.order();
  Graph out(n + h.order());
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : h.edges()) out.add_edge(e.u + n, e.v + n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < h.order(); ++v) out.add_edge(u, n + v);
  if (!g.labels().empty() || !h.labels().empty()) {
    std::vector<std::string> labels;
    for (int v = 0; v < g.order(); ++v) labels.push_back(g.label(v));
    for (int v = 0; v < h.order(); ++v) labels.push_back(h.label(v));
    out.set_labels(std::move(labels));
  }
  return out;
}

inline Graph disjoint_union(const Graph& g, const Graph& h) {
  const int n = g.order();
  Graph out(n + h.order());
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  for (const Edge& e : h.edges()) out.add_edge(e.u + n, e.v + n);
  return out;
}

/// Subgraph induced by `keep`; vertices are renumbered in increasing order.
inline Graph induced_subgraph(const Graph& g, VertexSet keep) {
  keep &= g.vertices();
  const std::vector<int> kept = to_vector(keep);
  std::vector<int> index(g.order(), -1);
  for (int i = 0; i < static_cast<int>(kept.size()); ++i) index[kept[i]] = i;
  Graph out(static_cast<int>(kept.size()));
  for (const Edge& e : g.edges())
    if (index[e.u] >= 0 && index[e.v] >= 0) out.add_edge(index[e.u], index[e.v]);
  if (!g.labels().empty()) {
    std::vector<std::string> labels;
    for (int v : kept) labels.push_back(g.label(v));
    out.set_labels(std::move(labels));
  }
  return out;
}

inline Graph delete_vertices(const Graph& g, VertexSet removed) {
  return induced_subgraph(g, g.vertices() & ~removed);
}

inline Graph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
  return delete_vertices(g, bit(v));
}

inline Graph with_edge(const Graph& g, Edge e) {
  Graph out = g;
  out.add_edge(e.u, e.v);
  return out;
}

inline Graph without_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) throw InvalidArgument("not an edge");
  Graph out = g;
  out.remove_edge(e.u, e.v);
  return out;
}

/// Contracts edge e. The merged vertex keeps index e.u; e.v is removed and
/// later vertices shift down by one. Parallel edges merge.
inline Graph contract_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v))
    throw InvalidArgument("cannot contract non-edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
  Graph merged = g;
  for_each_vertex(g.neighbors(e.v) & ~bit(e.u), [&](int w) { merged.add_edge(e.u, w); });
  return delete_vertex(merged, e.v);
}

/// Relabels so vertex v becomes perm[v].
inline Graph permute(const Graph& g, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw InvalidArgument("permutation size mismatch");
  Graph out(g.order());
  for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
  return out;
}

/// Vertices reachable from `start` inside `within`.
inline VertexSet reach(const Graph& g, int start, VertexSet within) {
  VertexSet seen = bit(start) & within;
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

inline bool is_connected_set(const Graph& g, VertexSet s) {
  if (s == 0) return false;
  return reach(g, lowest(s), s) == s;
}

inline bool is_connected(const Graph& g) { return g.order() <= 1 || is_connected_set(g, g.vertices()); }

inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices();
  while (left != 0) {
    VertexSet c = reach(g, lowest(left), left);
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

inline VertexSet isolated_vertices(const Graph& g) {
  VertexSet s = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.neighbors(v) == 0) s |= bit(v);
  return s;
}

inline int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

inline std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(g.order());
  for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.rbegin(), d.rend());
  return d;
}

/// Vertices adjacent to every other vertex.
inline VertexSet cone_vertices(const Graph& g) {
  VertexSet s = 0;
  for (int v = 0; v < g.order(); ++v)
    if ((g.neighbors(v) | bit(v)) == g.vertices()) s |= bit(v);
  return s;
}

}  // namespace nsp

#endif  // NSP_GRAPH_HPP
