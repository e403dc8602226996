#ifndef NSP_SUBGRAPH_HPP
#define NSP_SUBGRAPH_HPP

#include <optional>
#include <vector>

#include "nsp/graph.hpp"

namespace nsp {

namespace detail {

/// Pattern order: highest degree first, then the vertex with the most
/// already-placed neighbours, so candidate sets shrink early.
inline std::vector<int> pattern_order(const Graph& p) {
  std::vector<int> order;
  VertexSet placed = 0;
  while (static_cast<int>(order.size()) < p.order()) {
    int best = -1;
    int best_links = -1;
    int best_deg = -1;
    for (int v = 0; v < p.order(); ++v) {
      if (placed & bit(v)) continue;
      const int links = count(p.neighbors(v) & placed);
      const int deg = p.degree(v);
      if (links > best_links || (links == best_links && deg > best_deg)) {
        best = v;
        best_links = links;
        best_deg = deg;
      }
    }
    order.push_back(best);
    placed |= bit(best);
  }
  return order;
}

class SubgraphMatcher {
 public:
  SubgraphMatcher(const Graph& pattern, const std::vector<VertexSet>& host_adj)
      : p_(pattern), adj_(host_adj), order_(pattern_order(pattern)), image_(pattern.order(), -1) {
    host_deg_.resize(adj_.size());
    for (std::size_t v = 0; v < adj_.size(); ++v) host_deg_[v] = count(adj_[v]);
  }

  std::optional<std::vector<int>> run() {
    if (p_.order() > static_cast<int>(adj_.size())) return std::nullopt;
    // Sorted-degree domination is necessary for an injective homomorphism.
    std::vector<int> pd = degree_sequence(p_);
    std::vector<int> hd = host_deg_;
    std::sort(hd.rbegin(), hd.rend());
    for (std::size_t i = 0; i < pd.size(); ++i)
      if (pd[i] > hd[i]) return std::nullopt;
    if (extend(0, 0)) return image_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t depth, VertexSet used) {
    if (depth == order_.size()) return true;
    const int x = order_[depth];
    VertexSet cand = (adj_.size() >= 64 ? ~VertexSet{0} : bit(static_cast<int>(adj_.size())) - 1) & ~used;
    for_each_vertex(p_.neighbors(x), [&](int y) {
      if (image_[y] >= 0) cand &= adj_[image_[y]];
    });
    const int need = p_.degree(x);
    while (cand != 0) {
      const int v = lowest(cand);
      cand &= cand - 1;
      if (host_deg_[v] < need) continue;
      image_[x] = v;
      if (extend(depth + 1, used | bit(v))) return true;
      image_[x] = -1;
    }
    return false;
  }

  const Graph& p_;
  const std::vector<VertexSet>& adj_;
  std::vector<int> order_;
  std::vector<int> image_;
  std::vector<int> host_deg_;
};

}  // namespace detail

/// Injective map f with uv in E(pattern) => f(u)f(v) in E(host), if any.
inline std::optional<std::vector<int>> find_subgraph(const Graph& pattern, const Graph& host) {
  return detail::SubgraphMatcher(pattern, host.adjacency()).run();
}

inline bool is_subgraph_embedding(const Graph& pattern, const Graph& host, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != pattern.order()) return false;
  VertexSet used = 0;
  for (int v : f) {
    if (v < 0 || v >= host.order() || (used & bit(v))) return false;
    used |= bit(v);
  }
  for (const Edge& e : pattern.edges())
    if (!host.has_edge(f[e.u], f[e.v])) return false;
  return true;
}

}  // namespace nsp

#endif  // NSP_SUBGRAPH_HPP
