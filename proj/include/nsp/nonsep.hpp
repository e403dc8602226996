#ifndef NSP_NONSEP_HPP
#define NSP_NONSEP_HPP

// Non-separating planar graphs, recognised through the three-way split into
// outerplanar graphs, subgraphs of a wheel and subgraphs of an elongated
// triangular prism. The wheel and prism branches carry an explicit embedding
// into a host graph so the verdict can be re-checked without the search.

#include <optional>
#include <string>
#include <vector>

#include "nsp/families.hpp"
#include "nsp/graph.hpp"
#include "nsp/planarity.hpp"
#include "nsp/subgraph.hpp"

namespace nsp {

inline constexpr int kNonsepMaxOrder = 14;

enum class NonsepKind { Outerplanar, WheelSubgraph, PrismSubgraph, NotNonseparating };

inline std::string to_string(NonsepKind k) {
  switch (k) {
    case NonsepKind::Outerplanar: return "Outerplanar";
    case NonsepKind::WheelSubgraph: return "WheelSubgraph";
    case NonsepKind::PrismSubgraph: return "PrismSubgraph";
    case NonsepKind::NotNonseparating: return "NotNonseparating";
  }
  return "?";
}

struct NonsepClassification {
  NonsepKind kind = NonsepKind::NotNonseparating;
  OuterplanarityResult outer;  // always filled; the certificate for Outerplanar
  int hub = -1;                // WheelSubgraph
  std::optional<FamilySpec> host;  // wheel or prism the graph embeds into
  std::vector<int> embedding;      // vertex of g -> vertex of host
};

struct NonsepOptions {
  /// Host prisms may have up to this many more vertices than g.
  int prism_slack = 3;
};

namespace detail {

/// Rim order for a wheel on g's vertices with the given hub, if g - hub is a
/// linear forest or a spanning cycle.
inline std::optional<std::vector<int>> rim_order(const Graph& g, int hub) {
  const VertexSet rest = g.vertices() & ~bit(hub);
  const Graph r = induced_subgraph(g, rest);
  std::vector<int> order;
  std::vector<int> back;  // index in r -> index in g
  for_each_vertex(rest, [&](int v) { back.push_back(v); });
  if (is_linear_forest(r)) {
    for (VertexSet c : components(r)) {
      int start = lowest(c);  // any path has an end of degree <= 1
      for_each_vertex(c, [&](int v) {
        if (r.degree(v) < r.degree(start)) start = v;
      });
      int prev = -1;
      for (int cur = start; cur >= 0;) {
        order.push_back(back[cur]);
        const VertexSet nxt = r.neighbors(cur) & ~(prev >= 0 ? bit(prev) : 0);
        prev = cur;
        cur = nxt ? lowest(nxt) : -1;
      }
    }
    return order;
  }
  const bool cycle = r.order() >= 3 && is_connected(r) && r.size() == r.order() && max_degree(r) == 2;
  if (!cycle) return std::nullopt;
  int prev = -1;
  int cur = 0;
  do {
    order.push_back(back[cur]);
    const VertexSet nxt = r.neighbors(cur) & ~(prev >= 0 ? bit(prev) : 0);
    prev = cur;
    cur = lowest(nxt);
  } while (cur != 0);
  return order;
}

}  // namespace detail

/// First matching branch in the order outerplanar, wheel, prism.
inline NonsepClassification classify_nonseparating(const Graph& g, NonsepOptions opt = {}) {
  const int n = g.order();
  if (n > kNonsepMaxOrder) throw TooLarge("non-separating classification limited to 14 vertices");
  NonsepClassification c;
  c.outer = is_outerplanar(g);
  if (c.outer.outerplanar) {
    c.kind = NonsepKind::Outerplanar;
    return c;
  }

  // Outerplanarity already covers every graph on three or fewer vertices.
  for (int hub = 0; hub < n; ++hub) {
    auto rim = detail::rim_order(g, hub);
    if (!rim) continue;
    c.kind = NonsepKind::WheelSubgraph;
    c.hub = hub;
    c.host = FamilySpec::wheel_of(n);
    c.embedding.assign(n, -1);
    c.embedding[hub] = n - 1;
    for (std::size_t i = 0; i < rim->size(); ++i) c.embedding[(*rim)[i]] = static_cast<int>(i);
    return c;
  }

  for (int m = std::max(6, n); m <= n + opt.prism_slack; ++m)
    for (const PrismSubdivision& s : prism_subdivisions(m)) {
      const Graph host = elongated_prism(s);
      if (host.size() < g.size()) continue;
      if (auto f = find_subgraph(g, host)) {
        c.kind = NonsepKind::PrismSubgraph;
        c.host = FamilySpec::prism_of(s);
        c.embedding = std::move(*f);
        return c;
      }
    }
  return c;
}

inline Validation validate_classification(const Graph& g, const NonsepClassification& c) {
  switch (c.kind) {
    case NonsepKind::Outerplanar:
      if (!c.outer.outerplanar) return Validation::fail("outerplanar verdict without embedding");
      return validate_outerplanarity(g, c.outer);
    case NonsepKind::WheelSubgraph:
    case NonsepKind::PrismSubgraph: {
      if (!c.host) return Validation::fail("missing host graph");
      const Graph host = c.host->build();
      if (!is_subgraph_embedding(g, host, c.embedding)) return Validation::fail("embedding into the host is not a subgraph map");
      if (c.kind == NonsepKind::WheelSubgraph &&
          (c.host->kind != FamilySpec::Kind::Wheel || c.hub < 0 || c.embedding[c.hub] != host.order() - 1))
        return Validation::fail("wheel certificate does not send the hub to the hub");
      if (c.kind == NonsepKind::PrismSubgraph && c.host->kind != FamilySpec::Kind::ElongatedPrism)
        return Validation::fail("prism certificate with a non-prism host");
      return {};
    }
    case NonsepKind::NotNonseparating:
      if (c.outer.outerplanar) return Validation::fail("negative verdict on an outerplanar graph");
      return validate_outerplanarity(g, c.outer);
  }
  return Validation::fail("unknown classification");
}

struct MaximalityResult {
  bool maximal = false;
  std::optional<Edge> counterexample;            // non-edge keeping g non-separating
  std::optional<NonsepClassification> witness;   // classification of g + counterexample
};

/// Non-separating and no single added edge keeps it so.
inline MaximalityResult is_maximal_nonseparating(const Graph& g, NonsepOptions opt = {}) {
  if (classify_nonseparating(g, opt).kind == NonsepKind::NotNonseparating)
    throw InvalidArgument("graph is not non-separating planar");
  MaximalityResult r;
  for (const Edge& e : g.non_edges()) {
    NonsepClassification c = classify_nonseparating(with_edge(g, e), opt);
    if (c.kind != NonsepKind::NotNonseparating) {
      r.counterexample = e;
      r.witness = std::move(c);
      return r;
    }
  }
  r.maximal = true;
  return r;
}

}  // namespace nsp

#endif  // NSP_NONSEP_HPP
