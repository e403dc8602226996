#ifndef NSP_CERTIFICATE_HPP
#define NSP_CERTIFICATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "nsp/graph.hpp"

namespace nsp {

/// Minor model of `target` in a host graph: one branch set per target vertex
/// and, for every target edge, a host edge joining the two branch sets.
struct MinorCertificate {
  Graph target;
  std::string target_name;
  std::vector<VertexSet> branch_sets;
  struct Witness {
    Edge target_edge;
    Edge host_edge;
  };
  std::vector<Witness> witnesses;
};

struct Validation {
  bool ok = true;
  std::string reason;

  static Validation fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return ok; }
};

/// Picks a witness host edge for every target edge; nullopt if some pair of
/// branch sets has no edge between them.
inline std::optional<std::vector<MinorCertificate::Witness>> find_witnesses(const Graph& host, const Graph& target,
                                                                            const std::vector<VertexSet>& sets) {
  std::vector<MinorCertificate::Witness> out;
  for (const Edge& te : target.edges()) {
    std::optional<Edge> found;
    for_each_vertex(sets[te.u], [&](int x) {
      if (found) return;
      const VertexSet hit = host.neighbors(x) & sets[te.v];
      if (hit != 0) found = Edge(x, lowest(hit));
    });
    if (!found) return std::nullopt;
    out.push_back({te, *found});
  }
  return out;
}

/// Builds a certificate from branch sets alone (witnesses are filled in).
inline std::optional<MinorCertificate> certificate_from_branch_sets(const Graph& host, const Graph& target,
                                                                    std::vector<VertexSet> sets,
                                                                    std::string name = {}) {
  if (sets.size() != static_cast<std::size_t>(target.order())) return std::nullopt;
  auto w = find_witnesses(host, target, sets);
  if (!w) return std::nullopt;
  return MinorCertificate{target, std::move(name), std::move(sets), std::move(*w)};
}

/// Checks every certificate invariant directly against the host graph.
inline Validation validate_certificate(const Graph& host, const MinorCertificate& cert) {
  const Graph& h = cert.target;
  if (cert.branch_sets.size() != static_cast<std::size_t>(h.order()))
    return Validation::fail("expected " + std::to_string(h.order()) + " branch sets, got " +
                            std::to_string(cert.branch_sets.size()));
  VertexSet used = 0;
  for (std::size_t i = 0; i < cert.branch_sets.size(); ++i) {
    const VertexSet s = cert.branch_sets[i];
    if (s == 0) return Validation::fail("branch set " + std::to_string(i) + " is empty");
    if ((s & ~host.vertices()) != 0) return Validation::fail("branch set " + std::to_string(i) + " leaves the host");
    if ((s & used) != 0) return Validation::fail("branch set " + std::to_string(i) + " overlaps an earlier one");
    if (!is_connected_set(host, s)) return Validation::fail("branch set " + std::to_string(i) + " is disconnected");
    used |= s;
  }
  std::vector<bool> covered(h.size(), false);
  const std::vector<Edge> target_edges = h.edges();
  for (const auto& w : cert.witnesses) {
    const auto it = std::find(target_edges.begin(), target_edges.end(), w.target_edge);
    if (it == target_edges.end()) return Validation::fail("witness for a non-edge of the target");
    if (!host.has_edge(w.host_edge.u, w.host_edge.v)) return Validation::fail("witness is not a host edge");
    const VertexSet a = cert.branch_sets[w.target_edge.u];
    const VertexSet b = cert.branch_sets[w.target_edge.v];
    const VertexSet ends = bit(w.host_edge.u) | bit(w.host_edge.v);
    if (count(ends & a) != 1 || count(ends & b) != 1)
      return Validation::fail("witness does not join the right branch sets");
    covered[static_cast<std::size_t>(it - target_edges.begin())] = true;
  }
  for (std::size_t i = 0; i < covered.size(); ++i)
    if (!covered[i])
      return Validation::fail("target edge {" + std::to_string(target_edges[i].u) + "," +
                              std::to_string(target_edges[i].v) + "} has no witness");
  return {};
}

}  // namespace nsp

#endif  // NSP_CERTIFICATE_HPP
