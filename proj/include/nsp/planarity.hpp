#ifndef NSP_PLANARITY_HPP
#define NSP_PLANARITY_HPP

// Planarity with certificates: a rotation system when planar (checked by face
// tracing against Euler's formula), a K5 / K3,3 minor model when not.
// The decision itself is delegated to Boost's Boyer-Myrvold implementation.

#include <algorithm>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <boost/property_map/property_map.hpp>

#include "nsp/certificate.hpp"
#include "nsp/families.hpp"
#include "nsp/graph.hpp"
#include "nsp/minors.hpp"

namespace nsp {

/// Cyclic neighbour order around each vertex.
using RotationSystem = std::vector<std::vector<int>>;

struct PlanarityResult {
  bool planar = false;
  RotationSystem rotation;                  // when planar
  std::optional<MinorCertificate> obstruction;  // K5 or K3,3 when not
};

/// More than 3n - 6 edges rules out planarity.
inline bool exceeds_planar_edge_bound(const Graph& g) {
  return g.order() >= 3 && g.size() > 3 * g.order() - 6;
}

/// Number of faces traced by the rotation system, or nullopt if it is not a
/// permutation of each vertex's neighbourhood.
inline std::optional<int> count_faces(const Graph& g, const RotationSystem& rot) {
  const int n = g.order();
  if (static_cast<int>(rot.size()) != n) return std::nullopt;
  std::vector<std::vector<int>> pos(n, std::vector<int>(n, -1));
  for (int v = 0; v < n; ++v) {
    VertexSet seen = 0;
    for (std::size_t i = 0; i < rot[v].size(); ++i) {
      const int w = rot[v][i];
      if (w < 0 || w >= n || !g.has_edge(v, w) || (seen & bit(w))) return std::nullopt;
      seen |= bit(w);
      pos[v][w] = static_cast<int>(i);
    }
    if (seen != g.neighbors(v)) return std::nullopt;
  }
  // Dart (u,v) is followed by (v, successor of u around v).
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  int faces = 0;
  for (int u = 0; u < n; ++u)
    for (int v : rot[u]) {
      if (used[u][v]) continue;
      ++faces;
      int a = u;
      int b = v;
      while (!used[a][b]) {
        used[a][b] = true;
        const auto& around = rot[b];
        const int next = around[(pos[b][a] + 1) % around.size()];
        a = b;
        b = next;
      }
    }
  return faces;
}

/// Euler's formula v - e + f = 2 on every component (isolated vertices count
/// one face each).
inline Validation validate_rotation_system(const Graph& g, const RotationSystem& rot) {
  const auto faces = count_faces(g, rot);
  if (!faces) return Validation::fail("rotation system does not match the graph's neighbourhoods");
  int expected_faces = 0;
  for (VertexSet c : components(g)) {
    const Graph sub = induced_subgraph(g, c);
    expected_faces += 2 - sub.order() + sub.size();
  }
  const int isolated = count(isolated_vertices(g));
  if (*faces + isolated != expected_faces)
    return Validation::fail("face count " + std::to_string(*faces + isolated) + " violates Euler's formula (expected " +
                            std::to_string(expected_faces) + ")");
  return {};
}

namespace detail {

/// Collapses a Kuratowski subdivision into a minor model: branch vertices
/// absorb the interior of the paths leaving them.
inline std::optional<MinorCertificate> kuratowski_model(const Graph& host, const std::vector<Edge>& edges) {
  Graph k(host.order());
  for (const Edge& e : edges) k.add_edge(e.u, e.v);
  // Boost may report dangling edges; strip pendant vertices first.
  for (bool pruned = true; pruned;) {
    pruned = false;
    for (int v = 0; v < k.order(); ++v)
      if (k.degree(v) == 1) {
        k.remove_edge(v, lowest(k.neighbors(v)));
        pruned = true;
      }
  }
  std::vector<int> branch;
  for (int v = 0; v < k.order(); ++v)
    if (k.degree(v) >= 3) branch.push_back(v);
  std::vector<int> index(host.order(), -1);
  for (std::size_t i = 0; i < branch.size(); ++i) index[branch[i]] = static_cast<int>(i);

  const int b = static_cast<int>(branch.size());
  Graph target(b);
  std::vector<VertexSet> sets(b, 0);
  for (int i = 0; i < b; ++i) sets[i] = bit(branch[i]);
  if (b != 5 && b != 6) return std::nullopt;
  bool broken = false;
  for (int i = 0; i < b; ++i) {
    for_each_vertex(k.neighbors(branch[i]), [&](int first) {
      int prev = branch[i];
      int cur = first;
      VertexSet interior = 0;
      while (index[cur] < 0) {
        interior |= bit(cur);
        const VertexSet nxt = k.neighbors(cur) & ~bit(prev);
        if (nxt == 0 || (interior & nxt)) {
          broken = true;
          return;
        }
        prev = cur;
        cur = lowest(nxt);
      }
      const int j = index[cur];
      if (i == j) broken = true;
      if (i < j) {
        target.add_edge(i, j);
        sets[i] |= interior;
      }
    });
  }
  if (broken) return std::nullopt;
  std::string name;
  if (b == 5 && target.size() == 10) name = "K5";
  else if (b == 6 && target.size() == 9) name = "K33";
  else return std::nullopt;
  return certificate_from_branch_sets(host, target, std::move(sets), name);
}

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;

inline BoostGraph to_boost(const Graph& g) {
  BoostGraph bg(static_cast<std::size_t>(g.order()));
  int idx = 0;
  for (const Edge& e : g.edges()) {
    auto [ed, ok] = boost::add_edge(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v), bg);
    boost::put(boost::edge_index, bg, ed, idx++);
  }
  return bg;
}

}  // namespace detail

/// Verdict only, for inner loops that do not need a witness.
inline bool is_planar_graph(const Graph& g) {
  if (exceeds_planar_edge_bound(g)) return false;
  detail::BoostGraph bg = detail::to_boost(g);
  return boost::boyer_myrvold_planarity_test(bg);
}

inline PlanarityResult is_planar(const Graph& g) {
  using namespace boost;
  using BGraph = detail::BoostGraph;
  using EdgeDesc = graph_traits<BGraph>::edge_descriptor;

  PlanarityResult result;
  const int n = g.order();
  BGraph bg = detail::to_boost(g);

  std::vector<std::vector<EdgeDesc>> storage(static_cast<std::size_t>(n));
  auto embedding = make_iterator_property_map(storage.begin(), get(vertex_index, bg));
  std::vector<EdgeDesc> kuratowski;
  result.planar = boyer_myrvold_planarity_test(boyer_myrvold_params::graph = bg,
                                               boyer_myrvold_params::embedding = embedding,
                                               boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
  if (result.planar) {
    result.rotation.resize(n);
    for (int v = 0; v < n; ++v)
      for (const EdgeDesc& e : storage[v]) {
        const int s = static_cast<int>(source(e, bg));
        const int t = static_cast<int>(target(e, bg));
        result.rotation[v].push_back(s == v ? t : s);
      }
  } else {
    std::vector<Edge> edges;
    for (const EdgeDesc& e : kuratowski)
      edges.emplace_back(static_cast<int>(source(e, bg)), static_cast<int>(target(e, bg)));
    result.obstruction = detail::kuratowski_model(g, edges);
    if (!result.obstruction) {
      // Fall back to the exhaustive solver; a non-planar graph has one of the two.
      for (const char* id : {"K5", "K33"}) {
        MinorResult m = has_minor(g, named(id), Budget::unlimited(), id);
        if (m.found()) {
          result.obstruction = std::move(m.certificate);
          break;
        }
      }
    }
  }
  return result;
}

inline Validation validate_planarity(const Graph& g, const PlanarityResult& r) {
  if (r.planar) return validate_rotation_system(g, r.rotation);
  if (!r.obstruction) return Validation::fail("non-planar verdict without an obstruction");
  const std::string& name = r.obstruction->target_name;
  if (name != "K5" && name != "K33") return Validation::fail("obstruction is not K5 or K3,3");
  return validate_certificate(g, *r.obstruction);
}

struct OuterplanarityResult {
  bool outerplanar = false;
  RotationSystem rotation;  // planar embedding of g + K1, apex = g.order()
  std::optional<MinorCertificate> obstruction;  // K4 or K2,3
};

/// Outerplanar iff g + K1 is planar.
inline OuterplanarityResult is_outerplanar(const Graph& g) {
  OuterplanarityResult r;
  PlanarityResult p = is_planar(join(g, Graph(1)));
  r.outerplanar = p.planar;
  if (r.outerplanar) {
    r.rotation = std::move(p.rotation);
    return r;
  }
  const std::pair<const char*, Graph> obstructions[] = {{"K4", complete(4)}, {"K23", complete_multipartite({2, 3})}};
  for (const auto& [name, h] : obstructions) {
    MinorResult m = has_minor(g, h, Budget::unlimited(), name);
    if (m.found()) {
      r.obstruction = std::move(m.certificate);
      break;
    }
  }
  if (!r.obstruction) throw IntegrityError("non-outerplanar graph without K4 or K2,3 minor");
  return r;
}

/// A planar embedding of g + K1 puts every vertex of g on the face left by the apex.
inline Validation validate_outerplanarity(const Graph& g, const OuterplanarityResult& r) {
  if (r.outerplanar) return validate_rotation_system(join(g, Graph(1)), r.rotation);
  if (!r.obstruction) return Validation::fail("non-outerplanar verdict without an obstruction");
  const std::string& name = r.obstruction->target_name;
  if (name != "K4" && name != "K23") return Validation::fail("obstruction is not K4 or K2,3");
  return validate_certificate(g, *r.obstruction);
}

inline bool is_outerplanar_graph(const Graph& g) { return is_planar_graph(join(g, Graph(1))); }

/// Disjoint union of paths: maximum degree at most 2 and no cycle.
inline bool is_linear_forest(const Graph& g) {
  if (max_degree(g) > 2) return false;
  for (VertexSet c : components(g)) {
    const Graph sub = induced_subgraph(g, c);
    if (sub.size() != sub.order() - 1) return false;
  }
  return true;
}

}  // namespace nsp

#endif  // NSP_PLANARITY_HPP
