#ifndef NSP_MOVES_HPP
#define NSP_MOVES_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "nsp/canonical.hpp"
#include "nsp/graph.hpp"

namespace nsp {

enum class MoveKind { DeltaY, YDelta };

inline std::string to_string(MoveKind k) { return k == MoveKind::DeltaY ? "ty" : "yt"; }

struct Move {
  MoveKind kind = MoveKind::DeltaY;
  std::vector<int> site;  // triangle {a,b,c} or the degree-3 vertex
};

using MoveSequence = std::vector<Move>;

/// Replaces triangle {a,b,c} by a new vertex (index n) joined to a, b, c.
inline Graph nabla_y(const Graph& g, int a, int b, int c) {
  if (!(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)))
    throw InvalidArgument("{" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                          "} is not a triangle");
  Graph out(g.order() + 1);
  for (const Edge& e : g.edges()) out.add_edge(e.u, e.v);
  out.remove_edge(a, b);
  out.remove_edge(b, c);
  out.remove_edge(a, c);
  const int t = g.order();
  for (int x : {a, b, c}) out.add_edge(t, x);
  return out;
}

/// True when some pair of v's neighbours is already adjacent, so a Y-Delta
/// move at v would merge edges.
inline bool y_nabla_merges(const Graph& g, int v) {
  const std::vector<int> nb = to_vector(g.neighbors(v));
  return nb.size() == 3 && (g.has_edge(nb[0], nb[1]) || g.has_edge(nb[1], nb[2]) || g.has_edge(nb[0], nb[2]));
}

/// Deletes the degree-3 vertex v and joins its neighbours pairwise.
/// Existing neighbour edges merge. Vertices above v shift down by one.
inline Graph y_nabla(const Graph& g, int v) {
  if (g.degree(v) != 3)
    throw InvalidArgument("Y-Delta site " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
  const std::vector<int> nb = to_vector(g.neighbors(v));
  Graph tmp = g;
  tmp.add_edge(nb[0], nb[1]);
  tmp.add_edge(nb[1], nb[2]);
  tmp.add_edge(nb[0], nb[2]);
  return delete_vertex(tmp, v);
}

inline Graph apply_move(const Graph& g, const Move& m) {
  if (m.kind == MoveKind::DeltaY) {
    if (m.site.size() != 3) throw InvalidArgument("Delta-Y site needs three vertices");
    return nabla_y(g, m.site[0], m.site[1], m.site[2]);
  }
  if (m.site.size() != 1) throw InvalidArgument("Y-Delta site needs one vertex");
  return y_nabla(g, m.site[0]);
}

inline Graph replay(const Graph& seed, const MoveSequence& seq) {
  Graph g = seed;
  for (const Move& m : seq) g = apply_move(g, m);
  return g;
}

inline std::vector<std::vector<int>> triangles(const Graph& g) {
  std::vector<std::vector<int>> out;
  for (int a = 0; a < g.order(); ++a)
    for_each_vertex(g.neighbors(a) & ~prefix_mask(a + 1), [&](int b) {
      for_each_vertex(g.neighbors(a) & g.neighbors(b) & ~prefix_mask(b + 1), [&](int c) { out.push_back({a, b, c}); });
    });
  return out;
}

struct MoveSet {
  bool delta_y = true;
  bool y_delta = true;

  static MoveSet parse(const std::string& s) {
    MoveSet m{false, false};
    std::size_t start = 0;
    while (start <= s.size()) {
      const std::size_t end = std::min(s.find(',', start), s.size());
      const std::string tok = s.substr(start, end - start);
      if (tok == "ty") m.delta_y = true;
      else if (tok == "yt") m.y_delta = true;
      else if (!tok.empty()) throw InvalidArgument("unknown move '" + tok + "' (expected ty or yt)");
      start = end + 1;
    }
    return m;
  }
};

struct ClosureMember {
  Graph graph;  // canonical labelling
  std::string canonical;
  int seed_index = 0;
  MoveSequence path;  // replay(seeds[seed_index], path) is isomorphic to graph
};

struct ClosureResult {
  std::vector<ClosureMember> members;  // sorted by (order, canonical form)
  bool partial = false;
};

inline constexpr std::size_t kDefaultClosureBudget = 20000;

/// Least isomorphism-closed family containing the seeds and closed under the
/// allowed moves, restricted to graphs with at most max_order vertices.
/// Exceeding max_graphs stops the search and flags the result partial.
inline ClosureResult closure(const std::vector<Graph>& seeds, MoveSet allowed, int max_order,
                             std::size_t max_graphs = kDefaultClosureBudget) {
  if (seeds.empty()) throw InvalidArgument("closure needs at least one seed");
  std::map<std::string, ClosureMember> found;
  std::vector<std::string> frontier;
  ClosureResult result;

  auto admit = [&](const Graph& g, int seed, MoveSequence path) {
    if (g.order() > max_order) return;
    std::string key = canonical_form(g);
    if (found.count(key)) return;
    if (found.size() >= max_graphs) {
      result.partial = true;
      return;
    }
    found.emplace(key, ClosureMember{canonical_graph(g), key, seed, std::move(path)});
    frontier.push_back(std::move(key));
  };

  for (std::size_t i = 0; i < seeds.size(); ++i) admit(seeds[i], static_cast<int>(i), {});

  while (!frontier.empty() && !result.partial) {
    std::sort(frontier.begin(), frontier.end());
    std::vector<std::string> current;
    current.swap(frontier);
    for (const std::string& key : current) {
      // Work on the replayed graph so the recorded path stays valid.
      const ClosureMember& m = found.at(key);
      const Graph g = replay(seeds[m.seed_index], m.path);
      const int edges = g.size();
      if (allowed.delta_y && g.order() < max_order) {
        for (const auto& t : triangles(g)) {
          Move mv{MoveKind::DeltaY, t};
          Graph h = apply_move(g, mv);
          if (h.size() != edges) throw IntegrityError("Delta-Y changed the edge count");
          MoveSequence p = found.at(key).path;
          p.push_back(mv);
          admit(h, found.at(key).seed_index, std::move(p));
        }
      }
      if (allowed.y_delta) {
        for (int v = 0; v < g.order(); ++v) {
          if (g.degree(v) != 3) continue;
          Move mv{MoveKind::YDelta, {v}};
          const bool merges = y_nabla_merges(g, v);
          Graph h = apply_move(g, mv);
          if (!merges && h.size() != edges) throw IntegrityError("Y-Delta changed the edge count");
          MoveSequence p = found.at(key).path;
          p.push_back(mv);
          admit(h, found.at(key).seed_index, std::move(p));
        }
      }
    }
  }

  for (auto& [key, m] : found) result.members.push_back(std::move(m));
  std::stable_sort(result.members.begin(), result.members.end(), [](const ClosureMember& a, const ClosureMember& b) {
    return a.graph.order() != b.graph.order() ? a.graph.order() < b.graph.order() : a.canonical < b.canonical;
  });
  return result;
}

inline std::vector<Graph> closure_graphs(const ClosureResult& r) {
  std::vector<Graph> out;
  for (const auto& m : r.members) out.push_back(m.graph);
  return out;
}

}  // namespace nsp

#endif  // NSP_MOVES_HPP
