#ifndef NSP_FAMILIES_HPP
#define NSP_FAMILIES_HPP

// Graph families. Labelling conventions (frozen, relied on by certificates):
//
//  cycle(n)          v1..vn = 0..n-1 in cyclic order.
//  wheel(n)          rim v1..v(n-1) = 0..n-2 in cyclic order, hub vn = n-1.
//  path_by_edges(k)  0..k in path order; path_by_edges(2) has centre 1.
//  elongated_prism   v1..v6 = 0..5; triangles {v1,v3,v5} and {v2,v4,v6};
//                    paths v1-v2, v3-v4, v5-v6 carry s1, s2, s3 subdivision
//                    vertices, numbered from 6 in path order and named
//                    a, b, c, ... in that order.
//  max outerplanar   outer cycle 0..n-1 in order, chords added on top.
//  named(K331_1)     parts {0,1,2}, {3,4,5}, {6}, {7}.
//  named(Petersen)   outer 5-cycle 0..4, spokes i - i+5, inner pentagram.

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nsp/canonical.hpp"
#include "nsp/graph.hpp"

namespace nsp {

inline std::vector<std::string> numbered_labels(int n, const std::string& prefix = "v") {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph cycle(int n) {
  if (n != 0 && n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  g.set_labels(numbered_labels(n));
  return g;
}

/// Path with k edges (k+1 vertices).
inline Graph path_by_edges(int k) {
  if (k < 0) throw InvalidArgument("negative path length");
  Graph g(k + 1);
  for (int i = 0; i < k; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph wheel(int n) {
  if (n < 4) throw InvalidArgument("wheel order must be at least 4 (got " + std::to_string(n) + ")");
  Graph g(n);
  const int rim = n - 1;
  for (int i = 0; i < rim; ++i) {
    g.add_edge(i, (i + 1) % rim);
    g.add_edge(i, rim);
  }
  g.set_labels(numbered_labels(n));
  return g;
}

inline Graph complete_multipartite(const std::vector<int>& parts) {
  int n = 0;
  std::vector<int> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (int i = 0; i < parts[p]; ++i) part_of.push_back(static_cast<int>(p));
    n += parts[p];
  }
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) g.add_edge(u, v);
  return g;
}

inline Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

struct PrismSubdivision {
  int s1 = 0;
  int s2 = 0;
  int s3 = 0;

  int order() const { return 6 + s1 + s2 + s3; }
  friend bool operator==(const PrismSubdivision&, const PrismSubdivision&) = default;
};

inline Graph elongated_prism(PrismSubdivision s) {
  if (s.s1 < 0 || s.s2 < 0 || s.s3 < 0) throw InvalidArgument("subdivision counts must be non-negative");
  Graph g(s.order());
  std::vector<std::string> labels = {"v1", "v2", "v3", "v4", "v5", "v6"};
  for (int a : {0, 2, 4})
    for (int b : {0, 2, 4})
      if (a < b) {
        g.add_edge(a, b);
        g.add_edge(a + 1, b + 1);
      }
  int next = 6;
  const int counts[3] = {s.s1, s.s2, s.s3};
  for (int p = 0; p < 3; ++p) {
    int prev = 2 * p;
    for (int i = 0; i < counts[p]; ++i) {
      g.add_edge(prev, next);
      const int letter = next - 6;
      labels.push_back(letter < 26 ? std::string(1, static_cast<char>('a' + letter)) : "s" + std::to_string(letter));
      prev = next++;
    }
    g.add_edge(prev, 2 * p + 1);
  }
  g.set_labels(std::move(labels));
  return g;
}

/// One prism per multiset {s1,s2,s3} summing to n-6, with s1 >= s2 >= s3.
inline std::vector<PrismSubdivision> prism_subdivisions(int n) {
  if (n < 6) throw InvalidArgument("elongated prisms have at least 6 vertices");
  std::vector<PrismSubdivision> out;
  const int extra = n - 6;
  for (int a = extra; a >= 0; --a)
    for (int b = std::min(a, extra - a); b >= 0; --b) {
      const int c = extra - a - b;
      if (c <= b) out.push_back({a, b, c});
    }
  return out;
}

inline std::vector<Graph> enumerate_elongated_prisms(int n) {
  std::vector<Graph> out;
  for (const PrismSubdivision& s : prism_subdivisions(n)) out.push_back(elongated_prism(s));
  return out;
}

inline constexpr int kMaxOuterplanarLimit = 12;

/// Cycle 0..n-1 plus the given chords; rejects anything that is not a
/// triangulation of the polygon.
inline Graph max_outerplanar_from_chords(int n, const std::vector<Edge>& chords) {
  if (n < 3) throw InvalidArgument("maximal outerplanar graphs need at least 3 vertices");
  if (static_cast<int>(chords.size()) != n - 3) throw InvalidArgument("a polygon triangulation has n-3 chords");
  Graph g = cycle(n);
  for (const Edge& c : chords) {
    const int len = c.v - c.u;
    if (len < 2 || len > n - 2) throw InvalidArgument("chord joins adjacent or invalid polygon vertices");
    for (const Edge& d : chords) {
      const bool crosses = (c.u < d.u && d.u < c.v && c.v < d.v) || (d.u < c.u && c.u < d.v && d.v < c.v);
      if (crosses) throw InvalidArgument("crossing chords");
    }
    if (g.has_edge(c.u, c.v)) throw InvalidArgument("repeated chord");
    g.add_edge(c.u, c.v);
  }
  return g;
}

namespace detail {

inline void triangulate(const std::vector<int>& poly, std::vector<Edge>& chords, std::vector<std::vector<Edge>>& out) {
  if (poly.size() < 3) {
    out.push_back(chords);
    return;
  }
  if (poly.size() == 3) {
    out.push_back(chords);
    return;
  }
  // The side poly.front()-poly.back() lies in exactly one triangle.
  const std::size_t k = poly.size() - 1;
  for (std::size_t i = 1; i < k; ++i) {
    const std::size_t mark = chords.size();
    if (i > 1) chords.emplace_back(poly.front(), poly[i]);
    if (i < k - 1) chords.emplace_back(poly[i], poly.back());
    std::vector<int> left(poly.begin(), poly.begin() + static_cast<long>(i) + 1);
    std::vector<int> right(poly.begin() + static_cast<long>(i), poly.end());
    std::vector<std::vector<Edge>> left_done;
    triangulate(left, chords, left_done);
    for (auto& partial : left_done) triangulate(right, partial, out);
    chords.resize(mark);
  }
}

}  // namespace detail

/// Every labelled triangulation of the n-gon, as chord lists (Catalan(n-2) of them).
inline std::vector<std::vector<Edge>> polygon_triangulations(int n) {
  if (n < 3) throw InvalidArgument("polygon needs at least 3 vertices");
  if (n > kMaxOuterplanarLimit) throw TooLarge("maximal outerplanar enumeration limited to n <= 12");
  std::vector<int> poly(n);
  std::iota(poly.begin(), poly.end(), 0);
  std::vector<Edge> chords;
  std::vector<std::vector<Edge>> out;
  detail::triangulate(poly, chords, out);
  for (auto& c : out) std::sort(c.begin(), c.end());
  return out;
}

/// Maximal outerplanar graphs on n vertices up to isomorphism, sorted by
/// canonical form. Each keeps the polygon labelling of its first triangulation.
inline std::vector<Graph> enumerate_max_outerplanar(int n) {
  std::map<std::string, Graph> seen;
  for (const auto& chords : polygon_triangulations(n)) {
    Graph g = max_outerplanar_from_chords(n, chords);
    seen.try_emplace(canonical_form(g), std::move(g));
  }
  std::vector<Graph> out;
  for (auto& [key, g] : seen) out.push_back(std::move(g));
  return out;
}

inline const std::vector<std::string>& named_ids() {
  static const std::vector<std::string> ids = {"K5", "K33", "K6", "K7", "K331", "K331_1", "Petersen", "TriangularPrism"};
  return ids;
}

inline Graph named(const std::string& id) {
  if (id == "K5") return complete(5);
  if (id == "K6") return complete(6);
  if (id == "K7") return complete(7);
  if (id == "K33") return complete_multipartite({3, 3});
  if (id == "K331") return complete_multipartite({3, 3, 1});
  if (id == "K331_1" || id == "K3311") return complete_multipartite({3, 3, 1, 1});
  if (id == "Petersen") return petersen();
  if (id == "TriangularPrism") return elongated_prism({0, 0, 0});
  throw InvalidArgument("unknown named graph '" + id + "'");
}

/// Symbolic description of a family instance, printable and re-buildable.
struct FamilySpec {
  enum class Kind { MaxOuterplanar, Wheel, ElongatedPrism, Join, Complement, Named, Complete, Cycle, Path, Empty };

  Kind kind = Kind::Named;
  int n = 0;
  PrismSubdivision prism;
  std::vector<Edge> chords;
  std::string id;
  std::vector<FamilySpec> parts;

  static FamilySpec max_outerplanar(int n, std::vector<Edge> chords) {
    FamilySpec s;
    s.kind = Kind::MaxOuterplanar;
    s.n = n;
    s.chords = std::move(chords);
    return s;
  }
  static FamilySpec simple(Kind k, int n) {
    FamilySpec s;
    s.kind = k;
    s.n = n;
    return s;
  }
  static FamilySpec wheel_of(int n) { return simple(Kind::Wheel, n); }
  static FamilySpec complete_of(int n) { return simple(Kind::Complete, n); }
  static FamilySpec cycle_of(int n) { return simple(Kind::Cycle, n); }
  static FamilySpec path_of(int k) { return simple(Kind::Path, k); }
  static FamilySpec empty_of(int n) { return simple(Kind::Empty, n); }
  static FamilySpec prism_of(PrismSubdivision p) {
    FamilySpec s;
    s.kind = Kind::ElongatedPrism;
    s.prism = p;
    s.n = p.order();
    return s;
  }
  static FamilySpec named_of(std::string id) {
    FamilySpec s;
    s.kind = Kind::Named;
    s.id = std::move(id);
    return s;
  }
  static FamilySpec join_of(FamilySpec a, FamilySpec b) {
    FamilySpec s;
    s.kind = Kind::Join;
    s.parts = {std::move(a), std::move(b)};
    return s;
  }
  static FamilySpec complement_of(FamilySpec a) {
    FamilySpec s;
    s.kind = Kind::Complement;
    s.parts = {std::move(a)};
    return s;
  }

  Graph build() const {
    switch (kind) {
      case Kind::MaxOuterplanar: return max_outerplanar_from_chords(n, chords);
      case Kind::Wheel: return wheel(n);
      case Kind::ElongatedPrism: return elongated_prism(prism);
      case Kind::Join: return join(parts.at(0).build(), parts.at(1).build());
      case Kind::Complement: return complement(parts.at(0).build());
      case Kind::Named: return named(id);
      case Kind::Complete: return complete(n);
      case Kind::Cycle: return cycle(n);
      case Kind::Path: return path_by_edges(n);
      case Kind::Empty: return empty_graph(n);
    }
    throw InvalidArgument("bad family kind");
  }

  std::string to_string() const {
    std::ostringstream os;
    switch (kind) {
      case Kind::MaxOuterplanar:
        os << "maxouterplanar(" << n;
        for (const Edge& e : chords) os << ' ' << e.u << '-' << e.v;
        os << ')';
        break;
      case Kind::Wheel: os << "W" << n; break;
      case Kind::ElongatedPrism: os << "eprism(" << prism.s1 << ',' << prism.s2 << ',' << prism.s3 << ')'; break;
      case Kind::Join: os << '(' << parts[0].to_string() << " + " << parts[1].to_string() << ')'; break;
      case Kind::Complement: os << "c(" << parts[0].to_string() << ')'; break;
      case Kind::Named: os << id; break;
      case Kind::Complete: os << 'K' << n; break;
      case Kind::Cycle: os << 'C' << n; break;
      case Kind::Path: os << 'P' << n; break;
      case Kind::Empty: os << 'E' << n; break;
    }
    return os.str();
  }
};

/// Recovers the chord list of a graph built on the polygon labelling.
inline std::vector<Edge> polygon_chords(const Graph& g) {
  std::vector<Edge> out;
  const int n = g.order();
  for (const Edge& e : g.edges())
    if (e.v - e.u != 1 && !(e.u == 0 && e.v == n - 1)) out.push_back(e);
  return out;
}

/// Every maximal non-separating planar graph on n vertices: all maximal
/// outerplanar graphs, the wheel, and every elongated prism (n >= 6).
inline std::vector<FamilySpec> maximal_nonseparating_instances(int n) {
  std::vector<FamilySpec> out;
  for (const Graph& g : enumerate_max_outerplanar(n)) out.push_back(FamilySpec::max_outerplanar(n, polygon_chords(g)));
  if (n >= 4) out.push_back(FamilySpec::wheel_of(n));
  if (n >= 6)
    for (const PrismSubdivision& s : prism_subdivisions(n)) out.push_back(FamilySpec::prism_of(s));
  return out;
}

}  // namespace nsp

#endif  // NSP_FAMILIES_HPP
