#ifndef NSP_TESTS_ORACLES_HPP
#define NSP_TESTS_ORACLES_HPP

// Slow, obviously-correct reference implementations used to cross-check the
// library. Nothing here shares code with the solvers beyond Graph itself and
// the canonical form used as a dictionary key.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "nsp/canonical.hpp"
#include "nsp/families.hpp"
#include "nsp/graph6.hpp"
#include "nsp/graph.hpp"

namespace oracle {

using nsp::Edge;
using nsp::Graph;

/// Isomorphism by trying every permutation.
inline bool brute_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  std::vector<int> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (const Edge& e : g.edges())
      if (!h.has_edge(p[e.u], p[e.v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// All graphs on 0..max_n vertices up to isomorphism, grown edge by edge.
/// Ordered by (order, size, canonical form).
inline std::vector<Graph> catalog(int max_n) {
  std::vector<Graph> out;
  for (int n = 0; n <= max_n; ++n) {
    std::set<std::string> level = {nsp::canonical_form(Graph(n))};
    while (!level.empty()) {
      std::set<std::string> next;
      for (const std::string& key : level) {
        const Graph g = nsp::parse_graph6(key);
        out.push_back(g);
        for (const Edge& e : g.non_edges()) next.insert(nsp::canonical_form(nsp::with_edge(g, e)));
      }
      level = std::move(next);
    }
  }
  return out;
}

/// Every minor of every catalog graph, by deletion and contraction.
class MinorOracle {
 public:
  explicit MinorOracle(const std::vector<Graph>& cat) : graphs_(cat) {
    for (std::size_t i = 0; i < cat.size(); ++i) index_[nsp::canonical_form(cat[i])] = i;
    down_.resize(cat.size());
    // The catalog lists smaller graphs first, and every one-step child is
    // smaller in (order, size), so children are finished before parents.
    for (std::size_t i = 0; i < cat.size(); ++i) {
      std::vector<bool> d(cat.size(), false);
      d[i] = true;
      const Graph& g = cat[i];
      auto absorb = [&](const Graph& child) {
        const auto& cd = down_[index_.at(nsp::canonical_form(child))];
        for (std::size_t j = 0; j < cd.size(); ++j)
          if (cd[j]) d[j] = true;
      };
      for (int v = 0; v < g.order(); ++v) absorb(nsp::delete_vertex(g, v));
      for (const Edge& e : g.edges()) {
        absorb(nsp::without_edge(g, e));
        absorb(nsp::contract_edge(g, e));
      }
      down_[i] = std::move(d);
    }
  }

  std::size_t index_of(const Graph& g) const { return index_.at(nsp::canonical_form(g)); }
  bool has_minor(std::size_t host, std::size_t target) const { return down_[host][target]; }
  bool has_minor(const Graph& host, const Graph& target) const { return has_minor(index_of(host), index_of(target)); }

 private:
  std::vector<Graph> graphs_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::vector<bool>> down_;
};

/// Uniform random graph with exactly m edges.
inline Graph random_graph(int n, int m, std::mt19937_64& rng) {
  std::vector<Edge> all = nsp::complete(n).edges();
  std::shuffle(all.begin(), all.end(), rng);
  Graph g(n);
  for (int i = 0; i < m; ++i) g.add_edge(all[i].u, all[i].v);
  return g;
}

inline Graph random_permutation_of(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return nsp::permute(g, p);
}

}  // namespace oracle

#endif  // NSP_TESTS_ORACLES_HPP
