#ifndef NSP_CANONICAL_HPP
#define NSP_CANONICAL_HPP

// Canonical labelling for small graphs by individualisation-refinement.
// Every leaf of the search tree is examined except subtrees pruned by
// automorphisms already found, so the maximal leaf code is a true invariant.

#include <string>
#include <vector>

#include "nsp/graph.hpp"
#include "nsp/graph6.hpp"

namespace nsp {

inline constexpr int kCanonicalMaxOrder = 16;

namespace detail {

using Partition = std::vector<std::vector<int>>;

/// Equitable refinement; cells split in place, sub-cells ordered by neighbour count.
inline void refine(const Graph& g, Partition& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t w = 0; w < cells.size() && !changed; ++w) {
      const VertexSet splitter = to_set(cells[w]);
      for (std::size_t x = 0; x < cells.size(); ++x) {
        if (cells[x].size() < 2) continue;
        std::vector<std::pair<int, int>> keyed;
        for (int v : cells[x]) keyed.emplace_back(count(g.neighbors(v) & splitter), v);
        std::sort(keyed.begin(), keyed.end());
        if (keyed.front().first == keyed.back().first) continue;
        Partition pieces;
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          if (i == 0 || keyed[i].first != keyed[i - 1].first) pieces.emplace_back();
          pieces.back().push_back(keyed[i].second);
        }
        cells.erase(cells.begin() + static_cast<long>(x));
        cells.insert(cells.begin() + static_cast<long>(x), pieces.begin(), pieces.end());
        changed = true;
        break;
      }
    }
  }
}

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

  std::vector<int> run() {
    Partition root;
    if (n_ > 0) {
      root.emplace_back();
      for (int v = 0; v < n_; ++v) root.back().push_back(v);
      // Degree first: a cheap invariant that keeps the tree shallow.
      std::stable_sort(root.back().begin(), root.back().end(),
                       [&](int a, int b) { return g_.degree(a) < g_.degree(b); });
      Partition by_degree;
      for (std::size_t i = 0; i < root.back().size(); ++i) {
        const int v = root.back()[i];
        if (i == 0 || g_.degree(v) != g_.degree(root.back()[i - 1])) by_degree.emplace_back();
        by_degree.back().push_back(v);
      }
      root = std::move(by_degree);
    }
    std::vector<int> prefix;
    search(root, prefix);
    return best_perm_;
  }

 private:
  void search(Partition cells, std::vector<int>& prefix) {
    refine(g_, cells);
    int target = -1;
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1) {
        target = static_cast<int>(i);
        break;
      }
    if (target < 0) {
      leaf(cells);
      return;
    }
    std::vector<int> tried;
    const std::vector<int> candidates = cells[target];
    for (int v : candidates) {
      if (!tried.empty() && same_orbit_as_tried(v, tried, prefix)) continue;
      tried.push_back(v);
      Partition child = cells;
      std::vector<int> rest;
      for (int w : child[target])
        if (w != v) rest.push_back(w);
      child[target] = {v};
      child.insert(child.begin() + target + 1, rest);
      prefix.push_back(v);
      search(std::move(child), prefix);
      prefix.pop_back();
    }
  }

  void leaf(const Partition& cells) {
    std::vector<int> perm(n_);
    for (std::size_t i = 0; i < cells.size(); ++i) perm[cells[i][0]] = static_cast<int>(i);
    std::vector<VertexSet> code(n_, 0);
    for (int v = 0; v < n_; ++v) {
      VertexSet row = 0;
      for_each_vertex(g_.neighbors(v), [&](int w) { row |= bit(perm[w]); });
      code[perm[v]] = row;
    }
    if (best_perm_.empty() || code > best_code_) {
      best_code_ = std::move(code);
      best_perm_ = std::move(perm);
    } else if (code == best_code_) {
      // perm^-1 then best_perm: an automorphism of g.
      std::vector<int> inverse(n_);
      for (int v = 0; v < n_; ++v) inverse[perm[v]] = v;
      std::vector<int> gamma(n_);
      for (int v = 0; v < n_; ++v) gamma[v] = inverse[best_perm_[v]];
      automorphisms_.push_back(std::move(gamma));
    }
  }

  /// Orbit test under automorphisms fixing the current prefix pointwise.
  bool same_orbit_as_tried(int v, const std::vector<int>& tried, const std::vector<int>& prefix) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : automorphisms_) {
      bool fixes = true;
      for (int p : prefix)
        if (gamma[p] != p) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) parent[find(x)] = find(gamma[x]);
    }
    const int root = find(v);
    for (int t : tried)
      if (find(t) == root) return true;
    return false;
  }

  const Graph& g_;
  int n_;
  std::vector<int> best_perm_;
  std::vector<VertexSet> best_code_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace detail

/// Permutation p with permute(g, p) canonical.
inline std::vector<int> canonical_labeling(const Graph& g) {
  if (g.order() > kCanonicalMaxOrder)
    throw TooLarge("canonical form limited to " + std::to_string(kCanonicalMaxOrder) + " vertices (got " +
                   std::to_string(g.order()) + ")");
  if (g.order() == 0) return {};
  return detail::Canonizer(g).run();
}

inline Graph canonical_graph(const Graph& g) { return permute(g, canonical_labeling(g)); }

/// graph6 string of the canonical relabelling.
inline std::string canonical_form(const Graph& g) { return to_graph6(canonical_graph(g)); }

inline bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  if (degree_sequence(g) != degree_sequence(h)) return false;
  return canonical_form(g) == canonical_form(h);
}

}  // namespace nsp

#endif  // NSP_CANONICAL_HPP
