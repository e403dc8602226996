#ifndef NSP_MINORS_HPP
#define NSP_MINORS_HPP

// Minor containment for desk-scale graphs.
//
// A model of H in G is a family of disjoint connected branch sets; contracting
// each branch set to a point leaves H as a subgraph of what remains. The
// search therefore walks partitions of V(G) into connected parts, reached by
// edge contractions, and at every partition asks whether H embeds as a
// subgraph of the quotient (vertex deletions are implicit in that test).
// Partitions are memoised, so each is examined once regardless of the
// contraction order that produced it. Exhausting the tree proves "no minor";
// running out of budget yields Inconclusive, never None.

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "nsp/certificate.hpp"
#include "nsp/errors.hpp"
#include "nsp/families.hpp"
#include "nsp/graph.hpp"
#include "nsp/subgraph.hpp"

namespace nsp {

inline constexpr int kMinorMaxHostOrder = 16;
inline constexpr std::uint64_t kDefaultMinorNodes = 3'000'000;

enum class SearchStatus { Found, None, Inconclusive };

inline std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::None: return "none";
    case SearchStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct MinorResult {
  SearchStatus status = SearchStatus::None;
  std::optional<MinorCertificate> certificate;
  std::uint64_t nodes = 0;
  std::string reason;

  bool found() const { return status == SearchStatus::Found; }
};

inline Budget default_minor_budget() {
  Budget b = Budget::from_env();
  if (b.max_nodes == 0 && b.max_seconds == 0.0) b.max_nodes = kDefaultMinorNodes;
  return b;
}

namespace detail {

class MinorSearch {
 public:
  MinorSearch(const Graph& host, const Graph& target, Budget budget)
      : g_(host), h_(target), meter_(budget), target_edges_(target.size()) {}

  MinorResult run(std::string name) {
    MinorResult r;
    std::vector<VertexSet> parts;
    for (int v = 0; v < g_.order(); ++v) parts.push_back(bit(v));
    const bool hit = dfs(parts);
    r.nodes = meter_.nodes();
    if (hit) {
      r.status = SearchStatus::Found;
      std::vector<VertexSet> sets(h_.order());
      for (int x = 0; x < h_.order(); ++x) sets[x] = found_parts_[found_image_[x]];
      r.certificate = certificate_from_branch_sets(g_, h_, std::move(sets), std::move(name));
      if (!r.certificate) throw IntegrityError("minor search produced a model without witnesses");
    } else if (meter_.exhausted()) {
      r.status = SearchStatus::Inconclusive;
      r.reason = "node budget exhausted after " + std::to_string(meter_.nodes()) + " partitions";
    } else {
      r.status = SearchStatus::None;
    }
    return r;
  }

 private:
  // Vertex v -> lowest vertex of its part, 4 bits each.
  static std::uint64_t key_of(const std::vector<VertexSet>& parts) {
    std::uint64_t key = 0;
    for (VertexSet p : parts) {
      const std::uint64_t rep = static_cast<std::uint64_t>(lowest(p));
      for_each_vertex(p, [&](int v) { key |= rep << (4 * v); });
    }
    return key;
  }

  bool dfs(const std::vector<VertexSet>& parts) {
    if (!meter_.tick()) return false;
    if (!memo_.insert(key_of(parts)).second) return false;

    const int k = static_cast<int>(parts.size());
    std::vector<VertexSet> adj(k, 0);
    int edges = 0;
    for (int i = 0; i < k; ++i) {
      VertexSet reach = 0;
      for_each_vertex(parts[i], [&](int v) { reach |= g_.neighbors(v); });
      reach &= ~parts[i];
      for (int j = i + 1; j < k; ++j)
        if (reach & parts[j]) {
          adj[i] |= bit(j);
          adj[j] |= bit(i);
          ++edges;
        }
    }
    if (edges < target_edges_) return false;

    if (auto image = SubgraphMatcher(h_, adj).run()) {
      found_parts_ = parts;
      found_image_ = std::move(*image);
      return true;
    }
    if (k == h_.order()) return false;

    // Contract the edges that lose the fewest quotient edges first.
    struct Candidate {
      int lost;
      int i;
      int j;
    };
    std::vector<Candidate> cands;
    for (int i = 0; i < k; ++i)
      for_each_vertex(adj[i] & ~prefix_mask(i + 1), [&](int j) {
        cands.push_back({1 + count(adj[i] & adj[j]), i, j});
      });
    std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) { return a.lost < b.lost; });

    for (const Candidate& c : cands) {
      if (edges - c.lost < target_edges_) continue;
      std::vector<VertexSet> next;
      next.reserve(k - 1);
      for (int t = 0; t < k; ++t)
        if (t != c.j) next.push_back(t == c.i ? parts[c.i] | parts[c.j] : parts[t]);
      if (dfs(next)) return true;
      if (meter_.exhausted()) return false;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  BudgetMeter meter_;
  int target_edges_;
  std::unordered_set<std::uint64_t> memo_;
  std::vector<VertexSet> found_parts_;
  std::vector<int> found_image_;
};

}  // namespace detail

/// Decides whether `host` has a `target` minor. Found carries a certificate;
/// None is exhaustive; Inconclusive means the budget ran out.
inline MinorResult has_minor(const Graph& host, const Graph& target, Budget budget = default_minor_budget(),
                             std::string target_name = {}) {
  if (host.order() > kMinorMaxHostOrder)
    throw TooLarge("minor search limited to hosts with at most 16 vertices (got " + std::to_string(host.order()) + ")");
  MinorResult r;
  if (target.order() > host.order() || target.size() > host.size()) {
    r.status = SearchStatus::None;
    return r;
  }
  if (target.order() == 0) {
    r.status = SearchStatus::Found;
    r.certificate = MinorCertificate{target, std::move(target_name), {}, {}};
    return r;
  }
  return detail::MinorSearch(host, target, budget).run(std::move(target_name));
}

struct HadwigerResult {
  int value = 0;
  bool exact = true;  // false: only a lower bound (budget ran out above value)
  std::optional<MinorCertificate> certificate;
};

/// Largest k with a K_k minor.
inline HadwigerResult hadwiger_number(const Graph& g, Budget budget = default_minor_budget()) {
  HadwigerResult r;
  if (g.order() == 0) return r;
  for (int k = 1; k <= g.order(); ++k) {
    if (k * (k - 1) / 2 > g.size()) break;
    MinorResult m = has_minor(g, complete(k), budget, "K" + std::to_string(k));
    if (m.status == SearchStatus::Found) {
      r.value = k;
      r.certificate = std::move(m.certificate);
      continue;
    }
    if (m.status == SearchStatus::Inconclusive) r.exact = false;
    break;
  }
  return r;
}

}  // namespace nsp

#endif  // NSP_MINORS_HPP
