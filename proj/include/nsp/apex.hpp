#ifndef NSP_APEX_HPP
#define NSP_APEX_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nsp/errors.hpp"
#include "nsp/graph.hpp"
#include "nsp/planarity.hpp"

namespace nsp {

inline constexpr int kApexMaxOrder = 14;

struct ApexCertificate {
  VertexSet deleted = 0;
  PlanarityResult remainder;  // planarity witness for g - deleted
};

struct ApexOptions {
  /// Return the lexicographically least deletion set instead of the first found.
  bool deterministic = false;
  std::uint64_t max_subsets = 20'000'000;
};

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

/// Visits k-subsets of `pool` in lexicographic order of positions; stops when
/// `visit` returns true.
inline bool for_each_subset(const std::vector<int>& pool, int k, const std::function<bool(VertexSet)>& visit) {
  const int m = static_cast<int>(pool.size());
  if (k > m) return false;
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    VertexSet s = 0;
    for (int i : idx) s |= bit(pool[i]);
    if (visit(s)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Search order: descending degree, ties by index; identity when deterministic.
inline std::vector<int> apex_candidate_order(const Graph& g, bool deterministic) {
  std::vector<int> pool(g.order());
  std::iota(pool.begin(), pool.end(), 0);
  if (!deterministic)
    std::stable_sort(pool.begin(), pool.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  return pool;
}

/// Some k vertices whose removal leaves a planar graph, or nullopt when no
/// k-subset works (exhaustive).
inline std::optional<ApexCertificate> is_k_apex(const Graph& g, int k, ApexOptions opt = {}) {
  if (k < 0 || k > g.order()) throw InvalidArgument("k must lie in [0, |V|]");
  if (binomial(g.order(), k) > opt.max_subsets)
    throw BudgetExceeded("C(" + std::to_string(g.order()) + "," + std::to_string(k) + ") subsets exceed the apex budget");
  std::optional<ApexCertificate> found;
  for_each_subset(apex_candidate_order(g, opt.deterministic), k, [&](VertexSet s) {
    const Graph rest = delete_vertices(g, s);
    if (!is_planar_graph(rest)) return false;
    found = ApexCertificate{s, is_planar(rest)};
    return true;
  });
  return found;
}

struct ApexNumber {
  int k = 0;
  ApexCertificate certificate;
};

inline ApexNumber apex_number(const Graph& g, ApexOptions opt = {}, int max_order = kApexMaxOrder) {
  if (g.order() > max_order)
    throw TooLarge("apex number limited to " + std::to_string(max_order) + " vertices");
  for (int k = 0; k <= g.order(); ++k)
    if (auto c = is_k_apex(g, k, opt)) return {k, std::move(*c)};
  throw IntegrityError("no apex set found, yet the empty graph is planar");
}

inline Validation validate_apex(const Graph& g, const ApexCertificate& c, int k) {
  if ((c.deleted & ~g.vertices()) != 0) return Validation::fail("deleted vertex outside the graph");
  if (count(c.deleted) != k)
    return Validation::fail("deletion set has " + std::to_string(count(c.deleted)) + " vertices, expected " +
                            std::to_string(k));
  const Graph rest = delete_vertices(g, c.deleted);
  if (!c.remainder.planar) return Validation::fail("remainder is not certified planar");
  Validation v = validate_rotation_system(rest, c.remainder.rotation);
  if (!v) return Validation::fail("remainder witness: " + v.reason);
  return {};
}

/// Smallest k such that deleting some k vertices satisfies `in_class`,
/// searched up to max_k. Returns the deletion set.
inline std::optional<VertexSet> min_deletion_to(const Graph& g, const std::function<bool(const Graph&)>& in_class,
                                                int max_k) {
  const std::vector<int> pool = apex_candidate_order(g, true);
  for (int k = 0; k <= std::min(max_k, g.order()); ++k) {
    std::optional<VertexSet> hit;
    for_each_subset(pool, k, [&](VertexSet s) {
      if (!in_class(delete_vertices(g, s))) return false;
      hit = s;
      return true;
    });
    if (hit) return hit;
  }
  return std::nullopt;
}

}  // namespace nsp

#endif  // NSP_APEX_HPP
