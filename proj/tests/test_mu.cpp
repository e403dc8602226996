#include <gtest/gtest.h>

#include "nsp/mu.hpp"
#include "oracles.hpp"

using namespace nsp;

namespace {

MuInterval checked(const Graph& g, MuOptions o = {}) {
  const MuInterval m = mu_bounds(g, o);
  const Validation v = validate_mu(g, m, o.budget);
  EXPECT_TRUE(v) << to_graph6(g) << ": " << v.reason;
  EXPECT_LE(m.lo, m.hi);
  return m;
}

}  // namespace

TEST(Mu, CompleteGraphs) {
  for (int n = 1; n <= 8; ++n) {
    const MuInterval m = checked(complete(n));
    EXPECT_EQ(m.lo, n - 1) << n;
    EXPECT_EQ(m.hi, n - 1) << n;
  }
}

TEST(Mu, KnownValues) {
  struct Case {
    Graph g;
    int mu;
  };
  const Case cases[] = {
      {path_by_edges(2), 1},           {cycle(6), 2},      {complete_multipartite({2, 3}), 3},
      {wheel(8), 3},                   {complete_multipartite({3, 3}), 4},
      {petersen(), 5},                 {named("K331_1"), 6},
      {join(cycle(5), Graph(1)), 3},   {disjoint_union(complete(5), Graph(3)), 4},
  };
  for (const Case& c : cases) {
    const MuInterval m = checked(c.g);
    EXPECT_EQ(m.lo, c.mu) << to_graph6(c.g);
    EXPECT_EQ(m.hi, c.mu) << to_graph6(c.g);
  }
}

TEST(Mu, RestrictedRulesAreWeakerButSound) {
  MuOptions restricted;
  restricted.paper_rules_only = true;
  const MuInterval p3 = checked(path_by_edges(2), restricted);
  EXPECT_EQ(p3.lo, 1);
  EXPECT_EQ(p3.hi, 3);
  EXPECT_FALSE(trace_uses_external(p3.trace));
  EXPECT_TRUE(trace_uses_external(mu_bounds(path_by_edges(2)).trace));
}

TEST(Mu, BothModesOverlap) {
  // Both modes are sound, so the intervals must intersect.
  std::mt19937_64 rng(3);
  MuOptions restricted;
  restricted.paper_rules_only = true;
  for (int i = 0; i < 40; ++i) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const Graph g = oracle::random_graph(n, static_cast<int>(rng() % (n * (n - 1) / 2 + 1)), rng);
    const MuInterval a = checked(g), b = checked(g, restricted);
    EXPECT_LE(std::max(a.lo, b.lo), std::min(a.hi, b.hi)) << to_graph6(g);
  }
}

TEST(Mu, TamperedTraceFailsValidation) {
  MuInterval m = mu_bounds(complete_multipartite({3, 3}));
  ASSERT_TRUE(validate_mu(complete_multipartite({3, 3}), m));
  m.lo = 5;
  EXPECT_FALSE(validate_mu(complete_multipartite({3, 3}), m));
  EXPECT_THROW(mu_bounds(Graph(14)), TooLarge);
}

TEST(Mu, KlvOnSmallGraphs) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 30; ++i) {
    const int n = 4 + static_cast<int>(rng() % 5);
    const Graph g = oracle::random_graph(n, static_cast<int>(rng() % (n * (n - 1) / 2 + 1)), rng);
    EXPECT_NE(check_klv(g).status, KlvStatus::Fails) << to_graph6(g);
  }
  EXPECT_EQ(check_klv(cycle(7)).status, KlvStatus::Holds);
}
