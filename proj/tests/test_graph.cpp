#include <gtest/gtest.h>

#include <sstream>

#include "nsp/canonical.hpp"
#include "nsp/families.hpp"
#include "nsp/graph6.hpp"
#include "oracles.hpp"

using namespace nsp;

TEST(Graph, BasicOperations) {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  EXPECT_EQ(g.size(), 2);
  EXPECT_TRUE(g.has_edge(1, 0));
  EXPECT_FALSE(g.has_edge(0, 2));
  EXPECT_EQ(complement(g).size(), 4);
  EXPECT_EQ(isolated_vertices(g), bit(3));
  EXPECT_EQ(components(g).size(), 2u);
  EXPECT_THROW(g.add_edge(0, 0), InvalidArgument);
  EXPECT_THROW(g.add_edge(0, 9), InvalidArgument);
}

TEST(Graph, JoinAndContraction) {
  const Graph j = join(cycle(4), Graph(2));
  EXPECT_EQ(j.order(), 6);
  EXPECT_EQ(j.size(), 4 + 8);
  const Graph c = contract_edge(cycle(5), Edge{0, 1});
  EXPECT_TRUE(is_isomorphic(c, cycle(4)));
  EXPECT_EQ(cone_vertices(wheel(6)), bit(5));
}

TEST(Graph6, MatchesNetworkxGoldens) {
  // Encodings produced by networkx.to_graph6_bytes / to_sparse6_bytes.
  struct Golden {
    Graph g;
    const char* g6;
    const char* s6;
  };
  const Golden cases[] = {
      {petersen(), "IheA@GUAo", ":I`ES@obGkqegW~"},
      {complete(7), "F~~~w", ":Fa@_Q_QM@Gs_QLD"},
      {cycle(8), "GhCGKC", ":GaYnL`n"},
      {path_by_edges(3), "Ch", ":Cdv"},
      {Graph(5), "D??", ":D"},
      {Graph(1), "@", ":@"},
      {complete_multipartite({3, 3}), "EFz_", ":Ek@I@I@J"},
  };
  for (const Golden& c : cases) {
    EXPECT_EQ(to_graph6(c.g), c.g6);
    EXPECT_EQ(to_sparse6(c.g), c.s6);
    EXPECT_EQ(parse_graph6(c.g6).edges(), c.g.edges());
    EXPECT_EQ(parse_sparse6(c.s6).edges(), c.g.edges());
    EXPECT_EQ(parse_graph_line(c.s6).edges(), c.g.edges());
  }
}

TEST(Graph6, ErrorsCarryByteOffsets) {
  auto offset_of = [](const std::string& s) -> long {
    try {
      parse_graph_line(s);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  EXPECT_EQ(offset_of("I?h"), 3);
  EXPECT_EQ(offset_of("B~~"), 2);
  EXPECT_EQ(offset_of("\x7f"), 0);
  EXPECT_EQ(offset_of(":"), 1);
  // 70 vertices exceeds the bitset width.
  EXPECT_THROW(parse_graph6("~?@E" + std::string(805, '?')), TooLarge);
}

TEST(Graph6, RandomRoundTrip) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + static_cast<int>(rng() % 40);
    const int m = static_cast<int>(rng() % (n * (n - 1) / 2 + 1));
    const Graph g = oracle::random_graph(n, m, rng);
    EXPECT_EQ(parse_graph6(to_graph6(g)).edges(), g.edges());
    EXPECT_EQ(parse_sparse6(to_sparse6(g)).edges(), g.edges());
    EXPECT_EQ(parse_sparse6(to_sparse6(g)).order(), n);
  }
}

TEST(Graph6, EdgeListRoundTrip) {
  std::istringstream in(to_edge_list(petersen()));
  EXPECT_EQ(parse_edge_list(in).edges(), petersen().edges());
}

TEST(Canonical, AgreesWithBruteForceIsomorphism) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 400; ++i) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const int m = static_cast<int>(rng() % (n * (n - 1) / 2 + 1));
    const Graph g = oracle::random_graph(n, m, rng);
    const Graph h = oracle::random_graph(n, m, rng);
    EXPECT_EQ(is_isomorphic(g, h), oracle::brute_isomorphic(g, h)) << to_graph6(g) << " " << to_graph6(h);
  }
}

TEST(Canonical, InvariantUnderRelabelling) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + static_cast<int>(rng() % 14);
    const int m = static_cast<int>(rng() % (n * (n - 1) / 2 + 1));
    const Graph g = oracle::random_graph(n, m, rng);
    EXPECT_EQ(canonical_form(g), canonical_form(oracle::random_permutation_of(g, rng)));
  }
  // Regular graphs stress refinement.
  EXPECT_EQ(canonical_form(petersen()), canonical_form(oracle::random_permutation_of(petersen(), rng)));
  EXPECT_NE(canonical_form(cycle(6)), canonical_form(disjoint_union(cycle(3), cycle(3))));
}

TEST(Canonical, CatalogCounts) {
  // Graphs on n vertices up to isomorphism, n = 0..6.
  const std::vector<int> expected = {1, 1, 2, 4, 11, 34, 156};
  std::vector<int> got(7, 0);
  for (const Graph& g : oracle::catalog(6)) ++got[g.order()];
  EXPECT_EQ(got, expected);
}
