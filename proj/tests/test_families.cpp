#include <gtest/gtest.h>

#include "nsp/canonical.hpp"
#include "nsp/families.hpp"
#include "nsp/nonsep.hpp"
#include "nsp/planarity.hpp"

using namespace nsp;

TEST(Families, TriangulationsAreCatalan) {
  const std::vector<std::size_t> catalan = {1, 1, 2, 5, 14, 42, 132, 429};
  for (int n = 3; n <= 9; ++n) EXPECT_EQ(polygon_triangulations(n).size(), catalan[n - 2]) << n;
  EXPECT_EQ(polygon_triangulations(6).size(), 14u);  // hexagon
}

TEST(Families, MaxOuterplanarUpToIsomorphism) {
  const std::vector<std::size_t> expected = {1, 1, 1, 3, 4, 12, 27, 82};
  for (int n = 3; n <= 10; ++n) {
    const auto all = enumerate_max_outerplanar(n);
    EXPECT_EQ(all.size(), expected[n - 3]) << n;
    for (const Graph& g : all) {
      EXPECT_EQ(g.size(), 2 * n - 3);
      EXPECT_TRUE(is_outerplanar_graph(g));
      EXPECT_EQ(max_outerplanar_from_chords(n, polygon_chords(g)).edges(), g.edges());
    }
  }
}

TEST(Families, WheelAndPrismShapes) {
  EXPECT_EQ(wheel(10).size(), 18);
  EXPECT_EQ(wheel(10).degree(9), 9);
  const Graph p = elongated_prism({1, 2, 1});
  EXPECT_EQ(p.order(), 10);
  EXPECT_EQ(p.size(), 13);
  EXPECT_TRUE(p.has_edge(p.find_label("v1"), p.find_label("v3")));
  EXPECT_TRUE(p.has_edge(p.find_label("v1"), p.find_label("a")));
  EXPECT_TRUE(p.has_edge(p.find_label("a"), p.find_label("v2")));
  EXPECT_THROW(p.find_label("z"), InvalidArgument);
  // Subdivision triples up to permutation, summing to n - 6.
  EXPECT_EQ(prism_subdivisions(10).size(), 4u);
  EXPECT_EQ(prism_subdivisions(11).size(), 5u);
}

TEST(Families, SpecRoundTrip) {
  for (const FamilySpec& s : maximal_nonseparating_instances(8)) {
    const Graph g = s.build();
    EXPECT_EQ(g.order(), 8);
    EXPECT_FALSE(s.to_string().empty());
  }
  const FamilySpec j = FamilySpec::join_of(FamilySpec::wheel_of(5), FamilySpec::empty_of(2));
  EXPECT_EQ(j.build().size(), 4 * 7 - 10);
}

TEST(Nonsep, ClassifiesTheThreeShapes) {
  struct Case {
    Graph g;
    NonsepKind kind;
  };
  const Case cases[] = {
      {cycle(7), NonsepKind::Outerplanar},
      {wheel(9), NonsepKind::WheelSubgraph},
      {complete_multipartite({2, 3}), NonsepKind::WheelSubgraph},
      {elongated_prism({0, 0, 0}), NonsepKind::PrismSubgraph},
      {elongated_prism({2, 1, 1}), NonsepKind::PrismSubgraph},
      {complete(5), NonsepKind::NotNonseparating},
      {complete_multipartite({3, 3}), NonsepKind::NotNonseparating},
      {complete(4), NonsepKind::WheelSubgraph},
  };
  for (const Case& c : cases) {
    const NonsepClassification r = classify_nonseparating(c.g);
    EXPECT_EQ(r.kind, c.kind) << to_graph6(c.g);
    EXPECT_TRUE(validate_classification(c.g, r)) << validate_classification(c.g, r).reason;
  }
}

TEST(Nonsep, TamperedEmbeddingFailsValidation) {
  const Graph g = elongated_prism({1, 0, 0});
  NonsepClassification c = classify_nonseparating(g);
  ASSERT_EQ(c.kind, NonsepKind::PrismSubgraph);
  std::swap(c.embedding[0], c.embedding[1]);
  EXPECT_FALSE(validate_classification(g, c));
}

TEST(Nonsep, NonPlanarGraphsAreNotNonseparating) {
  for (const Graph& g : {complete(5), petersen(), join(cycle(5), Graph(2))})
    EXPECT_EQ(classify_nonseparating(g).kind, NonsepKind::NotNonseparating);
}

TEST(Nonsep, FamilyInstancesAreMaximalExceptTheFan) {
  // The fan (path plus a cone vertex) is maximal outerplanar, but adding an
  // edge between the path ends gives a wheel, still non-separating.
  for (int n = 7; n <= 9; ++n)
    for (const FamilySpec& s : maximal_nonseparating_instances(n)) {
      const Graph g = s.build();
      const MaximalityResult r = is_maximal_nonseparating(g);
      const bool fan = s.kind == FamilySpec::Kind::MaxOuterplanar && count(cone_vertices(g)) > 0;
      EXPECT_EQ(r.maximal, !fan) << s.to_string();
      if (!r.maximal) {
        ASSERT_TRUE(r.witness.has_value());
        EXPECT_EQ(r.witness->kind, NonsepKind::WheelSubgraph);
      }
    }
}

TEST(Nonsep, RejectsInputThatIsNotNonseparating) {
  EXPECT_THROW(is_maximal_nonseparating(complete(5)), InvalidArgument);
  EXPECT_THROW(classify_nonseparating(cycle(15)), TooLarge);
}
