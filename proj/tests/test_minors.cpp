#include <gtest/gtest.h>

#include "nsp/apex.hpp"
#include "nsp/certificate.hpp"
#include "nsp/minors.hpp"
#include "nsp/planarity.hpp"
#include "oracles.hpp"

using namespace nsp;

TEST(Minors, AgreeWithDeletionContractionOracle) {
  const std::vector<Graph> cat = oracle::catalog(6);
  const oracle::MinorOracle o(cat);
  for (std::size_t h = 0; h < cat.size(); ++h)
    for (std::size_t t = 0; t < cat.size(); ++t) {
      if (cat[t].order() > cat[h].order()) continue;
      const MinorResult r = has_minor(cat[h], cat[t]);
      ASSERT_NE(r.status, SearchStatus::Inconclusive);
      ASSERT_EQ(r.found(), o.has_minor(h, t)) << to_graph6(cat[h]) << " > " << to_graph6(cat[t]);
      if (r.found()) {
        ASSERT_TRUE(validate_certificate(cat[h], *r.certificate));
      }
    }
}

TEST(Minors, CertificateTamperingIsDetected) {
  const MinorResult r = has_minor(petersen(), complete(5));
  ASSERT_TRUE(r.found());
  ASSERT_TRUE(validate_certificate(petersen(), *r.certificate));

  MinorCertificate overlap = *r.certificate;
  overlap.branch_sets[0] |= overlap.branch_sets[1];
  EXPECT_FALSE(validate_certificate(petersen(), overlap));

  MinorCertificate disconnected = *r.certificate;
  disconnected.branch_sets[0] = bit(0) | bit(7);  // 0 and 7 are not adjacent
  EXPECT_FALSE(validate_certificate(petersen(), disconnected));
}

TEST(Minors, HadwigerNumbers) {
  EXPECT_EQ(hadwiger_number(complete(7)).value, 7);
  EXPECT_EQ(hadwiger_number(cycle(5)).value, 3);
  // Six branch sets over ten vertices keep at most 11 of the 15 edges.
  EXPECT_EQ(hadwiger_number(petersen()).value, 5);
  EXPECT_EQ(hadwiger_number(named("K331_1")).value, 6);
}

TEST(Minors, TinyBudgetIsInconclusiveNotWrong) {
  Budget b;
  b.max_nodes = 1;
  const MinorResult r = has_minor(join(petersen(), Graph(1)), complete(7), b);
  EXPECT_NE(r.status, SearchStatus::Found);
  EXPECT_THROW(has_minor(Graph(17), complete(3)), TooLarge);
}

TEST(Planarity, KuratowskiCertificates) {
  for (const Graph& g : {complete(5), complete_multipartite({3, 3}), petersen()}) {
    const PlanarityResult p = is_planar(g);
    EXPECT_FALSE(p.planar);
    ASSERT_TRUE(p.obstruction.has_value());
    EXPECT_TRUE(validate_certificate(g, *p.obstruction));
    EXPECT_TRUE(validate_planarity(g, p));
  }
}

TEST(Planarity, EmbeddingsValidateAndTamperingFails) {
  const Graph g = wheel(8);
  PlanarityResult p = is_planar(g);
  ASSERT_TRUE(p.planar);
  EXPECT_TRUE(validate_planarity(g, p));
  std::swap(p.rotation[7][0], p.rotation[7][2]);
  EXPECT_FALSE(validate_planarity(g, p));
}

TEST(Planarity, OuterplanarAndLinearForest) {
  EXPECT_TRUE(is_outerplanar(cycle(9)).outerplanar);
  const OuterplanarityResult k4 = is_outerplanar(complete(4));
  EXPECT_FALSE(k4.outerplanar);
  EXPECT_TRUE(validate_outerplanarity(complete(4), k4));
  EXPECT_FALSE(is_outerplanar(complete_multipartite({2, 3})).outerplanar);
  EXPECT_TRUE(is_linear_forest(disjoint_union(path_by_edges(3), Graph(2))));
  EXPECT_FALSE(is_linear_forest(cycle(4)));
  EXPECT_FALSE(is_linear_forest(complete_multipartite({1, 3})));
}

TEST(Apex, NumbersAndCertificates) {
  EXPECT_EQ(apex_number(complete(7)).k, 3);
  EXPECT_EQ(apex_number(wheel(7)).k, 0);
  EXPECT_EQ(apex_number(petersen()).k, 2);  // IL, so not apex
  const Graph g = complement(cycle(8));
  ApexOptions o;
  o.deterministic = true;
  const auto c = is_k_apex(g, 2, o);
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(validate_apex(g, *c, 2));
  EXPECT_FALSE(is_k_apex(g, 1).has_value());
  ApexCertificate bad = *c;
  bad.deleted = bit(0);
  EXPECT_FALSE(validate_apex(g, bad, 2));
}

TEST(Apex, DeterministicModeReturnsLeastSet) {
  const Graph g = complement(cycle(8));
  ApexOptions o;
  o.deterministic = true;
  const auto first = is_k_apex(g, 2, o);
  ASSERT_TRUE(first.has_value());
  // No lexicographically smaller pair works.
  const std::vector<int> d = to_vector(first->deleted);
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b) {
      if (std::make_pair(a, b) >= std::make_pair(d[0], d[1])) continue;
      EXPECT_FALSE(is_planar_graph(delete_vertices(g, bit(a) | bit(b))));
    }
}
