#include <gtest/gtest.h>

#include "nsp/moves.hpp"
#include "nsp/topology.hpp"

using namespace nsp;

TEST(Moves, DeltaYAndYDeltaAreInverse) {
  const Graph k6 = complete(6);
  const Graph y = nabla_y(k6, 0, 1, 2);
  EXPECT_EQ(y.order(), 7);
  EXPECT_EQ(y.size(), k6.size());
  EXPECT_EQ(y.degree(6), 3);
  EXPECT_TRUE(is_isomorphic(y_nabla(y, 6), k6));
  EXPECT_THROW(nabla_y(cycle(4), 0, 1, 2), InvalidArgument);
}

TEST(Moves, ClosureSizes) {
  EXPECT_EQ(closure({complete(6)}, MoveSet{true, true}, 12).members.size(), 7u);
  EXPECT_EQ(closure({complete(7)}, MoveSet{true, false}, 14).members.size(), 14u);
  EXPECT_EQ(closure({named("K331_1")}, MoveSet{true, false}, 14).members.size(), 26u);
  EXPECT_EQ(MoveSet::parse("ty").y_delta, false);
}

TEST(Moves, ClosurePathsReplay) {
  const ClosureResult r = closure({complete(7)}, MoveSet{true, false}, 11);
  for (const ClosureMember& m : r.members) EXPECT_TRUE(is_isomorphic(replay(complete(7), m.path), m.graph));
}

TEST(Topology, PetersenFamilyIsMinorMinimalIL) {
  const auto& fam = petersen_family();
  ASSERT_EQ(fam.size(), 7u);
  for (const LibraryMember& m : fam) {
    EXPECT_TRUE(is_il(m.graph).il) << m.name;
    for (const Edge& e : m.graph.edges()) EXPECT_FALSE(is_il(without_edge(m.graph, e)).il) << m.name;
  }
}

TEST(Topology, ObstructionLibrary) {
  const auto& lib = ObstructionLibrary::standard();
  EXPECT_EQ(lib.members().size(), 40u);
  EXPECT_EQ(lib.members().front().graph.order(), 7);
  ObstructionLibrary extra(9);
  EXPECT_THROW(extra.add_extra(complete(7), "K7", ""), InvalidArgument);
}

TEST(Topology, IkVerdicts) {
  const IkVerdict k7 = ik_status(complete(7));
  EXPECT_EQ(k7.status, IkStatus::IK);
  ASSERT_TRUE(k7.ik_evidence.has_value());
  EXPECT_TRUE(validate_certificate(complete(7), *k7.ik_evidence));

  const IkVerdict k6 = ik_status(complete(6));
  EXPECT_EQ(k6.status, IkStatus::NotIK);
  EXPECT_LE(k6.apex_k, 2);

  EXPECT_EQ(ik_status(named("K331_1")).status, IkStatus::IK);
}

TEST(Topology, MaximalityChecks) {
  const Graph k6e = without_edge(complete(6), Edge{0, 1});
  const MaxNilResult nil = is_max_nil(k6e);
  EXPECT_TRUE(nil.maximal);
  EXPECT_FALSE(nil.il);
  // C6 plus a chord is nIL but far from maximal.
  EXPECT_FALSE(is_max_nil(cycle(6)).maximal);

  const MaxNikResult nik = certify_max_nik(without_edge(complete(7), Edge{0, 1}));
  EXPECT_EQ(nik.status, MaxNikStatus::Certified) << nik.reason;
  EXPECT_EQ(certify_max_nik(complete(7)).status, MaxNikStatus::Refuted);
}
