#include <gtest/gtest.h>

#include "nsp/verify.hpp"

using namespace nsp;

namespace {

FamilySpec outerplanar10(const std::string& name) {
  for (const FamilySpec& s : maximal_nonseparating_instances(10))
    if (s.to_string() == name) return s;
  throw InvalidArgument("no instance " + name);
}

}  // namespace

TEST(CaseAnalysis, EveryTenVertexOuterplanarGraphHasACase) {
  int cousin_only = 0;
  for (const FamilySpec& s : maximal_nonseparating_instances(10)) {
    if (s.kind != FamilySpec::Kind::MaxOuterplanar) continue;
    const auto cases = outerplanar10_cases(s.build());
    EXPECT_FALSE(cases.empty()) << s.to_string();
    cousin_only += cousin12_only(cases);
  }
  // Two of these still get library certificates; see the thm3 suite.
  EXPECT_EQ(cousin_only, 3);
}

TEST(CaseAnalysis, CousinOnlyInstance) {
  const FamilySpec s = outerplanar10("maxouterplanar(10 1-9 2-5 2-7 2-9 3-5 5-7 7-9)");
  EXPECT_EQ(outerplanar10_cases(s.build()), std::set<std::string>{"a2(i)"});
  EXPECT_THROW(outerplanar10_cases(cycle(9)), InvalidArgument);
}

TEST(PrismModels, ExplicitBranchSetsValidate) {
  for (const PrismCertificate& pc : prism10_certificates()) {
    const auto c = build_prism10_certificate(pc);
    ASSERT_TRUE(c.has_value()) << pc.label;
    EXPECT_TRUE(validate_certificate(complement(elongated_prism(pc.prism)), *c)) << pc.label;
  }
}

TEST(PrismModels, SwappedBranchSetsFail) {
  PrismCertificate pc = prism10_certificates()[0];
  std::swap(pc.parts[0], pc.parts[3]);  // v1 and v2 are adjacent in the prism
  EXPECT_FALSE(build_prism10_certificate(pc).has_value());
}

TEST(DeletionOrders, EarsAndProtectedSet) {
  for (const Graph& g : enumerate_max_outerplanar(9)) {
    const VertexSet s = ear_deletion_order(g, 7);
    EXPECT_EQ(count(s), 2);
    EXPECT_TRUE(is_outerplanar_graph(delete_vertices(g, s)));
  }
  EXPECT_EQ(count(prism_protected_set(elongated_prism({0, 0, 0}))), 6);
  EXPECT_EQ(count(prism_protected_set(elongated_prism({2, 2, 1}))), 6);
  EXPECT_THROW(ear_deletion_order(complete(5), 3), IntegrityError);
}

TEST(Suites, UnknownSuiteThrows) { EXPECT_THROW(verify_paper("thm9"), InvalidArgument); }

TEST(Suites, ExitCodeSemantics) {
  SuiteReport r;
  r.suite = "x";
  r.entries.push_back({"a", "c", Verdict::Verified, "", {}, 0.0, true});
  EXPECT_EQ(r.exit_code(), 0);
  r.entries.push_back({"b", "c", Verdict::Inconclusive, "budget", {}, 0.0, false});
  EXPECT_EQ(r.exit_code(), 0);
  r.entries.push_back({"c", "c", Verdict::Inconclusive, "budget", {}, 0.0, true});
  EXPECT_EQ(r.exit_code(), 1);
  r.entries.back().strict = false;
  r.entries.push_back({"d", "c", Verdict::Refuted, "x", {}, 0.0, false});
  EXPECT_EQ(r.exit_code(), 1);
}

TEST(Suites, K8MinusC8SuitePasses) {
  const SuiteReport r = verify_paper("remark45");
  EXPECT_EQ(r.exit_code(), 0) << r.to_text();
  EXPECT_EQ(r.to_json()["schema"], kReportSchema);
}

TEST(Suites, DeterministicReportsAreIdentical) {
  SuiteOptions o;
  o.deterministic = true;
  o.seed = 42;
  o.n_max = 8;
  EXPECT_EQ(verify_paper("klv", o).to_json().dump(), verify_paper("klv", o).to_json().dump());
  EXPECT_EQ(verify_paper("thm1", o).to_json().dump(), verify_paper("thm1", o).to_json().dump());
}

TEST(Suites, OrderRangeRestrictsInstances) {
  SuiteOptions o;
  o.n_min = 7;
  o.n_max = 7;
  const SuiteReport r = verify_paper("thm1", o);
  EXPECT_EQ(r.exit_code(), 0);
  // 4 outerplanar, the wheel and one prism; two claims each.
  EXPECT_EQ(r.entries.size(), 12u);
}

TEST(Serialize, RoundTrips) {
  const Graph g = complement(elongated_prism({2, 1, 1}));
  EXPECT_EQ(graph_from_json(graph_json(g)).edges(), g.edges());
  const MinorResult r = has_minor(g, named("K331_1"));
  ASSERT_TRUE(r.found());
  const MinorCertificate back = certificate_from_json(certificate_json(*r.certificate));
  EXPECT_TRUE(validate_certificate(g, back));
  const Json j = Json::parse(certificate_json(*r.certificate).dump());
  EXPECT_TRUE(validate_certificate(g, certificate_from_json(j)));
}
