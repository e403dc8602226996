// Acceptance run: one PASS/FAIL line per criterion, with wall time against the
// allowed runtime. Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "nsp/verify.hpp"
#include "oracles.hpp"

namespace {

struct Check {
  bool pass = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_seconds, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail << " [exception: " << e.what() << "]";
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s > limit_seconds) {
    c.pass = false;
    c.detail << " [over time limit]";
  }
  failures += !c.pass;
  std::printf("criterion %2d %s  %s:%s (%.2f s, limit %.0f s)\n", id, c.pass ? "PASS" : "FAIL", title.c_str(),
              c.detail.str().c_str(), s, limit_seconds);
  std::fflush(stdout);
}

nsp::SuiteOptions suite_options() {
  nsp::SuiteOptions o;
  o.deterministic = true;
  return o;
}

/// Suite must pass; detail gets the verdict counts.
nsp::SuiteReport run_suite(Check& c, const std::string& id, nsp::SuiteOptions o = suite_options()) {
  nsp::SuiteReport r = nsp::verify_paper(id, o);
  c.detail << " " << id << " " << r.count(nsp::Verdict::Verified) << " verified, " << r.count(nsp::Verdict::Refuted)
           << " refuted, " << r.count(nsp::Verdict::Inconclusive) << " inconclusive";
  c.require(!r.failed(), id + " suite failed");
  for (const nsp::SuiteEntry& e : r.entries)
    if (e.verdict == nsp::Verdict::Refuted) c.detail << " [refuted " << e.instance << ": " << e.claim << "]";
  return r;
}

}  // namespace

int main() {
  using namespace nsp;

  criterion(1, "closure of K6 under both moves is the 7-graph Petersen family", 10, [](Check& c) {
    const ClosureResult r = closure({complete(6)}, MoveSet{true, true}, 14);
    bool has_petersen = false;
    for (const ClosureMember& m : r.members) has_petersen = has_petersen || is_isomorphic(m.graph, petersen());
    c.detail << " " << r.members.size() << " graphs";
    c.require(!r.partial, "closure not exhausted");
    c.require(r.members.size() == 7, "exactly 7 graphs");
    c.require(has_petersen, "Petersen graph present");
  });

  criterion(2, "complements are (n-7)-apex for n = 7..11, with the explicit deletion orders", 300, [](Check& c) {
    // Maximal outerplanar graphs up to isomorphism (dissections of a polygon
    // into triangles up to rotation and reflection).
    const int expected[] = {4, 12, 27, 82, 228};
    for (int n = 7; n <= 11; ++n) {
      int outer = 0, wheels = 0, prisms = 0;
      for (const FamilySpec& s : maximal_nonseparating_instances(n)) {
        outer += s.kind == FamilySpec::Kind::MaxOuterplanar;
        wheels += s.kind == FamilySpec::Kind::Wheel;
        prisms += s.kind == FamilySpec::Kind::ElongatedPrism;
      }
      c.require(outer == expected[n - 7], "maximal outerplanar count at n=" + std::to_string(n));
      c.require(wheels == 1, "one wheel at n=" + std::to_string(n));
      c.require(prisms == static_cast<int>(prism_subdivisions(n).size()), "prism count at n=" + std::to_string(n));
    }
    run_suite(c, "thm1");
  });

  criterion(3, "mu(complement) = n-4 for n = 7..10", 600, [](Check& c) { run_suite(c, "thm2"); });

  criterion(4, "complements are IL at n = 9 and planar, not IL, at n = 7", 300, [](Check& c) {
    const SuiteReport r = run_suite(c, "il9");
    c.require(r.count(Verdict::Verified) == static_cast<int>(r.entries.size()), "every entry verified");
  });

  criterion(5, "ten-vertex complements are IK (prisms and outerplanar strict, wheel recorded)", 1800, [](Check& c) {
    const SuiteReport r = run_suite(c, "thm3");
    int prism_ok = 0, explicit_ok = 0, outer_total = 0, outer_ok = 0;
    for (const SuiteEntry& e : r.entries) {
      const bool ok = e.verdict == Verdict::Verified;
      if (e.claim.starts_with("explicit")) explicit_ok += ok;
      else if (e.instance.starts_with("eprism")) prism_ok += ok;
      else if (e.instance.starts_with("maxouterplanar")) {
        ++outer_total;
        outer_ok += ok;
        if (!ok) c.detail << " [logged: " << e.instance << " " << e.reason << "]";
      } else if (e.instance == "W10") {
        c.detail << " [wheel: " << to_string(e.verdict) << "]";
      }
    }
    c.detail << "; prisms " << prism_ok << "/4, explicit models " << explicit_ok << "/4, outerplanar " << outer_ok << "/"
             << outer_total;
    c.require(prism_ok == 4, "all four prism complements IK");
    c.require(explicit_ok == 4, "all four explicit models validate");
  });

  criterion(6, "maxnIL / maxnIK joins with edge counts 4|V|-10 and 5|V|-15", 900, [](Check& c) {
    const SuiteReport r = run_suite(c, "sec2");
    for (const SuiteEntry& e : r.entries)
      if (e.strict) c.require(e.verdict == Verdict::Verified, e.instance + " " + e.claim);
  });

  criterion(7, "K8 minus C8 has 20 edges and is 2-apex", 5, [](Check& c) { run_suite(c, "remark45"); });

  criterion(8, "Mader fuzz: 4n-9 edges force K6, 5n-14 edges force K7", 600, [](Check& c) {
    std::mt19937_64 rng(20260);
    int fails = 0;
    for (int k : {6, 7})
      for (int i = 0; i < 500; ++i) {
        const int n = std::uniform_int_distribution<int>(k, 10)(rng);
        const int m = k == 6 ? 4 * n - 9 : 5 * n - 14;
        const Graph g = oracle::random_graph(n, m, rng);
        const MinorResult r = has_minor(g, complete(k));
        if (!r.found() || !validate_certificate(g, *r.certificate)) {
          ++fails;
          c.detail << " [" << to_graph6(g) << " lacks a certified K" << k << "]";
        }
      }
    c.detail << " 1000 graphs, " << fails << " failures";
    c.require(fails == 0, "zero failures");
  });

  criterion(9, "minor solver and planarity agree with brute-force oracles", 600, [](Check& c) {
    const std::vector<Graph> cat = oracle::catalog(7);
    c.require(cat.size() == 1253, "catalog of graphs on at most 7 vertices has 1253 members");
    const oracle::MinorOracle o(cat);
    long pairs = 0, disagree = 0;
    for (std::size_t h = 0; h < cat.size(); ++h)
      for (std::size_t t = 0; t < cat.size(); ++t) {
        if (cat[t].order() > cat[h].order()) continue;
        ++pairs;
        const MinorResult r = has_minor(cat[h], cat[t]);
        const bool bad = r.status == SearchStatus::Inconclusive || r.found() != o.has_minor(h, t) ||
                         (r.found() && !validate_certificate(cat[h], *r.certificate));
        disagree += bad;
      }
    const std::size_t k5 = o.index_of(complete(5)), k33 = o.index_of(named("K33"));
    long planar_checked = 0, planar_disagree = 0;
    for (std::size_t i = 0; i < cat.size(); ++i) {
      if (cat[i].order() > 6) continue;
      ++planar_checked;
      const bool brute = !o.has_minor(i, k5) && !o.has_minor(i, k33);
      const PlanarityResult p = is_planar(cat[i]);
      planar_disagree += p.planar != brute || !validate_planarity(cat[i], p);
    }
    c.detail << " " << cat.size() << " graphs, " << pairs << " minor pairs, " << disagree << " disagreements; "
             << planar_checked << " planarity checks, " << planar_disagree << " disagreements";
    c.require(disagree == 0, "minor oracle agreement");
    c.require(planar_disagree == 0, "planarity oracle agreement");
  });

  criterion(10, "mu(G) + mu(cG) >= n-2 on 1-apex and 2-apex graphs", 600, [](Check& c) {
    const SuiteReport r = run_suite(c, "klv");
    const int n = static_cast<int>(r.entries.size());
    char rate[32];
    std::snprintf(rate, sizeof rate, "%.1f%%", n ? 100.0 * r.count(Verdict::Inconclusive) / n : 0.0);
    c.detail << "; inconclusive rate " << rate;
    c.require(r.count(Verdict::Refuted) == 0, "no conclusive failure");
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
