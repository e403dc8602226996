#ifndef NSP_MU_HPP
#define NSP_MU_HPP

// Interval bounds on the Colin de Verdiere invariant mu.
//
// mu is never computed from matrices. Bounds come from a fixed set of facts
// about mu, each applied as a rule and recorded with its premise:
//
//   R1  planar iff mu <= 3
//   R2  linklessly embeddable (no Petersen-family minor) iff mu <= 4
//   R3  adding a vertex raises mu by at most one, so mu(G) <= bound(G - S) + |S|
//   R4  mu(G + K1) = mu(G) + 1 when G has an edge (cone vertices)
//   R5  mu is minor monotone; seeds with known lower bounds: K_k has k - 1, and
//       K_j + X for X nonplanar (4 + j), linked (5 + j) or in the K7 or
//       K3,3,1,1 family (6 + j, since both moves preserve mu once mu >= 4)
//   R6  an isolated vertex does not change mu when the rest has an edge
//   R7  outerplanar iff mu <= 2                              (external)
//   R8  disjoint union of paths iff mu <= 1                  (external)
//   KLV mu(cG) >= n - 5 / n - 4 / n - 3 when G is planar /
//       outerplanar / a disjoint union of paths            (external)
//
// plus base values mu(K1) = 0 and mu(E_n) = 1 for n >= 2 (external).
// External rules can be switched off; the trace says which rules fired.

#include <algorithm>
#include <climits>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nsp/apex.hpp"
#include "nsp/certificate.hpp"
#include "nsp/families.hpp"
#include "nsp/graph.hpp"
#include "nsp/minors.hpp"
#include "nsp/planarity.hpp"
#include "nsp/topology.hpp"

namespace nsp {

inline constexpr int kMuMaxOrder = 13;

enum class MuSide { Lower, Upper };

inline std::string to_string(MuSide s) { return s == MuSide::Lower ? "lower" : "upper"; }

/// One applied rule. `removed` names the vertices deleted before the rule
/// (R3, R4, R6, deletion); `sub` proves the bound used on the smaller graph.
struct MuStep {
  std::string rule;
  MuSide side = MuSide::Lower;
  int value = 0;
  bool external = false;
  std::string claim;
  VertexSet removed = 0;
  std::optional<MinorCertificate> minor{};
  std::vector<MuStep> sub{};
};

struct MuInterval {
  int lo = 0;
  int hi = 0;
  std::vector<MuStep> trace;

  bool exact() const { return lo == hi; }
};

struct MuOptions {
  /// Drop R7, R8, the KLV complement bounds and the edgeless base value.
  bool paper_rules_only = false;
  Budget budget = default_minor_budget();
};

/// Seed graph for R5 with the lower bound it carries.
struct MuSeed {
  std::string name;
  Graph graph;
  int value = 0;
};

namespace detail {

inline std::string cone_name(int j, const std::string& base) {
  return j == 0 ? base : "K" + std::to_string(j) + "+" + base;
}

/// Seeds up to the given order, smallest first. K_{j} + X keeps X's bound
/// plus j by R4 (X always has an edge).
inline const std::vector<MuSeed>& mu_seeds() {
  static const std::vector<MuSeed> seeds = [] {
    std::vector<MuSeed> out;
    for (int k = 2; k <= kMuMaxOrder; ++k) out.push_back({"K" + std::to_string(k), complete(k), k - 1});
    auto coned = [&](const Graph& base, const std::string& name, int value) {
      for (int j = 0; base.order() + j <= kMuMaxOrder; ++j)
        out.push_back({cone_name(j, name), join(complete(j), base), value + j});
    };
    coned(named("K33"), "K33", 4);
    for (const LibraryMember& m : petersen_family())
      if (m.name != "K6") coned(m.graph, m.name, 5);
    for (const auto& [seed, name] : {std::pair{complete(7), "K7"}, std::pair{named("K331_1"), "K3311"}}) {
      const ClosureResult fam = closure({seed}, MoveSet{true, true}, kMuMaxOrder);
      for (std::size_t i = 0; i < fam.members.size(); ++i)
        coned(fam.members[i].graph, std::string(name) + "-family." + std::to_string(i), 6);
    }
    // Drop repeats (K7 = K1 + K6, K3311 = K2 + K33, ...), keeping the first name.
    std::set<std::string> seen;
    std::erase_if(out, [&](const MuSeed& s) { return !seen.insert(canonical_form(s.graph)).second; });
    std::stable_sort(out.begin(), out.end(), [](const MuSeed& a, const MuSeed& b) {
      return a.graph.order() < b.graph.order() || (a.graph.order() == b.graph.order() && a.graph.size() < b.graph.size());
    });
    return out;
  }();
  return seeds;
}

enum class MuClass { LinearForest, Outerplanar, Planar, Linkless };

struct ClassRule {
  MuClass cls;
  int bound;
  const char* rule;
  bool external;
  const char* name;
};

inline constexpr ClassRule kClassRules[] = {
    {MuClass::LinearForest, 1, "R8", true, "disjoint union of paths"},
    {MuClass::Outerplanar, 2, "R7", true, "outerplanar"},
    {MuClass::Planar, 3, "R1", false, "planar"},
    {MuClass::Linkless, 4, "R2", false, "linklessly embeddable"},
};

inline bool in_class(const Graph& g, MuClass c, Budget budget) {
  switch (c) {
    case MuClass::LinearForest: return is_linear_forest(g);
    case MuClass::Outerplanar: return is_outerplanar_graph(g);
    case MuClass::Planar: return is_planar_graph(g);
    case MuClass::Linkless: return is_planar_graph(g) || !is_il(g, budget).il;
  }
  return false;
}

inline std::string set_string(VertexSet s) {
  std::string out = "{";
  for_each_vertex(s, [&](int v) {
    if (out.size() > 1) out += ",";
    out += std::to_string(v);
  });
  return out + "}";
}

class MuBounder {
 public:
  explicit MuBounder(MuOptions opt) : opt_(std::move(opt)) {}

  /// `full` enables the seed search and the deletion lower bound.
  MuInterval run(const Graph& g, bool full) {
    const int n = g.order();
    MuInterval r;
    r.lo = 0;
    r.hi = INT_MAX;
    auto lower = [&](MuStep s) {
      if (s.value <= r.lo) return;
      r.lo = s.value;
      s.side = MuSide::Lower;
      r.trace.push_back(std::move(s));
    };
    auto upper = [&](MuStep s) {
      if (s.value >= r.hi) return;
      r.hi = s.value;
      s.side = MuSide::Upper;
      r.trace.push_back(std::move(s));
    };
    auto done = [&] { return r.lo >= r.hi; };

    if (n <= 1) {
      upper({"base", MuSide::Upper, 0, false, "mu(K1) = 0"});
      return r;
    }
    if (g.size() == 0) {
      if (opt_.paper_rules_only) {
        // Only the trivial upper bound: a graph with no edge is planar.
        upper({"R1", MuSide::Upper, 3, false, "planar"});
      } else {
        lower({"base", MuSide::Lower, 1, true, "mu of an edgeless graph on >= 2 vertices is 1"});
        upper({"base", MuSide::Upper, 1, true, "mu of an edgeless graph on >= 2 vertices is 1"});
      }
      return r;
    }
    lower({"R5", MuSide::Lower, 1, false, "has an edge, so a K2 minor (mu(K2) = 1)"});

    // R6 and R4 transfer the whole interval of a smaller graph.
    const VertexSet iso = isolated_vertices(g);
    if (iso != 0) {
      const MuInterval sub = run(delete_vertices(g, iso), full);
      MuStep lo{"R6", MuSide::Lower, sub.lo, false, "isolated vertices " + set_string(iso) + " removed", iso};
      MuStep hi{"R6", MuSide::Upper, sub.hi, false, lo.claim, iso};
      lo.sub = side_steps(sub, MuSide::Lower);
      hi.sub = side_steps(sub, MuSide::Upper);
      lower(std::move(lo));
      upper(std::move(hi));
    }
    const VertexSet cones = cone_vertices(g);
    if (cones != 0) {
      const int c = lowest(cones);
      const Graph rest = delete_vertex(g, c);
      if (rest.size() > 0) {
        const MuInterval sub = run(rest, full);
        const std::string claim = "vertex " + std::to_string(c) + " cones over the rest";
        MuStep lo{"R4", MuSide::Lower, sub.lo + 1, false, claim, bit(c)};
        MuStep hi{"R4", MuSide::Upper, sub.hi + 1, false, claim, bit(c)};
        lo.sub = side_steps(sub, MuSide::Lower);
        hi.sub = side_steps(sub, MuSide::Upper);
        lower(std::move(lo));
        upper(std::move(hi));
      }
    }

    // Characterisations, cheapest first.
    for (const ClassRule& cr : kClassRules) {
      if (cr.external && opt_.paper_rules_only) continue;
      if (r.lo > cr.bound) continue;
      if (cr.cls == MuClass::Linkless && r.hi <= 4) continue;
      if (in_class(g, cr.cls, opt_.budget)) {
        upper({cr.rule, MuSide::Upper, cr.bound, cr.external, std::string(cr.name)});
        break;
      }
      MuStep s{cr.rule, MuSide::Lower, cr.bound + 1, cr.external, std::string("not ") + cr.name};
      s.minor = obstruction(g, cr.cls);
      lower(std::move(s));
    }
    if (done()) return r;

    // R3: delete S to reach a class with a known bound.
    for (const ClassRule& cr : kClassRules) {
      if (cr.external && opt_.paper_rules_only) continue;
      const int max_k = cr.cls == MuClass::Linkless ? 2 : n;
      for (int k = 1; k <= max_k && cr.bound + k < r.hi; ++k) {
        std::optional<VertexSet> hit;
        if (binomial(n, k) > 200'000) break;
        for_each_subset(apex_candidate_order(g, true), k, [&](VertexSet s) {
          if (!in_class(delete_vertices(g, s), cr.cls, opt_.budget)) return false;
          hit = s;
          return true;
        });
        if (hit) {
          MuStep s{"R3", MuSide::Upper, cr.bound + k, cr.external,
                   "deleting " + set_string(*hit) + " leaves a " + cr.name + " graph", *hit};
          s.sub.push_back({cr.rule, MuSide::Upper, cr.bound, cr.external, cr.name});
          upper(std::move(s));
          break;
        }
      }
    }
    if (done()) return r;

    if (!opt_.paper_rules_only) klv_rules(g, lower);
    if (done() || !full) return r;

    deletion_lower(g, lower, r.lo);
    if (done()) return r;

    // R5 seeds, one target value at a time.
    for (int t = r.lo + 1; t <= r.hi; ++t) {
      bool hit = false;
      for (const MuSeed& seed : mu_seeds()) {
        if (seed.value != t || seed.graph.order() > n || seed.graph.size() > g.size()) continue;
        MinorResult m = has_minor(g, seed.graph, opt_.budget, seed.name);
        if (!m.found()) continue;
        MuStep s{"R5", MuSide::Lower, t, false, "has a " + seed.name + " minor (seed bound " + std::to_string(t) + ")"};
        s.minor = std::move(m.certificate);
        lower(std::move(s));
        hit = true;
        break;
      }
      if (!hit) break;
    }
    return r;
  }

 private:
  static std::vector<MuStep> side_steps(const MuInterval& sub, MuSide side) {
    std::vector<MuStep> out;
    for (const MuStep& s : sub.trace)
      if (s.side == side) out.push_back(s);
    return out;
  }

  std::optional<MinorCertificate> obstruction(const Graph& g, MuClass c) {
    switch (c) {
      case MuClass::LinearForest: return std::nullopt;
      case MuClass::Outerplanar: return is_outerplanar(g).obstruction;
      case MuClass::Planar: return is_planar(g).obstruction;
      case MuClass::Linkless: return is_il(g, opt_.budget).certificate;
    }
    return std::nullopt;
  }

  template <class Lower>
  void klv_rules(const Graph& g, Lower& lower) {
    const int n = g.order();
    const Graph cg = complement(g);
    if (is_linear_forest(cg)) lower({"KLV", MuSide::Lower, n - 3, true, "complement is a disjoint union of paths"});
    else if (is_outerplanar_graph(cg)) lower({"KLV", MuSide::Lower, n - 4, true, "complement is outerplanar"});
    else if (is_planar_graph(cg)) lower({"KLV", MuSide::Lower, n - 5, true, "complement is planar"});
  }

  /// mu(G) >= mu(G - S) for |S| <= 2, bounding G - S without seeds.
  template <class Lower>
  void deletion_lower(const Graph& g, Lower& lower, int current) {
    const int n = g.order();
    for (int k = 1; k <= std::min(2, n - 2); ++k) {
      MuStep best;
      best.value = current;
      for_each_subset(apex_candidate_order(g, true), k, [&](VertexSet s) {
        const MuInterval sub = run(delete_vertices(g, s), false);
        if (sub.lo > best.value) {
          best = {"minor", MuSide::Lower, sub.lo, false, "deleting " + set_string(s) + " gives a minor", s};
          best.sub = side_steps(sub, MuSide::Lower);
        }
        return false;
      });
      if (best.value > current) {
        best.external = std::any_of(best.sub.begin(), best.sub.end(), [](const MuStep& x) { return x.external; });
        lower(std::move(best));
        return;
      }
    }
  }

  MuOptions opt_;
};

}  // namespace detail

inline MuInterval mu_bounds(const Graph& g, MuOptions opt = {}) {
  if (g.order() > kMuMaxOrder) throw TooLarge("mu bounds limited to 13 vertices");
  return detail::MuBounder(std::move(opt)).run(g, true);
}

inline bool trace_uses_external(const std::vector<MuStep>& trace) {
  for (const MuStep& s : trace)
    if (s.external || trace_uses_external(s.sub)) return true;
  return false;
}

namespace detail {

inline Validation validate_step(const Graph& g, const MuStep& s, Budget budget);

/// Checks a sub-trace against the reduced graph and returns its best bound.
inline std::optional<int> best_of(const Graph& g, const std::vector<MuStep>& steps, MuSide side, Budget budget,
                                  std::string& why) {
  std::optional<int> best;
  for (const MuStep& s : steps) {
    if (s.side != side) continue;
    Validation v = validate_step(g, s, budget);
    if (!v) {
      why = s.rule + ": " + v.reason;
      return std::nullopt;
    }
    if (!best || (side == MuSide::Lower ? s.value > *best : s.value < *best)) best = s.value;
  }
  if (!best) why = "sub-trace has no " + to_string(side) + " bound";
  return best;
}

inline Validation validate_step(const Graph& g, const MuStep& s, Budget budget) {
  const int n = g.order();
  const bool lo = s.side == MuSide::Lower;
  auto expect = [&](bool ok, const std::string& why) { return ok ? Validation{} : Validation::fail(why); };

  if (s.rule == "base") {
    if (n <= 1) return expect(s.value == 0 && !lo, "mu(K1) is 0");
    return expect(g.size() == 0 && s.value == 1, "edgeless base value misapplied");
  }
  if (s.rule == "R6" || s.rule == "R4" || s.rule == "minor") {
    if ((s.removed & ~g.vertices()) != 0 || s.removed == 0) return Validation::fail("bad removed set");
    const Graph rest = delete_vertices(g, s.removed);
    int shift = 0;
    if (s.rule == "R6" && (s.removed & ~isolated_vertices(g)) != 0) return Validation::fail("removed vertex is not isolated");
    if (s.rule == "R4") {
      if (count(s.removed) != 1 || (s.removed & cone_vertices(g)) == 0) return Validation::fail("removed vertex is not a cone");
      shift = 1;
    }
    if ((s.rule == "R6" || s.rule == "R4") && rest.size() == 0) return Validation::fail("remaining graph has no edge");
    if (s.rule == "minor" && !lo) return Validation::fail("deletion only gives lower bounds");
    std::string why;
    auto b = best_of(rest, s.sub, s.side, budget, why);
    if (!b) return Validation::fail(why);
    return expect(s.value == *b + shift, "value does not follow from the sub-trace");
  }
  if (s.rule == "R3") {
    if (lo || s.removed == 0 || (s.removed & ~g.vertices()) != 0) return Validation::fail("bad R3 step");
    std::string why;
    auto b = best_of(delete_vertices(g, s.removed), s.sub, MuSide::Upper, budget, why);
    if (!b) return Validation::fail(why);
    return expect(s.value == *b + count(s.removed), "R3 value is not bound + |S|");
  }
  if (s.rule == "R5") {
    if (!lo) return Validation::fail("R5 gives lower bounds");
    if (s.value == 1) return expect(g.size() > 0, "no edge");
    if (!s.minor) return Validation::fail("missing minor certificate");
    const MuSeed* seed = nullptr;
    for (const MuSeed& m : mu_seeds())
      if (m.name == s.minor->target_name) seed = &m;
    if (!seed || !(seed->graph == s.minor->target)) return Validation::fail("certificate target is not a registered seed");
    if (seed->value != s.value) return Validation::fail("seed bound mismatch");
    return validate_certificate(g, *s.minor);
  }
  if (s.rule == "KLV") {
    if (!lo) return Validation::fail("KLV gives lower bounds");
    const Graph cg = complement(g);
    if (s.value == n - 3) return expect(is_linear_forest(cg), "complement is not a disjoint union of paths");
    if (s.value == n - 4) return expect(is_outerplanar(cg).outerplanar, "complement is not outerplanar");
    if (s.value == n - 5) return expect(is_planar(cg).planar, "complement is not planar");
    return Validation::fail("KLV value not of the form n - 3, n - 4, n - 5");
  }
  for (const ClassRule& cr : kClassRules) {
    if (s.rule != cr.rule) continue;
    if (!lo) {
      if (s.value != cr.bound) return Validation::fail("class bound mismatch");
      switch (cr.cls) {
        case MuClass::LinearForest: return expect(is_linear_forest(g), "not a disjoint union of paths");
        case MuClass::Outerplanar: return validate_outerplanarity(g, is_outerplanar(g));
        case MuClass::Planar: {
          const PlanarityResult p = is_planar(g);
          if (!p.planar) return Validation::fail("not planar");
          return validate_planarity(g, p);
        }
        case MuClass::Linkless: return expect(!is_il(g, budget).il, "has a Petersen-family minor");
      }
    }
    if (s.value != cr.bound + 1) return Validation::fail("class bound mismatch");
    if (cr.cls == MuClass::LinearForest) return expect(!is_linear_forest(g), "is a disjoint union of paths");
    if (!s.minor) return Validation::fail("missing obstruction certificate");
    return validate_certificate(g, *s.minor);
  }
  return Validation::fail("unknown rule " + s.rule);
}

}  // namespace detail

/// Re-checks every step's premise independently of the search.
inline Validation validate_mu(const Graph& g, const MuInterval& m, Budget budget = default_minor_budget()) {
  if (m.lo > m.hi) return Validation::fail("empty interval");
  std::string why;
  for (MuSide side : {MuSide::Lower, MuSide::Upper}) {
    auto b = detail::best_of(g, m.trace, side, budget, why);
    if (!b) {
      if (side == MuSide::Lower && m.lo == 0) continue;
      return Validation::fail(why);
    }
    if (*b != (side == MuSide::Lower ? m.lo : m.hi)) return Validation::fail(to_string(side) + " bound not attained by the trace");
  }
  return {};
}

enum class KlvStatus { Holds, Fails, Inconclusive };

inline std::string to_string(KlvStatus s) {
  switch (s) {
    case KlvStatus::Holds: return "holds";
    case KlvStatus::Fails: return "fails";
    case KlvStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct KlvResult {
  KlvStatus status = KlvStatus::Inconclusive;
  MuInterval g;
  MuInterval cg;
};

/// mu(G) + mu(cG) >= n - 2, decided from the two intervals.
inline KlvResult check_klv(const Graph& g, MuOptions opt = {}) {
  if (g.order() > 12) throw TooLarge("KLV check limited to 12 vertices");
  KlvResult r;
  r.g = mu_bounds(g, opt);
  r.cg = mu_bounds(complement(g), opt);
  const int target = g.order() - 2;
  if (r.g.lo + r.cg.lo >= target) r.status = KlvStatus::Holds;
  else if (r.g.hi + r.cg.hi < target) r.status = KlvStatus::Fails;
  return r;
}

}  // namespace nsp

#endif  // NSP_MU_HPP
