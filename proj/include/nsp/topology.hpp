#ifndef NSP_TOPOLOGY_HPP
#define NSP_TOPOLOGY_HPP

// Intrinsic linking and knotting.
//
// IL is decided exactly: a graph is IL iff it has a Petersen-family minor.
// IK is only certified: a minor from the library of Delta-Y descendants of K7
// and K3,3,1,1 proves IK (Delta-Y preserves IK), and a deletion set of at most
// two vertices leaving a planar graph proves nIK. Anything else is unknown.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nsp/apex.hpp"
#include "nsp/canonical.hpp"
#include "nsp/families.hpp"
#include "nsp/graph6.hpp"
#include "nsp/minors.hpp"
#include "nsp/moves.hpp"

namespace nsp {

inline constexpr int kTopologyMaxOrder = 14;

struct LibraryMember {
  Graph graph;
  std::string name;
  std::string provenance;
};

namespace detail {

inline std::string petersen_family_name(const Graph& g) {
  const std::string key = canonical_form(g);
  if (key == canonical_form(complete(6))) return "K6";
  if (key == canonical_form(named("K331"))) return "K331";
  if (key == canonical_form(petersen())) return "Petersen";
  Graph k44e = complete_multipartite({4, 4});
  k44e.remove_edge(0, 4);
  if (key == canonical_form(k44e)) return "K44-e";
  return "P" + std::to_string(g.order());
}

}  // namespace detail

/// The seven Petersen-family graphs, generated from K6 by both moves.
inline const std::vector<LibraryMember>& petersen_family() {
  static const std::vector<LibraryMember> family = [] {
    std::vector<LibraryMember> out;
    for (const ClosureMember& m : closure({complete(6)}, MoveSet{true, true}, 10).members)
      out.push_back({m.graph, detail::petersen_family_name(m.graph), "closure(K6; ty, yt)"});
    return out;
  }();
  return family;
}

/// IK-certifying obstructions: Delta-Y descendants of K7 and K3,3,1,1 up to a
/// given order, plus optional user-supplied graphs.
class ObstructionLibrary {
 public:
  explicit ObstructionLibrary(int max_order = kTopologyMaxOrder) : max_order_(max_order) {
    add_descendants(complete(7), "K7");
    add_descendants(named("K331_1"), "K3311");
    sort_members();
  }

  /// Extra obstruction (graph6) with a free-text provenance note.
  void add_extra(const Graph& g, std::string name, std::string provenance) {
    if (provenance.empty()) throw InvalidArgument("extra obstructions need a provenance note");
    const std::string key = canonical_form(g);
    for (const auto& m : members_)
      if (canonical_form(m.graph) == key) return;
    members_.push_back({canonical_graph(g), std::move(name), std::move(provenance)});
    sort_members();
  }

  const std::vector<LibraryMember>& members() const { return members_; }
  int max_order() const { return max_order_; }

  /// Shared default library (built once).
  static const ObstructionLibrary& standard() {
    static const ObstructionLibrary lib(kTopologyMaxOrder);
    return lib;
  }

 private:
  void add_descendants(const Graph& seed, const std::string& seed_name) {
    const ClosureResult r = closure({seed}, MoveSet{true, false}, max_order_);
    std::map<int, int> per_order;
    for (const ClosureMember& m : r.members) {
      const int idx = per_order[m.graph.order()]++;
      const std::string name =
          m.path.empty() ? seed_name : seed_name + "/ty" + std::to_string(m.path.size()) + "." + std::to_string(idx);
      members_.push_back({m.graph, name, "closure(" + seed_name + "; ty) with " + std::to_string(m.path.size()) + " moves"});
    }
  }

  void sort_members() {
    std::stable_sort(members_.begin(), members_.end(), [](const LibraryMember& a, const LibraryMember& b) {
      return a.graph.order() < b.graph.order();
    });
  }

  int max_order_;
  std::vector<LibraryMember> members_;
};

struct IlResult {
  bool il = false;
  std::optional<MinorCertificate> certificate;
};

/// Exact IL test. Throws BudgetExceeded if any minor search is inconclusive.
inline IlResult is_il(const Graph& g, Budget budget = default_minor_budget()) {
  if (g.order() > kTopologyMaxOrder) throw TooLarge("IL test limited to 14 vertices");
  IlResult r;
  bool inconclusive = false;
  for (const LibraryMember& m : petersen_family()) {
    if (m.graph.order() > g.order()) continue;
    MinorResult res = has_minor(g, m.graph, budget, m.name);
    if (res.found()) {
      r.il = true;
      r.certificate = std::move(res.certificate);
      return r;
    }
    if (res.status == SearchStatus::Inconclusive) inconclusive = true;
  }
  if (inconclusive) throw BudgetExceeded("IL test inconclusive: raise the minor-search budget");
  return r;
}

enum class IkStatus { IK, NotIK, Unknown };

inline std::string to_string(IkStatus s) {
  switch (s) {
    case IkStatus::IK: return "IK";
    case IkStatus::NotIK: return "nIK";
    case IkStatus::Unknown: return "unknown";
  }
  return "?";
}

struct IkVerdict {
  IkStatus status = IkStatus::Unknown;
  std::optional<MinorCertificate> ik_evidence;
  std::optional<ApexCertificate> nik_evidence;
  int apex_k = -1;
  std::vector<std::string> exhausted;  // strategies tried without success
};

struct IkOptions {
  Budget budget = default_minor_budget();
  /// Also search for an IK certificate when a nIK one exists, and fail hard
  /// if both validate.
  bool check_exclusivity = true;
  const ObstructionLibrary* library = nullptr;
};

inline IkVerdict ik_status(const Graph& g, IkOptions opt = {}) {
  if (g.order() > kTopologyMaxOrder) throw TooLarge("IK certification limited to 14 vertices");
  const ObstructionLibrary& lib = opt.library ? *opt.library : ObstructionLibrary::standard();
  IkVerdict v;

  for (int k = 0; k <= std::min(2, g.order()); ++k)
    if (auto c = is_k_apex(g, k)) {
      v.nik_evidence = std::move(c);
      v.apex_k = k;
      break;
    }
  if (!v.nik_evidence) v.exhausted.push_back("no deletion set of size <= 2 leaves a planar graph");

  if (v.nik_evidence && !opt.check_exclusivity) {
    v.status = IkStatus::NotIK;
    return v;
  }

  bool inconclusive = false;
  for (const LibraryMember& m : lib.members()) {
    if (m.graph.order() > g.order() || m.graph.size() > g.size()) continue;
    MinorResult res = has_minor(g, m.graph, opt.budget, m.name);
    if (res.found()) {
      v.ik_evidence = std::move(res.certificate);
      break;
    }
    if (res.status == SearchStatus::Inconclusive) inconclusive = true;
  }
  if (!v.ik_evidence)
    v.exhausted.push_back(inconclusive ? "obstruction-library search hit its budget"
                                       : "no obstruction-library minor (exhaustive)");

  if (v.ik_evidence && v.nik_evidence) {
    const bool a = validate_certificate(g, *v.ik_evidence).ok;
    const bool b = validate_apex(g, *v.nik_evidence, v.apex_k).ok;
    if (a && b) throw IntegrityError("graph carries both a validating IK minor and a validating <=2-apex certificate");
  }
  if (v.ik_evidence) v.status = IkStatus::IK;
  else if (v.nik_evidence) v.status = IkStatus::NotIK;
  else v.status = IkStatus::Unknown;
  return v;
}

struct EdgeEvidence {
  Edge added;
  std::optional<MinorCertificate> certificate;
};

struct MaxNilResult {
  bool maximal = false;
  bool il = false;                      // g itself is IL
  std::optional<Edge> counterexample;   // non-edge whose addition stays nIL
  std::vector<EdgeEvidence> evidence;   // one IL certificate per non-edge
};

/// nIL and every added edge creates a Petersen-family minor.
inline MaxNilResult is_max_nil(const Graph& g, Budget budget = default_minor_budget()) {
  if (g.order() > 13) throw TooLarge("maxnIL test limited to 13 vertices");
  MaxNilResult r;
  IlResult self = is_il(g, budget);
  if (self.il) {
    r.il = true;
    return r;
  }
  for (const Edge& e : g.non_edges()) {
    IlResult plus = is_il(with_edge(g, e), budget);
    if (!plus.il) {
      r.counterexample = e;
      return r;
    }
    r.evidence.push_back({e, std::move(plus.certificate)});
  }
  r.maximal = true;
  return r;
}

enum class MaxNikStatus { Certified, Refuted, Inconclusive };

inline std::string to_string(MaxNikStatus s) {
  switch (s) {
    case MaxNikStatus::Certified: return "certified";
    case MaxNikStatus::Refuted: return "refuted";
    case MaxNikStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

struct MaxNikResult {
  MaxNikStatus status = MaxNikStatus::Inconclusive;
  IkVerdict self;
  std::vector<std::pair<Edge, IkVerdict>> edges;
  std::string reason;
};

inline MaxNikResult certify_max_nik(const Graph& g, IkOptions opt = {}) {
  if (g.order() > 13) throw TooLarge("maxnIK certification limited to 13 vertices");
  MaxNikResult r;
  r.self = ik_status(g, opt);
  if (r.self.status == IkStatus::IK) {
    r.status = MaxNikStatus::Refuted;
    r.reason = "graph is IK";
    return r;
  }
  bool all_ik = r.self.status == IkStatus::NotIK;
  if (!all_ik) r.reason = "graph itself is not certified nIK";
  IkOptions edge_opt = opt;
  for (const Edge& e : g.non_edges()) {
    IkVerdict v = ik_status(with_edge(g, e), edge_opt);
    const IkStatus s = v.status;
    r.edges.emplace_back(e, std::move(v));
    if (s == IkStatus::NotIK) {
      r.status = MaxNikStatus::Refuted;
      r.reason = "adding edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} stays nIK";
      return r;
    }
    if (s != IkStatus::IK) {
      all_ik = false;
      if (r.reason.empty()) r.reason = "added edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} not certified IK";
    }
  }
  r.status = all_ik ? MaxNikStatus::Certified : MaxNikStatus::Inconclusive;
  return r;
}

}  // namespace nsp

#endif  // NSP_TOPOLOGY_HPP
