#ifndef NSP_SERIALIZE_HPP
#define NSP_SERIALIZE_HPP

// JSON views of graphs, certificates and verdicts. Every certificate is
// written inline so a report can be re-validated offline; graphs travel as
// graph6 plus an explicit edge list.

#include <string>
#include <vector>

#include "json.hpp"
#include "nsp/apex.hpp"
#include "nsp/certificate.hpp"
#include "nsp/families.hpp"
#include "nsp/graph.hpp"
#include "nsp/graph6.hpp"
#include "nsp/moves.hpp"
#include "nsp/mu.hpp"
#include "nsp/nonsep.hpp"
#include "nsp/planarity.hpp"
#include "nsp/topology.hpp"

namespace nsp {

using Json = nlohmann::ordered_json;

inline Json vertex_list(VertexSet s) { return Json(to_vector(s)); }

inline VertexSet vertex_set_from_json(const Json& j) {
  VertexSet s = 0;
  for (const auto& v : j) s |= bit(v.get<int>());
  return s;
}

inline Json edge_json(const Edge& e) { return Json::array({e.u, e.v}); }

inline Json graph_json(const Graph& g) {
  Json j;
  j["n"] = g.order();
  j["graph6"] = to_graph6(g);
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(edge_json(e));
  j["edges"] = std::move(edges);
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

/// Accepts {"graph6": ...} or {"n": ..., "edges": [[u, v], ...]}.
inline Graph graph_from_json(const Json& j) {
  Graph g;
  if (j.contains("graph6")) {
    g = parse_graph_line(j.at("graph6").get<std::string>());
  } else {
    g = Graph(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  }
  if (j.contains("labels")) g.set_labels(j.at("labels").get<std::vector<std::string>>());
  return g;
}

inline Json family_json(const FamilySpec& s) {
  Json j;
  j["spec"] = s.to_string();
  return j;
}

inline Json certificate_json(const MinorCertificate& c) {
  Json j;
  j["target_name"] = c.target_name;
  j["target"] = graph_json(c.target);
  Json sets = Json::array();
  for (VertexSet s : c.branch_sets) sets.push_back(vertex_list(s));
  j["branch_sets"] = std::move(sets);
  Json w = Json::array();
  for (const auto& x : c.witnesses) w.push_back({{"target_edge", edge_json(x.target_edge)}, {"host_edge", edge_json(x.host_edge)}});
  j["witnesses"] = std::move(w);
  return j;
}

inline MinorCertificate certificate_from_json(const Json& j) {
  MinorCertificate c;
  c.target_name = j.value("target_name", std::string{});
  c.target = graph_from_json(j.at("target"));
  for (const auto& s : j.at("branch_sets")) c.branch_sets.push_back(vertex_set_from_json(s));
  for (const auto& w : j.at("witnesses")) {
    const auto& t = w.at("target_edge");
    const auto& h = w.at("host_edge");
    c.witnesses.push_back({Edge(t.at(0).get<int>(), t.at(1).get<int>()), Edge(h.at(0).get<int>(), h.at(1).get<int>())});
  }
  return c;
}

inline Json validation_json(const Validation& v) {
  Json j;
  j["ok"] = v.ok;
  if (!v.ok) j["reason"] = v.reason;
  return j;
}

inline Json planarity_json(const PlanarityResult& p) {
  Json j;
  j["planar"] = p.planar;
  if (p.planar) j["rotation"] = p.rotation;
  if (p.obstruction) j["obstruction"] = certificate_json(*p.obstruction);
  return j;
}

inline Json outerplanarity_json(const OuterplanarityResult& r) {
  Json j;
  j["outerplanar"] = r.outerplanar;
  if (r.outerplanar) j["rotation_with_apex"] = r.rotation;
  if (r.obstruction) j["obstruction"] = certificate_json(*r.obstruction);
  return j;
}

inline Json apex_json(const ApexCertificate& c) {
  Json j;
  j["deleted"] = vertex_list(c.deleted);
  j["remainder"] = planarity_json(c.remainder);
  return j;
}

inline Json il_json(const IlResult& r) {
  Json j;
  j["il"] = r.il;
  if (r.certificate) j["certificate"] = certificate_json(*r.certificate);
  return j;
}

inline Json ik_json(const IkVerdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  if (v.ik_evidence) j["ik_certificate"] = certificate_json(*v.ik_evidence);
  if (v.nik_evidence) {
    j["apex_k"] = v.apex_k;
    j["nik_certificate"] = apex_json(*v.nik_evidence);
  }
  if (!v.exhausted.empty()) j["exhausted"] = v.exhausted;
  return j;
}

inline Json max_nil_json(const MaxNilResult& r) {
  Json j;
  j["maximal"] = r.maximal;
  j["il"] = r.il;
  if (r.counterexample) j["counterexample"] = edge_json(*r.counterexample);
  Json ev = Json::array();
  for (const auto& e : r.evidence) {
    Json x;
    x["added"] = edge_json(e.added);
    if (e.certificate) x["certificate"] = certificate_json(*e.certificate);
    ev.push_back(std::move(x));
  }
  j["evidence"] = std::move(ev);
  return j;
}

inline Json max_nik_json(const MaxNikResult& r) {
  Json j;
  j["status"] = to_string(r.status);
  if (!r.reason.empty()) j["reason"] = r.reason;
  j["self"] = ik_json(r.self);
  Json edges = Json::array();
  for (const auto& [e, v] : r.edges) edges.push_back({{"added", edge_json(e)}, {"verdict", ik_json(v)}});
  j["edges"] = std::move(edges);
  return j;
}

inline Json nonsep_json(const NonsepClassification& c) {
  Json j;
  j["kind"] = to_string(c.kind);
  if (c.kind == NonsepKind::Outerplanar || c.kind == NonsepKind::NotNonseparating) j["outerplanarity"] = outerplanarity_json(c.outer);
  if (c.hub >= 0) j["hub"] = c.hub;
  if (c.host) {
    j["host"] = c.host->to_string();
    j["embedding"] = c.embedding;
  }
  return j;
}

inline Json mu_step_json(const MuStep& s) {
  Json j;
  j["rule"] = s.rule;
  j["side"] = to_string(s.side);
  j["value"] = s.value;
  if (s.external) j["external"] = true;
  j["claim"] = s.claim;
  if (s.removed) j["removed"] = vertex_list(s.removed);
  if (s.minor) j["certificate"] = certificate_json(*s.minor);
  if (!s.sub.empty()) {
    Json sub = Json::array();
    for (const MuStep& x : s.sub) sub.push_back(mu_step_json(x));
    j["sub"] = std::move(sub);
  }
  return j;
}

/// `n` is the order of the graph the interval belongs to; nu of its
/// complement, n - mu - 1, is reported as a derived quantity only.
inline Json mu_json(const MuInterval& m, int n) {
  Json j;
  j["lo"] = m.lo;
  j["hi"] = m.hi;
  j["exact"] = m.exact();
  j["nu_of_complement"] = Json::array({n - m.hi - 1, n - m.lo - 1});
  j["uses_external_rules"] = trace_uses_external(m.trace);
  Json t = Json::array();
  for (const MuStep& s : m.trace) t.push_back(mu_step_json(s));
  j["trace"] = std::move(t);
  return j;
}

inline Json klv_json(const KlvResult& r, int n) {
  Json j;
  j["status"] = to_string(r.status);
  j["target"] = n - 2;
  j["mu"] = mu_json(r.g, n);
  j["mu_complement"] = mu_json(r.cg, n);
  return j;
}

inline Json closure_json(const ClosureResult& r) {
  Json j;
  j["count"] = r.members.size();
  j["partial"] = r.partial;
  Json members = Json::array();
  for (const ClosureMember& m : r.members) {
    Json path = Json::array();
    for (const Move& mv : m.path) path.push_back({{"kind", to_string(mv.kind)}, {"site", mv.site}});
    members.push_back({{"graph6", m.canonical}, {"n", m.graph.order()}, {"m", m.graph.size()}, {"seed", m.seed_index}, {"path", std::move(path)}});
  }
  j["members"] = std::move(members);
  return j;
}

}  // namespace nsp

#endif  // NSP_SERIALIZE_HPP
