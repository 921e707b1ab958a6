#include "symgraph/report.hpp"

#include <json.hpp>

#include "symgraph/errors.hpp"
#include "symgraph/group_ops.hpp"

namespace symgraph {

using json = nlohmann::ordered_json;

namespace {

json primes_json(const std::vector<std::uint64_t>& ps) {
  json a = json::array();
  for (auto p : ps) a.push_back(p);
  return a;
}

json check_json(const CheckResult& c) {
  json j;
  j["id"] = c.id;
  j["status"] = check_status_name(c.status);
  j["detail"] = c.detail;
  return j;
}

json classification_json(const NormalClassification& c) {
  json j;
  j["tag"] = normal_case_name(c.tag);
  j["point_stabilizer_order"] = order_as_u64(c.point_stab_order);
  j["orbit_count"] = c.orbit_count;
  j["quotient_arc_transitive"] = c.quotient_arc_transitive;
  j["quotient_valency"] = c.quotient_valency;
  j["edge_orbit_count"] = c.n_edge_orbits;
  if (!c.half_edge_ids.empty()) {
    json ids = json::array();
    for (int e : c.half_edge_ids) ids.push_back(e);
    j["half_edge_ids"] = ids;
  }
  if (c.swapping_element) {
    json img = json::array();
    for (int v : c.swapping_element->images()) img.push_back(v);
    j["swapping_element"] = img;
  }
  return j;
}

}  // namespace

AnalysisReport analyze_action(const CertifiedAction& a,
                              const std::vector<std::pair<std::string, PermGroup>>& normals,
                              const std::string& graph_id, const std::string& group_id,
                              int aut_vertex_cap) {
  AnalysisReport r;
  r.graph_id = graph_id;
  r.group_id = group_id;
  r.n = a.graph.n;
  r.edge_count = static_cast<int>(a.graph.edges.size());
  r.valency = a.graph.regular_valency().value_or(-1);
  r.connected = a.graph.connected();
  r.group_order = a.group.order();
  r.profile = transitivity_profile(a);

  if (r.n > 0 && !a.graph.adjacency()[0].empty()) {
    const LocalAction la = local_action(a, 0);
    r.point_stab_order = la.stabilizer_order;
    r.local_order = la.induced.order();
    r.kernel_order = la.kernel_order;
    r.local_degree = static_cast<int>(la.neighborhood.size());
    r.pi_point_stab = prime_divisors(la.stabilizer_order);
    r.pi_local = prime_divisors(la.induced.order());
  }

  if (!a.graph.edges.empty()) {
    const ArcPairing ap = arc_pairing(a);
    r.arc_orbits = ap.arcs.orbit_count();
    r.self_paired = ap.self_paired;
    r.mutual_pairs = ap.mutual_pairs;
  }
  r.arc_reversal = check_arc_reversal_witness(a.group, a.graph);

  if (r.n <= aut_vertex_cap) {
    const PermGroup aut = graph_automorphisms(a.graph, aut_vertex_cap);
    r.aut.computed = true;
    r.aut.order = aut.order();
    r.aut.contains_action = true;
    for (const auto& g : a.group.generators())
      if (!aut.contains(g)) {
        r.aut.contains_action = false;
        break;
      }
    r.aut.equals_action = aut.same_group_as(a.group);
  }

  const Digraph d = graph_as_digraph(a.graph);
  for (const auto& [label, n] : normals) {
    NormalSection sec;
    sec.label = label;
    sec.order = n.order();
    try {
      sec.classification = classify_normal_subgroup(a, n);
    } catch (const InvalidInput& e) {
      sec.classification_error = e.what();
    }
    sec.checks = structure_checks(a.group, n, d);
    r.normals.push_back(std::move(sec));
  }
  return r;
}

std::string report_to_text(const AnalysisReport& r) {
  json j;
  j["graph"] = r.graph_id;
  j["group"] = r.group_id;
  j["n"] = r.n;
  j["edge_count"] = r.edge_count;
  j["valency"] = r.valency;
  j["connected"] = r.connected;
  j["group_order"] = order_to_string(r.group_order);

  json t;
  t["vertex"] = r.profile.vertex;
  t["edge"] = r.profile.edge;
  t["arc"] = r.profile.arc;
  t["two_arc"] = r.profile.two_arc;
  t["two_arc_evaluated"] = r.profile.two_arc_evaluated;
  t["primitive"] = r.profile.primitive;
  t["vertex_orbits"] = r.profile.vertex_orbits;
  t["edge_orbits"] = r.profile.edge_orbits;
  t["arc_orbits"] = r.profile.arc_orbits;
  t["two_arc_orbits"] = r.profile.two_arc_orbits;
  j["transitivity"] = t;

  json l;
  l["vertex"] = 0;
  l["degree"] = r.local_degree;
  l["point_stabilizer_order"] = order_to_string(r.point_stab_order);
  l["induced_order"] = order_to_string(r.local_order);
  l["kernel_order"] = order_to_string(r.kernel_order);
  l["pi_point_stabilizer"] = primes_json(r.pi_point_stab);
  l["pi_induced"] = primes_json(r.pi_local);
  j["local_action"] = l;

  json p;
  p["arc_orbits"] = r.arc_orbits;
  p["self_paired"] = r.self_paired;
  p["mutual_pairs"] = r.mutual_pairs;
  j["arc_pairing"] = p;

  j["arc_reversal_witness"] = check_json(r.arc_reversal);

  json au;
  au["computed"] = r.aut.computed;
  if (r.aut.computed) {
    au["order"] = order_to_string(r.aut.order);
    au["contains_action"] = r.aut.contains_action;
    au["equals_action"] = r.aut.equals_action;
  }
  j["automorphisms"] = au;

  json ns = json::array();
  for (const auto& sec : r.normals) {
    json s;
    s["label"] = sec.label;
    s["order"] = order_to_string(sec.order);
    if (sec.classification)
      s["classification"] = classification_json(*sec.classification);
    else
      s["classification_error"] = sec.classification_error;
    json checks = json::array();
    for (const auto& c : sec.checks) checks.push_back(check_json(c));
    s["checks"] = checks;
    ns.push_back(std::move(s));
  }
  j["normal_subgroups"] = ns;

  return j.dump(2) + "\n";
}

}  // namespace symgraph
