#include "symgraph/lemmas.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "symgraph/coset.hpp"
#include "symgraph/errors.hpp"
#include "symgraph/group_ops.hpp"
#include "symgraph/quotient.hpp"

namespace symgraph {

namespace {

// past this many vertices the claims are checked at one representative per
// orbit instead of everywhere; conjugacy carries them to the rest
constexpr int kExhaustiveVertexLimit = 60;

bool digraph_acts(const PermGroup& g, const Digraph& d) {
  if (g.degree() != d.n) return false;
  for (const auto& s : g.generators())
    for (auto [u, v] : d.arcs) {
      const std::pair<int, int> img{s(u), s(v)};
      if (!std::binary_search(d.arcs.begin(), d.arcs.end(), img)) return false;
    }
  return true;
}

int arc_orbit_count(const PermGroup& g, const Digraph& d) {
  const int m = static_cast<int>(d.arcs.size());
  if (m == 0) return 0;
  auto arc_id = [&](int u, int v) {
    const auto it = std::lower_bound(d.arcs.begin(), d.arcs.end(), std::pair<int, int>{u, v});
    if (it == d.arcs.end() || *it != std::pair<int, int>{u, v})
      throw InternalInconsistency("arc image left the arc set");
    return static_cast<int>(it - d.arcs.begin());
  };
  std::vector<int> root(m);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int a) {
    while (root[a] != a) a = root[a] = root[root[a]];
    return a;
  };
  for (const auto& s : g.generators())
    for (int i = 0; i < m; ++i) {
      const int j = arc_id(s(d.arcs[i].first), s(d.arcs[i].second));
      root[find(i)] = find(j);
    }
  int cnt = 0;
  for (int i = 0; i < m; ++i)
    if (find(i) == i) ++cnt;
  return cnt;
}

std::string primes_str(const std::vector<std::uint64_t>& ps) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < ps.size(); ++i) os << (i ? "," : "") << ps[i];
  os << '}';
  return os.str();
}

// empty reason means all hypotheses hold
std::string common_hypotheses(const PermGroup& g, const PermGroup& n, const Digraph& d) {
  if (g.degree() != d.n || n.degree() != d.n) return "degree mismatch";
  if (d.n == 0) return "empty vertex set";
  if (d.arcs.empty()) return "empty arc set";
  if (!digraph_acts(g, d)) return "the group does not preserve the arc set";
  if (!digraph_acts(n, d)) return "the subgroup does not preserve the arc set";
  if (!n.is_subgroup_of(g)) return "not a subgroup";
  if (!is_normal_in(n, g)) return "the subgroup is not normal";
  if (!d.weakly_connected()) return "the digraph is not connected";
  if (!is_transitive(g)) return "the group is not vertex-transitive";
  return "";
}

std::vector<int> check_points(int n) {
  if (n <= kExhaustiveVertexLimit) {
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }
  return {0};
}

bool is_prime_u64(std::uint64_t m) {
  if (m < 2) return false;
  for (std::uint64_t d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

bool is_two_power(std::uint64_t m) { return m > 0 && (m & (m - 1)) == 0; }

}  // namespace

std::string check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "SKIP";
  }
  throw InternalInconsistency("unknown check status");
}

CheckResult check_pi_local_point(const PermGroup& g, const PermGroup& n, const Digraph& d) {
  CheckResult r{"pi_local_point", CheckStatus::Skip, ""};
  if (auto why = common_hypotheses(g, n, d); !why.empty()) {
    r.detail = why;
    return r;
  }
  const bool undirected = d.reversal_closed();
  const auto out = d.out_neighbors();
  for (int alpha : check_points(d.n)) {
    const LocalAction la = local_action_on(d, n, alpha);
    const auto stab_primes = prime_divisors(la.stabilizer_order);
    const auto local_primes = prime_divisors(la.induced.order());
    if (stab_primes != local_primes) {
      std::ostringstream os;
      os << "alpha=" << alpha << ": stabilizer primes " << primes_str(stab_primes)
         << " != local primes " << primes_str(local_primes);
      r.status = CheckStatus::Fail;
      r.detail = os.str();
      return r;
    }
    const auto valency = static_cast<std::uint64_t>(out[alpha].size());
    if (!stab_primes.empty() && valency < stab_primes.back()) {
      std::ostringstream os;
      os << "alpha=" << alpha << ": valency " << valency << " < max prime "
         << stab_primes.back();
      r.status = CheckStatus::Fail;
      r.detail = os.str();
      return r;
    }
    if (undirected)
      for (int beta : out[alpha]) {
        const int pts[2] = {alpha, beta};
        const PermGroup ns = stabilizer(n, StabMode::Pointwise, pts);
        const auto arc_primes = prime_divisors(ns.order());
        if (!arc_primes.empty() && valency <= arc_primes.back()) {
          std::ostringstream os;
          os << "alpha=" << alpha << " beta=" << beta << ": valency " << valency
             << " <= max arc stabilizer prime " << arc_primes.back();
          r.status = CheckStatus::Fail;
          r.detail = os.str();
          return r;
        }
      }
  }
  r.status = CheckStatus::Pass;
  return r;
}

CheckResult check_pi_local_arc(const PermGroup& g, const PermGroup& n, const Digraph& d) {
  CheckResult r{"pi_local_arc", CheckStatus::Skip, ""};
  if (auto why = common_hypotheses(g, n, d); !why.empty()) {
    r.detail = why;
    return r;
  }
  if (arc_orbit_count(g, d) != 1) {
    r.detail = "the arc set is not a single orbit";
    return r;
  }
  const bool exhaustive = d.n <= kExhaustiveVertexLimit;
  const std::size_t arc_limit = exhaustive ? d.arcs.size() : 1;
  for (std::size_t i = 0; i < arc_limit; ++i) {
    const auto [u, v] = d.arcs[i];
    const int pts[2] = {u, v};
    const PermGroup ns = stabilizer(n, StabMode::Pointwise, pts);
    const LocalAction la = local_action_on(d, ns, v);
    const auto stab_primes = prime_divisors(ns.order());
    const auto local_primes = prime_divisors(la.induced.order());
    if (stab_primes != local_primes) {
      std::ostringstream os;
      os << "arc (" << u << "," << v << "): stabilizer primes " << primes_str(stab_primes)
         << " != head-local primes " << primes_str(local_primes);
      r.status = CheckStatus::Fail;
      r.detail = os.str();
      return r;
    }
  }
  r.status = CheckStatus::Pass;
  return r;
}

CheckResult check_quotient_valency_product(const PermGroup& g, const PermGroup& n,
                                           const Digraph& d) {
  CheckResult r{"quotient_valency_product", CheckStatus::Skip, ""};
  if (auto why = common_hypotheses(g, n, d); !why.empty()) {
    r.detail = why;
    return r;
  }
  if (arc_orbit_count(g, d) != 1) {
    r.detail = "the arc set is not a single orbit";
    return r;
  }
  if (is_transitive(n)) {
    r.detail = "the subgroup is transitive";
    return r;
  }
  const QuotientDigraph q = quotient_digraph(d, n);
  const auto out = d.out_neighbors();
  const auto qout = q.quotient.out_neighbors();
  for (int alpha : check_points(d.n)) {
    const int b = q.orbit_of[alpha];
    const auto valency = static_cast<int>(out[alpha].size());
    const auto qvalency = static_cast<int>(qout[b].size());
    for (int c : qout[b]) {
      const int cross = cross_arc_count(d, q, alpha, c);
      if (valency != qvalency * cross) {
        std::ostringstream os;
        os << "alpha=" << alpha << " class=" << c << ": " << valency
           << " != " << qvalency << " * " << cross;
        r.status = CheckStatus::Fail;
        r.detail = os.str();
        return r;
      }
    }
  }
  const PermGroup induced = induced_on_orbits(g, q);
  if (!q.quotient.arcs.empty() && arc_orbit_count(induced, q.quotient) != 1) {
    r.status = CheckStatus::Fail;
    r.detail = "induced group is not arc-transitive on the quotient";
    return r;
  }
  r.status = CheckStatus::Pass;
  return r;
}

CheckResult check_quotient_semiregular_criterion(const PermGroup& g, const PermGroup& n,
                                                 const Digraph& d) {
  CheckResult r{"quotient_semiregular_criterion", CheckStatus::Skip, ""};
  if (auto why = common_hypotheses(g, n, d); !why.empty()) {
    r.detail = why;
    return r;
  }
  if (is_transitive(n)) {
    r.detail = "the subgroup is transitive";
    return r;
  }
  const QuotientDigraph q = quotient_digraph(d, n);
  const auto out = d.out_neighbors();
  const auto qout = q.quotient.out_neighbors();
  bool premise = false;
  for (int alpha = 0; alpha < d.n && !premise; ++alpha)
    premise = out[alpha].size() == qout[q.orbit_of[alpha]].size();
  if (!premise) {
    r.detail = "no vertex keeps its out-valency in the quotient";
    return r;
  }
  for (const auto& orbit : q.orbits)
    if (static_cast<GroupOrder>(orbit.size()) != n.order()) {
      std::ostringstream os;
      os << "orbit of " << orbit.front() << " has size " << orbit.size() << " but |N|="
         << order_to_string(n.order());
      r.status = CheckStatus::Fail;
      r.detail = os.str();
      return r;
    }
  r.status = CheckStatus::Pass;
  return r;
}

std::vector<CheckResult> structure_checks(const PermGroup& g, const PermGroup& n,
                                          const Digraph& d) {
  return {
      check_pi_local_point(g, n, d),
      check_pi_local_arc(g, n, d),
      check_quotient_valency_product(g, n, d),
      check_quotient_semiregular_criterion(g, n, d),
  };
}

ArcWitness find_arc_witness(const CertifiedAction& a, int alpha, int beta) {
  if (a.graph.edges.empty()) throw InvalidInput("arc witness: the graph has no edges");
  if (!a.graph.connected()) throw InvalidInput("arc witness: the graph is not connected");
  if (!a.graph.has_edge(std::min(alpha, beta), std::max(alpha, beta)))
    throw InvalidInput("arc witness: not an edge");
  const Digraph arcs = graph_as_digraph(a.graph);
  if (arc_orbit_count(a.group, arcs) != 1)
    throw InvalidInput("arc witness: the action is not arc-transitive");

  auto x = least_element_where(a.group, [&](const Permutation& e) {
    return e(alpha) == beta && e(beta) == alpha && e.is_two_element();
  });
  if (!x)
    throw SearchFailure("arc witness: no element of 2-power order swaps the least edge");

  const int pts[2] = {alpha, beta};
  const PermGroup edge_stab = stabilizer(a.group, StabMode::Pointwise, pts);
  const int apt[1] = {alpha};
  const PermGroup point_stab = stabilizer(a.group, StabMode::Point, apt);

  ArcWitness w{alpha, beta, *x, edge_stab.order(), false, false, false};
  w.normalizes_edge_stab = conjugate_group(edge_stab, *x).same_group_as(edge_stab);

  std::vector<Permutation> gens = point_stab.generators();
  gens.push_back(*x);
  w.generates_with_point_stab = subgroup_generated(a.group, std::move(gens)).order() == a.group.order();

  const CosetGraphResult cg = coset_graph(a.group, point_stab, *x);
  if (cg.graph.n == a.graph.n && cg.graph.edges.size() == a.graph.edges.size()) {
    std::vector<int> image(cg.graph.n, -1);
    std::vector<bool> hit(a.graph.n, false);
    bool ok = true;
    for (int i = 0; i < cg.graph.n && ok; ++i) {
      const int v = cg.geometry.reps[i](alpha);
      if (hit[v]) ok = false;
      image[i] = v;
      hit[v] = true;
    }
    for (auto [u, v] : cg.graph.edges) {
      if (!ok) break;
      ok = a.graph.has_edge(std::min(image[u], image[v]), std::max(image[u], image[v]));
    }
    w.rebuild_matches = ok;
  }
  return w;
}

ArcWitness find_arc_witness(const CertifiedAction& a) {
  if (a.graph.edges.empty()) throw InvalidInput("arc witness: the graph has no edges");
  const auto [alpha, beta] = a.graph.edges.front();
  return find_arc_witness(a, alpha, beta);
}

CheckResult check_arc_reversal_witness(const PermGroup& g, const Graph& gamma) {
  CheckResult r{"arc_reversal_witness", CheckStatus::Skip, ""};
  if (gamma.edges.empty()) {
    r.detail = "the graph has no edges";
    return r;
  }
  if (!gamma.connected()) {
    r.detail = "the graph is not connected";
    return r;
  }
  std::optional<CertifiedAction> a;
  try {
    a = certify_action(g, gamma);
  } catch (const CertificationFailure&) {
    r.detail = "the group does not act on the graph";
    return r;
  }
  if (arc_orbit_count(a->group, graph_as_digraph(a->graph)) != 1) {
    r.detail = "the action is not arc-transitive";
    return r;
  }
  ArcWitness w = [&] {
    try {
      return find_arc_witness(*a);
    } catch (const SearchFailure& e) {
      r.status = CheckStatus::Fail;
      r.detail = e.what();
      return ArcWitness{0, 0, Permutation(a->graph.n), 1, false, false, false};
    }
  }();
  if (r.status == CheckStatus::Fail) return r;
  if (!w.normalizes_edge_stab) {
    r.status = CheckStatus::Fail;
    r.detail = "witness does not normalize the edge stabilizer";
    return r;
  }
  if (!w.generates_with_point_stab) {
    r.status = CheckStatus::Fail;
    r.detail = "witness and point stabilizer do not generate the group";
    return r;
  }
  if (!w.rebuild_matches) {
    r.status = CheckStatus::Fail;
    r.detail = "coset rebuild does not match the graph";
    return r;
  }
  r.status = CheckStatus::Pass;
  return r;
}

std::string normal_case_name(NormalCase c) {
  switch (c) {
    case NormalCase::Semiregular: return "SEMIREGULAR";
    case NormalCase::Stabilizer2Group: return "STABILIZER_2GROUP";
    case NormalCase::CycleQuotient: return "CYCLE_QUOTIENT";
    case NormalCase::BipartiteHalves: return "BIPARTITE_HALVES";
    case NormalCase::EdgeTransitive: return "N_EDGE_TRANSITIVE";
    case NormalCase::PairedEdgePartition: return "PAIRED_EDGE_PARTITION";
  }
  throw InternalInconsistency("unknown classification case");
}

NormalClassification classify_normal_subgroup(const CertifiedAction& a, const PermGroup& n) {
  const auto valency = a.graph.regular_valency();
  if (!valency || *valency == 0) throw InvalidInput("classification: the graph is not regular");
  if (!a.graph.connected()) throw InvalidInput("classification: the graph is not connected");
  const TransitivityProfile prof = transitivity_profile(a);
  if (!prof.arc) throw InvalidInput("classification: the action is not arc-transitive");
  if (n.degree() != a.graph.n) throw InvalidInput("classification: degree mismatch");
  if (n.order() == 1) throw InvalidInput("classification: the subgroup is trivial");
  if (!n.is_subgroup_of(a.group)) throw InvalidInput("classification: not a subgroup");
  if (!is_normal_in(n, a.group)) throw InvalidInput("classification: the subgroup is not normal");

  // the case analysis is guaranteed exactly under these; outside them a
  // non-matching case is the caller's problem, not a refutation
  const int r = *valency / 2;
  const bool in_scope = *valency % 2 == 0 && is_prime_u64(static_cast<std::uint64_t>(r)) &&
                        !prof.two_arc;
  auto fail_case = [in_scope](const std::string& msg) -> void {
    if (in_scope) throw InternalInconsistency("classification: " + msg);
    throw InvalidInput("classification outside the twice-prime hypotheses: " + msg);
  };

  NormalClassification out;
  const int apt[1] = {0};
  out.point_stab_order = stabilizer(n, StabMode::Point, apt).order();
  const auto orbits = orbits_of(n);
  out.orbit_count = static_cast<int>(orbits.size());

  std::optional<QuotientDigraph> q;
  if (out.orbit_count > 1) {
    q = quotient_of_graph(a.graph, n);
    const PermGroup induced = induced_on_orbits(a.group, *q);
    out.quotient_arc_transitive =
        !q->quotient.arcs.empty() && arc_orbit_count(induced, q->quotient) == 1;
    out.quotient_valency = static_cast<int>(q->quotient.out_neighbors()[0].size());
    if (!out.quotient_arc_transitive)
      fail_case("induced quotient action is not arc-transitive");
  }

  if (out.point_stab_order == 1) {
    for (const auto& orbit : orbits)
      if (static_cast<GroupOrder>(orbit.size()) != n.order())
        throw InternalInconsistency("classification: trivial stabilizer but unequal orbits");
    out.tag = NormalCase::Semiregular;
    return out;
  }

  if (is_two_power(order_as_u64(out.point_stab_order))) {
    if (out.orbit_count > 2 && out.quotient_valency != r)
      fail_case("2-group stabilizer but quotient valency is not the half valency");
    out.tag = NormalCase::Stabilizer2Group;
    return out;
  }

  const auto stab_primes = prime_divisors(out.point_stab_order);
  if (r % 2 == 0 || stab_primes.back() != static_cast<std::uint64_t>(r))
    fail_case("stabilizer is neither a 2-group nor of maximal odd prime the half valency");

  if (out.orbit_count >= 3) {
    const Graph qg = digraph_as_graph(q->quotient);
    const ComponentsResult comps = components_and_shapes(qg);
    const bool cycle = comps.components.size() == 1 &&
                       comps.all_of(ComponentShape::Cycle, out.orbit_count);
    const PermGroup induced = induced_on_orbits(a.group, *q);
    if (!cycle || induced.order() != static_cast<GroupOrder>(2 * out.orbit_count))
      fail_case("quotient is not a cycle with full symmetry");
    out.tag = NormalCase::CycleQuotient;
    return out;
  }
  if (out.orbit_count == 2) {
    for (auto [u, v] : a.graph.edges)
      if (q->orbit_of[u] == q->orbit_of[v])
        fail_case("two orbit classes but an edge stays inside one");
    out.tag = NormalCase::BipartiteHalves;
    return out;
  }

  const CertifiedAction na = certify_action(n, a.graph);
  const OrbitDecomposition eo = orbit_decomposition(na, ObjectKind::Edge);
  out.n_edge_orbits = eo.orbit_count();
  if (out.n_edge_orbits == 1) {
    out.tag = NormalCase::EdgeTransitive;
    return out;
  }
  if (out.n_edge_orbits != 2) fail_case("a transitive case with more than two edge orbits");

  const auto orbit_id = eo.orbit_id_of_object();
  const auto [eu, ev] = a.graph.edges[eo.representatives[0]];
  auto swapper = least_element_where(a.group, [&, eu = eu, ev = ev](const Permutation& e) {
    const int u = e(eu), v = e(ev);
    const int id = a.graph.edge_index(std::min(u, v), std::max(u, v));
    if (id < 0) throw InternalInconsistency("classification: edge image left the edge set");
    return orbit_id[id] == 1;
  });
  if (!swapper)
    throw InternalInconsistency("classification: two edge orbits but nothing swaps them");
  if (n.contains(*swapper))
    throw InternalInconsistency("classification: the edge orbit swapper lies in the subgroup");

  for (int half = 0; half < 2; ++half) {
    const Graph sub = edge_subgraph(a.graph, eo.orbits[half]);
    if (sub.regular_valency() != std::optional<int>(r))
      fail_case("a half is not regular of the half valency");
    const CertifiedAction ha = certify_action(n, sub);
    if (orbit_decomposition(ha, ObjectKind::Arc).orbit_count() != 1)
      fail_case("a half is not arc-transitive under the subgroup");
  }
  out.half_edge_ids = eo.orbits[0];
  out.swapping_element = *swapper;
  out.tag = NormalCase::PairedEdgePartition;
  return out;
}

}  // namespace symgraph
