#include "symgraph/action.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <utility>

#include "symgraph/errors.hpp"

namespace symgraph {

CertifiedAction certify_action(const PermGroup& g, const Graph& gamma) {
  if (g.degree() != gamma.n)
    throw CertificationFailure("action degree " + std::to_string(g.degree()) +
                               " does not match vertex count " + std::to_string(gamma.n));
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (auto [u, v] : gamma.edges) {
      if (!gamma.has_edge(gens[i](u), gens[i](v)))
        throw CertificationFailure("generator " + std::to_string(i) + " maps edge {" +
                                   std::to_string(u) + "," + std::to_string(v) +
                                   "} to a non-edge {" + std::to_string(gens[i](u)) + "," +
                                   std::to_string(gens[i](v)) + "}");
    }
  }
  return {g, gamma};
}

std::string object_kind_name(ObjectKind k) {
  switch (k) {
    case ObjectKind::Vertex:
      return "vertex";
    case ObjectKind::Edge:
      return "edge";
    case ObjectKind::Arc:
      return "arc";
    default:
      return "two_arc";
  }
}

std::vector<std::pair<int, int>> arc_table(const Graph& g) {
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(2 * g.edges.size());
  for (auto [u, v] : g.edges) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

std::vector<std::array<int, 3>> two_arc_table(const Graph& g) {
  const auto adj = g.adjacency();
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < g.n; ++a)
    for (int b : adj[a])
      for (int c : adj[b])
        if (c != a) out.push_back({a, b, c});
  return out;  // lex order by construction
}

std::vector<int> OrbitDecomposition::orbit_id_of_object() const {
  std::vector<int> id(object_count, -1);
  for (int i = 0; i < orbit_count(); ++i)
    for (int x : orbits[i]) id[x] = i;
  return id;
}

namespace {

OrbitDecomposition decompose(ObjectKind kind, int count,
                             const std::vector<Permutation>& gens,
                             const std::function<int(const Permutation&, int)>& image) {
  OrbitDecomposition dec;
  dec.kind = kind;
  dec.object_count = count;
  std::vector<char> seen(count, 0);
  for (int s = 0; s < count; ++s) {
    if (seen[s]) continue;
    std::vector<int> orbit{s};
    seen[s] = 1;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const Permutation& g : gens) {
        const int q = image(g, orbit[k]);
        if (!seen[q]) {
          seen[q] = 1;
          orbit.push_back(q);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    dec.representatives.push_back(orbit.front());
    dec.orbits.push_back(std::move(orbit));
  }
  return dec;
}

int arc_index(const std::vector<std::pair<int, int>>& arcs, int u, int v) {
  const std::pair<int, int> key{u, v};
  auto it = std::lower_bound(arcs.begin(), arcs.end(), key);
  if (it == arcs.end() || *it != key)
    throw InternalInconsistency("arc image fell outside the arc table");
  return static_cast<int>(it - arcs.begin());
}

}  // namespace

OrbitDecomposition orbit_decomposition(const CertifiedAction& a, ObjectKind kind) {
  const auto& gens = a.group.generators();
  switch (kind) {
    case ObjectKind::Vertex:
      return decompose(kind, a.graph.n, gens,
                       [](const Permutation& g, int v) { return g(v); });
    case ObjectKind::Edge:
      return decompose(kind, static_cast<int>(a.graph.edges.size()), gens,
                       [&](const Permutation& g, int e) {
                         auto [u, v] = a.graph.edges[e];
                         const int idx = a.graph.edge_index(g(u), g(v));
                         if (idx < 0) throw InternalInconsistency("certified action broke an edge");
                         return idx;
                       });
    case ObjectKind::Arc: {
      const auto arcs = arc_table(a.graph);
      const int count = static_cast<int>(arcs.size());
      return decompose(kind, count, gens, [&arcs](const Permutation& g, int i) {
        auto [u, v] = arcs[i];
        return arc_index(arcs, g(u), g(v));
      });
    }
    default: {
      const auto tarcs = two_arc_table(a.graph);
      const int count = static_cast<int>(tarcs.size());
      return decompose(kind, count, gens, [&tarcs](const Permutation& g, int i) {
        const auto& t = tarcs[i];
        const std::array<int, 3> key{g(t[0]), g(t[1]), g(t[2])};
        auto it = std::lower_bound(tarcs.begin(), tarcs.end(), key);
        if (it == tarcs.end() || *it != key)
          throw InternalInconsistency("2-arc image fell outside the table");
        return static_cast<int>(it - tarcs.begin());
      });
    }
  }
}

TransitivityProfile transitivity_profile(const CertifiedAction& a) {
  TransitivityProfile p;
  p.vertex_orbits = orbit_decomposition(a, ObjectKind::Vertex).orbit_count();
  p.vertex = p.vertex_orbits == 1;
  p.edge_orbits = orbit_decomposition(a, ObjectKind::Edge).orbit_count();
  p.edge = !a.graph.edges.empty() && p.edge_orbits == 1;
  p.arc_orbits = orbit_decomposition(a, ObjectKind::Arc).orbit_count();
  p.arc = !a.graph.edges.empty() && p.arc_orbits == 1;
  if (p.arc) {
    p.two_arc_evaluated = true;
    const auto dec = orbit_decomposition(a, ObjectKind::TwoArc);
    p.two_arc_orbits = dec.orbit_count();
    p.two_arc = dec.object_count > 0 && p.two_arc_orbits == 1;
  }
  if (p.vertex) p.primitive = is_primitive(a.group).primitive;
  return p;
}

LocalAction local_action_on(const Digraph& d, const PermGroup& sub, int alpha) {
  if (alpha < 0 || alpha >= d.n) throw InvalidInput("local action: vertex out of range");
  if (sub.degree() != d.n) throw InvalidInput("local action: degree mismatch");
  std::vector<int> neigh = d.out_neighbors()[alpha];
  std::sort(neigh.begin(), neigh.end());
  if (neigh.empty()) throw InvalidInput("local action at a vertex with no neighbors");

  std::vector<int> local(d.n, -1);
  for (std::size_t i = 0; i < neigh.size(); ++i) local[neigh[i]] = static_cast<int>(i);

  const int pts[1] = {alpha};
  PermGroup stab = stabilizer(sub, StabMode::Point, pts);

  const int m = static_cast<int>(neigh.size());
  std::vector<Permutation> gens;
  for (const Permutation& g : stab.generators()) {
    std::vector<int> img(m);
    for (int i = 0; i < m; ++i) {
      const int q = local[g(neigh[i])];
      if (q < 0) throw InvalidInput("stabilizer does not preserve the neighborhood");
      img[i] = q;
    }
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  PermGroup induced = gens.empty() ? PermGroup::trivial(m) : PermGroup(m, std::move(gens));
  const GroupOrder stab_order = stab.order();
  if (stab_order % induced.order() != 0)
    throw InternalInconsistency("induced order does not divide the stabilizer order");
  const GroupOrder kernel = stab_order / induced.order();
  return LocalAction{alpha, std::move(neigh), std::move(induced), stab_order, kernel};
}

LocalAction local_action(const CertifiedAction& a, int alpha) {
  return local_action_on(graph_as_digraph(a.graph), a.group, alpha);
}

ArcPairing arc_pairing(const CertifiedAction& a) {
  ArcPairing ap;
  ap.arcs = orbit_decomposition(a, ObjectKind::Arc);
  const auto arcs = arc_table(a.graph);
  const auto id_of = ap.arcs.orbit_id_of_object();
  ap.partner.resize(ap.arcs.orbit_count());
  for (int i = 0; i < ap.arcs.orbit_count(); ++i) {
    auto [u, v] = arcs[ap.arcs.representatives[i]];
    ap.partner[i] = id_of[arc_index(arcs, v, u)];
  }
  for (int i = 0; i < ap.arcs.orbit_count(); ++i) {
    if (ap.partner[ap.partner[i]] != i)
      throw InternalInconsistency("arc reversal pairing is not an involution");
    if (ap.partner[i] == i)
      ++ap.self_paired;
    else if (ap.partner[i] > i)
      ++ap.mutual_pairs;
  }
  return ap;
}

}  // namespace symgraph
