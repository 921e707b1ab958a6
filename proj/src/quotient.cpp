#include "symgraph/quotient.hpp"

#include <algorithm>

#include "symgraph/errors.hpp"
#include "symgraph/group_ops.hpp"

namespace symgraph {

static void require_acts_on(const Digraph& d, const PermGroup& n) {
  if (n.degree() != d.n) throw InvalidInput("quotient: degree mismatch");
  for (const auto& g : n.generators())
    for (auto [u, v] : d.arcs) {
      const std::pair<int, int> img{g(u), g(v)};
      if (!std::binary_search(d.arcs.begin(), d.arcs.end(), img))
        throw InvalidInput("quotient: a generator does not preserve the arc set");
    }
}

QuotientDigraph quotient_digraph(const Digraph& d, const PermGroup& n) {
  require_acts_on(d, n);
  QuotientDigraph q;
  q.orbits = orbits_of(n);
  q.orbit_of.assign(d.n, -1);
  for (int b = 0; b < static_cast<int>(q.orbits.size()); ++b)
    for (int v : q.orbits[b]) q.orbit_of[v] = b;

  std::vector<std::pair<int, int>> arcs;
  for (auto [u, v] : d.arcs) {
    const int bu = q.orbit_of[u], bv = q.orbit_of[v];
    if (bu != bv) arcs.emplace_back(bu, bv);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  q.quotient = Digraph::from_arcs(static_cast<int>(q.orbits.size()), std::move(arcs));
  return q;
}

QuotientDigraph quotient_of_graph(const Graph& g, const PermGroup& n) {
  return quotient_digraph(graph_as_digraph(g), n);
}

int cross_arc_count(const Digraph& d, const QuotientDigraph& q, int alpha, int c) {
  if (alpha < 0 || alpha >= d.n) throw InvalidInput("cross count: vertex out of range");
  if (c < 0 || c >= static_cast<int>(q.orbits.size()))
    throw InvalidInput("cross count: orbit out of range");
  int cnt = 0;
  for (auto [u, v] : d.arcs)
    if (u == alpha && q.orbit_of[v] == c) ++cnt;
  return cnt;
}

PermGroup induced_on_orbits(const PermGroup& g, const QuotientDigraph& q) {
  if (g.degree() != static_cast<int>(q.orbit_of.size()))
    throw InvalidInput("orbit action: degree mismatch");
  const int m = static_cast<int>(q.orbits.size());
  std::vector<Permutation> gens;
  gens.reserve(g.generators().size());
  for (const auto& s : g.generators()) {
    std::vector<int> img(m, -1);
    for (int b = 0; b < m; ++b) img[b] = q.orbit_of[s(q.orbits[b][0])];
    for (int v = 0; v < g.degree(); ++v)
      if (q.orbit_of[s(v)] != img[q.orbit_of[v]])
        throw InvalidInput("orbit action: a generator splits an orbit class");
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  if (gens.empty()) return PermGroup::trivial(m);
  return PermGroup(m, std::move(gens));
}

Graph arc_orbit_subgraph(int n, std::vector<std::pair<int, int>> arcs) {
  Digraph d = Digraph::from_arcs(n, std::move(arcs));
  return digraph_as_graph(d);
}

}  // namespace symgraph
