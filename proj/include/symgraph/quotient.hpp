#pragma once

#include <vector>

#include "symgraph/graph.hpp"
#include "symgraph/perm_group.hpp"

namespace symgraph {

// digraph on the orbits of a group acting on the vertices of a base digraph:
// (B, C) is an arc when B != C and some base arc runs from B into C
struct QuotientDigraph {
  Digraph quotient;
  std::vector<std::vector<int>> orbits;  // canonical orbit order, ascending members
  std::vector<int> orbit_of;             // base vertex -> orbit index
};

// pre: every generator of n maps arcs of d to arcs of d
QuotientDigraph quotient_digraph(const Digraph& d, const PermGroup& n);
QuotientDigraph quotient_of_graph(const Graph& g, const PermGroup& n);

// |d(alpha) meet C| for orbit index c: arcs leaving alpha into that orbit
int cross_arc_count(const Digraph& d, const QuotientDigraph& q, int alpha, int c);

// action of g on the orbit classes; g must permute them, which holds whenever
// the orbits are those of a subgroup normalized by g
PermGroup induced_on_orbits(const PermGroup& g, const QuotientDigraph& q);

// arc subset of a digraph turned into a graph; the set must be reversal-closed
Graph arc_orbit_subgraph(int n, std::vector<std::pair<int, int>> arcs);

}  // namespace symgraph
