#pragma once

#include <vector>

#include "symgraph/graph.hpp"
#include "symgraph/perm_group.hpp"

namespace symgraph {

struct CayleyResult {
  Digraph digraph;
  // element_at[v] is the unique group element carrying point 0 to v
  std::vector<Permutation> element_at;
  bool is_graph = false;   // connection set closed under inversion
  bool connected = false;  // connection set generates the group
};

// Cayley digraph of a group that is regular in its given action. Vertices are
// the points; the arc set is {(v, w) : w = u_v(s(0))} with u_v the element
// sending 0 to v, so right translation preserves arcs. The identity is
// rejected from the connection set, repeats collapse.
CayleyResult cayley_digraph(const PermGroup& r, const std::vector<Permutation>& connection_set);

}  // namespace symgraph
