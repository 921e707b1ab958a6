#include "symgraph/cayley.hpp"

#include <algorithm>
#include <utility>

#include "symgraph/errors.hpp"
#include "symgraph/group_ops.hpp"

namespace symgraph {

CayleyResult cayley_digraph(const PermGroup& r, const std::vector<Permutation>& connection_set) {
  const int n = r.degree();
  if (!is_transitive(r) || r.order() != static_cast<GroupOrder>(n))
    throw InvalidInput("cayley: group is not regular in this action");
  if (connection_set.empty()) throw InvalidInput("cayley: empty connection set");

  std::vector<Permutation> set = connection_set;
  std::sort(set.begin(), set.end(), std::less<>{});
  set.erase(std::unique(set.begin(), set.end()), set.end());
  for (const auto& s : set) {
    if (s.is_identity()) throw InvalidInput("cayley: identity in connection set");
    if (!r.contains(s)) throw InvalidInput("cayley: connection set leaves the group");
  }

  std::vector<Permutation> element_at(n, Permutation(n));
  std::vector<char> hit(n, 0);
  for_each_element(r, [&](const Permutation& e) {
    const int v = e(0);
    if (hit[v]) throw InternalInconsistency("cayley: two elements share an image of 0");
    hit[v] = 1;
    element_at[v] = e;
    return true;
  });

  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(static_cast<std::size_t>(n) * set.size());
  for (int v = 0; v < n; ++v)
    for (const auto& s : set) arcs.emplace_back(v, element_at[v](s(0)));

  bool is_graph = true;
  for (const auto& s : set)
    if (!std::binary_search(set.begin(), set.end(), s.inverse(), std::less<>{})) {
      is_graph = false;
      break;
    }

  CayleyResult res{Digraph::from_arcs(n, std::move(arcs)), std::move(element_at), is_graph, false};
  res.connected = subgroup_generated(r, set).order() == r.order();
  return res;
}

}  // namespace symgraph
