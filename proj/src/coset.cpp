#include "symgraph/coset.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>
#include <utility>

#include "symgraph/errors.hpp"
#include "symgraph/group_ops.hpp"

namespace symgraph {

std::vector<int> CosetGeometry::key_of(const Permutation& g) const {
  std::vector<int> best;
  for (const auto& h : subgroup_elements) {
    Permutation hg = h * g;
    std::vector<int> img(hg.images().begin(), hg.images().end());
    if (best.empty() || img < best) best = std::move(img);
  }
  return best;
}

int CosetGeometry::index_of(const Permutation& g) const {
  auto it = key_to_index.find(key_of(g));
  if (it == key_to_index.end())
    throw InternalInconsistency("coset lookup: element outside the enumerated group");
  return it->second;
}

CosetGeometry enumerate_cosets(const PermGroup& g, const PermGroup& h,
                               std::uint64_t coset_cap, std::uint64_t element_cap) {
  if (g.degree() != h.degree()) throw InvalidInput("coset enumeration: degree mismatch");
  if (!h.is_subgroup_of(g)) throw InvalidInput("coset enumeration: not a subgroup");

  CosetGeometry geo{g, h, enumerate_elements(h, element_cap), {}, {}};

  Permutation id(g.degree());
  geo.reps.push_back(id);
  geo.key_to_index.emplace(geo.key_of(id), 0);

  std::deque<int> queue{0};
  while (!queue.empty()) {
    int i = queue.front();
    queue.pop_front();
    for (const auto& s : g.generators()) {
      Permutation next = geo.reps[i] * s;
      auto key = geo.key_of(next);
      if (geo.key_to_index.contains(key)) continue;
      if (geo.reps.size() >= coset_cap)
        throw ResourceLimit("coset enumeration exceeded cap of " + std::to_string(coset_cap));
      int idx = static_cast<int>(geo.reps.size());
      geo.reps.push_back(std::move(next));
      geo.key_to_index.emplace(std::move(key), idx);
      queue.push_back(idx);
    }
  }

  GroupOrder expect = static_cast<GroupOrder>(geo.reps.size()) *
                      static_cast<GroupOrder>(geo.subgroup_elements.size());
  if (expect != g.order())
    throw InternalInconsistency("coset enumeration: count * |H| != |G|");
  return geo;
}

Permutation induced_on_cosets(const CosetGeometry& geo, const Permutation& g) {
  std::vector<int> images(geo.coset_count());
  for (int i = 0; i < geo.coset_count(); ++i) images[i] = geo.index_of(geo.reps[i] * g);
  return Permutation::from_images(std::move(images));
}

PermGroup induced_group(const CosetGeometry& geo, const PermGroup& sub) {
  std::vector<Permutation> gens;
  gens.reserve(sub.generators().size());
  for (const auto& s : sub.generators()) gens.push_back(induced_on_cosets(geo, s));
  return PermGroup(geo.coset_count(), std::move(gens));
}

CosetGraphResult coset_graph(const PermGroup& g, const PermGroup& h, const Permutation& x,
                             std::uint64_t coset_cap, std::uint64_t element_cap) {
  if (x.degree() != g.degree()) throw InvalidInput("coset graph: degree mismatch");
  if (!g.contains(x)) throw InvalidInput("coset graph: connecting element outside the group");
  if (h.contains(x)) throw InvalidInput("coset graph: connecting element inside the subgroup");
  if (!h.contains(x * x)) throw InvalidInput("coset graph: square of connecting element not in the subgroup");
  if (!x.is_two_element()) throw InvalidInput("coset graph: connecting element must have 2-power order");

  CosetGeometry geo = enumerate_cosets(g, h, coset_cap, element_cap);

  // K = H meet H^x; right transversal of K in H indexes the neighbors of a coset
  Permutation xi = x.inverse();
  std::vector<Permutation> k_elems;
  for (const auto& e : geo.subgroup_elements)
    if (h.contains(e.conjugated_by(xi))) k_elems.push_back(e);

  std::vector<Permutation> transversal;
  std::unordered_set<std::vector<int>, ImgVecHash> seen;
  for (const auto& t : geo.subgroup_elements) {
    std::vector<int> best;
    for (const auto& k : k_elems) {
      Permutation kt = k * t;
      std::vector<int> img(kt.images().begin(), kt.images().end());
      if (best.empty() || img < best) best = std::move(img);
    }
    if (seen.insert(std::move(best)).second) transversal.push_back(t);
  }
  if (transversal.size() * k_elems.size() != geo.subgroup_elements.size())
    throw InternalInconsistency("coset graph: transversal size disagrees with |H:K|");

  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < geo.coset_count(); ++i) {
    for (const auto& t : transversal) {
      int j = geo.index_of(x * t * geo.reps[i]);
      if (j == i) throw InternalInconsistency("coset graph: neighbor relation hit a loop");
      edges.emplace_back(std::min(i, j), std::max(i, j));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  PermGroup ind = induced_group(geo, g);
  CosetGraphResult res{Graph::from_edges(geo.coset_count(), std::move(edges)),
                       std::move(geo),
                       x,
                       std::move(ind),
                       static_cast<int>(transversal.size()),
                       false,
                       false};
  res.connected = res.graph.connected();
  std::vector<Permutation> joint = h.generators();
  joint.push_back(x);
  res.generates = subgroup_generated(g, std::move(joint)).order() == g.order();
  if (res.connected != res.generates)
    throw InternalInconsistency("coset graph: connectivity disagrees with generation");
  return res;
}

}  // namespace symgraph
