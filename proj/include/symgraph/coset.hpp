#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "symgraph/graph.hpp"
#include "symgraph/perm_group.hpp"

namespace symgraph {

inline constexpr std::uint64_t kDefaultCosetCap = 100000;

struct ImgVecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    return static_cast<std::size_t>(hash_images(v));
  }
};

// right cosets of H in G, discovered by BFS from the identity coset over G's
// generators; coset 0 is H itself. The canonical key of Hg is the
// lexicographically least image array among {h*g : h in H}.
struct CosetGeometry {
  PermGroup group;
  PermGroup subgroup;
  std::vector<Permutation> subgroup_elements;
  std::vector<Permutation> reps;  // reps[i] generates coset i; reps[0] is the identity
  std::unordered_map<std::vector<int>, int, ImgVecHash> key_to_index;

  int coset_count() const { return static_cast<int>(reps.size()); }
  std::vector<int> key_of(const Permutation& g) const;
  int index_of(const Permutation& g) const;  // throws if the key is unknown
};

CosetGeometry enumerate_cosets(const PermGroup& g, const PermGroup& h,
                               std::uint64_t coset_cap = kDefaultCosetCap,
                               std::uint64_t element_cap = kDefaultElementCap);

// action of an element of G on the coset space
Permutation induced_on_cosets(const CosetGeometry& geo, const Permutation& g);
// induced action of a subgroup of G, generator order preserved
PermGroup induced_group(const CosetGeometry& geo, const PermGroup& sub);

struct CosetGraphResult {
  Graph graph;
  CosetGeometry geometry;
  Permutation x;
  PermGroup induced_g;
  int valency = 0;      // |H : H meet H^x|
  bool connected = false;
  bool generates = false;  // <H, x> == G
};

// graph on the cosets of H with Hg1 ~ Hg2 iff g2 g1^-1 in H x H;
// pre: x a 2-element in G minus H with x^2 in H
CosetGraphResult coset_graph(const PermGroup& g, const PermGroup& h, const Permutation& x,
                             std::uint64_t coset_cap = kDefaultCosetCap,
                             std::uint64_t element_cap = kDefaultElementCap);

}  // namespace symgraph
