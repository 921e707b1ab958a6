#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "symgraph/perm_group.hpp"

namespace symgraph {

// orbit partition of {0..degree-1}, orbits sorted by least element, each orbit
// in ascending point order
std::vector<std::vector<int>> orbits_of(const PermGroup& g);
// orbit closures of the given seed points (a union of full orbits)
std::vector<std::vector<int>> orbits_on(const PermGroup& g, std::span<const int> ground);
std::vector<int> orbit_of_point(const PermGroup& g, int p);
bool is_transitive(const PermGroup& g);

enum class StabMode { Point, Pointwise, Setwise };

// Point/Pointwise use a chain based at the targets; Setwise filters the full
// element list and needs order_of(g) within the cap.
PermGroup stabilizer(const PermGroup& g, StabMode mode, std::span<const int> pts,
                     std::uint64_t element_cap = kDefaultElementCap);

std::vector<Permutation> enumerate_elements(const PermGroup& g,
                                            std::uint64_t element_cap = kDefaultElementCap);
// stream in chain transversal product order; fn returns false to stop
void for_each_element(const PermGroup& g, const std::function<bool(const Permutation&)>& fn);
// lexicographically least element satisfying pred, if any
std::optional<Permutation> least_element_where(const PermGroup& g,
                                               const std::function<bool(const Permutation&)>& pred,
                                               std::uint64_t element_cap = kDefaultElementCap);
// all elements satisfying pred, lex-sorted
std::vector<Permutation> elements_where(const PermGroup& g,
                                        const std::function<bool(const Permutation&)>& pred,
                                        std::uint64_t element_cap = kDefaultElementCap);

enum class FilterMode { Normalizer, Centralizer };

// subgroup of g of the elements normalizing (resp. centralizing) the datum;
// enumerates g, so order_of(g) must respect the cap
PermGroup filtered_subgroup(const PermGroup& g, FilterMode mode, const PermGroup& datum,
                            std::uint64_t element_cap = kDefaultElementCap);
PermGroup centralizer_of_element(const PermGroup& g, const Permutation& x,
                                 std::uint64_t element_cap = kDefaultElementCap);

// full p-part Sylow subgroup, grown by repeated normalizer extension;
// deterministic under the canonical element order
PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t p,
                         std::uint64_t element_cap = kDefaultElementCap);

std::vector<std::uint64_t> prime_divisors(GroupOrder n);

struct PrimitivityResult {
  bool primitive = false;
  // on imprimitivity: a minimal nontrivial block system, blocks sorted by least
  // element
  std::vector<std::vector<int>> blocks;
};
// pre: g transitive
PrimitivityResult is_primitive(const PermGroup& g);

PermGroup conjugate_group(const PermGroup& h, const Permutation& x);
bool is_normal_in(const PermGroup& n, const PermGroup& g);
// enumerates the smaller factor; both orders must respect the cap
PermGroup group_intersection(const PermGroup& a, const PermGroup& b,
                             std::uint64_t element_cap = kDefaultElementCap);
// subgroup of g generated by the given elements (degree taken from g)
PermGroup subgroup_generated(const PermGroup& g, std::vector<Permutation> gens);

}  // namespace symgraph
