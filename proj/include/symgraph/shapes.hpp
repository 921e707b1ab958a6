#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "symgraph/group_ops.hpp"
#include "symgraph/perm_group.hpp"

namespace symgraph {

// element orders with multiplicities, the cheap structure fingerprint
std::map<std::uint64_t, std::uint64_t> element_order_histogram(
    const PermGroup& g, std::uint64_t element_cap = kDefaultElementCap);

bool is_abelian(const PermGroup& g);
bool is_cyclic_of(const PermGroup& g, std::uint64_t order);
bool is_klein_four(const PermGroup& g);
// order is the full group order 2n, not the polygon size; order 4 means klein four
bool is_dihedral_of(const PermGroup& g, std::uint64_t order,
                    std::uint64_t element_cap = kDefaultElementCap);
bool is_elementary_abelian(const PermGroup& g, std::uint64_t p);
bool is_symmetric3(const PermGroup& g);
bool is_symmetric4(const PermGroup& g);
bool is_alternating4(const PermGroup& g);
GroupOrder center_order(const PermGroup& g, std::uint64_t element_cap = kDefaultElementCap);

enum class ShapeKind { Cyclic, KleinFour, Dihedral, ElemAbelian, AnyOfOrder };

struct SubgroupShape {
  ShapeKind kind;
  std::uint64_t order;
};

// All subgroups of the ambient matching the shape, deterministically ordered by
// their sorted element lists; max_results 0 means no limit. AnyOfOrder covers
// subgroups generated by at most two elements; higher-rank elementary abelian
// groups have their own kind.
std::vector<PermGroup> find_subgroups_by_shape(const PermGroup& ambient, SubgroupShape shape,
                                               int max_results = 0,
                                               std::uint64_t element_cap = kDefaultElementCap);

}  // namespace symgraph
