#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <map>
#include <vector>

#include "symgraph/catalog.hpp"
#include "symgraph/errors.hpp"
#include "symgraph/gf.hpp"
#include "symgraph/shapes.hpp"

using namespace symgraph;

namespace {

Permutation perm(std::vector<int> img) { return Permutation::from_images(std::move(img)); }

PermGroup d12() { return PermGroup(6, {perm({1, 2, 3, 4, 5, 0}), perm({0, 5, 4, 3, 2, 1})}); }

PermGroup v4() { return PermGroup(4, {perm({1, 0, 3, 2}), perm({2, 3, 0, 1})}); }

using Histogram = std::map<std::uint64_t, std::uint64_t>;

}  // namespace

TEST_CASE("element order histograms") {
  CHECK(element_order_histogram(symmetric_group(4)) == Histogram{{1, 1}, {2, 9}, {3, 8}, {4, 6}});
  CHECK(element_order_histogram(alternating_group(4)) == Histogram{{1, 1}, {2, 3}, {3, 8}});
  CHECK(element_order_histogram(cyclic_group(6)) ==
        Histogram{{1, 1}, {2, 1}, {3, 2}, {6, 2}});
  CHECK_THROWS_AS(element_order_histogram(symmetric_group(4), 10), ResourceLimit);
}

TEST_CASE("abelian, cyclic, klein four") {
  CHECK(is_abelian(cyclic_group(6)));
  CHECK(is_abelian(v4()));
  CHECK_FALSE(is_abelian(symmetric_group(3)));
  CHECK(is_cyclic_of(cyclic_group(6), 6));
  CHECK_FALSE(is_cyclic_of(cyclic_group(6), 3));
  CHECK_FALSE(is_cyclic_of(v4(), 4));
  CHECK(is_cyclic_of(PermGroup::trivial(3), 1));
  CHECK(is_klein_four(v4()));
  CHECK_FALSE(is_klein_four(PermGroup(4, {perm({1, 2, 3, 0})})));
  CHECK_FALSE(is_klein_four(cyclic_group(4)));
}

TEST_CASE("dihedral recognition uses the full group order") {
  CHECK(is_dihedral_of(d12(), 12));
  CHECK_FALSE(is_dihedral_of(d12(), 6));
  CHECK_FALSE(is_dihedral_of(cyclic_group(12), 12));
  CHECK(is_dihedral_of(v4(), 4));  // degenerate case
  CHECK(is_dihedral_of(symmetric_group(3), 6));
  CHECK_FALSE(is_dihedral_of(d12(), 5));  // odd order is never dihedral here
}

TEST_CASE("elementary abelian recognition") {
  CHECK(is_elementary_abelian(elem_abelian_group(2, 3), 2));
  CHECK(is_elementary_abelian(elem_abelian_group(3, 2), 3));
  CHECK(is_elementary_abelian(v4(), 2));
  CHECK_FALSE(is_elementary_abelian(cyclic_group(4), 2));
  CHECK_FALSE(is_elementary_abelian(elem_abelian_group(2, 3), 3));
}

TEST_CASE("named small groups") {
  CHECK(is_symmetric3(symmetric_group(3)));
  CHECK(is_symmetric3(regular_representation(symmetric_group(3)).group));
  CHECK_FALSE(is_symmetric3(cyclic_group(6)));
  CHECK(is_symmetric4(symmetric_group(4)));
  CHECK_FALSE(is_symmetric4(alternating_group(4)));
  CHECK_FALSE(is_symmetric4(d12()));
  CHECK(is_alternating4(alternating_group(4)));
  CHECK_FALSE(is_alternating4(symmetric_group(4)));
  CHECK_FALSE(is_alternating4(cyclic_group(12)));
}

TEST_CASE("center orders") {
  CHECK(center_order(symmetric_group(4)) == 1);
  CHECK(center_order(d12()) == 2);
  CHECK(center_order(cyclic_group(6)) == 6);
  CHECK(center_order(v4()) == 4);
}

TEST_CASE("subgroup search inside the 4-point symmetric group") {
  PermGroup s4 = symmetric_group(4);
  CHECK(find_subgroups_by_shape(s4, {ShapeKind::KleinFour, 4}).size() == 4);
  CHECK(find_subgroups_by_shape(s4, {ShapeKind::Cyclic, 4}).size() == 3);
  CHECK(find_subgroups_by_shape(s4, {ShapeKind::Cyclic, 3}).size() == 4);
  CHECK(find_subgroups_by_shape(s4, {ShapeKind::Dihedral, 8}).size() == 3);
  CHECK(find_subgroups_by_shape(s4, {ShapeKind::AnyOfOrder, 6}).size() == 4);
  CHECK(find_subgroups_by_shape(s4, {ShapeKind::AnyOfOrder, 24}).size() == 1);
  CHECK(find_subgroups_by_shape(s4, {ShapeKind::AnyOfOrder, 16}).empty());
  for (const auto& k : find_subgroups_by_shape(s4, {ShapeKind::KleinFour, 4})) {
    CHECK(k.order() == 4);
    CHECK(is_klein_four(k));
    CHECK(k.is_subgroup_of(s4));
  }
}

TEST_CASE("subgroup search is deterministic and respects max_results") {
  PermGroup s4 = symmetric_group(4);
  auto a = find_subgroups_by_shape(s4, {ShapeKind::KleinFour, 4});
  auto b = find_subgroups_by_shape(s4, {ShapeKind::KleinFour, 4});
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].same_group_as(b[i]));
  auto limited = find_subgroups_by_shape(s4, {ShapeKind::KleinFour, 4}, 2);
  REQUIRE(limited.size() == 2);
  CHECK(limited[0].same_group_as(a[0]));
  CHECK(limited[1].same_group_as(a[1]));
}

TEST_CASE("sylow-sized dihedral census in a projective group") {
  PermGroup g = pgl2(Field::for_q(7));
  auto subs = find_subgroups_by_shape(g, {ShapeKind::Dihedral, 16});
  CHECK(subs.size() == 21);
  for (const auto& s : subs) CHECK(is_dihedral_of(s, 16));
}

TEST_CASE("subgroup search limits and bad shapes") {
  CHECK_THROWS_AS(find_subgroups_by_shape(symmetric_group(7), {ShapeKind::AnyOfOrder, 6}),
                  ResourceLimit);  // ambient order 5040 > 2000
  PermGroup s4 = symmetric_group(4);
  CHECK_THROWS_AS(find_subgroups_by_shape(s4, {ShapeKind::KleinFour, 8}), InvalidInput);
  CHECK_THROWS_AS(find_subgroups_by_shape(s4, {ShapeKind::Dihedral, 7}), InvalidInput);
  CHECK_THROWS_AS(find_subgroups_by_shape(s4, {ShapeKind::ElemAbelian, 1}), InvalidInput);
  CHECK_THROWS_AS(find_subgroups_by_shape(s4, {ShapeKind::ElemAbelian, 12}), InvalidInput);
  CHECK_THROWS_AS(find_subgroups_by_shape(s4, {ShapeKind::Cyclic, 0}), InvalidInput);
}

TEST_CASE("elementary abelian subgroup search") {
  PermGroup s4 = symmetric_group(4);
  auto e4 = find_subgroups_by_shape(s4, {ShapeKind::ElemAbelian, 4});
  CHECK(e4.size() == 4);  // same census as the klein four search
  PermGroup e8 = elem_abelian_group(2, 3);
  CHECK(find_subgroups_by_shape(e8, {ShapeKind::ElemAbelian, 8}).size() == 1);
  CHECK(find_subgroups_by_shape(e8, {ShapeKind::ElemAbelian, 4}).size() == 7);
}
