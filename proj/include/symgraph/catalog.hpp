#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "symgraph/gf.hpp"
#include "symgraph/perm_group.hpp"

namespace symgraph {

// Projective line PG(1,q) on q+1 points: index 0 is the point at infinity,
// index 1+v is the field element with canonical index v.
inline constexpr int kInfinity = 0;
int proj_point_of_value(int v);
bool proj_is_infinity(int idx);
int proj_value(int idx);  // throws on the infinite point

// z -> (a z + b) / (c z + d); requires ad - bc != 0
Permutation mobius_perm(const Field& f, int a, int b, int c, int d);
bool mobius_in_psl(const Field& f, int a, int b, int c, int d);  // det is a square
// fixes infinity, applies z -> z^(p^e) elsewhere
Permutation frobenius_perm(const Field& f, int e = 1);

// generator sets are pinned so constructions are reproducible:
//   PGL2: z+1, lam*z, 1/z        (lam the least primitive element)
//   PSL2: z+1, lam^2*z, -1/z
PermGroup pgl2(const Field& f);
PermGroup psl2(const Field& f);
// PSL2 generators plus the order-k/e field automorphism permutation
PermGroup psl2_ext_frob(const Field& f, int e = 1);
PermGroup pgammal2(const Field& f);

PermGroup symmetric_group(int n);
PermGroup alternating_group(int n);
PermGroup cyclic_group(int n);                            // regular rotation action
PermGroup elem_abelian_group(std::uint64_t p, int k);     // translations on p^k digit vectors

// right-multiplication action of g on its own element list; point i is the
// i-th element in canonical enumeration order, point 0 the identity
struct RegularRep {
  PermGroup group;
  std::vector<Permutation> elements;
  std::unordered_map<Permutation, int, PermHash> index;
  Permutation to_regular(const Permutation& element) const;
};
RegularRep regular_representation(const PermGroup& g,
                                  std::uint64_t element_cap = kDefaultElementCap);

enum class Family { PSL2, PGL2, PGammaL2, PSL2ExtFrob, Cyclic, ElemAbelian, Symmetric, Alternating };

struct GroupRecipe {
  Family family;
  std::uint64_t q = 0;  // PSL2/PGL2/PGammaL2/PSL2ExtFrob
  int e = 1;            // PSL2ExtFrob: frobenius power adjoined
  int n = 0;            // Cyclic/Symmetric
  std::uint64_t p = 0;  // ElemAbelian
  int k = 0;            // ElemAbelian
};

struct CatalogEntry {
  std::string name;
  PermGroup group;
  std::optional<Field> field;
};

CatalogEntry build_catalog_group(const GroupRecipe& recipe);

}  // namespace symgraph
