#include "symgraph/catalog.hpp"

#include <numeric>

#include "symgraph/errors.hpp"
#include "symgraph/group_ops.hpp"

namespace symgraph {

int proj_point_of_value(int v) { return v + 1; }
bool proj_is_infinity(int idx) { return idx == kInfinity; }

int proj_value(int idx) {
  if (idx <= 0) throw InvalidInput("the infinite point has no field value");
  return idx - 1;
}

Permutation mobius_perm(const Field& f, int a, int b, int c, int d) {
  const int det = f.sub(f.mul(a, d), f.mul(b, c));
  if (det == f.zero()) throw InvalidInput("mobius map requires nonzero determinant");
  const int n = static_cast<int>(f.q()) + 1;
  std::vector<int> img(n);
  // infinity goes to a/c, or stays when c == 0
  img[kInfinity] = (c == f.zero()) ? kInfinity : proj_point_of_value(f.mul(a, f.inv(c)));
  for (std::uint64_t v = 0; v < f.q(); ++v) {
    const int z = static_cast<int>(v);
    const int den = f.add(f.mul(c, z), d);
    const int num = f.add(f.mul(a, z), b);
    img[proj_point_of_value(z)] =
        (den == f.zero()) ? kInfinity : proj_point_of_value(f.mul(num, f.inv(den)));
  }
  return Permutation::from_images(std::move(img));
}

bool mobius_in_psl(const Field& f, int a, int b, int c, int d) {
  const int det = f.sub(f.mul(a, d), f.mul(b, c));
  if (det == f.zero()) throw InvalidInput("mobius map requires nonzero determinant");
  return f.is_square(det);
}

Permutation frobenius_perm(const Field& f, int e) {
  const int n = static_cast<int>(f.q()) + 1;
  std::vector<int> img(n);
  img[kInfinity] = kInfinity;
  for (std::uint64_t v = 0; v < f.q(); ++v)
    img[proj_point_of_value(static_cast<int>(v))] =
        proj_point_of_value(f.frobenius(static_cast<int>(v), e));
  return Permutation::from_images(std::move(img));
}

namespace {

void require_odd_q(const Field& f) {
  if (f.p() == 2) throw InvalidInput("even characteristic is unsupported here");
  if (f.q() < 5) throw InvalidInput("field size must be at least 5");
}

}  // namespace

PermGroup pgl2(const Field& f) {
  require_odd_q(f);
  const int lam = f.primitive_element();
  std::vector<Permutation> gens;
  gens.push_back(mobius_perm(f, f.one(), f.one(), f.zero(), f.one()));  // z + 1
  gens.push_back(mobius_perm(f, lam, f.zero(), f.zero(), f.one()));     // lam * z
  gens.push_back(mobius_perm(f, f.zero(), f.one(), f.one(), f.zero())); // 1 / z
  return PermGroup(static_cast<int>(f.q()) + 1, std::move(gens));
}

PermGroup psl2(const Field& f) {
  require_odd_q(f);
  const int lam = f.primitive_element();
  const int lam2 = f.mul(lam, lam);
  std::vector<Permutation> gens;
  gens.push_back(mobius_perm(f, f.one(), f.one(), f.zero(), f.one()));       // z + 1
  gens.push_back(mobius_perm(f, lam2, f.zero(), f.zero(), f.one()));         // lam^2 * z
  gens.push_back(mobius_perm(f, f.zero(), f.neg(f.one()), f.one(), f.zero()));  // -1 / z
  return PermGroup(static_cast<int>(f.q()) + 1, std::move(gens));
}

PermGroup psl2_ext_frob(const Field& f, int e) {
  if (e < 1 || e >= f.k()) throw InvalidInput("frobenius power out of range for the field");
  PermGroup t = psl2(f);
  std::vector<Permutation> gens = t.generators();
  gens.push_back(frobenius_perm(f, e));
  return PermGroup(t.degree(), std::move(gens));
}

PermGroup pgammal2(const Field& f) {
  if (f.k() < 2) throw InvalidInput("semilinear extension needs a proper extension field");
  PermGroup g = pgl2(f);
  std::vector<Permutation> gens = g.generators();
  gens.push_back(frobenius_perm(f, 1));
  return PermGroup(g.degree(), std::move(gens));
}

PermGroup symmetric_group(int n) {
  if (n < 1) throw InvalidInput("symmetric group needs at least one point");
  if (n == 1) return PermGroup::trivial(1);
  std::vector<int> cyc(n), swp(n);
  std::iota(cyc.begin(), cyc.end(), 0);
  std::iota(swp.begin(), swp.end(), 0);
  std::swap(swp[0], swp[1]);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  std::vector<Permutation> gens;
  gens.push_back(Permutation::from_images(std::move(swp)));
  if (n > 2) gens.push_back(Permutation::from_images(std::move(cyc)));
  return PermGroup(n, std::move(gens));
}

PermGroup alternating_group(int n) {
  if (n < 1) throw InvalidInput("alternating group needs at least one point");
  if (n <= 2) return PermGroup::trivial(n);
  std::vector<int> tri(n);
  std::iota(tri.begin(), tri.end(), 0);
  tri[0] = 1;
  tri[1] = 2;
  tri[2] = 0;
  std::vector<Permutation> gens{Permutation::from_images(std::move(tri))};
  if (n > 3) {
    // n odd: full n-cycle; n even: (n-1)-cycle on 1..n-1, both even permutations
    std::vector<int> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 0);
    const int lo = (n % 2 == 1) ? 0 : 1;
    for (int i = lo; i < n; ++i) cyc[i] = (i + 1 - lo) % (n - lo) + lo;
    gens.push_back(Permutation::from_images(std::move(cyc)));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup cyclic_group(int n) {
  if (n < 1) throw InvalidInput("cyclic group needs at least one point");
  if (n == 1) return PermGroup::trivial(1);
  std::vector<int> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  return PermGroup(n, {Permutation::from_images(std::move(cyc))});
}

PermGroup elem_abelian_group(std::uint64_t p, int k) {
  if (k < 1) throw InvalidInput("elementary abelian rank must be positive");
  std::uint64_t n = 1;
  for (int i = 0; i < k; ++i) {
    n *= p;
    if (n > 1000000) throw InvalidInput("elementary abelian degree too large");
  }
  const int deg = static_cast<int>(n);
  std::vector<Permutation> gens;
  std::uint64_t step = 1;
  for (int i = 0; i < k; ++i) {
    std::vector<int> img(deg);
    for (int v = 0; v < deg; ++v) {
      const std::uint64_t digit = (static_cast<std::uint64_t>(v) / step) % p;
      const std::uint64_t rest = static_cast<std::uint64_t>(v) - digit * step;
      const std::uint64_t nd = (digit + 1) % p;
      img[v] = static_cast<int>(rest + nd * step);
    }
    gens.push_back(Permutation::from_images(std::move(img)));
    step *= p;
  }
  return PermGroup(deg, std::move(gens));
}

RegularRep regular_representation(const PermGroup& g, std::uint64_t element_cap) {
  RegularRep rep{PermGroup::trivial(1), {}, {}, };
  rep.elements = enumerate_elements(g, element_cap);
  const int m = static_cast<int>(rep.elements.size());
  rep.index.reserve(rep.elements.size());
  for (int i = 0; i < m; ++i) rep.index.emplace(rep.elements[i], i);
  std::vector<Permutation> gens;
  for (const Permutation& s : g.generators()) {
    std::vector<int> img(m);
    for (int i = 0; i < m; ++i) img[i] = rep.index.at(rep.elements[i] * s);
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  rep.group = PermGroup(m, std::move(gens));
  return rep;
}

Permutation RegularRep::to_regular(const Permutation& element) const {
  auto it = index.find(element);
  if (it == index.end()) throw InvalidInput("element outside the represented group");
  const int m = static_cast<int>(elements.size());
  std::vector<int> img(m);
  for (int i = 0; i < m; ++i) img[i] = index.at(elements[i] * element);
  return Permutation::from_images(std::move(img));
}

CatalogEntry build_catalog_group(const GroupRecipe& r) {
  switch (r.family) {
    case Family::PSL2: {
      Field f = Field::for_q(r.q);
      return {"PSL(2," + std::to_string(r.q) + ")", psl2(f), f};
    }
    case Family::PGL2: {
      Field f = Field::for_q(r.q);
      return {"PGL(2," + std::to_string(r.q) + ")", pgl2(f), f};
    }
    case Family::PGammaL2: {
      Field f = Field::for_q(r.q);
      return {"PGammaL(2," + std::to_string(r.q) + ")", pgammal2(f), f};
    }
    case Family::PSL2ExtFrob: {
      Field f = Field::for_q(r.q);
      const int ext = f.k() / std::gcd(f.k(), r.e);
      return {"PSL(2," + std::to_string(r.q) + "):" + std::to_string(ext),
              psl2_ext_frob(f, r.e), f};
    }
    case Family::Cyclic:
      return {"Z" + std::to_string(r.n), cyclic_group(r.n), std::nullopt};
    case Family::ElemAbelian:
      return {"E" + std::to_string(r.p) + "^" + std::to_string(r.k),
              elem_abelian_group(r.p, r.k), std::nullopt};
    case Family::Symmetric:
      return {"S" + std::to_string(r.n), symmetric_group(r.n), std::nullopt};
    case Family::Alternating:
      return {"A" + std::to_string(r.n), alternating_group(r.n), std::nullopt};
  }
  throw InvalidInput("unknown group family");
}

}  // namespace symgraph
