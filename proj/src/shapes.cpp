#include "symgraph/shapes.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "symgraph/errors.hpp"

namespace symgraph {

namespace {

// product closure, aborted once the size limit is passed
std::vector<Permutation> closure_of(const std::vector<Permutation>& gens, std::size_t limit) {
  const int n = gens.front().degree();
  std::unordered_set<Permutation, PermHash> seen{Permutation(n)};
  std::vector<Permutation> out{Permutation(n)};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const Permutation& g : gens) {
      Permutation p = out[k] * g;
      if (seen.size() > limit) return {};
      if (seen.insert(p).second) {
        if (seen.size() > limit) return {};
        out.push_back(std::move(p));
      }
    }
  }
  return out;
}

using SubKey = std::vector<std::vector<int>>;

SubKey key_of_elements(const std::vector<Permutation>& elems) {
  SubKey key;
  key.reserve(elems.size());
  for (const auto& e : elems) key.emplace_back(e.images().begin(), e.images().end());
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace

std::map<std::uint64_t, std::uint64_t> element_order_histogram(const PermGroup& g,
                                                               std::uint64_t element_cap) {
  std::map<std::uint64_t, std::uint64_t> hist;
  for (const Permutation& e : enumerate_elements(g, element_cap)) ++hist[e.element_order()];
  return hist;
}

bool is_abelian(const PermGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
  return true;
}

bool is_cyclic_of(const PermGroup& g, std::uint64_t order) {
  if (g.order() != static_cast<GroupOrder>(order)) return false;
  bool found = false;
  for_each_element(g, [&](const Permutation& e) {
    if (e.element_order() == order) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

bool is_klein_four(const PermGroup& g) {
  if (g.order() != 4) return false;
  bool ok = true;
  for_each_element(g, [&](const Permutation& e) {
    if (!e.is_identity() && !e.is_involution()) {
      ok = false;
      return false;
    }
    return true;
  });
  return ok;
}

bool is_dihedral_of(const PermGroup& g, std::uint64_t order, std::uint64_t element_cap) {
  if (order < 4 || order % 2 != 0) return false;
  if (g.order() != static_cast<GroupOrder>(order)) return false;
  const std::uint64_t m = order / 2;
  if (m == 2) return is_klein_four(g);
  const auto elems = enumerate_elements(g, element_cap);
  for (const Permutation& r : elems) {
    if (r.element_order() != m) continue;
    std::unordered_set<Permutation, PermHash> powers;
    Permutation p = r;
    for (std::uint64_t i = 0; i < m; ++i) {
      powers.insert(p);
      p = p * r;
    }
    for (const Permutation& e : elems)
      if (!powers.contains(e) && !e.is_involution()) return false;
    return true;
  }
  return false;
}

bool is_elementary_abelian(const PermGroup& g, std::uint64_t p) {
  if (!is_abelian(g)) return false;
  bool ok = true;
  for_each_element(g, [&](const Permutation& e) {
    if (!e.is_identity() && e.element_order() != p) {
      ok = false;
      return false;
    }
    return true;
  });
  return ok;
}

bool is_symmetric3(const PermGroup& g) { return g.order() == 6 && !is_abelian(g); }

bool is_symmetric4(const PermGroup& g) {
  if (g.order() != 24) return false;
  const auto hist = element_order_histogram(g);
  return hist == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 9}, {3, 8}, {4, 6}};
}

bool is_alternating4(const PermGroup& g) {
  if (g.order() != 12) return false;
  const auto hist = element_order_histogram(g);
  return hist == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 3}, {3, 8}};
}

GroupOrder center_order(const PermGroup& g, std::uint64_t element_cap) {
  GroupOrder cnt = 0;
  const auto& gens = g.generators();
  for (const Permutation& e : enumerate_elements(g, element_cap)) {
    bool central = true;
    for (const Permutation& s : gens)
      if (e * s != s * e) {
        central = false;
        break;
      }
    if (central) ++cnt;
  }
  return cnt;
}

std::vector<PermGroup> find_subgroups_by_shape(const PermGroup& ambient, SubgroupShape shape,
                                               int max_results, std::uint64_t element_cap) {
  if (shape.order < 1) throw InvalidInput("shape order must be positive");
  const int n = ambient.degree();
  const auto elems = enumerate_elements(ambient, element_cap);

  std::map<SubKey, std::vector<Permutation>> hits;  // key -> generators

  auto offer = [&](const std::vector<Permutation>& gens, const std::vector<Permutation>& closure) {
    if (closure.size() != shape.order) return;
    hits.emplace(key_of_elements(closure), gens);
  };

  switch (shape.kind) {
    case ShapeKind::Cyclic: {
      for (const Permutation& e : elems) {
        if (e.element_order() != shape.order) continue;
        offer({e}, closure_of({e}, shape.order));
      }
      break;
    }
    case ShapeKind::KleinFour: {
      if (shape.order != 4) throw InvalidInput("klein four has order 4");
      std::vector<Permutation> invs;
      for (const Permutation& e : elems)
        if (e.is_involution()) invs.push_back(e);
      for (std::size_t i = 0; i < invs.size(); ++i)
        for (std::size_t j = i + 1; j < invs.size(); ++j) {
          if (invs[i] * invs[j] != invs[j] * invs[i]) continue;
          offer({invs[i], invs[j]}, closure_of({invs[i], invs[j]}, 4));
        }
      break;
    }
    case ShapeKind::Dihedral: {
      if (shape.order % 2 != 0 || shape.order < 4)
        throw InvalidInput("dihedral order must be even and at least 4");
      const std::uint64_t m = shape.order / 2;
      if (m == 2) return find_subgroups_by_shape(ambient, {ShapeKind::KleinFour, 4},
                                                 max_results, element_cap);
      std::vector<Permutation> invs;
      for (const Permutation& e : elems)
        if (e.is_involution()) invs.push_back(e);
      for (std::size_t i = 0; i < invs.size(); ++i)
        for (std::size_t j = i + 1; j < invs.size(); ++j) {
          if ((invs[i] * invs[j]).element_order() != m) continue;
          offer({invs[i], invs[j]}, closure_of({invs[i], invs[j]}, shape.order));
        }
      break;
    }
    case ShapeKind::ElemAbelian: {
      if (shape.order < 2) throw InvalidInput("elementary abelian order must be at least 2");
      std::uint64_t p = 0;
      {
        std::uint64_t o = shape.order;
        for (std::uint64_t d = 2; d * d <= o; ++d)
          if (o % d == 0) {
            p = d;
            break;
          }
        if (p == 0) p = o;  // prime order
        while (o % p == 0) o /= p;
        if (o != 1) throw InvalidInput("elementary abelian order must be a prime power");
      }
      std::vector<Permutation> porder;
      for (const Permutation& e : elems)
        if (e.element_order() == p) porder.push_back(e);
      // grow rank by rank: extend each subgroup by commuting p-elements outside it
      std::map<SubKey, std::vector<Permutation>> layer;
      for (const Permutation& e : porder) {
        auto cl = closure_of({e}, p);
        if (cl.size() == p) layer.emplace(key_of_elements(cl), std::vector<Permutation>{e});
      }
      std::uint64_t size = p;
      while (size < shape.order) {
        std::map<SubKey, std::vector<Permutation>> next;
        for (const auto& [key, gens] : layer) {
          const auto members = closure_of(gens, size);
          std::unordered_set<Permutation, PermHash> inside(members.begin(), members.end());
          for (const Permutation& e : porder) {
            if (inside.contains(e)) continue;
            bool commutes = true;
            for (const Permutation& s : gens)
              if (e * s != s * e) {
                commutes = false;
                break;
              }
            if (!commutes) continue;
            std::vector<Permutation> ng = gens;
            ng.push_back(e);
            auto cl = closure_of(ng, size * p);
            if (cl.size() == size * p) next.emplace(key_of_elements(cl), std::move(ng));
          }
        }
        layer = std::move(next);
        size *= p;
      }
      hits = std::move(layer);
      break;
    }
    case ShapeKind::AnyOfOrder: {
      if (elems.size() > 2000)
        throw ResourceLimit("two-generator subgroup sweep needs an ambient of at most 2000 elements");
      for (const Permutation& e : elems) {
        if (e.element_order() != shape.order) continue;
        offer({e}, closure_of({e}, shape.order));
      }
      for (std::size_t i = 0; i < elems.size(); ++i) {
        if (elems[i].is_identity() || shape.order % elems[i].element_order() != 0) continue;
        for (std::size_t j = i + 1; j < elems.size(); ++j) {
          if (elems[j].is_identity() || shape.order % elems[j].element_order() != 0) continue;
          offer({elems[i], elems[j]}, closure_of({elems[i], elems[j]}, shape.order));
        }
      }
      break;
    }
  }

  std::vector<PermGroup> out;
  for (const auto& [key, gens] : hits) {
    out.emplace_back(n, gens);
    if (max_results > 0 && static_cast<int>(out.size()) == max_results) break;
  }
  return out;
}

}  // namespace symgraph
