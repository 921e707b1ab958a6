#include "symgraph/group_ops.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "symgraph/errors.hpp"

namespace symgraph {

namespace {

void close_orbit(const std::vector<Permutation>& gens, std::vector<int>& orbit,
                 std::vector<char>& seen) {
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    for (const Permutation& g : gens) {
      const int q = g(orbit[k]);
      if (!seen[q]) {
        seen[q] = 1;
        orbit.push_back(q);
      }
    }
  }
}

void check_cap(GroupOrder order, std::uint64_t cap, const char* what) {
  if (order > static_cast<GroupOrder>(cap))
    throw ResourceLimit(std::string(what) + ": group order " + order_to_string(order) +
                        " exceeds element cap " + std::to_string(cap));
}

}  // namespace

std::vector<std::vector<int>> orbits_of(const PermGroup& g) {
  const int n = g.degree();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> out;
  for (int p = 0; p < n; ++p) {
    if (seen[p]) continue;
    std::vector<int> orbit{p};
    seen[p] = 1;
    close_orbit(g.generators(), orbit, seen);
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<std::vector<int>> orbits_on(const PermGroup& g, std::span<const int> ground) {
  const int n = g.degree();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> out;
  for (int p : ground) {
    if (p < 0 || p >= n) throw InvalidInput("ground point out of range");
    if (seen[p]) continue;
    std::vector<int> orbit{p};
    seen[p] = 1;
    close_orbit(g.generators(), orbit, seen);
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

std::vector<int> orbit_of_point(const PermGroup& g, int p) {
  if (p < 0 || p >= g.degree()) throw InvalidInput("point out of range");
  std::vector<char> seen(g.degree(), 0);
  std::vector<int> orbit{p};
  seen[p] = 1;
  close_orbit(g.generators(), orbit, seen);
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

bool is_transitive(const PermGroup& g) {
  return static_cast<int>(orbit_of_point(g, 0).size()) == g.degree();
}

PermGroup stabilizer(const PermGroup& g, StabMode mode, std::span<const int> pts,
                     std::uint64_t element_cap) {
  const int n = g.degree();
  for (int p : pts)
    if (p < 0 || p >= n) throw InvalidInput("stabilizer target out of range");
  if (mode == StabMode::Point && pts.size() != 1)
    throw InvalidInput("point stabilizer takes exactly one point");
  if (pts.empty()) return g;

  if (mode == StabMode::Point || mode == StabMode::Pointwise) {
    StabilizerChain chain = g.chain_with_base(pts);
    const int lv = static_cast<int>(pts.size());
    // the raw level list carries one schreier generator per orbit point above
    // it; keep only the ones that grow the group
    StabilizerChain acc = StabilizerChain::build(n, {Permutation(n)});
    std::vector<Permutation> gens;
    if (lv < chain.num_levels()) {
      for (const Permutation& e : chain.level(lv).gens)
        if (acc.extend(e)) gens.push_back(e);
    }
    if (gens.empty()) return PermGroup::trivial(n);
    return PermGroup(n, std::move(gens));
  }

  // setwise: filter the element list
  check_cap(g.order(), element_cap, "setwise stabilizer");
  std::vector<char> inset(n, 0);
  for (int p : pts) inset[p] = 1;
  StabilizerChain acc = StabilizerChain::build(n, {Permutation(n)});
  std::vector<Permutation> gens;
  for_each_element(g, [&](const Permutation& e) {
    for (int p : pts)
      if (!inset[e(p)]) return true;
    if (acc.extend(e)) gens.push_back(e);
    return true;
  });
  if (gens.empty()) return PermGroup::trivial(n);
  return PermGroup(n, std::move(gens));
}

std::vector<Permutation> enumerate_elements(const PermGroup& g, std::uint64_t element_cap) {
  check_cap(g.order(), element_cap, "element enumeration");
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(order_as_u64(g.order())));
  g.chain().for_each_element([&](const Permutation& e) {
    out.push_back(e);
    return true;
  });
  return out;
}

void for_each_element(const PermGroup& g, const std::function<bool(const Permutation&)>& fn) {
  g.chain().for_each_element(fn);
}

std::optional<Permutation> least_element_where(const PermGroup& g,
                                               const std::function<bool(const Permutation&)>& pred,
                                               std::uint64_t element_cap) {
  check_cap(g.order(), element_cap, "element search");
  std::optional<Permutation> best;
  for_each_element(g, [&](const Permutation& e) {
    if ((!best || e < *best) && pred(e)) best = e;
    return true;
  });
  return best;
}

std::vector<Permutation> elements_where(const PermGroup& g,
                                        const std::function<bool(const Permutation&)>& pred,
                                        std::uint64_t element_cap) {
  check_cap(g.order(), element_cap, "element search");
  std::vector<Permutation> out;
  for_each_element(g, [&](const Permutation& e) {
    if (pred(e)) out.push_back(e);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

PermGroup filtered_by(const PermGroup& g, const std::function<bool(const Permutation&)>& keep,
                      std::uint64_t element_cap, const char* what) {
  check_cap(g.order(), element_cap, what);
  const int n = g.degree();
  StabilizerChain acc = StabilizerChain::build(n, {Permutation(n)});
  std::vector<Permutation> gens;
  for_each_element(g, [&](const Permutation& e) {
    if (!keep(e)) return true;
    if (acc.extend(e)) gens.push_back(e);
    return true;
  });
  if (gens.empty()) return PermGroup::trivial(n);
  return PermGroup(n, std::move(gens));
}

}  // namespace

PermGroup filtered_subgroup(const PermGroup& g, FilterMode mode, const PermGroup& datum,
                            std::uint64_t element_cap) {
  if (datum.degree() != g.degree()) throw InvalidInput("filter datum degree mismatch");
  if (mode == FilterMode::Centralizer) {
    return filtered_by(
        g,
        [&](const Permutation& e) {
          for (const Permutation& d : datum.generators())
            if (e * d != d * e) return false;
          return true;
        },
        element_cap, "centralizer");
  }
  return filtered_by(
      g,
      [&](const Permutation& e) {
        const Permutation ei = e.inverse();
        for (const Permutation& d : datum.generators())
          if (!datum.contains(ei * d * e)) return false;
        return true;
      },
      element_cap, "normalizer");
}

PermGroup centralizer_of_element(const PermGroup& g, const Permutation& x,
                                 std::uint64_t element_cap) {
  if (x.degree() != g.degree()) throw InvalidInput("centralizer datum degree mismatch");
  return filtered_by(
      g, [&](const Permutation& e) { return e * x == x * e; }, element_cap, "centralizer");
}

PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t p, std::uint64_t element_cap) {
  if (p < 2) throw InvalidInput("sylow prime must be at least 2");
  GroupOrder n = g.order();
  GroupOrder part = 1;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  if (part == 1)
    throw InvalidInput("prime " + std::to_string(p) + " does not divide the group order");

  auto order_is_p_power = [&](GroupOrder o) {
    while (o % p == 0) o /= p;
    return o == 1;
  };

  std::optional<Permutation> seed = least_element_where(
      g,
      [&](const Permutation& e) { return !e.is_identity() && e.element_order() == p; },
      element_cap);
  if (!seed) throw InternalInconsistency("no element of prime order found");

  PermGroup cur(g.degree(), {*seed});
  while (cur.order() < part) {
    PermGroup norm = filtered_subgroup(g, FilterMode::Normalizer, cur, element_cap);
    std::vector<Permutation> candidates = elements_where(
        norm,
        [&](const Permutation& e) {
          return !e.is_identity() && order_is_p_power(e.element_order()) && !cur.contains(e);
        },
        element_cap);
    bool grown = false;
    for (const Permutation& y : candidates) {
      std::vector<Permutation> gens = cur.generators();
      gens.push_back(y);
      PermGroup bigger(g.degree(), gens);
      if (bigger.order() > cur.order() && order_is_p_power(bigger.order())) {
        cur = std::move(bigger);
        grown = true;
        break;
      }
    }
    if (!grown)
      throw InternalInconsistency("sylow growth stalled below the full p-part");
  }
  return cur;
}

std::vector<std::uint64_t> prime_divisors(GroupOrder n) {
  std::vector<std::uint64_t> out;
  if (n == 0) throw InvalidInput("prime divisors of zero");
  for (std::uint64_t d = 2; d <= 1000000 && static_cast<GroupOrder>(d) * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) {
    if (n > static_cast<GroupOrder>(UINT64_MAX))
      throw ResourceLimit("prime factorization incomplete: residue too large");
    out.push_back(static_cast<std::uint64_t>(n));
  }
  return out;
}

PrimitivityResult is_primitive(const PermGroup& g) {
  const int n = g.degree();
  if (!is_transitive(g)) throw InvalidInput("primitivity requires a transitive group");
  PrimitivityResult res;
  if (n <= 2) {
    res.primitive = true;
    return res;
  }

  std::vector<int> parent(n);
  std::function<int(int)> root = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };

  for (int beta = 1; beta < n; ++beta) {
    std::iota(parent.begin(), parent.end(), 0);
    std::deque<std::pair<int, int>> queue;
    parent[root(beta)] = root(0);
    queue.emplace_back(beta, 0);
    while (!queue.empty()) {
      auto [a, b] = queue.front();
      queue.pop_front();
      for (const Permutation& s : g.generators()) {
        const int ra = root(s(a));
        const int rb = root(s(b));
        if (ra == rb) continue;
        parent[ra] = rb;
        queue.emplace_back(s(a), s(b));
      }
    }
    std::vector<int> size(n, 0);
    for (int x = 0; x < n; ++x) ++size[root(x)];
    const int block = size[root(0)];
    if (block < n) {
      std::vector<std::vector<int>> blocks(n);
      for (int x = 0; x < n; ++x) blocks[root(x)].push_back(x);
      res.primitive = false;
      for (auto& b : blocks)
        if (!b.empty()) res.blocks.push_back(std::move(b));
      std::sort(res.blocks.begin(), res.blocks.end(),
                [](const auto& x, const auto& y) { return x.front() < y.front(); });
      if (n % block != 0)
        throw InternalInconsistency("block size does not divide the degree");
      return res;
    }
  }
  res.primitive = true;
  return res;
}

PermGroup conjugate_group(const PermGroup& h, const Permutation& x) {
  if (x.degree() != h.degree()) throw InvalidInput("conjugating element degree mismatch");
  const Permutation xi = x.inverse();
  std::vector<Permutation> gens;
  gens.reserve(h.generators().size());
  for (const Permutation& g : h.generators()) gens.push_back(xi * g * x);
  return PermGroup(h.degree(), std::move(gens));
}

bool is_normal_in(const PermGroup& n, const PermGroup& g) {
  if (n.degree() != g.degree()) throw InvalidInput("degree mismatch in normality test");
  for (const Permutation& x : g.generators()) {
    const Permutation xi = x.inverse();
    for (const Permutation& m : n.generators())
      if (!n.contains(xi * m * x)) return false;
  }
  return true;
}

PermGroup group_intersection(const PermGroup& a, const PermGroup& b, std::uint64_t element_cap) {
  if (a.degree() != b.degree()) throw InvalidInput("degree mismatch in intersection");
  const PermGroup& small = a.order() <= b.order() ? a : b;
  const PermGroup& big = a.order() <= b.order() ? b : a;
  check_cap(small.order(), element_cap, "group intersection");
  const int n = a.degree();
  StabilizerChain acc = StabilizerChain::build(n, {Permutation(n)});
  std::vector<Permutation> gens;
  for_each_element(small, [&](const Permutation& e) {
    if (!big.contains(e)) return true;
    if (acc.extend(e)) gens.push_back(e);
    return true;
  });
  if (gens.empty()) return PermGroup::trivial(n);
  return PermGroup(n, std::move(gens));
}

PermGroup subgroup_generated(const PermGroup& g, std::vector<Permutation> gens) {
  if (gens.empty()) return PermGroup::trivial(g.degree());
  return PermGroup(g.degree(), std::move(gens));
}

}  // namespace symgraph
