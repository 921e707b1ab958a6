#include "symgraph/perm_group.hpp"

#include <algorithm>

#include "symgraph/errors.hpp"

namespace symgraph {

std::string order_to_string(GroupOrder n) {
  if (n == 0) return "0";
  std::string s;
  while (n > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(n % 10)));
    n /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

bool order_fits_u64(GroupOrder n) { return n <= static_cast<GroupOrder>(UINT64_MAX); }

std::uint64_t order_as_u64(GroupOrder n) {
  if (!order_fits_u64(n))
    throw ResourceLimit("group order " + order_to_string(n) + " exceeds 64 bits");
  return static_cast<std::uint64_t>(n);
}

StabilizerChain StabilizerChain::build(int degree, const std::vector<Permutation>& gens,
                                       std::span<const int> base_prefix) {
  if (degree <= 0) throw InvalidInput("chain requires positive degree");
  if (gens.empty()) throw InvalidInput("chain requires at least one generator (identity allowed)");
  StabilizerChain c(degree);
  for (int b : base_prefix) {
    if (b < 0 || b >= degree) throw InvalidInput("base point out of range");
    c.base_prefix_.push_back(b);
    c.append_level(b);
  }
  std::vector<char> dirty(1, 0);
  bool any = false;
  for (const Permutation& g : gens) {
    if (g.degree() != degree) throw InvalidInput("generator degree mismatch");
    if (g.is_identity()) continue;
    any = true;
    int l = 0;
    while (l < c.num_levels() && g(c.levels_[l].base_point) == c.levels_[l].base_point) ++l;
    if (l == c.num_levels()) c.append_level(c.pick_base_point(g));
    if (static_cast<int>(dirty.size()) < c.num_levels()) dirty.resize(c.num_levels(), 0);
    c.install_generator(g, 0, l, dirty);
  }
  if (any) c.process_dirty(dirty);
  for (int i = 0; i < c.num_levels(); ++i)
    if (c.levels_[i].orbit.empty()) c.rebuild_orbit(i);
  return c;
}

std::vector<int> StabilizerChain::base() const {
  std::vector<int> b;
  b.reserve(levels_.size());
  for (const auto& lv : levels_) b.push_back(lv.base_point);
  return b;
}

GroupOrder StabilizerChain::order() const {
  GroupOrder o = 1;
  for (const auto& lv : levels_) o *= static_cast<GroupOrder>(std::max<std::size_t>(lv.orbit.size(), 1));
  return o;
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) throw InvalidInput("degree mismatch in membership test");
  auto [r, lev] = sift(g);
  return r.is_identity();
}

std::pair<Permutation, int> StabilizerChain::sift(Permutation g, int from_level) const {
  for (int i = from_level; i < num_levels(); ++i) {
    const ChainLevel& lv = levels_[i];
    const int q = g(lv.base_point);
    if (q == lv.base_point) continue;
    if (lv.pos.empty() || lv.pos[q] < 0) return {std::move(g), i};
    g = g * lv.transversal[lv.pos[q]].inverse();
  }
  return {std::move(g), num_levels()};
}

void StabilizerChain::append_level(int base_point) {
  ChainLevel lv;
  lv.base_point = base_point;
  levels_.push_back(std::move(lv));
}

int StabilizerChain::pick_base_point(const Permutation& g) const {
  for (int b : base_prefix_) {
    bool used = false;
    for (const auto& lv : levels_)
      if (lv.base_point == b) used = true;
    if (!used && g(b) != b) return b;
  }
  const int m = g.first_moved();
  if (m < 0) throw InternalInconsistency("base point requested for identity");
  return m;
}

void StabilizerChain::install_generator(const Permutation& g, int first_level, int last_level,
                                        std::vector<char>& dirty) {
  if (static_cast<int>(dirty.size()) < num_levels()) dirty.resize(num_levels(), 0);
  for (int j = first_level; j <= last_level && j < num_levels(); ++j) {
    levels_[j].gens.push_back(g);
    dirty[j] = 1;
  }
}

void StabilizerChain::rebuild_orbit(int level) {
  ChainLevel& lv = levels_[level];
  lv.orbit.clear();
  lv.pos.assign(degree_, -1);
  lv.transversal.clear();
  lv.orbit.push_back(lv.base_point);
  lv.pos[lv.base_point] = 0;
  lv.transversal.push_back(Permutation(degree_));
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    const int p = lv.orbit[k];
    for (const Permutation& g : lv.gens) {
      const int q = g(p);
      if (lv.pos[q] >= 0) continue;
      lv.pos[q] = static_cast<int>(lv.orbit.size());
      lv.orbit.push_back(q);
      lv.transversal.push_back(lv.transversal[k] * g);
    }
  }
}

void StabilizerChain::process_dirty(std::vector<char>& dirty) {
  for (;;) {
    int i = -1;
    if (static_cast<int>(dirty.size()) < num_levels()) dirty.resize(num_levels(), 0);
    for (int j = num_levels() - 1; j >= 0; --j)
      if (dirty[j]) {
        i = j;
        break;
      }
    if (i < 0) return;
    dirty[i] = 0;
    scan_level(i, dirty);
  }
}

// Processes every Schreier generator of the level; residues that fail to strip
// become strong generators of deeper levels, which are then marked dirty.
// Gens and orbit of level i itself stay fixed during the scan.
void StabilizerChain::scan_level(int i, std::vector<char>& dirty) {
  rebuild_orbit(i);
  const std::size_t norb = levels_[i].orbit.size();
  const std::size_t ngens = levels_[i].gens.size();
  for (std::size_t k = 0; k < norb; ++k) {
    for (std::size_t gi = 0; gi < ngens; ++gi) {
      const Permutation& g = levels_[i].gens[gi];
      const int q = g(levels_[i].orbit[k]);
      Permutation sg =
          levels_[i].transversal[k] * g * levels_[i].transversal[levels_[i].pos[q]].inverse();
      if (sg.is_identity()) continue;
      auto [r, j] = sift(std::move(sg), i + 1);
      if (r.is_identity()) continue;
      if (j == num_levels()) append_level(pick_base_point(r));
      install_generator(r, i + 1, j, dirty);
    }
  }
}

bool StabilizerChain::extend(const Permutation& g) {
  if (g.degree() != degree_) throw InvalidInput("degree mismatch in extend");
  if (g.is_identity()) return false;
  if (!levels_.empty() && contains(g)) return false;
  int l = 0;
  while (l < num_levels() && g(levels_[l].base_point) == levels_[l].base_point) ++l;
  if (l == num_levels()) append_level(pick_base_point(g));
  std::vector<char> dirty(num_levels(), 0);
  install_generator(g, 0, l, dirty);
  process_dirty(dirty);
  return true;
}

void StabilizerChain::for_each_element(const std::function<bool(const Permutation&)>& fn) const {
  if (levels_.empty()) {
    fn(Permutation(degree_));
    return;
  }
  // suffix = product of transversal picks of shallower levels, applied last
  struct Walker {
    const StabilizerChain* c;
    bool stopped = false;
    void walk(int level, const Permutation& suffix, const std::function<bool(const Permutation&)>& fn) {
      if (stopped) return;
      if (level == c->num_levels()) {
        if (!fn(suffix)) stopped = true;
        return;
      }
      const ChainLevel& lv = c->levels_[level];
      for (std::size_t k = 0; k < lv.orbit.size() && !stopped; ++k)
        walk(level + 1, lv.transversal[k] * suffix, fn);
    }
  } w{this};
  w.walk(0, Permutation(degree_), fn);
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators) {
  if (degree <= 0) throw InvalidInput("group degree must be positive");
  if (generators.empty()) throw InvalidInput("group requires at least one generator");
  for (const auto& g : generators)
    if (g.degree() != degree) throw InvalidInput("generator degree mismatch");
  st_ = std::make_shared<State>();
  st_->degree = degree;
  st_->gens = std::move(generators);
}

PermGroup PermGroup::trivial(int degree) { return PermGroup(degree, {Permutation(degree)}); }

const StabilizerChain& PermGroup::chain() const {
  {
    std::lock_guard<std::mutex> lk(st_->mutex);
    if (!st_->chain)
      st_->chain = std::make_shared<const StabilizerChain>(
          StabilizerChain::build(st_->degree, st_->gens));
  }
  return *st_->chain;
}

StabilizerChain PermGroup::chain_with_base(std::span<const int> base_prefix) const {
  return StabilizerChain::build(st_->degree, st_->gens, base_prefix);
}

bool PermGroup::contains(const Permutation& g) const { return chain().contains(g); }

bool PermGroup::is_subgroup_of(const PermGroup& o) const {
  if (degree() != o.degree()) return false;
  for (const auto& g : generators())
    if (!o.contains(g)) return false;
  return true;
}

bool PermGroup::same_group_as(const PermGroup& o) const {
  return order() == o.order() && is_subgroup_of(o);
}

}  // namespace symgraph
