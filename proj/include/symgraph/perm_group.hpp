#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "symgraph/perm.hpp"

namespace symgraph {

// group orders can exceed 64 bits for moderate degrees, keep 128
using GroupOrder = unsigned __int128;

std::string order_to_string(GroupOrder n);
bool order_fits_u64(GroupOrder n);
std::uint64_t order_as_u64(GroupOrder n);  // throws ResourceLimit if it does not fit

inline constexpr std::uint64_t kDefaultElementCap = 1'000'000;

struct ChainLevel {
  int base_point = -1;
  // generators of this level's group: every strong generator fixing the base
  // points of all shallower levels
  std::vector<Permutation> gens;
  std::vector<int> orbit;  // discovery order, orbit[0] == base_point
  std::vector<int> pos;    // point -> index into orbit, -1 if outside
  std::vector<Permutation> transversal;  // transversal[k] maps base_point to orbit[k]
};

// Schreier-Sims stabilizer chain. Deterministic: base points honor the given
// prefix, then fall to the first moved point; orbits are BFS in generator order.
class StabilizerChain {
 public:
  static StabilizerChain build(int degree, const std::vector<Permutation>& gens,
                               std::span<const int> base_prefix = {});

  int degree() const { return degree_; }
  int num_levels() const { return static_cast<int>(levels_.size()); }
  const ChainLevel& level(int i) const { return levels_[i]; }
  std::vector<int> base() const;
  GroupOrder order() const;

  bool contains(const Permutation& g) const;
  // strips g through levels [from_level..). Returns the residue and the level
  // at which stripping stopped (== num_levels() on full strip).
  std::pair<Permutation, int> sift(Permutation g, int from_level = 0) const;

  // adds one generator; returns true if the group grew
  bool extend(const Permutation& g);

  // streams elements in nested transversal product order (top level slowest,
  // identity first). fn returns false to stop early.
  void for_each_element(const std::function<bool(const Permutation&)>& fn) const;

 private:
  explicit StabilizerChain(int degree) : degree_(degree) {}

  void install_generator(const Permutation& g, int first_level, int last_level,
                         std::vector<char>& dirty);
  void append_level(int base_point);
  int pick_base_point(const Permutation& g) const;
  void rebuild_orbit(int level);
  void process_dirty(std::vector<char>& dirty);
  void scan_level(int i, std::vector<char>& dirty);

  int degree_ = 0;
  std::vector<int> base_prefix_;
  std::vector<ChainLevel> levels_;
};

// Finite permutation group given by generators on {0..degree-1}.
// Value-semantic; copies share the lazily built chain. Chain construction is
// guarded so concurrent readers see either no chain or the finished one.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Permutation> generators);
  static PermGroup trivial(int degree);

  int degree() const { return st_->degree; }
  const std::vector<Permutation>& generators() const { return st_->gens; }

  const StabilizerChain& chain() const;
  // fresh chain whose base starts with exactly the given points; not cached
  StabilizerChain chain_with_base(std::span<const int> base_prefix) const;

  GroupOrder order() const { return chain().order(); }
  bool contains(const Permutation& g) const;
  bool is_subgroup_of(const PermGroup& o) const;
  bool same_group_as(const PermGroup& o) const;
  bool is_trivial() const { return order() == 1; }

 private:
  struct State {
    int degree;
    std::vector<Permutation> gens;
    mutable std::mutex mutex;
    mutable std::shared_ptr<const StabilizerChain> chain;
  };
  std::shared_ptr<State> st_;
};

}  // namespace symgraph
