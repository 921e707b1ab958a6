#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace symgraph {

// Permutation of {0..degree-1} as a dense image array.
// Composition is left-to-right: (a * b) maps p to b(a(p)), matching the
// exponent convention p^(ab) = (p^a)^b used throughout.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);  // identity
  static Permutation from_images(std::vector<int> images);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int p) const { return img_[p]; }
  std::span<const int> images() const { return img_; }

  bool is_identity() const;
  Permutation operator*(const Permutation& o) const;
  Permutation inverse() const;
  // g^{-1} * (*this) * g
  Permutation conjugated_by(const Permutation& g) const;

  // least moved point, or -1 for the identity
  int first_moved() const;
  std::vector<int> cycle_lengths() const;  // of the nontrivial cycles
  std::uint64_t element_order() const;     // lcm of cycle lengths; throws on u64 overflow
  bool is_involution() const;
  bool is_two_element() const;  // every cycle length is a power of 2

  bool operator==(const Permutation&) const = default;
  std::strong_ordering operator<=>(const Permutation& o) const;

  std::string cycle_string() const;

 private:
  std::vector<int> img_;
};

std::uint64_t hash_images(std::span<const int> v);

struct PermHash {
  std::size_t operator()(const Permutation& p) const {
    return static_cast<std::size_t>(hash_images(p.images()));
  }
};

}  // namespace symgraph
