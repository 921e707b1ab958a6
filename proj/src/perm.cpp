#include "symgraph/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "symgraph/errors.hpp"

namespace symgraph {

Permutation::Permutation(int degree) {
  if (degree < 0) throw InvalidInput("permutation degree must be nonnegative");
  img_.resize(degree);
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<char> seen(n, 0);
  for (int v : images) {
    if (v < 0 || v >= n)
      throw InvalidInput("image entry " + std::to_string(v) + " out of range for degree " +
                         std::to_string(n));
    if (seen[v]) throw InvalidInput("image array is not a bijection: " + std::to_string(v) + " repeats");
    seen[v] = 1;
  }
  Permutation p;
  p.img_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (degree() != o.degree()) throw InvalidInput("degree mismatch in composition");
  Permutation r;
  r.img_.resize(img_.size());
  for (int i = 0; i < degree(); ++i) r.img_[i] = o.img_[img_[i]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img_.resize(img_.size());
  for (int i = 0; i < degree(); ++i) r.img_[img_[i]] = i;
  return r;
}

Permutation Permutation::conjugated_by(const Permutation& g) const {
  return g.inverse() * (*this) * g;
}

int Permutation::first_moved() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return i;
  return -1;
}

std::vector<int> Permutation::cycle_lengths() const {
  std::vector<int> out;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      ++len;
    }
    out.push_back(len);
  }
  return out;
}

std::uint64_t Permutation::element_order() const {
  std::uint64_t ord = 1;
  for (int len : cycle_lengths()) {
    const std::uint64_t l = static_cast<std::uint64_t>(len);
    const std::uint64_t g = std::gcd(ord, l);
    const std::uint64_t q = ord / g;
    if (q != 0 && l > UINT64_MAX / q)
      throw ResourceLimit("element order exceeds 64 bits");
    ord = q * l;
  }
  return ord;
}

bool Permutation::is_involution() const {
  bool moved = false;
  for (int i = 0; i < degree(); ++i) {
    if (img_[i] == i) continue;
    moved = true;
    if (img_[img_[i]] != i) return false;
  }
  return moved;
}

bool Permutation::is_two_element() const {
  for (int len : cycle_lengths())
    if ((len & (len - 1)) != 0) return false;
  return true;
}

std::strong_ordering Permutation::operator<=>(const Permutation& o) const {
  return std::lexicographical_compare_three_way(img_.begin(), img_.end(), o.img_.begin(),
                                                o.img_.end());
}

std::string Permutation::cycle_string() const {
  std::ostringstream os;
  std::vector<char> seen(img_.size(), 0);
  bool any = false;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    any = true;
    os << '(';
    bool first = true;
    for (int j = i; !seen[j]; j = img_[j]) {
      seen[j] = 1;
      if (!first) os << ' ';
      os << j;
      first = false;
    }
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

std::uint64_t hash_images(std::span<const int> v) {
  std::uint64_t h = 14695981039346656037ull;
  for (int x : v) {
    h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x));
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace symgraph
