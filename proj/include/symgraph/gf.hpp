#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace symgraph {

// GF(p^k), k <= 3, as coefficient tuples over Z_p modulo a fixed monic
// irreducible modulus. Elements are addressed by canonical index
// sum c_i * p^i, which orders tuples lexicographically with the leading
// coefficient most significant and the constant term last.
class Field {
 public:
  static Field make(std::uint64_t p, int k);
  static Field make_with_modulus(std::uint64_t p, int k, std::vector<int> modulus);
  static Field for_q(std::uint64_t q);  // factors q, uses the default modulus

  std::uint64_t p() const { return p_; }
  int k() const { return k_; }
  std::uint64_t q() const { return q_; }
  // modulus[i] is the coefficient of X^i; size k+1, monic
  const std::vector<int>& modulus() const { return modulus_; }

  int zero() const { return 0; }
  int one() const { return 1; }

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const;
  int mul(int a, int b) const;
  int inv(int a) const;              // throws on zero
  int pow(int a, std::uint64_t e) const;
  int frobenius(int a, int e = 1) const;  // a^(p^e)

  std::uint64_t mult_order(int a) const;  // throws on zero
  int primitive_element() const;          // least index of multiplicative order q-1
  bool is_square(int a) const;            // nonzero squares only; throws on zero

  std::vector<int> coeffs(int a) const;   // coeffs[i] belongs to X^i
  int from_coeffs(const std::vector<int>& c) const;

  std::string show(int a) const;

 private:
  Field() = default;
  void check_element(int a) const;

  std::uint64_t p_ = 0;
  int k_ = 0;
  std::uint64_t q_ = 0;
  std::vector<int> modulus_;
};

}  // namespace symgraph
