#include "symgraph/gf.hpp"

#include <algorithm>
#include <sstream>

#include "symgraph/errors.hpp"

namespace symgraph {

namespace {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// degree 2 or 3 over Z_p: irreducible iff no root
bool poly_has_root(const std::vector<int>& m, std::uint64_t p) {
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t acc = 0;
    for (int i = static_cast<int>(m.size()) - 1; i >= 0; --i)
      acc = (acc * x + static_cast<std::uint64_t>(m[i])) % p;
    if (acc == 0) return true;
  }
  return false;
}

std::vector<int> default_modulus(std::uint64_t p, int k) {
  if (k == 1) return {0, 1};  // X
  if (p == 3 && k == 2) return {2, 2, 1};     // x^2 + 2x + 2
  if (p == 3 && k == 3) return {1, 2, 0, 1};  // x^3 + 2x + 1
  // least monic irreducible by canonical tuple order
  std::uint64_t count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (std::uint64_t v = 0; v < count; ++v) {
    std::vector<int> m(k + 1, 0);
    std::uint64_t t = v;
    for (int i = 0; i < k; ++i) {
      m[i] = static_cast<int>(t % p);
      t /= p;
    }
    m[k] = 1;
    if (!poly_has_root(m, p)) return m;
  }
  throw InternalInconsistency("no irreducible modulus found");
}

}  // namespace

Field Field::make(std::uint64_t p, int k) { return make_with_modulus(p, k, default_modulus(p, k)); }

Field Field::make_with_modulus(std::uint64_t p, int k, std::vector<int> modulus) {
  if (!is_prime_u64(p)) throw InvalidInput("field characteristic must be prime");
  if (k < 1 || k > 3) throw InvalidInput("extension degree must be 1, 2, or 3");
  std::uint64_t q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > 65536) throw InvalidInput("field size above 2^16");
  }
  if (static_cast<int>(modulus.size()) != k + 1) throw InvalidInput("modulus degree mismatch");
  for (int c : modulus)
    if (c < 0 || static_cast<std::uint64_t>(c) >= p)
      throw InvalidInput("modulus coefficient out of range");
  if (modulus[k] != 1) throw InvalidInput("modulus must be monic");
  if (k >= 2 && poly_has_root(modulus, p)) throw InvalidInput("modulus is reducible");
  Field f;
  f.p_ = p;
  f.k_ = k;
  f.q_ = q;
  f.modulus_ = std::move(modulus);
  return f;
}

Field Field::for_q(std::uint64_t q) {
  if (q < 2) throw InvalidInput("field size must be at least 2");
  std::uint64_t p = 2;
  while (q % p != 0) {
    ++p;
    if (p * p > q) {
      p = q;
      break;
    }
  }
  int k = 0;
  std::uint64_t t = q;
  while (t > 1) {
    if (t % p != 0) throw InvalidInput("field size is not a prime power");
    t /= p;
    ++k;
  }
  return make(p, k);
}

void Field::check_element(int a) const {
  if (a < 0 || static_cast<std::uint64_t>(a) >= q_) throw InvalidInput("field element out of range");
}

std::vector<int> Field::coeffs(int a) const {
  check_element(a);
  std::vector<int> c(k_, 0);
  std::uint64_t t = static_cast<std::uint64_t>(a);
  for (int i = 0; i < k_; ++i) {
    c[i] = static_cast<int>(t % p_);
    t /= p_;
  }
  return c;
}

int Field::from_coeffs(const std::vector<int>& c) const {
  if (static_cast<int>(c.size()) != k_) throw InvalidInput("coefficient tuple size mismatch");
  std::uint64_t v = 0;
  for (int i = k_ - 1; i >= 0; --i) {
    if (c[i] < 0 || static_cast<std::uint64_t>(c[i]) >= p_)
      throw InvalidInput("coefficient out of range");
    v = v * p_ + static_cast<std::uint64_t>(c[i]);
  }
  return static_cast<int>(v);
}

int Field::add(int a, int b) const {
  std::vector<int> ca = coeffs(a), cb = coeffs(b);
  for (int i = 0; i < k_; ++i) ca[i] = static_cast<int>((ca[i] + cb[i]) % static_cast<int>(p_));
  return from_coeffs(ca);
}

int Field::neg(int a) const {
  std::vector<int> c = coeffs(a);
  for (int i = 0; i < k_; ++i) c[i] = static_cast<int>((static_cast<int>(p_) - c[i]) % static_cast<int>(p_));
  return from_coeffs(c);
}

int Field::sub(int a, int b) const { return add(a, neg(b)); }

int Field::mul(int a, int b) const {
  std::vector<int> ca = coeffs(a), cb = coeffs(b);
  const int P = static_cast<int>(p_);
  std::vector<int> t(2 * k_ - 1, 0);
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j) t[i + j] = (t[i + j] + ca[i] * cb[j]) % P;
  for (int i = 2 * k_ - 2; i >= k_; --i) {
    const int c = t[i];
    if (c == 0) continue;
    t[i] = 0;
    for (int j = 0; j < k_; ++j)
      t[i - k_ + j] = ((t[i - k_ + j] - c * modulus_[j]) % P + P * P) % P;
  }
  t.resize(k_);
  return from_coeffs(t);
}

int Field::pow(int a, std::uint64_t e) const {
  check_element(a);
  int acc = one();
  int base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

int Field::inv(int a) const {
  if (a == 0) throw InvalidInput("inverse of the zero element");
  const int r = pow(a, q_ - 2);
  if (mul(a, r) != one()) throw InternalInconsistency("inverse computation failed");
  return r;
}

int Field::frobenius(int a, int e) const {
  if (e < 0) throw InvalidInput("frobenius power must be nonnegative");
  int r = a;
  for (int i = 0; i < e; ++i) r = pow(r, p_);
  return r;
}

std::uint64_t Field::mult_order(int a) const {
  if (a == 0) throw InvalidInput("multiplicative order of zero");
  std::uint64_t ord = q_ - 1;
  std::uint64_t m = ord;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d != 0) continue;
    while (m % d == 0) m /= d;
    while (ord % d == 0 && pow(a, ord / d) == one()) ord /= d;
  }
  if (m > 1)
    while (ord % m == 0 && pow(a, ord / m) == one()) ord /= m;
  return ord;
}

int Field::primitive_element() const {
  for (std::uint64_t v = 1; v < q_; ++v)
    if (mult_order(static_cast<int>(v)) == q_ - 1) return static_cast<int>(v);
  throw InternalInconsistency("no primitive element found");
}

bool Field::is_square(int a) const {
  if (a == 0) throw InvalidInput("square test on zero");
  if (p_ == 2) return true;
  return pow(a, (q_ - 1) / 2) == one();
}

std::string Field::show(int a) const {
  std::vector<int> c = coeffs(a);
  std::ostringstream os;
  os << '(';
  for (int i = k_ - 1; i >= 0; --i) {
    os << c[i];
    if (i > 0) os << ',';
  }
  os << ')';
  return os.str();
}

}  // namespace symgraph
