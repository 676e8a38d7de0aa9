#pragma once

#include <cstddef>
#include <vector>

namespace genset {

// Finite field of prime-power order q <= 32 with table arithmetic.
// Elements are 0..q-1, read as polynomials over F_p in base-p digits;
// 0 and 1 are the additive and multiplicative identities.
class GaloisField {
 public:
  static constexpr unsigned kMaxOrder = 32;

  explicit GaloisField(unsigned q);  // throws InvalidSpec

  unsigned order() const { return q_; }
  unsigned characteristic() const { return p_; }
  unsigned extension_degree() const { return k_; }

  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }
  unsigned neg(unsigned a) const { return neg_[a]; }
  unsigned mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned inv(unsigned a) const { return inv_[a]; }  // a != 0
  unsigned pow(unsigned a, unsigned e) const;
  unsigned frobenius(unsigned a) const { return pow(a, p_); }
  // Generator of the multiplicative group (smallest by element code).
  unsigned primitive_element() const { return primitive_; }
  unsigned multiplicative_order(unsigned a) const;

 private:
  unsigned q_ = 0, p_ = 0, k_ = 0;
  std::vector<unsigned> add_, mul_, neg_, inv_;
  unsigned primitive_ = 1;
};

// (p, k) with q = p^k, or nullopt-like {0,0} when q is not a prime power.
std::pair<unsigned, unsigned> prime_power(unsigned q);
bool is_prime(unsigned n);

}  // namespace genset
