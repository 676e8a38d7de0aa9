#include "genset/field.hpp"

#include <utility>

#include "genset/errors.hpp"

namespace genset {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<unsigned, unsigned> prime_power(unsigned q) {
  if (q < 2) return {0, 0};
  unsigned p = 2;
  while (q % p) ++p;
  unsigned k = 0;
  while (q % p == 0) {
    q /= p;
    ++k;
  }
  if (q != 1) return {0, 0};
  return {p, k};
}

namespace {

std::vector<unsigned> digits(unsigned a, unsigned p, unsigned k) {
  std::vector<unsigned> d(k);
  for (unsigned i = 0; i < k; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

unsigned from_digits(const std::vector<unsigned>& d, unsigned p) {
  unsigned a = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) a = a * p + *it;
  return a;
}

// Product of two residues modulo the monic polynomial x^k + low(x), where
// low holds the k lower coefficients.
unsigned poly_mulmod(unsigned a, unsigned b, const std::vector<unsigned>& low, unsigned p, unsigned k) {
  auto da = digits(a, p, k), db = digits(b, p, k);
  std::vector<unsigned> prod(2 * k, 0);
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  for (unsigned deg = 2 * k - 1; deg >= k; --deg) {
    const unsigned c = prod[deg];
    if (!c) continue;
    prod[deg] = 0;
    // x^deg = x^(deg-k) * x^k = -x^(deg-k) * low(x)
    for (unsigned i = 0; i < k; ++i) prod[deg - k + i] = (prod[deg - k + i] + (p - c) * low[i]) % p;
  }
  prod.resize(k);
  return from_digits(prod, p);
}

}  // namespace

GaloisField::GaloisField(unsigned q) : q_(q) {
  auto [p, k] = prime_power(q);
  if (!p || q > kMaxOrder) throw InvalidSpec("field order " + std::to_string(q) + " is not a prime power <= 32");
  p_ = p;
  k_ = k;
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);
  for (unsigned a = 0; a < q; ++a) {
    auto da = digits(a, p, k);
    std::vector<unsigned> dn(k);
    for (unsigned i = 0; i < k; ++i) dn[i] = (p - da[i]) % p;
    neg_[a] = from_digits(dn, p);
    for (unsigned b = 0; b < q; ++b) {
      auto db = digits(b, p, k);
      std::vector<unsigned> ds(k);
      for (unsigned i = 0; i < k; ++i) ds[i] = (da[i] + db[i]) % p;
      add_[a * q + b] = from_digits(ds, p);
    }
  }
  // Search monic modulus polynomials until the quotient ring is a field.
  for (unsigned code = 0; code < q; ++code) {
    const auto low = digits(code, p, k);
    if (low[0] == 0) continue;  // divisible by x
    std::vector<unsigned> m(q * q);
    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = 0; b < q; ++b) m[a * q + b] = poly_mulmod(a, b, low, p, k);
    std::vector<unsigned> inv(q, 0);
    bool field = true;
    for (unsigned a = 1; a < q && field; ++a) {
      unsigned found = 0;
      for (unsigned b = 1; b < q; ++b)
        if (m[a * q + b] == 1) found = b;
      if (!found) field = false;
      inv[a] = found;
    }
    if (field) {
      mul_ = std::move(m);
      inv_ = std::move(inv);
      break;
    }
  }
  for (unsigned a = 2; a < q; ++a)
    if (multiplicative_order(a) == q - 1) {
      primitive_ = a;
      break;
    }
  if (q == 2) primitive_ = 1;
}

unsigned GaloisField::pow(unsigned a, unsigned e) const {
  unsigned r = 1;
  for (unsigned i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

unsigned GaloisField::multiplicative_order(unsigned a) const {
  if (a == 0) return 0;
  unsigned x = a, ord = 1;
  while (x != 1) {
    x = mul(x, a);
    ++ord;
  }
  return ord;
}

}  // namespace genset
