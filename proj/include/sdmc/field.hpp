#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "sdmc/common.hpp"

namespace sdmc {

// Field element: an integer index in [0, q). The base-p digits of the index
// are the coefficients of the representing polynomial, low degree first, so
// for prime fields the index is the residue itself and in every field the
// indices 0 and 1 are the additive and multiplicative identities.
using felem = std::uint8_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Arithmetic in GF(p^e) for p^e <= 256, realized as full lookup tables built
// once at construction. Immutable afterwards; safe to share across threads.
//
// The reduction modulus for e > 1 is the Conway polynomial for (p, e); for
// (2, 2) that is x^2 + x + 1, so GF(4) = {0, 1, a, a+1} with a^2 = a + 1.
class Field {
 public:
  // Cached constructor; the same (p, e) always yields the same instance.
  static FieldPtr make(int p, int e);

  int p() const { return p_; }
  int e() const { return e_; }
  int q() const { return q_; }
  // Monic modulus of degree e, coefficients low degree first (length e+1).
  const std::vector<felem>& modulus() const { return modulus_; }

  felem add(felem a, felem b) const { return add_[idx(a, b)]; }
  felem sub(felem a, felem b) const { return add_[idx(a, neg_[b])]; }
  felem mul(felem a, felem b) const { return mul_[idx(a, b)]; }
  felem neg(felem a) const { return neg_[a]; }
  felem inv(felem a) const {
    if (a == 0) fail(Err::zero_inverse, "inverse of zero in " + name());
    return inv_[a];
  }
  felem pow(felem a, std::uint64_t k) const;

  // Smallest index generating the multiplicative group.
  felem primitive_element() const { return primitive_; }

  std::string name() const;  // "GF(q)"

  bool operator==(const Field& o) const {
    return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_;
  }

 private:
  Field(int p, int e, std::vector<felem> modulus);
  std::size_t idx(felem a, felem b) const { return std::size_t(a) * q_ + b; }

  int p_, e_, q_;
  std::vector<felem> modulus_;
  std::vector<felem> add_, mul_;  // q*q tables
  std::vector<felem> neg_, inv_;  // q tables (inv_[0] unused)
  felem primitive_;
};

inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
  return a.get() == b.get() || (a && b && *a == *b);
}

bool is_prime(int n);

// Smallest a with a^2 = -1. Exists for even q (where a = 1) and q = 1 mod 4;
// throws Err::no_solution for q = 3 mod 4.
felem sqrt_of_minus_one(const Field& f);

// Lexicographically smallest (a, b) with a^2 + b^2 = alpha. Requires odd q,
// where a solution always exists.
std::pair<felem, felem> two_square_decomposition(const Field& f, felem alpha);

// Smallest index that is not a square in F_q^* (odd q only).
felem smallest_non_square(const Field& f);

}  // namespace sdmc
