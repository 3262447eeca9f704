#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "etm/perm.hpp"

namespace etm {

// GF(p^e). Elements are encoded as integers 0..q-1 whose base-p digits are
// the polynomial coefficients (least significant digit = constant term).
// The modulus is the first monic irreducible of degree e, ordering candidate
// polynomials by that same integer encoding of their lower coefficients.
class GaloisField {
 public:
  GaloisField(unsigned p, unsigned e);

  unsigned p() const { return p_; }
  unsigned e() const { return e_; }
  unsigned q() const { return q_; }
  const std::vector<unsigned>& modulus() const { return modulus_; }  // low to high, monic

  unsigned add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned neg(unsigned a) const { return neg_[a]; }
  unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }
  unsigned mul(unsigned a, unsigned b) const;
  unsigned inv(unsigned a) const;
  unsigned pow(unsigned a, uint64_t k) const;
  unsigned from_int(long long v) const;  // image of an integer in the prime field
  unsigned order(unsigned a) const;      // multiplicative order; a != 0
  unsigned primitive() const { return prim_; }  // first element of order q-1
  bool is_square(unsigned a) const;
  std::optional<unsigned> sqrt(unsigned a) const;  // smallest root by encoding
  unsigned frobenius(unsigned a, unsigned f) const { return pow(a, ipow(p_, f)); }
  std::string to_string(unsigned a) const;

  static uint64_t ipow(uint64_t b, unsigned k);

 private:
  unsigned p_, e_, q_;
  std::vector<unsigned> modulus_;
  std::vector<uint16_t> add_;
  std::vector<unsigned> neg_;
  std::vector<unsigned> log_, exp_;
  unsigned prim_ = 0;
};

// Decompose q as p^e; nullopt if q is not a prime power.
std::optional<std::pair<unsigned, unsigned>> prime_power(unsigned q);

// Elements of SL(2, q) modulo +-1, acting on the projective line.
struct Mat2 {
  unsigned a, b, c, d;
};

class PSL2 {
 public:
  explicit PSL2(unsigned q);

  const GaloisField& field() const { return f_; }
  unsigned q() const { return f_.q(); }
  // Points 0..q-1 are field elements, point q is infinity. Row vectors act on
  // the right, (x, y) M, so matrix products map to compose() in order.
  Permutation to_perm(const Mat2& m) const;
  Mat2 mul(const Mat2& x, const Mat2& y) const;
  unsigned det(const Mat2& m) const;
  Mat2 make(long long a, long long b, long long c, long long d) const;  // integer entries, prime fields
  uint64_t order() const;  // |PSL(2, q)|

 private:
  GaloisField f_;
};

// True iff some primitive element l of GF(p^e) has l^(p^f) = l^-1 for some 0 <= f < e.
bool priminv_check(unsigned p, unsigned e);

}  // namespace etm
