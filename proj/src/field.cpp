#include "etm/field.hpp"

#include <stdexcept>

namespace etm {

namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

using Poly = std::vector<unsigned>;  // low to high

Poly poly_mod(Poly a, const Poly& m, unsigned p) {
  // m is monic
  while (a.size() >= m.size()) {
    unsigned lead = a.back();
    size_t shift = a.size() - m.size();
    if (lead)
      for (size_t i = 0; i < m.size(); ++i) a[shift + i] = (a[shift + i] + p - lead * m[i] % p) % p;
    a.pop_back();
  }
  return a;
}

bool is_zero(const Poly& a) {
  for (unsigned c : a)
    if (c) return false;
  return true;
}

bool irreducible(const Poly& m, unsigned p) {
  const size_t deg = m.size() - 1;
  for (size_t d = 1; d <= deg / 2; ++d) {
    uint64_t count = GaloisField::ipow(p, unsigned(d));
    for (uint64_t t = 0; t < count; ++t) {
      Poly div(d + 1);
      uint64_t x = t;
      for (size_t i = 0; i < d; ++i) {
        div[i] = unsigned(x % p);
        x /= p;
      }
      div[d] = 1;
      if (is_zero(poly_mod(m, div, p))) return false;
    }
  }
  return true;
}

}  // namespace

uint64_t GaloisField::ipow(uint64_t b, unsigned k) {
  uint64_t r = 1;
  while (k--) r *= b;
  return r;
}

std::optional<std::pair<unsigned, unsigned>> prime_power(unsigned q) {
  if (q < 2) return std::nullopt;
  for (unsigned p = 2; p <= q; ++p) {
    if (q % p) continue;
    if (!is_prime(p)) return std::nullopt;
    unsigned e = 0, r = q;
    while (r % p == 0) {
      r /= p;
      ++e;
    }
    if (r != 1) return std::nullopt;
    return std::make_pair(p, e);
  }
  return std::nullopt;
}

GaloisField::GaloisField(unsigned p, unsigned e) : p_(p), e_(e) {
  if (!is_prime(p) || e < 1) throw std::invalid_argument("GF(p^e) needs p prime and e >= 1");
  uint64_t q = ipow(p, e);
  if (q > 4096) throw std::invalid_argument("field too large");
  q_ = unsigned(q);
  if (e == 1) {
    modulus_ = {0, 1};
  } else {
    uint64_t count = ipow(p, e);
    for (uint64_t t = 0; t < count; ++t) {
      Poly m(e + 1);
      uint64_t x = t;
      for (unsigned i = 0; i < e; ++i) {
        m[i] = unsigned(x % p);
        x /= p;
      }
      m[e] = 1;
      if (irreducible(m, p)) {
        modulus_ = m;
        break;
      }
    }
  }
  add_.resize(size_t(q_) * q_);
  neg_.resize(q_);
  for (unsigned a = 0; a < q_; ++a) {
    for (unsigned b = 0; b < q_; ++b) {
      unsigned r = 0, pw = 1, x = a, y = b;
      for (unsigned i = 0; i < e_; ++i) {
        r += ((x % p + y % p) % p) * pw;
        x /= p;
        y /= p;
        pw *= p;
      }
      add_[a * q_ + b] = uint16_t(r);
    }
    unsigned r = 0, pw = 1, x = a;
    for (unsigned i = 0; i < e_; ++i) {
      r += ((p - x % p) % p) * pw;
      x /= p;
      pw *= p;
    }
    neg_[a] = r;
  }
  // Log tables from the first element of full order.
  auto slow_mul = [&](unsigned a, unsigned b) {
    Poly pa(e_), pb(e_);
    for (unsigned i = 0; i < e_; ++i) {
      pa[i] = a % p;
      a /= p;
      pb[i] = b % p;
      b /= p;
    }
    Poly prod(2 * e_, 0);
    for (unsigned i = 0; i < e_; ++i)
      for (unsigned j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
    Poly r = e_ == 1 ? Poly{prod[0]} : poly_mod(prod, modulus_, p);
    unsigned v = 0;
    for (size_t i = r.size(); i-- > 0;) v = v * p + r[i];
    return v;
  };
  for (unsigned g = 1; g < q_; ++g) {
    unsigned x = g, k = 1;
    while (x != 1) {
      x = slow_mul(x, g);
      ++k;
    }
    if (k == q_ - 1) {
      prim_ = g;
      break;
    }
  }
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  unsigned x = 1;
  for (unsigned k = 0; k + 1 < q_; ++k) {
    exp_[k] = x;
    log_[x] = k;
    x = slow_mul(x, prim_);
  }
}

unsigned GaloisField::mul(unsigned a, unsigned b) const {
  if (!a || !b) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

unsigned GaloisField::inv(unsigned a) const {
  if (!a) throw std::domain_error("inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

unsigned GaloisField::pow(unsigned a, uint64_t k) const {
  if (!a) return k ? 0 : 1;
  return exp_[(uint64_t(log_[a]) * (k % (q_ - 1))) % (q_ - 1)];
}

unsigned GaloisField::from_int(long long v) const {
  long long r = v % (long long)p_;
  if (r < 0) r += p_;
  return unsigned(r);
}

unsigned GaloisField::order(unsigned a) const {
  if (!a) throw std::domain_error("zero has no multiplicative order");
  unsigned k = 1;
  for (unsigned x = a; x != 1; x = mul(x, a)) ++k;
  return k;
}

bool GaloisField::is_square(unsigned a) const {
  if (!a) return true;
  return p_ == 2 || log_[a] % 2 == 0;
}

std::optional<unsigned> GaloisField::sqrt(unsigned a) const {
  for (unsigned x = 0; x < q_; ++x)
    if (mul(x, x) == a) return x;
  return std::nullopt;
}

std::string GaloisField::to_string(unsigned a) const {
  if (e_ == 1) return std::to_string(a);
  return "<" + std::to_string(a) + ">";
}

PSL2::PSL2(unsigned q) : f_([q] {
  auto pe = prime_power(q);
  if (!pe) throw std::invalid_argument("q must be a prime power");
  return GaloisField(pe->first, pe->second);
}()) {}

Mat2 PSL2::mul(const Mat2& x, const Mat2& y) const {
  const auto& F = f_;
  return {F.add(F.mul(x.a, y.a), F.mul(x.b, y.c)), F.add(F.mul(x.a, y.b), F.mul(x.b, y.d)),
          F.add(F.mul(x.c, y.a), F.mul(x.d, y.c)), F.add(F.mul(x.c, y.b), F.mul(x.d, y.d))};
}

unsigned PSL2::det(const Mat2& m) const { return f_.sub(f_.mul(m.a, m.d), f_.mul(m.b, m.c)); }

Mat2 PSL2::make(long long a, long long b, long long c, long long d) const {
  return {f_.from_int(a), f_.from_int(b), f_.from_int(c), f_.from_int(d)};
}

Permutation PSL2::to_perm(const Mat2& m) const {
  if (det(m) != 1) throw std::invalid_argument("matrix is not in SL(2, q)");
  const unsigned q = f_.q();
  std::vector<uint32_t> img(q + 1);
  // (x, 1) M = (a x + c, b x + d); infinity = (1, 0) maps to (a, b).
  for (unsigned x = 0; x < q; ++x) {
    unsigned num = f_.add(f_.mul(m.a, x), m.c);
    unsigned den = f_.add(f_.mul(m.b, x), m.d);
    img[x] = den ? f_.mul(num, f_.inv(den)) : q;
  }
  img[q] = m.b ? f_.mul(m.a, f_.inv(m.b)) : q;
  return Permutation(std::move(img));
}

uint64_t PSL2::order() const {
  uint64_t q = f_.q();
  uint64_t d = (f_.p() == 2) ? 1 : 2;
  return q * (q * q - 1) / d;
}

bool priminv_check(unsigned p, unsigned e) {
  GaloisField f(p, e);
  const unsigned q = f.q();
  for (unsigned l = 1; l < q; ++l) {
    if (f.order(l) != q - 1) continue;
    unsigned li = f.inv(l);
    for (unsigned k = 0; k < e; ++k)
      if (f.frobenius(l, k) == li) return true;
  }
  return false;
}

}  // namespace etm
