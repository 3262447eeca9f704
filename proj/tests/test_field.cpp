#include <catch_amalgamated.hpp>

#include <set>

#include "etm/field.hpp"
#include "etm/group.hpp"
#include "etm/realize.hpp"

using namespace etm;

namespace {

const unsigned kQs[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81, 125, 128};

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("prime powers") {
  for (unsigned q = 1; q <= 300; ++q) {
    auto pp = prime_power(q);
    bool expect = false;
    for (unsigned p = 2; p <= q; ++p) {
      if (!is_prime(p)) continue;
      uint64_t x = p;
      for (unsigned e = 1; x <= q; ++e, x *= p)
        if (x == q) {
          expect = true;
          REQUIRE(pp.has_value());
          CHECK(pp->first == p);
          CHECK(pp->second == e);
        }
    }
    CHECK(pp.has_value() == expect);
  }
}

TEST_CASE("field axioms") {
  for (unsigned q : kQs) {
    auto [p, e] = *prime_power(q);
    GaloisField f(p, e);
    REQUIRE(f.q() == q);
    CHECK(f.modulus().size() == e + 1);
    CHECK(f.modulus().back() == 1);
    CHECK(f.order(f.primitive()) == q - 1);
    // The multiplicative group is cyclic of order q - 1.
    std::set<unsigned> powers;
    for (unsigned k = 0; k < q - 1; ++k) powers.insert(f.pow(f.primitive(), k));
    CHECK(powers.size() == q - 1);
    unsigned step = q <= 27 ? 1 : 7;
    for (unsigned a = 0; a < q; a += step)
      for (unsigned b = 0; b < q; b += step) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.sub(f.add(a, b), b) == a);
        for (unsigned c = 0; c < q; c += 5 * step) {
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
          CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        }
      }
    for (unsigned a = 1; a < q; ++a) {
      CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.pow(a, q - 1) == 1);
      CHECK(f.frobenius(f.frobenius(a, 1), e - 1) == a);
      CHECK(f.frobenius(f.mul(a, a), 1) == f.mul(f.frobenius(a, 1), f.frobenius(a, 1)));
    }
    CHECK(f.from_int(p) == 0);
    CHECK(f.from_int(-1) == f.neg(1));
    // Squares: half the units for odd q, all for even q.
    unsigned squares = 0;
    for (unsigned a = 1; a < q; ++a) {
      bool sq = f.is_square(a);
      squares += sq;
      auto r = f.sqrt(a);
      CHECK(r.has_value() == sq);
      if (r) CHECK(f.mul(*r, *r) == a);
    }
    CHECK(squares == (p == 2 ? q - 1 : (q - 1) / 2));
  }
}

TEST_CASE("PSL(2, q)") {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u}) {
    PSL2 g(q);
    uint64_t expect = uint64_t(q) * (uint64_t(q) * q - 1) / (q % 2 ? 2 : 1);
    CHECK(g.order() == expect);
    CHECK(psl2_group(q)->size() == expect);
    CHECK(psl2_group(q)->degree() == q + 1);
  }
  PSL2 g(7);
  auto x = g.make(1, 1, 0, 1), y = g.make(0, 1, -1, 0);
  CHECK(g.det(x) == 1);
  CHECK(g.to_perm(g.mul(x, y)) == compose(g.to_perm(x), g.to_perm(y)));
  CHECK(order_of(g.to_perm(x)) == 7);
  CHECK(order_of(g.to_perm(y)) == 2);
  CHECK(g.to_perm(g.make(-1, 0, 0, -1)).is_identity());
  // Small exceptional cases.
  CHECK(psl2_group(4)->size() == 60);
  CHECK(psl2_group(5)->size() == 60);
  CHECK(psl2_group(9)->size() == 360);
  CHECK(derived_length(*psl2_group(3)) == 2);
}
