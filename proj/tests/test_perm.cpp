#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "etm/group.hpp"
#include "etm/realize.hpp"

using namespace etm;

namespace {

Permutation cyc(size_t n, const char* s) { return Permutation::parse(s, n); }

Permutation long_cycle(size_t n, size_t from = 1) {
  std::string s = "(";
  for (size_t i = from; i <= n; ++i) s += std::to_string(i) + (i < n ? "," : ")");
  return Permutation::parse(s, n);
}

Permutation random_perm(size_t n, std::mt19937& rng) {
  std::vector<uint32_t> v(n);
  for (size_t i = 0; i < n; ++i) v[i] = uint32_t(i);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

uint64_t factorial(unsigned n) {
  uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

// Every partition into blocks preserved by the generators, by brute force
// over set partitions of a small point set.
size_t count_block_systems(const PermGroupSpec& g) {
  size_t n = g.degree, count = 0;
  std::vector<uint32_t> label(n, 0);
  std::function<void(size_t, uint32_t)> rec = [&](size_t i, uint32_t used) {
    if (i == n) {
      for (const auto& p : g.generators)
        for (size_t a = 0; a < n; ++a)
          for (size_t b = 0; b < n; ++b)
            if ((label[a] == label[b]) != (label[p[a]] == label[p[b]])) return;
      ++count;
      return;
    }
    for (uint32_t l = 0; l <= used; ++l) {
      label[i] = l;
      rec(i + 1, std::max(used, l + 1));
    }
  };
  rec(0, 0);
  return count;
}

}  // namespace

TEST_CASE("cycle notation round trip") {
  auto p = Permutation::parse(" (1, 3,5)(2 ,4) ", 6);
  CHECK(p.degree() == 6);
  CHECK(p.to_cycles() == "(1,3,5)(2,4)");
  CHECK(Permutation::parse("()", 3).is_identity());
  CHECK(Permutation::parse("(1,7)").degree() == 7);
  CHECK_THROWS_AS(Permutation::parse("(1,2", 3), InputError);
  CHECK_THROWS_AS(Permutation::parse("(1,1)", 3), InputError);
  CHECK_THROWS_AS(Permutation::parse("(1,4)", 3), InputError);
  CHECK_THROWS_AS(Permutation::parse("(0,1)", 3), InputError);
}

TEST_CASE("composition applies the left factor first") {
  CHECK(compose(cyc(2, "(1,2)"), cyc(2, "(1,2)")).is_identity());
  CHECK(compose(long_cycle(6), cyc(6, "(1,2)(3,5)")) == cyc(6, "(2,5,6)(3,4)"));
  for (size_t n = 3; n <= 12; ++n) CHECK(power(long_cycle(n), long(n)).is_identity());
  CHECK_THROWS(compose(cyc(3, "(1,2)"), cyc(4, "(1,2)")));
}

TEST_CASE("orders and cycle structure") {
  for (size_t n = 2; n <= 10; ++n) CHECK(order_of(long_cycle(n)) == n);
  CHECK(order_of(cyc(6, "(2,5,6)(3,4)")) == 6);
  CHECK(order_of(cyc(10, "(2,6,4)(3,5,8,10,7)")) == 15);
  CHECK(power(cyc(6, "(2,5,6)(3,4)"), 3) == cyc(6, "(3,4)"));

  auto r0 = cyc(14, "(1,2)(3,4)(5,6)(7,8)(9,10)(11,12)(13,14)");
  CHECK(cycle_structure(r0) == std::vector<uint32_t>(7, 2));
  CHECK(sign(r0) == -1);
  CHECK(sign(Permutation::identity(5)) == 1);
  CHECK(cycle_structure(Permutation::identity(3)) == std::vector<uint32_t>{1, 1, 1});
  CHECK(cycle_structure(cyc(7, "(1,2)(3,4)")) == std::vector<uint32_t>{2, 2, 1, 1, 1});
  CHECK(sign(cyc(7, "(1,2)(3,4)")) == 1);
}

TEST_CASE("random group laws") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    size_t n = 1 + rng() % 12;
    auto p = random_perm(n, rng), q = random_perm(n, rng);
    CHECK(compose(compose(p, q), inverse(q)) == p);
    CHECK(compose(p, inverse(p)).is_identity());
    CHECK(sign(compose(p, q)) == sign(p) * sign(q));
    CHECK(conjugate(p, q) == compose(compose(inverse(q), p), q));
    CHECK(power(p, long(order_of(p))).is_identity());
    CHECK(power(p, -1) == inverse(p));
    size_t cycles = cycle_structure(p).size();
    CHECK(sign(p) == (((n - cycles) % 2) ? -1 : 1));
    CHECK(Permutation::parse(p.to_cycles(), n) == p);
  }
}

TEST_CASE("orbits and transitivity") {
  CHECK(is_transitive(PermGroupSpec(7, {long_cycle(7)})));
  Partition o = orbits(PermGroupSpec(5, {cyc(5, "(1,2)(3,4)")}));
  CHECK(o == Partition{{0, 1}, {2, 3}, {4}});
  std::mt19937 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    size_t n = 2 + rng() % 10;
    PermGroupSpec g(n, {cyc(n, "(1,2)"), random_perm(n, rng)});
    std::vector<int> part(n, -1);
    auto parts = orbits(g);
    for (size_t k = 0; k < parts.size(); ++k)
      for (auto x : parts[k]) part[x] = int(k);
    for (const auto& p : g.generators)
      for (size_t x = 0; x < n; ++x) CHECK(part[p[x]] == part[x]);
  }
}

TEST_CASE("tetrahedron vertex orbits") {
  auto spec = spec_from_perms(EtClass::C1, 4, {cyc(4, "(1,2)"), cyc(4, "(2,3)"), cyc(4, "(3,4)")});
  auto m = build_map(spec);
  REQUIRE(m.size() == 24);
  auto parts = orbits(PermGroupSpec(m.size(), {m.perm(1), m.perm(2)}));
  std::set<size_t> sizes;
  for (auto& p : parts) sizes.insert(p.size());
  CHECK(parts.size() == 4);
  CHECK(sizes == std::set<size_t>{6});
}

TEST_CASE("block systems and primitivity") {
  PermGroupSpec hex(6, {long_cycle(6), cyc(6, "(1,6)(2,5)(3,4)")});
  CHECK_FALSE(is_primitive(hex));
  // Trivial, singletons, mod 2 and mod 3.
  CHECK(count_block_systems(hex) == 4);
  auto b = block_system(hex, 0, 2);
  CHECK(b.size() == 2);
  auto c = block_system(hex, 0, 3);
  CHECK(c.size() == 3);

  // (1,6)(2,3)(4,5) is not a reflection of the hexagon: with the 6-cycle it
  // keeps only the blocks of odd and even points.
  PermGroupSpec odd(6, {long_cycle(6), cyc(6, "(1,6)(2,3)(4,5)")});
  CHECK_FALSE(is_primitive(odd));
  CHECK(count_block_systems(odd) == 3);
  CHECK(block_system(odd, 0, 2).size() == 2);
  CHECK(block_system(odd, 0, 3).size() == 1);

  PermGroupSpec a5(5, {cyc(5, "(1,2,3)"), cyc(5, "(1,2,3,4,5)")});
  CHECK(is_primitive(a5));
  CHECK(count_block_systems(a5) == 2);

  auto r = sym_even_class1_perms(14);
  CHECK(is_primitive(PermGroupSpec(14, r)));

  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    size_t n = 4 + rng() % 4;
    PermGroupSpec g(n, {long_cycle(n), power(long_cycle(n), 1 + long(rng() % (n - 1))), random_perm(n, rng)});
    if (trial % 2) g = PermGroupSpec(n, {long_cycle(n), cyc(n, "(1,3)")});
    CHECK(is_primitive(g) == (count_block_systems(g) == 2));
  }
  CHECK_THROWS(is_primitive(PermGroupSpec(4, {cyc(4, "(1,2)")})));
}

TEST_CASE("group orders") {
  for (unsigned n = 3; n <= 7; ++n) CHECK(group_order(PermGroupSpec(n, {long_cycle(n), cyc(n, "(1,2)")}), 10'000'000) == factorial(n));
  CHECK(group_order(PermGroupSpec(8, {long_cycle(8, 2), cyc(8, "(1,2)(3,4)")}), 10'000'000) == 20160);
  CHECK(psl2_group(11)->size() == 660);
  CHECK(group_order(PermGroupSpec(12, {psl2_group(11)->perm(1), psl2_group(11)->perm(2)}), 10'000) <= 660);
  CHECK_FALSE(group_order(PermGroupSpec(8, {long_cycle(8), cyc(8, "(1,2)")}), 1000).has_value());

  // Closure size is an independent oracle for the stabilizer chain.
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    size_t n = 3 + rng() % 6;
    std::vector<Permutation> gens;
    for (int k = 0; k < 1 + int(rng() % 3); ++k) {
      auto p = random_perm(n, rng);
      if (trial % 3 == 0) p = power(p, 2);
      gens.push_back(p);
    }
    PermGroupSpec g(n, gens);
    auto t = GroupTable::from_permutations(g);
    CHECK(group_order(g, 10'000'000) == t.size());
    uint64_t prod = 1;
    for (auto s : base_orbit_sizes(g)) prod *= s;
    CHECK(prod == t.size());
  }
}

TEST_CASE("Jordan-type order checks on the odd-involution families") {
  for (unsigned n : {7u, 8u, 9u, 10u, 11u, 13u, 14u, 17u, 18u, 21u}) {
    auto r = sym_even_class1_perms(n);
    REQUIRE(r.size() == 3);
    for (auto& p : r) {
      CHECK(order_of(p) == 2);
      CHECK(sign(p) == -1);
    }
    CHECK(compose(r[0], r[2]) == compose(r[2], r[0]));
    PermGroupSpec g(n, r);
    CHECK(is_primitive(g));
    if (n <= 12) CHECK(group_order(g, 1'000'000'000) == factorial(n));
  }
}
