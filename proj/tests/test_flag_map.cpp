#include <catch_amalgamated.hpp>

#include <random>

#include "etm/json_io.hpp"

using namespace etm;

namespace {

Permutation cyc(size_t n, const char* s) { return Permutation::parse(s, n); }

FlagMap tetrahedron() {
  return build_map(spec_from_perms(EtClass::C1, 4, {cyc(4, "(1,2)"), cyc(4, "(2,3)"), cyc(4, "(3,4)")}));
}

// A random connected map: r0, r2 commuting fixed-point-free involutions
// from a random pairing of V4-orbits, r1 a random fixed-point-free involution.
std::optional<FlagMap> random_map(size_t quads, std::mt19937& rng) {
  size_t n = 4 * quads;
  std::vector<uint32_t> r0(n), r1(n), r2(n), perm(n);
  for (uint32_t q = 0; q < quads; ++q) {
    uint32_t a = 4 * q;
    r0[a] = a + 1, r0[a + 1] = a, r0[a + 2] = a + 3, r0[a + 3] = a + 2;
    r2[a] = a + 2, r2[a + 2] = a, r2[a + 1] = a + 3, r2[a + 3] = a + 1;
  }
  std::iota(perm.begin(), perm.end(), 0u);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (size_t k = 0; k < n; k += 2) r1[perm[k]] = perm[k + 1], r1[perm[k + 1]] = perm[k];
  try {
    return FlagMap(r0, r1, r2);
  } catch (const InputError&) {
    return std::nullopt;
  }
}

FlagMap icosahedron() {
  auto g = std::make_shared<const GroupTable>(GroupTable::from_permutations(
      {7, {cyc(7, "(1,2,3)"), cyc(7, "(1,2,3,4,5)"), cyc(7, "(6,7)")}}));
  REQUIRE(g->size() == 120);
  auto r = search_epimorphisms(EtClass::C1, g);
  for (const auto& w : r.witnesses) {
    EpimorphismSpec s{EtClass::C1, g, w};
    if (g->order(g->mul(w[0], w[1])) == 3 && g->order(g->mul(w[1], w[2])) == 5) return build_map(s);
  }
  FAIL("no (2,3,5) triple in A5 x C2");
  return {};
}

}  // namespace

TEST_CASE("construction rejects invalid triples") {
  CHECK_NOTHROW(FlagMap({1, 0}, {0, 1}, {0, 1}));
  CHECK_THROWS_AS(FlagMap({1, 2, 0}, {0, 1, 2}, {0, 1, 2}), InputError);  // not an involution
  CHECK_THROWS_AS(FlagMap({1, 0, 3, 2}, {1, 0, 3, 2}, {1, 0, 3, 2}), InputError);  // disconnected
  CHECK_THROWS_AS(FlagMap({1, 0, 3, 2}, {0, 1, 2, 3}, {0, 2, 1, 3}), InputError);  // (r0 r2)^2 != 1
  CHECK_THROWS_AS(FlagMap({0}, {0, 1}, {0}), InputError);
}

TEST_CASE("tetrahedron summary") {
  auto m = tetrahedron();
  auto s = summary(m);
  CHECK(s.flags == 24);
  CHECK(s.vertices == 4);
  CHECK(s.edges == 6);
  CHECK(s.faces == 4);
  CHECK(s.euler == 2);
  CHECK(s.orientable_no_boundary);
  CHECK(s.genus == 0);
  CHECK(s.order_r0r1 == 3);
  CHECK(s.order_r1r2 == 3);
  CHECK(is_isomorphic(dual(m), m));
  CHECK(automorphism_group(m).order == 24);
  CHECK(is_regular(m));
}

TEST_CASE("icosahedron summary") {
  auto m = icosahedron();
  auto s = summary(m);
  CHECK(s.flags == 120);
  CHECK(s.vertices == 12);
  CHECK(s.edges == 30);
  CHECK(s.faces == 20);
  CHECK(s.euler == 2);
  CHECK(automorphisms(m).size() == 120);
}

TEST_CASE("basic map with a semi-edge") {
  auto s = summary(basic_map(EtClass::C2Pex));
  CHECK(s.flags == 2);
  CHECK(s.vertices == 1);
  CHECK(s.edges == 1);
  CHECK(s.faces == 1);
  CHECK(s.euler == 1);
}

TEST_CASE("automorphisms") {
  auto t = tetrahedron();
  auto auts = automorphisms(t);
  CHECK(auts.size() == 24);
  for (const auto& a : auts) {
    for (int i = 0; i < 3; ++i) CHECK(compose(a, t.perm(i)) == compose(t.perm(i), a));
    if (!a.is_identity())
      for (uint32_t x = 0; x < t.size(); ++x) CHECK(a[x] != x);
  }
  CHECK(std::is_sorted(auts.begin(), auts.end()));
  CHECK(automorphism_group(basic_map(EtClass::C4)).order == 2);

  std::mt19937 rng(4);
  int asymmetric = 0, tried = 0;
  for (int k = 0; k < 60; ++k) {
    auto m = random_map(3 + rng() % 6, rng);
    if (!m) continue;
    ++tried;
    auto a = automorphism_group(*m);
    CHECK(m->size() % a.order == 0);
    CHECK(a.orbit_count * a.order == m->size());
    if (a.order == 1) ++asymmetric;
    auto s = summary(*m);
    CHECK(s.euler == (long long)s.vertices - (long long)s.edges + (long long)s.faces);
    auto p = summary(petrie(*m));
    CHECK(p.vertices == s.vertices);
    CHECK(p.edges == s.edges);
    CHECK(petrie(petrie(*m)) == *m);
    CHECK(dual(dual(*m)) == *m);
    CHECK(is_isomorphic(*m, *m));
    auto q = quotient_by_aut(*m);
    CHECK(q.size() * a.order == m->size());
  }
  CHECK(tried > 20);
  CHECK(asymmetric > 0);
}

TEST_CASE("regular maps from class-1 builds have |Aut| = |G|") {
  for (unsigned n : {3u, 4u, 5u}) {
    auto spec = sym_class1(n);
    auto m = build_map(spec);
    CHECK(automorphism_group(m).order == spec.group->size());
    CHECK(quotient_by_aut(m).size() == 1);
  }
}

TEST_CASE("isomorphism") {
  auto m = tetrahedron();
  // Relabel flags at random.
  std::mt19937 rng(2);
  std::vector<uint32_t> p(m.size());
  std::iota(p.begin(), p.end(), 0u);
  std::shuffle(p.begin() + 1, p.end(), rng);
  std::array<std::vector<uint32_t>, 3> r;
  for (int i = 0; i < 3; ++i) {
    r[i].resize(m.size());
    for (uint32_t x = 0; x < m.size(); ++x) r[i][p[x]] = p[m.r(i, x)];
  }
  FlagMap relabelled(r[0], r[1], r[2]);
  CHECK(is_isomorphic(m, relabelled));
  CHECK_FALSE(is_isomorphic(m, petrie(m)));

  auto [w, wi] = edmonds_k8();
  auto a = build_map(w), b = build_map(wi);
  CHECK(is_isomorphic(a, b));
  CHECK_FALSE(is_isomorphic_oriented(a, b));
  CHECK(is_isomorphic_oriented(a, a));
}

TEST_CASE("joins") {
  auto m = tetrahedron();
  CHECK(is_isomorphic(join(m, m), m));
  CHECK(is_isomorphic(join(m, basic_map(EtClass::C1)), m));

  // S_4 and A_5 have no common nontrivial quotient.
  auto a5 = build_map(alt_class1(5));
  auto j = join(m, a5);
  CHECK(j.size() == 24 * 60);
  CHECK(is_regular(j));
  CHECK(classify(j) == EtClass::C1);
}

TEST_CASE("map JSON round trip") {
  auto m = tetrahedron();
  CHECK(map_from_json(map_to_json(m)) == m);
  auto j = map_to_json(m);
  j["r1"][0] = 99;
  CHECK_THROWS_AS(map_from_json(j), InputError);
  CHECK_THROWS_AS(map_from_json(json::parse(R"({"flags": 2, "r0": [1, 0]})")), InputError);
  auto s = summary_to_json(summary(m));
  CHECK(s["V"] == 4);
  CHECK(s["genus"] == 0);
}
