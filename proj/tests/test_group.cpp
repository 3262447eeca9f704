#include <catch_amalgamated.hpp>

#include <map>
#include <random>

#include "etm/json_io.hpp"

using namespace etm;
using Id = GroupTable::Id;

namespace {

Permutation cyc(size_t n, const char* s) { return Permutation::parse(s, n); }

GroupPtr perm_group(size_t n, std::vector<const char*> gens) {
  std::vector<Permutation> p;
  for (auto s : gens) p.push_back(cyc(n, s));
  return std::make_shared<const GroupTable>(GroupTable::from_permutations({n, p}));
}

bool is_abelian(const GroupTable& g) {
  for (Id a = 0; a < g.size(); ++a)
    for (Id b : g.generators())
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

// Brute-force automorphism existence: try every bijection compatible with
// generator images by checking the multiplication table, over all of S_n
// acting by conjugation on a permutation group. Only used on tiny groups.
bool inner_or_sym_conjugate(const GroupTable& g, const std::vector<Id>& src, const std::vector<Id>& dst) {
  size_t n = g.degree();
  std::vector<uint32_t> v(n);
  for (size_t i = 0; i < n; ++i) v[i] = uint32_t(i);
  do {
    Permutation c(v);
    bool ok = true;
    for (size_t i = 0; i < src.size() && ok; ++i) ok = conjugate(g.perm(src[i]), c) == g.perm(dst[i]);
    if (ok) return true;
  } while (std::next_permutation(v.begin(), v.end()));
  return false;
}

}  // namespace

TEST_CASE("closure and group axioms") {
  auto v4 = perm_group(4, {"(1,2)", "(3,4)"});
  CHECK(v4->size() == 4);
  auto s4 = perm_group(4, {"(1,2)", "(2,3)", "(3,4)"});
  CHECK(s4->size() == 24);
  CHECK(s4->identity() == 0);
  CHECK(s4->perm(0).is_identity());
  std::mt19937 rng(1);
  for (int k = 0; k < 500; ++k) {
    Id a = Id(rng() % 24), b = Id(rng() % 24), c = Id(rng() % 24);
    CHECK(s4->mul(s4->mul(a, b), c) == s4->mul(a, s4->mul(b, c)));
    CHECK(s4->mul(a, s4->inv(a)) == 0);
    CHECK(s4->perm(s4->mul(a, b)) == compose(s4->perm(a), s4->perm(b)));
  }
  CHECK_THROWS_AS(GroupTable::from_permutations({8, {cyc(8, "(1,2,3,4,5,6,7,8)"), cyc(8, "(1,2)")}}, 1000), CapExceeded);
}

TEST_CASE("AGL(1,8) from the affine generators") {
  GaloisField f(2, 3);
  std::vector<uint32_t> x(8), y(8);
  for (unsigned t = 0; t < 8; ++t) {
    x[t] = f.mul(f.primitive(), t);
    y[t] = f.add(t, 1);
  }
  auto g = GroupTable::from_permutations({8, {Permutation(x), Permutation(y)}});
  CHECK(g.size() == 56);
  CHECK(derived_length(g) == 2);
  CHECK_FALSE(nilpotence_class(g).has_value());
}

TEST_CASE("G_{p,e,f} presentations") {
  CHECK(nilpotent_gpef(2, 4, 2).size() == 256);
  auto g = nilpotent_gpef(3, 2, 1);
  CHECK(g.size() == 81);
  Id gg = g.generators()[0], h = g.generators()[1];
  CHECK(g.conj(h, gg) == g.pow(h, 4));
  CHECK(g.conj(h, gg) != h);
  auto c5 = nilpotent_gpef(5, 1, 1);
  CHECK(c5.size() == 25);
  CHECK(is_abelian(c5));

  // Normal form product rule g^i h^j . g^k h^l = g^(i+k) h^((p^f+1)^k j + l).
  auto word = [&](unsigned i, unsigned j) { return g.mul(g.pow(gg, i), g.pow(h, j)); };
  for (unsigned i = 0; i < 9; i += 2)
    for (unsigned j = 0; j < 9; j += 3)
      for (unsigned k = 0; k < 9; ++k)
        for (unsigned l = 0; l < 9; l += 4) {
          unsigned m = 1;
          for (unsigned t = 0; t < k; ++t) m = m * 4 % 9;
          CHECK(g.mul(word(i, j), word(k, l)) == word((i + k) % 9, (m * j + l) % 9));
        }

  for (auto [p, e] : std::vector<std::pair<unsigned, unsigned>>{{3, 2}, {3, 3}, {5, 2}, {7, 2}})
    CHECK(nilpotence_class(nilpotent_gpef(p, e, 1)) == int(e));
  CHECK_THROWS(nilpotent_gpef(4, 2, 1));
  CHECK_THROWS(nilpotent_gpef(3, 2, 3));
}

TEST_CASE("centres and the extension by alpha") {
  auto g = nilpotent_gpef(3, 2, 1);
  auto z = center(g);
  CHECK(z.size() == 9);
  Id gg = g.generators()[0], h = g.generators()[1];
  CHECK(z.contains(g.pow(gg, 3)));
  CHECK(z.contains(g.pow(h, 3)));

  for (unsigned e : {3u, 4u, 5u}) {
    auto a = extend_by_alpha(e);
    CHECK(a.size() == (size_t(1) << (2 * e + 1)));
    CHECK(nilpotence_class(a) == int(e + 1));
    Id ag = a.generators()[0], ah = a.generators()[1], al = a.generators()[2];
    CHECK(a.mul(al, al) == 0);
    CHECK(a.conj(ah, al) == a.pow(ah, (1 << e) - 1));
    CHECK(a.conj(ag, al) == a.mul(ag, ah));
  }
  auto a4 = extend_by_alpha(4);
  CHECK(a4.size() == 512);
  auto z4 = center(a4);
  CHECK(z4.size() == 4);
  bool cyclic = false;
  for (Id x : z4.members) cyclic = cyclic || a4.order(x) == 4;
  CHECK(cyclic);
  CHECK_THROWS(extend_by_alpha(2));
}

TEST_CASE("derived series and quotients") {
  auto s4 = perm_group(4, {"(1,2)", "(2,3)", "(3,4)"});
  auto d = derived_subgroup(*s4);
  CHECK(d.size() == 12);
  auto a4 = std::make_shared<const GroupTable>(subgroup_table(s4, d));
  CHECK(derived_subgroup(*a4).size() == 4);
  CHECK(derived_length(*s4) == 3);
  CHECK(is_abelian(quotient(s4, d)));
  CHECK(quotient(s4, d).size() == 2);

  auto d4 = perm_group(4, {"(1,2,3,4)", "(1,3)"});
  CHECK(nilpotence_class(*d4) == 2);
  CHECK(derived_length(*d4) == 2);
  CHECK(nilpotence_class(*perm_group(4, {"(1,2)", "(3,4)"})) == 1);

  for (auto g : {s4, d4, perm_group(5, {"(1,2,3,4,5)", "(1,2)"}), perm_group(6, {"(1,2,3)", "(4,5,6)", "(1,4)(2,5)(3,6)"})})
    CHECK(is_abelian(quotient(g, derived_subgroup(*g))));

  Subgroup not_normal = generate(*s4, {*s4->find(cyc(4, "(1,2)"))});
  CHECK_FALSE(is_normal(*s4, not_normal));
  CHECK_THROWS(quotient(s4, not_normal));
}

TEST_CASE("automorphism extension") {
  auto s3 = perm_group(3, {"(1,2)", "(2,3)"});
  Id a = *s3->find(cyc(3, "(1,2)")), b = *s3->find(cyc(3, "(2,3)"));
  CHECK(hom_extension_exists(*s3, {a, b}, {b, a}));
  CHECK(hom_extension_exists(*s3, {a, b}, {a, b}));
  CHECK_FALSE(hom_extension_exists(*s3, {a, b}, {a, a}));

  auto s6 = perm_group(6, {"(1,2,3,4,5,6)", "(1,2)"});
  Id x = *s6->find(cyc(6, "(1,2,3,4,5,6)")), y = *s6->find(cyc(6, "(1,2)(3,5)"));
  CHECK_FALSE(hom_extension_exists(*s6, {x, y}, {s6->inv(x), s6->inv(y)}));

  // Against brute-force conjugation in S_4 (all automorphisms of S_4 are inner).
  auto s4 = perm_group(4, {"(1,2)", "(2,3)", "(3,4)"});
  std::mt19937 rng(9);
  int agreed = 0;
  for (int k = 0; k < 300; ++k) {
    std::vector<Id> src{Id(rng() % 24), Id(rng() % 24)};
    if (!generates(*s4, src)) continue;
    std::vector<Id> dst{Id(rng() % 24), Id(rng() % 24)};
    if (k % 3 == 0) dst = {s4->conj(src[0], 5), s4->conj(src[1], 5)};
    bool fwd = hom_extension_exists(*s4, src, dst);
    CHECK(fwd == inner_or_sym_conjugate(*s4, src, dst));
    if (generates(*s4, dst)) CHECK(fwd == hom_extension_exists(*s4, dst, src));
    ++agreed;
  }
  CHECK(agreed > 50);
}

TEST_CASE("simultaneous inversion") {
  CHECK(simultaneous_inversion_survey(*perm_group(5, {"(1,2,3,4,5)", "(1,2)"})).all_inverted());
  auto s6 = perm_group(6, {"(1,2,3,4,5,6)", "(1,2)"});
  auto s = simultaneous_inversion_survey(*s6);
  CHECK_FALSE(s.all_inverted());
  CHECK(s.generating_pairs > s.inverted);
  auto threaded = simultaneous_inversion_survey(*s6, 3);
  CHECK(threaded.generating_pairs == s.generating_pairs);
  CHECK(threaded.inverted == s.inverted);
  CHECK(threaded.counterexample == s.counterexample);
  CHECK(simultaneous_inversion_survey(*psl2_group(7)).all_inverted());
}

TEST_CASE("conjugacy classes and strong reality") {
  auto d6 = perm_group(6, {"(1,2,3,4,5,6)", "(1,6)(2,5)(3,4)"});
  Id r = *d6->find(cyc(6, "(1,2,3,4,5,6)"));
  for (int k = 0; k < 6; ++k) CHECK(strongly_real(*d6, d6->pow(r, k)));
  CHECK(strongly_real(*d6, 0));

  auto a7 = alternating_group(7);
  Id c7 = *a7->find(cyc(7, "(1,2,3,4,5,6,7)"));
  auto inv = involutions(*a7);
  bool brute = false;
  for (Id t : inv)
    for (Id u : inv) brute = brute || a7->mul(t, u) == c7;
  CHECK(strongly_real(*a7, c7) == brute);

  auto s4 = perm_group(4, {"(1,2)", "(2,3)", "(3,4)"});
  auto cls = conjugacy_classes(*s4);
  std::multiset<size_t> sizes;
  for (auto& c : cls) sizes.insert(c.size());
  CHECK(sizes == std::multiset<size_t>{1, 3, 6, 6, 8});
  CHECK(involutions(*s4).size() == 9);
}

TEST_CASE("triple counts against the character formula") {
  auto c2 = perm_group(2, {"(1,2)"});
  CHECK(count_triples_brute(*c2, {0}, {0}, {0}) == 1);

  for (std::string name : {"s4", "d4", "a5"}) {
    CharacterTable t = load_chartable(name);
    uint64_t total = 0;
    for (auto s : t.class_sizes) total += s;
    CHECK(total == t.order);
    // Row orthogonality.
    for (size_t i = 0; i < t.chars.size(); ++i)
      for (size_t j = 0; j < t.chars.size(); ++j) {
        std::complex<double> ip = 0;
        for (size_t k = 0; k < t.class_sizes.size(); ++k) ip += double(t.class_sizes[k]) * t.chars[i][k] * std::conj(t.chars[j][k]);
        CHECK(std::abs(ip / double(t.order) - (i == j ? 1.0 : 0.0)) < 1e-9);
      }
  }

  CharacterTable s4t = load_chartable("s4");
  auto s4 = perm_group(4, {"(1,2)", "(2,3)", "(3,4)"});
  auto cls = conjugacy_classes(*s4);
  auto class_of = [&](const char* rep) {
    Id x = *s4->find(cyc(4, rep));
    for (auto& c : cls)
      if (std::find(c.begin(), c.end(), x) != c.end()) return c;
    return std::vector<Id>{};
  };
  auto label = [&](const std::string& l) {
    return size_t(std::find(s4t.class_labels.begin(), s4t.class_labels.end(), l) - s4t.class_labels.begin());
  };
  auto tr = class_of("(1,2)"), four = class_of("(1,2,3,4)"), three = class_of("(1,2,3)");
  size_t it = label("2a"), i4 = label("4a"), i3 = label("3a");
  REQUIRE(i3 < s4t.class_labels.size());
  auto f = frobenius_count_integral(s4t, it, i4, i3);
  REQUIRE(f.has_value());
  CHECK(*f == count_triples_brute(*s4, tr, four, three));

  CharacterTable bad = s4t;
  bad.chars[1][1] = 0.5;
  bool flagged = false;
  for (size_t i = 0; i < 5; ++i)
    for (size_t j = 0; j < 5; ++j)
      for (size_t k = 0; k < 5; ++k) flagged = flagged || !frobenius_count_integral(bad, i, j, k);
  CHECK(flagged);
}

TEST_CASE("primitive elements inverted by Frobenius") {
  CHECK(priminv_check(2, 2));
  CHECK(priminv_check(2, 1));
  CHECK(priminv_check(3, 1));
  CHECK_FALSE(priminv_check(3, 2));
  for (unsigned q = 5; q <= 128; ++q)
    if (auto pe = prime_power(q)) CHECK_FALSE(priminv_check(pe->first, pe->second));
}

TEST_CASE("geometric sums of 5 modulo 2^e") {
  for (unsigned e = 3; e <= 16; ++e) {
    const uint64_t mod = uint64_t(1) << e;
    uint64_t sum = 0, pw = 1;
    for (uint64_t i = 0; i < (uint64_t(1) << (e - 2)); ++i) {
      sum = (sum + pw) % mod;
      pw = pw * 5 % mod;
    }
    CHECK(sum == mod - (uint64_t(1) << (e - 2)));
  }
}

TEST_CASE("groups from JSON") {
  auto g = group_from_json(json::parse(R"j({"generators": ["(1,2,3)", "(1,2)"]})j"));
  CHECK(g->size() == 6);
  auto back = group_from_json(group_to_json(*g));
  CHECK(back->size() == 6);
  auto fam = group_from_json(json::parse(R"j({"family": "gpef", "p": 3, "e": 2, "f": 1})j"));
  CHECK(fam->size() == 81);
  CHECK(group_to_json(*fam)["family"] == "gpef");
  CHECK_THROWS_AS(group_from_json(json::parse(R"j({"family": "nope"})j")), InputError);
  CHECK_THROWS_AS(group_from_json(json::parse(R"j({"generators": ["(1,2"]})j")), InputError);
  CHECK_THROWS_AS(group_from_json(json::parse(R"j({"family": "gpef", "p": 4, "e": 2, "f": 1})j")), InputError);
}
