#include <catch_amalgamated.hpp>

#include <map>
#include <set>

#include "etm/realize.hpp"

using namespace etm;
using C = EtClass;

namespace {

// A surjection of flag sets commuting with r0, r1, r2 from basic_map(t) onto
// basic_map(u), by brute force over all functions.
bool basic_maps_cover(EtClass t, EtClass u) {
  FlagMap a = basic_map(t), b = basic_map(u);
  std::vector<uint32_t> f(a.size(), 0);
  while (true) {
    bool ok = true;
    for (uint32_t x = 0; x < a.size() && ok; ++x)
      for (int i = 0; i < 3 && ok; ++i) ok = f[a.r(i, x)] == b.r(i, f[x]);
    if (ok && std::set<uint32_t>(f.begin(), f.end()).size() == b.size()) return true;
    size_t k = 0;
    while (k < f.size() && ++f[k] == b.size()) f[k++] = 0;
    if (k == f.size()) return false;
  }
}

}  // namespace

TEST_CASE("labels") {
  CHECK(kAllClasses.size() == 14);
  for (EtClass t : kAllClasses) CHECK(parse_class(to_string(t)) == t);
  CHECK(parse_class("2*ex") == C::C2sex);
  CHECK(parse_class("5*") == C::C5s);
  CHECK_FALSE(parse_class("6").has_value());
  CHECK(to_string(C::C2sex) == "2sex");
  int index_sum = 0;
  for (EtClass t : kAllClasses) index_sum += class_index(t);
  CHECK(index_sum == 1 + 6 * 2 + 7 * 4);
}

TEST_CASE("basic maps") {
  int regular = 0;
  for (EtClass t : kAllClasses) {
    FlagMap m = basic_map(t);
    CHECK(m.size() == uint32_t(class_index(t)));
    regular += is_regular(m);
    if (t != C::C1) CHECK(classify(m) != t);
  }
  CHECK(classify(basic_map(C::C1)) == C::C1);
  CHECK(regular == 11);
  for (EtClass t : {C::C4, C::C4s, C::C4P}) {
    CHECK(automorphism_group(basic_map(t)).order == 2);
    CHECK(monodromy_order(basic_map(t), 100) == 8);
  }

  auto p = summary(basic_map(C::C5P));
  CHECK_FALSE(p.has_boundary);
  CHECK_FALSE(p.orientable_no_boundary);
  CHECK(p.euler == 1);

  auto three = summary(basic_map(C::C3));
  CHECK(three.vertices == 2);
  CHECK(three.edges == 1);
  CHECK(three.faces == 2);

  // Classes whose basic map has a single vertex, face or Petrie polygon.
  const std::map<EtClass, std::string> letters{
      {C::C1, "VFP"},   {C::C2, "FP"},      {C::C2s, "VP"},     {C::C2P, "VF"},  {C::C2ex, "VFP"},
      {C::C2sex, "VFP"}, {C::C2Pex, "VFP"}, {C::C3, ""},        {C::C4, "FP"},   {C::C4s, "VP"},
      {C::C4P, "VF"},   {C::C5, "FP"},      {C::C5s, "VP"},     {C::C5P, "VF"}};
  for (auto [t, l] : letters) {
    auto s = summary(basic_map(t));
    CHECK((s.vertices == 1) == (l.find('V') != std::string::npos));
    CHECK((s.faces == 1) == (l.find('F') != std::string::npos));
    CHECK((summary(petrie(basic_map(t))).faces == 1) == (l.find('P') != std::string::npos));
  }

  auto semi = summary(basic_map(C::C2Pex));
  CHECK(semi.vertices == 1);
  CHECK(semi.edges == 1);
  CHECK(semi.faces == 1);
  CHECK_FALSE(semi.has_boundary);
}

TEST_CASE("dual and Petrie on classes") {
  CHECK(omega_dual(C::C2) == C::C2s);
  CHECK(omega_petrie(C::C2s) == C::C2P);
  std::set<std::set<EtClass>> orbits;
  for (EtClass t : kAllClasses) {
    CHECK(omega_dual(omega_dual(t)) == t);
    CHECK(omega_petrie(omega_petrie(t)) == t);
    // The operations on basic maps realize the action on classes.
    CHECK(is_isomorphic(dual(basic_map(t)), basic_map(omega_dual(t))));
    CHECK(is_isomorphic(petrie(basic_map(t)), basic_map(omega_petrie(t))));
    std::set<EtClass> orbit{t};
    for (int k = 0; k < 6; ++k)
      for (EtClass u : std::set<EtClass>(orbit)) orbit.insert({omega_dual(u), omega_petrie(u)});
    orbits.insert(orbit);
    CHECK(orbit.count(representative(t)));
    CHECK(apply_ops(representative(t), ops_from_representative(t)) == t);
  }
  CHECK(orbits == std::set<std::set<EtClass>>{{C::C1},
                                              {C::C2, C::C2s, C::C2P},
                                              {C::C2ex, C::C2sex, C::C2Pex},
                                              {C::C3},
                                              {C::C4, C::C4s, C::C4P},
                                              {C::C5, C::C5s, C::C5P}});
}

TEST_CASE("covering relation") {
  CHECK(covered(C::C1).empty());
  CHECK(covered(C::C5) == std::vector<EtClass>{C::C1, C::C2, C::C2sex, C::C2Pex});
  for (EtClass t : kAllClasses) {
    auto cov = covered(t);
    std::set<EtClass> listed(cov.begin(), cov.end());
    std::set<EtClass> found;
    for (EtClass u : kAllClasses)
      if (u != t && basic_maps_cover(t, u)) found.insert(u);
    CHECK(listed == found);
    CHECK(covers(t, t));
  }
}

TEST_CASE("classification of built maps") {
  auto chiral = build_map(sym_chiral(6));
  CHECK(classify(chiral) == C::C2Pex);
  CHECK(quotient_by_aut(chiral).size() == 2);

  auto s3 = build_map(spec_from_perms(C::C3, 3,
                                      {Permutation::parse("(1,2)", 3), Permutation::parse("(2,3)", 3),
                                       Permutation::parse("(1,3)", 3), Permutation::parse("(1,2)", 3)}));
  auto c = classify(s3);
  REQUIRE(c.has_value());
  CHECK(covers(C::C3, *c));

  // Equivariance on a corpus of constructions.
  std::vector<FlagMap> corpus{chiral, s3, build_map(sym_class1(5)), build_map(psl2_class2_q7()),
                              build_map(nilpotent_chiral(4)), build_map(alt_small(C::C5, 7))};
  for (const auto& m : corpus) {
    auto t = classify(m);
    REQUIRE(t.has_value());
    CHECK(classify(dual(m)) == omega_dual(*t));
    CHECK(classify(petrie(m)) == omega_petrie(*t));
  }
  // Not edge-transitive: a random asymmetric map.
  FlagMap odd({1, 0, 3, 2, 5, 4, 7, 6}, {0, 2, 1, 4, 3, 6, 5, 7}, {2, 3, 0, 1, 6, 7, 4, 5});
  if (automorphism_group(odd).order == 1) CHECK_FALSE(classify(odd).has_value());
}
