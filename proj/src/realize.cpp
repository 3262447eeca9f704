#include "etm/realize.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace etm {

namespace {

using C = EtClass;
using Id = GroupTable::Id;

// Orbit of t under <D, P>: 0 = {1}, 1 = 2-family, 2 = 2ex-family, 3 = {3},
// 4 = 4-family, 5 = 5-family.
int orbit_of(EtClass t) {
  switch (representative(t)) {
    case C::C1: return 0;
    case C::C2: return 1;
    case C::C2ex: case C::C2Pex: return 2;
    case C::C3: return 3;
    case C::C4: return 4;
    default: return 5;
  }
}

// (a, a+1)(a+2, a+3)... up to (b-1, b).
std::string chain(unsigned a, unsigned b) {
  std::string s;
  for (unsigned i = a; i + 1 <= b; i += 2) s += "(" + std::to_string(i) + "," + std::to_string(i + 1) + ")";
  return s;
}

std::string tr(unsigned a, unsigned b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

std::string cycle(unsigned a, unsigned b) {
  std::string s = "(";
  for (unsigned i = a; i <= b; ++i) s += std::to_string(i) + (i == b ? ")" : ",");
  return s;
}

Permutation P(unsigned n, const std::string& s) { return Permutation::parse(s, n); }

Id order_of_id(const GroupTable& g, Id x) { return Id(g.order(x)); }

// Class-1 triples of odd involutions generating S_n.
std::vector<Permutation> sneven_class1(unsigned n) {
  if (n == 2) return {P(2, "(1,2)"), P(2, "(1,2)"), P(2, "(1,2)")};
  if (n % 4 == 3) {
    unsigned k = (n - 3) / 4;
    std::string r0, r1;
    for (unsigned i = 2; i < n + 2 - i; ++i) r0 += tr(i, n + 2 - i);
    r1 = tr(1, 2);
    for (unsigned i = 3; i < n + 3 - i; ++i) r1 += tr(i, n + 3 - i);
    return {P(n, r0), P(n, r1), P(n, tr(2 * k + 2, 2 * k + 3))};
  }
  if (n % 4 == 0) {
    std::string r0, r1 = tr(1, 2);
    for (unsigned i = 2; i < n + 1 - i; ++i) r0 += tr(i, n + 1 - i);
    for (unsigned i = 3; i < n + 2 - i; ++i) r1 += tr(i, n + 2 - i);
    return {P(n, r0), P(n, r1), P(n, tr(1, n))};
  }
  if (n % 4 == 1) {
    if (n < 9) throw std::invalid_argument("no even class-1 triple for this n");
    unsigned k = (n - 1) / 4;
    std::string r0 = chain(1, n - 3), r1 = tr(1, 3), r2;
    for (unsigned j = 1; j + 1 <= k; ++j) r2 += tr(4 * j - 1, 4 * j + 1) + tr(4 * j, 4 * j + 2);
    r2 += tr(n - 2, n - 1);
    for (unsigned j = 1; j + 2 <= k; ++j) {
      if (j == 1 && k % 2 == 1) r1 += tr(5, 8) + tr(6, 7);
      else r1 += tr(4 * j + 1, 4 * j + 3) + tr(4 * j + 2, 4 * j + 4);
    }
    r1 += tr(n - 4, n - 2) + tr(n - 1, n);
    return {P(n, r0), P(n, r1), P(n, r2)};
  }
  // n = 4k + 2
  std::string r0 = chain(1, n);
  if (n == 10) return {P(n, r0), P(n, "(2,4)(5,7)(8,10)"), P(n, "(3,5)(4,6)(7,8)")};
  if (n == 14) return {P(n, r0), P(n, "(2,4)(5,7)(6,8)(9,11)(12,14)"), P(n, "(3,5)(4,6)(7,9)(8,10)(11,12)")};
  if (n < 18) throw std::invalid_argument("no even class-1 triple for this n");
  unsigned k = (n - 2) / 4;
  std::string r1 = tr(2, 4) + tr(6, 8), r2;
  for (unsigned j = 2; j + 3 <= k; ++j) r1 += tr(4 * j + 1, 4 * j + 3) + tr(4 * j + 2, 4 * j + 4);
  r1 += tr(n - 9, n - 7) + tr(n - 5, n - 3) + tr(n - 2, n);
  for (unsigned j = 1; j + 1 <= k; ++j) r2 += tr(4 * j - 1, 4 * j + 1) + tr(4 * j, 4 * j + 2);
  r2 += tr(n - 3, n - 2);
  return {P(n, r0), P(n, r1), P(n, r2)};
}

std::vector<Permutation> sneven_class3(unsigned n) {
  unsigned r = (n + 1) % 4, m = n - r;  // m = 3 mod 4
  std::vector<Permutation> s = {P(n, chain(1, m - 1)), P(n, chain(2, m))};
  switch (r) {
    case 0: s.push_back(P(n, "(1,2)")); s.push_back(P(n, "(1,2)")); break;
    case 1: s.push_back(P(n, tr(1, n))); s.push_back(P(n, tr(1, n))); break;
    case 2: s.push_back(P(n, tr(1, n))); s.push_back(P(n, tr(2, n - 1))); break;
    default: s.push_back(P(n, tr(1, n) + tr(2, n - 1) + tr(3, n - 2))); s.push_back(P(n, tr(1, n))); break;
  }
  return s;
}

std::mutex& cache_mutex() {
  static std::mutex mu;
  return mu;
}

}  // namespace

std::vector<Permutation> sym_even_class1_perms(unsigned n) { return sneven_class1(n); }
std::vector<Permutation> sym_even_class3_perms(unsigned n) {
  if (n < 3) throw std::invalid_argument("class-3 quadruple needs n >= 3");
  return sneven_class3(n);
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Construction: return "construction";
    case Provenance::Search: return "search";
    case Provenance::Exhausted: return "exhausted";
    case Provenance::Survey: return "survey";
    case Provenance::Cited: return "cited";
  }
  return "?";
}

FlagMap realize_map(const Realization& r) { return transform_spec(r.spec, r.ops); }

std::optional<std::vector<Op>> ops_between(EtClass from, EtClass to) {
  std::map<EtClass, std::vector<Op>> seen{{from, {}}};
  std::vector<EtClass> queue{from};
  for (size_t k = 0; k < queue.size(); ++k) {
    EtClass c = queue[k];
    if (c == to) return seen[c];
    for (Op op : {Op::Dual, Op::Petrie}) {
      EtClass d = apply_ops(c, {op});
      if (seen.count(d)) continue;
      auto ops = seen[c];
      ops.push_back(op);
      seen[d] = ops;
      queue.push_back(d);
    }
  }
  return std::nullopt;
}

Realization realization_for(EtClass target, EpimorphismSpec spec, std::string source) {
  auto ops = ops_between(spec.cls, target);
  if (!ops) throw std::invalid_argument("classes " + to_string(spec.cls) + " and " + to_string(target) + " are in different orbits");
  return {target, std::move(spec), *ops, std::move(source)};
}

Permutation perm_of(unsigned n, const char* cycles) { return Permutation::parse(cycles, n); }

GroupPtr symmetric_group(unsigned n) {
  if (n == 0) throw std::invalid_argument("degree must be positive");
  std::vector<Permutation> gens;
  if (n == 1) gens = {Permutation::identity(1)};
  else if (n == 2) gens = {P(2, "(1,2)")};
  else gens = {P(n, cycle(1, n)), P(n, "(1,2)")};
  return std::make_shared<const GroupTable>(GroupTable::from_permutations({n, gens}));
}

GroupPtr alternating_group(unsigned n) {
  if (n == 0) throw std::invalid_argument("degree must be positive");
  std::vector<Permutation> gens;
  if (n <= 2) gens = {Permutation::identity(n)};
  else if (n % 2 == 1) gens = alt_standard_gens(n, 'c', 1);
  else gens = alt_standard_gens(n, 'd', 2);
  return std::make_shared<const GroupTable>(GroupTable::from_permutations({n, gens}));
}

GroupPtr psl2_group(unsigned q) {
  PSL2 L(q);
  const GaloisField& f = L.field();
  unsigned one = f.from_int(1), a = f.primitive();
  std::vector<Permutation> gens = {L.to_perm({a, 0, 0, f.inv(a)}), L.to_perm({one, one, 0, one}),
                                   L.to_perm({0, one, f.neg(one), 0})};
  auto g = std::make_shared<const GroupTable>(GroupTable::from_permutations({q + 1, gens}));
  if (g->size() != L.order()) throw std::logic_error("PSL(2,q) generators produced the wrong order");
  return g;
}

EpimorphismSpec spec_from_perms(EtClass rep, unsigned degree, const std::vector<Permutation>& images) {
  auto g = std::make_shared<const GroupTable>(GroupTable::from_permutations({degree, images}));
  return {rep, g, g->generators()};
}

EpimorphismSpec spec_in_group(EtClass rep, const GroupPtr& g, const std::vector<Permutation>& images) {
  EpimorphismSpec s{rep, g, {}};
  for (const auto& p : images) {
    auto id = g->find(p);
    if (!id) throw std::invalid_argument("image " + p.to_cycles() + " is not in the group");
    s.images.push_back(*id);
  }
  return s;
}

EpimorphismSpec sym_class1(unsigned n) {
  if (n < 3) throw std::invalid_argument("sym_class1 needs n >= 3");
  std::string r1, r2 = "(1,2)";
  for (unsigned i = 2; i < n + 2 - i; ++i) r1 += tr(i, n + 2 - i);
  for (unsigned i = 3; i < n + 3 - i; ++i) r2 += tr(i, n + 3 - i);
  return spec_in_group(C::C1, group_of(GroupKind::Sym, n), {P(n, "(1,2)"), P(n, r1), P(n, r2)});
}

EpimorphismSpec sym_chiral(unsigned n) {
  if (n < 6) throw std::invalid_argument("no chiral map with group S_n for n < 6");
  auto g = group_of(GroupKind::Sym, n);
  if (n == 6) return spec_in_group(C::C2Pex, g, {P(6, "(1,2,3,4,5,6)"), P(6, "(1,2)(3,5)")});
  return spec_in_group(C::C2Pex, g, {P(n, cycle(1, n - 1)), P(n, "(1,3)(2,4)" + tr(n - 1, n))});
}

std::variant<Realization, Unrealizable> sym_even(EtClass t, unsigned n) {
  if (n == 0) throw std::invalid_argument("degree must be positive");
  if (!table3_member(GroupKind::Sym, n, t))
    return Unrealizable{"S_" + std::to_string(n) + " has no orientable boundary-free map in class " + to_string(t),
                        Provenance::Cited};
  auto g = group_of(GroupKind::Sym, n);
  auto from_class1 = [&](EtClass rep) {
    auto r = sneven_class1(n);
    if (rep == C::C1 || rep == C::C2) return spec_in_group(rep, g, r);
    return spec_in_group(rep, g, {r[0], r[1], compose(r[1], r[2])});
  };
  switch (t) {
    case C::C1:
      return realization_for(t, from_class1(C::C1), "odd involution triple");
    case C::C2: case C::C2s:
      return realization_for(t, from_class1(C::C2), "s_i = r_(i-1) of the odd class-1 triple");
    case C::C2P:
      if (n == 5) return realization_for(t, spec_in_group(C::C2, g, {P(5, "(1,2)"), P(5, "(3,4)"), P(5, "(1,3)(4,5)")}), "S_5 bespoke");
      if (n == 6) return realization_for(t, spec_in_group(C::C2, g, {P(6, "(1,3)"), P(6, "(1,5)(2,3)(4,6)"), P(6, "(1,2)(3,4)")}), "S_6 bespoke");
      if (n == 3) return Unrealizable{"S_3 has no orientable boundary-free map in class 2P", Provenance::Exhausted};
      {
        // s3 must be even; r0 r2 is an even involution commuting with r0.
        auto r = sneven_class1(n);
        return realization_for(t, spec_in_group(C::C2, g, {r[0], r[1], compose(r[0], r[2])}), "s1 = r0, s2 = r1, s3 = r0 r2");
      }
    case C::C2ex: case C::C2sex: {
      // S must be even: an (n-1)-cycle for even n, an n-cycle for odd n.
      std::string s = n % 2 == 0 ? cycle(1, n - 1) : cycle(1, n);
      return realization_for(t, spec_in_group(C::C2ex, g, {P(n, "(1,3)(2,4)" + tr(n - 1, n)), P(n, s)}), "odd s1, even s");
    }
    case C::C2Pex:
      return realization_for(t, sym_chiral(n), "chiral pair");
    case C::C3:
      return realization_for(t, spec_in_group(C::C3, g, sneven_class3(n)), "odd involutions around an m-cycle");
    case C::C4: case C::C4s:
      if (n == 3) return Unrealizable{"S_3 has no orientable boundary-free map in class " + to_string(t), Provenance::Exhausted};
      if (n == 5) return realization_for(t, spec_in_group(C::C4, g, {P(5, "(1,2)"), P(5, "(1,3)"), P(5, "(1,2,3,4,5)")}), "S_5 by search");
      if (n == 6) return realization_for(t, spec_in_group(C::C4, g, {P(6, "(1,2)"), P(6, "(1,3)(4,5)(2,6)"), P(6, "(1,4,5)")}), "S_6 by search");
      return realization_for(t, from_class1(C::C4), "s1 = r0, s2 = r1, s = r1 r2");
    case C::C4P:
      if (n == 5) return realization_for(t, spec_in_group(C::C4, g, {P(5, "(1,2)"), P(5, "(3,4)"), P(5, "(2,3,4,5)")}), "S_5 bespoke");
      if (n == 6) return realization_for(t, spec_in_group(C::C4, g, {P(6, "(1,2)"), P(6, "(3,4)"), P(6, "(1,5,6)(2,3)")}), "S_6 bespoke");
      return realization_for(t, spec_in_group(C::C4, g, sneven_class1(n)), "s_i = r_(i-1), s = r2");
    case C::C5: case C::C5s:
      return realization_for(t, propagate(sym_chiral(n), C::C5), "chiral pair as S, S'");
    case C::C5P:
      if (n == 6) return realization_for(t, spec_in_group(C::C5, g, {P(6, "(1,2,5,3)"), P(6, cycle(1, 6))}), "S_6 bespoke");
      if (n % 2 == 0) return realization_for(t, spec_in_group(C::C5, g, {P(n, "(1,2)(3,4,5)"), P(n, cycle(1, n))}), "odd pair, even n");
      return realization_for(t, spec_in_group(C::C5, g, {P(n, "(1,3)(2,4)" + tr(n - 1, n)), P(n, cycle(1, n - 1))}), "odd pair, odd n");
  }
  throw std::logic_error("unhandled class");
}

std::vector<Permutation> alt_standard_gens(unsigned n, char variant, unsigned k) {
  if (n < 3) throw std::invalid_argument("alternating generators need n >= 3");
  auto wrap = [n](long long v) { return unsigned(((v - 1) % n + n) % n + 1); };
  std::vector<Permutation> out;
  switch (variant) {
    case 'a':
      for (unsigned i = 1; i + 2 <= n; ++i) out.push_back(P(n, "(" + std::to_string(i) + "," + std::to_string(i + 1) + "," + std::to_string(i + 2) + ")"));
      return out;
    case 'b':
      for (unsigned i = 2; i + 1 <= n; ++i) out.push_back(P(n, "(1," + std::to_string(i) + "," + std::to_string(i + 1) + ")"));
      return out;
    case 'c':
      if (n % 2 == 0) throw std::invalid_argument("variant c needs odd n");
      return {P(n, "(" + std::to_string(wrap(k)) + "," + std::to_string(wrap(k + 1)) + "," + std::to_string(wrap(k + 2)) + ")"),
              P(n, cycle(1, n))};
    case 'd':
      if (n % 2 == 1 || n < 4) throw std::invalid_argument("variant d needs even n >= 4");
      if (k == 1 || k >= n) throw std::invalid_argument("variant d needs 1 < k < n");
      return {P(n, "(1," + std::to_string(k) + "," + std::to_string(k + 1) + ")"), P(n, cycle(2, n))};
  }
  throw std::invalid_argument("unknown variant");
}

EpimorphismSpec alt_class1(unsigned n) {
  std::string r0 = "(1,2)(3,4)", r1, r2;
  if (n == 5) {
    r2 = "(1,4)(2,3)";
    r1 = "(2,3)(4,5)";
  } else if (n >= 9 && n % 4 == 1) {
    r2 = chain(1, n - 1);
    r1 = chain(2, n);
  } else if (n >= 10 && n % 4 == 2) {
    r2 = chain(3, n);
    r1 = chain(2, n - 1);
  } else if (n >= 11 && n % 4 == 3) {
    r0 = "(1,4)(2,3)(5,6)" + tr(n - 2, n - 1);
    r2 = chain(1, n - 3);
    r1 = chain(4, n);
  } else if (n >= 12 && n % 4 == 0) {
    r2 = chain(1, n);
    r1 = chain(2, n - 1) + tr(1, n);
  } else {
    throw std::invalid_argument("A_n is a quotient of the extended modular group only for n = 5 or n >= 9");
  }
  return spec_in_group(C::C1, group_of(GroupKind::Alt, n), {P(n, r0), P(n, r1), P(n, r2)});
}

EpimorphismSpec alt_chiral(unsigned n) {
  if (n < 8) throw std::invalid_argument("no chiral map with group A_n for n < 8");
  auto g = group_of(GroupKind::Alt, n);
  if (n % 2 == 0) return spec_in_group(C::C2Pex, g, {P(n, cycle(2, n)), P(n, "(1,2)(3,4)")});
  return spec_in_group(C::C2Pex, g, {P(n, cycle(1, n)), P(n, "(1,2)(3,6)")});
}

EpimorphismSpec alt_small(EtClass rep, unsigned n) {
  auto g = group_of(GroupKind::Alt, n);
  if (rep == C::C2 && n == 6) return spec_in_group(rep, g, {P(6, "(1,2)(3,4)"), P(6, "(2,6)(4,5)"), P(6, "(2,3)(4,5)")});
  if (rep == C::C2 && n == 7) return spec_in_group(rep, g, {P(7, "(1,2)(3,4)"), P(7, "(2,6)(5,7)"), P(7, "(2,3)(4,5)")});
  if (rep == C::C2 && n == 8) return spec_in_group(rep, g, {P(8, "(1,2)(3,4)(5,6)(7,8)"), P(8, "(1,3)(4,6)"), P(8, "(3,4)(6,7)")});
  if (rep == C::C5 && n == 7) return spec_in_group(rep, g, {P(7, "(1,2,3,4,5)"), P(7, "(1,6,7)(2,4,5)")});
  if (rep == C::C4 && n == 4) return spec_in_group(rep, g, {P(4, "(1,2)(3,4)"), P(4, "()"), P(4, "(1,2,3)")});
  throw std::invalid_argument("no bespoke alternating-group case for class " + to_string(rep) + ", n = " + std::to_string(n));
}

EpimorphismSpec psl2_class1(unsigned q) {
  if (q == 3 || q == 7 || q == 9) throw std::invalid_argument("PSL(2,q) is not a quotient of the extended modular group for q = 3, 7, 9");
  PSL2 L(q);
  const GaloisField& f = L.field();
  auto g = group_of(GroupKind::L2, q);
  unsigned one = f.from_int(1), a = f.primitive();
  Mat2 r1{0, one, f.neg(one), 0};
  Mat2 x{a, 0, 0, f.inv(a)};
  Mat2 r0 = L.mul(x, r1);
  for (unsigned ap = 1; ap < q; ++ap) {
    unsigned aa = f.mul(a, ap);
    unsigned t = f.sub(f.neg(one), f.mul(aa, aa));
    if (t == 0) continue;
    auto bp = f.sqrt(t);
    if (!bp) continue;
    unsigned dp = f.neg(f.mul(f.mul(a, a), ap));
    Mat2 z{ap, *bp, *bp, dp};
    if (L.det(z) != one) throw std::logic_error("trace condition produced a bad determinant");
    Mat2 r2 = L.mul(r1, z);
    auto spec = spec_in_group(C::C1, g, {L.to_perm(r0), L.to_perm(r1), L.to_perm(r2)});
    if (check_spec(spec).empty()) return spec;
  }
  throw std::logic_error("no generating class-1 triple found");
}

EpimorphismSpec psl2_class1_q11_pinned() {
  PSL2 L(11);
  Mat2 r1 = L.make(0, 1, -1, 0), x = L.make(2, 0, 0, 6), z = L.make(2, 4, 4, 3);
  return spec_in_group(C::C1, group_of(GroupKind::L2, 11), {L.to_perm(L.mul(x, r1)), L.to_perm(r1), L.to_perm(L.mul(r1, z))});
}

EpimorphismSpec psl2_class2_q7() {
  PSL2 L(7);
  return spec_in_group(C::C2, group_of(GroupKind::L2, 7),
                       {L.to_perm(L.make(0, 1, -1, 0)), L.to_perm(L.make(0, 2, 3, 0)), L.to_perm(L.make(1, 3, -3, -1))});
}

EpimorphismSpec nilpotent_chiral(unsigned e) {
  if (e < 4) throw std::invalid_argument("the nilpotent chiral family needs e >= 4");
  auto g = std::make_shared<const GroupTable>(extend_by_alpha(e));
  return {C::C2Pex, g, {g->generators()[0], g->generators()[2]}};
}

EpimorphismSpec dihedral_spec(unsigned m) {
  if (m < 3) throw std::invalid_argument("dihedral_spec needs m >= 3");
  std::string r0, r1;
  for (unsigned i = 1; i < m + 1 - i; ++i) r0 += tr(i, m + 1 - i);
  for (unsigned i = 2; i < m + 2 - i; ++i) r1 += tr(i, m + 2 - i);
  return spec_from_perms(C::C1, m + 2, {P(m + 2, r0), P(m + 2, r1), P(m + 2, tr(m + 1, m + 2))});
}

std::pair<EpimorphismSpec, EpimorphismSpec> edmonds_k8() {
  GaloisField f(2, 3);
  unsigned w = f.primitive(), one = f.from_int(1);
  std::vector<uint32_t> x(8), xi(8), y(8);
  for (unsigned t = 0; t < 8; ++t) {
    x[t] = f.mul(w, t);
    xi[t] = f.mul(f.inv(w), t);
    y[t] = f.add(t, one);
  }
  auto a = spec_from_perms(C::C2Pex, 8, {Permutation(x), Permutation(y)});
  auto b = spec_in_group(C::C2Pex, a.group, {Permutation(xi), Permutation(y)});
  return {a, b};
}

EpimorphismSpec elementary_abelian_class1() {
  return spec_from_perms(C::C1, 6, {P(6, "(1,2)"), P(6, "(3,4)"), P(6, "(5,6)")});
}

EpimorphismSpec propagate(const EpimorphismSpec& spec, EtClass target) {
  const GroupTable& g = *spec.group;
  const auto& im = spec.images;
  EpimorphismSpec out{target, spec.group, {}};
  if (spec.cls == C::C1) {
    Id r0 = im[0], r1 = im[1], r2 = im[2];
    if (order_of_id(g, g.mul(r1, r2)) <= 2) {
      if (order_of_id(g, g.mul(r0, r1)) <= 2) throw std::invalid_argument("class-1 source has an abelian group");
      std::swap(r0, r2);  // pass to the dual map
    }
    switch (target) {
      case C::C2: case C::C4: out.images = {r0, r1, r2}; break;
      case C::C3: out.images = {r0 == r1 ? r0 : r2, r0, r1, r2}; break;
      default: throw std::invalid_argument("class 1 propagates to classes 2, 3 and 4");
    }
  } else if (spec.cls == C::C2Pex) {
    Id x = im[0], y = im[1];
    switch (target) {
      case C::C5: out.images = {x, y}; break;
      case C::C4: out.images = {y, y, x}; break;
      case C::C2: {
        Id xinv = g.inv(x);
        std::optional<Id> a;
        for (Id t : involutions(g))
          if (g.conj(x, t) == xinv) {
            a = t;
            break;
          }
        if (!a) throw std::invalid_argument("the image of X is not strongly real");
        out.images = {*a, g.mul(*a, x), y};
        break;
      }
      default: throw std::invalid_argument("class 2Pex propagates to classes 2, 4 and 5");
    }
  } else if (spec.cls == C::C2) {
    switch (target) {
      case C::C4: out.images = {im[0], im[1], im[2]}; break;
      case C::C3: out.images = {im[2], im[0], im[1], im[2]}; break;
      default: throw std::invalid_argument("class 2 propagates to classes 3 and 4");
    }
  } else {
    throw std::invalid_argument("no propagation from class " + to_string(spec.cls));
  }
  auto v = check_spec(out);
  if (!v.empty()) throw std::logic_error("propagated spec invalid: " + v.front());
  return out;
}

bool table1_member(GroupKind kind, unsigned n, EtClass t) {
  int o = orbit_of(t);
  switch (kind) {
    case GroupKind::Sym: {
      const unsigned lo[6] = {1, 2, 6, 2, 2, 6};
      return n >= lo[o];
    }
    case GroupKind::Alt: {
      if (o == 0) return n == 1 || n == 2 || n == 5 || n >= 9;
      const unsigned lo[6] = {0, 5, 8, 5, 4, 7};
      return n >= lo[o];
    }
    case GroupKind::L2:
      switch (o) {
        case 0: return n != 3 && n != 7 && n != 9;
        case 1: case 3: return n != 3;
        case 4: return true;
        default: return false;
      }
  }
  return false;
}

bool table3_member(GroupKind kind, unsigned n, EtClass t) {
  if (kind == GroupKind::Alt) {
    if (t == C::C2Pex) return n >= 8;
    if (t == C::C5 || t == C::C5s) return n >= 7;
    return false;
  }
  if (kind != GroupKind::Sym) return false;
  switch (t) {
    case C::C1: return n != 1 && n != 5 && n != 6;
    case C::C2: case C::C2s: return n != 1 && n != 2 && n != 5 && n != 6;
    case C::C2P: return n >= 3;
    case C::C2ex: case C::C2sex: return n >= 7;
    case C::C2Pex: return n >= 6;
    case C::C3: return n >= 3;
    case C::C4: case C::C4s: case C::C4P: return n >= 3;
    case C::C5: case C::C5s: case C::C5P: return n >= 6;
  }
  return false;
}

GroupPtr group_of(GroupKind kind, unsigned param) {
  static std::map<std::pair<int, unsigned>, GroupPtr> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto it = cache.find({int(kind), param});
    if (it != cache.end()) return it->second;
  }
  GroupPtr g;
  switch (kind) {
    case GroupKind::Sym: g = symmetric_group(param); break;
    case GroupKind::Alt: g = alternating_group(param); break;
    case GroupKind::L2: g = psl2_group(param); break;
  }
  std::lock_guard<std::mutex> lock(cache_mutex());
  return cache.emplace(std::make_pair(int(kind), param), g).first->second;
}

namespace {

std::optional<EpimorphismSpec> table1_construction(GroupKind kind, unsigned n, EtClass t) {
  int o = orbit_of(t);
  switch (kind) {
    case GroupKind::Sym:
      if (o == 0 && n >= 3) return sym_class1(n);
      if ((o == 1 || o == 4) && n >= 3) return propagate(sym_class1(n), o == 1 ? C::C2 : C::C4);
      if (o == 3 && n >= 3) return propagate(sym_class1(n), C::C3);
      if (o == 2 && n >= 6) return sym_chiral(n);
      if (o == 5 && n >= 6) return propagate(sym_chiral(n), C::C5);
      return std::nullopt;
    case GroupKind::Alt: {
      auto class2 = [&]() -> std::optional<EpimorphismSpec> {
        if (n >= 6 && n <= 8) return alt_small(C::C2, n);
        if (n == 5 || n >= 9) return propagate(alt_class1(n), C::C2);
        return std::nullopt;
      };
      if (o == 0 && (n == 5 || n >= 9)) return alt_class1(n);
      if (o == 1) return class2();
      if (o == 3) {
        auto s = class2();
        if (s) return propagate(*s, C::C3);
        return std::nullopt;
      }
      if (o == 4) {
        if (n == 4) return alt_small(C::C4, 4);
        auto s = class2();
        if (s) return propagate(*s, C::C4);
        return std::nullopt;
      }
      if (o == 2 && n >= 8) return alt_chiral(n);
      if (o == 5 && n == 7) return alt_small(C::C5, 7);
      if (o == 5 && n >= 8) return propagate(alt_chiral(n), C::C5);
      return std::nullopt;
    }
    case GroupKind::L2: {
      bool c1 = n == 8 || n >= 11;
      if (o == 0 && c1) return psl2_class1(n);
      std::optional<EpimorphismSpec> s2;
      if (n == 7) s2 = psl2_class2_q7();
      else if (c1) s2 = propagate(psl2_class1(n), C::C2);
      if (!s2) return std::nullopt;
      if (o == 1) return s2;
      if (o == 3) return propagate(*s2, C::C3);
      if (o == 4) return propagate(*s2, C::C4);
      return std::nullopt;
    }
  }
  return std::nullopt;
}

Verdict verdict_by_search(const GroupPtr& g, EtClass t, std::vector<int> parity, unsigned threads) {
  EtClass rep = representative(t);
  SearchOptions opts;
  opts.exhaustive = true;
  opts.limit = 1;
  opts.threads = threads;
  opts.parity = std::move(parity);
  auto res = search_epimorphisms(rep, g, opts);
  Verdict v;
  if (res.witnesses.empty()) {
    v.realizable = false;
    v.provenance = Provenance::Exhausted;
    v.note = std::to_string(res.counts.tuples) + " tuples, " + std::to_string(res.counts.generating) + " generating";
    return v;
  }
  v.realizable = true;
  v.provenance = Provenance::Search;
  v.realization = realization_for(t, EpimorphismSpec{rep, g, res.witnesses.front()}, "search witness");
  return v;
}

}  // namespace

std::vector<int> even_parity(EtClass t) {
  auto s = orientation_signs(representative(t), ops_from_representative(t));
  if (std::all_of(s.begin(), s.end(), [](int v) { return v == 1; })) return {};
  return s;
}

Verdict table1_verdict(GroupKind kind, unsigned param, EtClass t, unsigned threads) {
  if (auto spec = table1_construction(kind, param, t)) {
    if (expected_class(*spec) != spec->cls)
      throw std::logic_error("construction for " + to_string(t) + " has a forbidden automorphism");
    Verdict v;
    v.realizable = true;
    v.provenance = Provenance::Construction;
    v.realization = realization_for(t, std::move(*spec), "construction");
    return v;
  }
  auto g = group_of(kind, param);
  int o = orbit_of(t);
  if (kind == GroupKind::L2 && (o == 2 || o == 5)) {
    auto survey = simultaneous_inversion_survey(*g, threads);
    if (survey.all_inverted()) {
      Verdict v;
      v.realizable = false;
      v.provenance = Provenance::Survey;
      v.note = std::to_string(survey.generating_pairs) + " generating pairs, all inverted";
      return v;
    }
  }
  return verdict_by_search(g, t, {}, threads);
}

Verdict table3_verdict(GroupKind kind, unsigned param, EtClass t, unsigned threads) {
  if (kind == GroupKind::L2) throw std::invalid_argument("even realization covers S_n and A_n only");
  if (table3_member(kind, param, t)) {
    std::optional<Realization> r;
    if (kind == GroupKind::Sym) {
      auto res = sym_even(t, param);
      if (std::holds_alternative<Unrealizable>(res)) return verdict_by_search(group_of(kind, param), t, even_parity(t), threads);
      r = std::get<Realization>(res);
    } else if (t == C::C2Pex) {
      r = realization_for(t, alt_chiral(param), "chiral pair");
    } else {
      auto s = param == 7 ? alt_small(C::C5, 7) : propagate(alt_chiral(param), C::C5);
      r = realization_for(t, s, param == 7 ? "bespoke pair" : "chiral pair as S, S'");
    }
    if (expected_class(r->spec) != r->spec.cls)
      throw std::logic_error("even construction for " + to_string(t) + " has a forbidden automorphism");
    Verdict v;
    v.realizable = true;
    v.provenance = Provenance::Construction;
    v.realization = std::move(r);
    return v;
  }
  return verdict_by_search(group_of(kind, param), t, even_parity(t), threads);
}

}  // namespace etm
