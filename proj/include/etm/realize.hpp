#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "etm/field.hpp"
#include "etm/parent.hpp"
#include "etm/search.hpp"

namespace etm {

// A map in class `cls`: transform_spec(spec, ops). spec.cls is a build
// representative in the same orbit of <D, P> as cls.
struct Realization {
  EtClass cls;
  EpimorphismSpec spec;
  std::vector<Op> ops;
  std::string source;
};

enum class Provenance { Construction, Search, Exhausted, Survey, Cited };
std::string to_string(Provenance p);

struct Unrealizable {
  std::string reason;
  Provenance provenance;
};

struct Verdict {
  bool realizable = false;
  Provenance provenance = Provenance::Cited;
  std::optional<Realization> realization;
  std::string note;
};

FlagMap realize_map(const Realization& r);
// Ops taking the class `from` to `to` under <D, P>, shortest first.
std::optional<std::vector<Op>> ops_between(EtClass from, EtClass to);
// Wrap a spec into a realization of `target`, which must share its orbit.
Realization realization_for(EtClass target, EpimorphismSpec spec, std::string source);

// Standard permutation groups. Points are 1..n in notation, 0..n-1 inside.
GroupPtr symmetric_group(unsigned n);
GroupPtr alternating_group(unsigned n);
GroupPtr psl2_group(unsigned q);  // on the q + 1 points of the projective line
Permutation perm_of(unsigned n, const char* cycles);

// Spec from generator images given as permutations; the group is their closure.
EpimorphismSpec spec_from_perms(EtClass rep, unsigned degree, const std::vector<Permutation>& images);
// Spec over a given group, images given as permutations of it.
EpimorphismSpec spec_in_group(EtClass rep, const GroupPtr& g, const std::vector<Permutation>& images);

// Symmetric groups.
EpimorphismSpec sym_class1(unsigned n);   // n >= 3
EpimorphismSpec sym_chiral(unsigned n);   // class 2Pex, n >= 6
std::variant<Realization, Unrealizable> sym_even(EtClass t, unsigned n);
// Raw generator lists behind sym_even, usable at any degree without closing
// the group: odd involutions r0, r1, r2 (n other than 1, 5, 6) and the
// class-3 quadruple (n >= 3).
std::vector<Permutation> sym_even_class1_perms(unsigned n);
std::vector<Permutation> sym_even_class3_perms(unsigned n);

// Alternating groups.
std::vector<Permutation> alt_standard_gens(unsigned n, char variant, unsigned k = 1);
EpimorphismSpec alt_class1(unsigned n);   // n = 5 or n >= 9
EpimorphismSpec alt_chiral(unsigned n);   // class 2Pex, n >= 8
// Bespoke small cases: class 2 for n = 6, 7, 8; class 5 for n = 7; class 4 for n = 4.
EpimorphismSpec alt_small(EtClass rep, unsigned n);

// PSL(2, q).
EpimorphismSpec psl2_class1(unsigned q);  // q = 8 or q >= 11
EpimorphismSpec psl2_class1_q11_pinned();
EpimorphismSpec psl2_class2_q7();

// Nilpotent and solvable witnesses.
EpimorphismSpec nilpotent_chiral(unsigned e);  // class 2Pex over extend_by_alpha(e), e >= 4
EpimorphismSpec dihedral_spec(unsigned m);     // class 1 over D_m x C_2, m >= 3
std::pair<EpimorphismSpec, EpimorphismSpec> edmonds_k8();  // omega and omega^-1 builds
// Class 1 over C_2^3 with R0, R1, R2 independent.
EpimorphismSpec elementary_abelian_class1();

// Propagation: from class 1 to 2, 3, 4; from 2Pex to 4, 5 and (when the
// image of X is strongly real) 2; from 2 to 3, 4.
EpimorphismSpec propagate(const EpimorphismSpec& spec, EtClass target);

// Table memberships as catalog data.
enum class GroupKind { Sym, Alt, L2 };
bool table1_member(GroupKind kind, unsigned param, EtClass t);
bool table3_member(GroupKind kind, unsigned param, EtClass t);  // Sym and Alt only
GroupPtr group_of(GroupKind kind, unsigned param);

// Verdicts computed from constructions and searches. Negatives come from
// exhaustive search, or from the inversion survey for L2(q) in the 2ex and 5
// orbits.
Verdict table1_verdict(GroupKind kind, unsigned param, EtClass t, unsigned threads = 1);
Verdict table3_verdict(GroupKind kind, unsigned param, EtClass t, unsigned threads = 1);

// Sign constraint for even realization of `t` from its representative:
// empty when every generator may have either sign.
std::vector<int> even_parity(EtClass t);

}  // namespace etm
