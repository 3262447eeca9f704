#pragma once

#include <optional>
#include <string>
#include <vector>

#include "etm/classes.hpp"
#include "etm/group.hpp"

namespace etm {

// theta: N(T) -> G given by images of the generators of the parent group
// N(T). Only the representatives 1, 2, 2ex, 2Pex, 3, 4, 5 are built
// directly; the other classes come from dual/Petrie transforms.
struct EpimorphismSpec {
  EtClass cls = EtClass::C1;
  GroupPtr group;
  std::vector<GroupTable::Id> images;  // ordered as generator_names(cls)
};

bool is_build_representative(EtClass t);
const std::vector<std::string>& generator_names(EtClass rep);
// Generators of N(T) that are involutions in the parent group.
const std::vector<bool>& involutory_generators(EtClass rep);
// Each generator of N(T) as a word in R0, R1, R2 (letters '0', '1', '2').
const std::vector<std::string>& generator_words(EtClass rep);

// A letter of a rewrite word: generator index, possibly inverted.
struct Letter {
  int gen;
  bool inverse = false;
};

struct RewriteEntry {
  std::optional<Letter> word;  // empty word when absent
  int target;
};

// Coset action of R0, R1, R2 on N(T) e_j: e_j R_i = w e_k.
struct RewriteTable {
  EtClass cls;
  std::vector<std::string> transversal;  // each e_j as a word in R0, R1, R2
  std::array<std::vector<RewriteEntry>, 3> r;
};

const RewriteTable& rewrite_table(EtClass rep);

// True iff the word (letters '0','1','2') is trivial in
// Gamma = <R0, R1, R2 | R_i^2, (R0 R2)^2> = V4 * C2.
bool gamma_word_is_identity(const std::string& word);
// Empty when every table identity and relation check holds; otherwise
// descriptions of the failures.
std::vector<std::string> rewrite_soundness_failures();

// A forbidden automorphism: generator i goes to images[i]. It is induced by
// conjugation with `conjugator` in Gamma, and if it extends, the map lies in
// the class of N(T) <conjugator>.
struct ForbiddenPattern {
  std::vector<Letter> images;
  std::string conjugator;
  std::optional<EtClass> overgroup;  // class of N(T)<conjugator> when index 2
};

const std::vector<ForbiddenPattern>& forbidden_patterns(EtClass rep);
std::vector<std::string> forbidden_soundness_failures();

std::vector<std::string> check_spec(const EpimorphismSpec& spec);
// Indices of the patterns whose automorphism extends.
std::vector<size_t> matched_patterns(const EpimorphismSpec& spec);
bool has_forbidden_automorphism(const EpimorphismSpec& spec);

FlagMap build_map(const EpimorphismSpec& spec);
EtClass expected_class(const EpimorphismSpec& spec);
FlagMap transform_spec(const EpimorphismSpec& spec, const std::vector<Op>& ops);

// Value of the orientation character on each generator of N(rep) for the
// map obtained by applying ops: +1 or -1 per generator. A built map is
// orientable without boundary iff some homomorphism G -> {+-1} takes these
// values on the generator images.
std::vector<int> orientation_signs(EtClass rep, const std::vector<Op>& ops);

}  // namespace etm
