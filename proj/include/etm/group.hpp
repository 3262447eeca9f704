#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "etm/perm.hpp"

namespace etm {

// A finite group with dense element ids. Elements are fixed-width byte strings
// multiplied by a product callback; ids are assigned in breadth-first order
// from the identity (id 0), applying the generators in index order.
class GroupTable {
 public:
  using Id = uint32_t;
  using ProductFn = std::function<void(const uint8_t*, const uint8_t*, uint8_t*)>;
  using LabelFn = std::function<std::string(const uint8_t*)>;

  static GroupTable close(size_t width, const std::vector<uint8_t>& identity,
                          const std::vector<std::vector<uint8_t>>& gens, ProductFn product,
                          uint64_t cap, LabelFn label = {});
  static GroupTable from_permutations(const PermGroupSpec& spec, uint64_t cap = 10'000'000);

  size_t size() const { return elems_.size(); }
  Id identity() const { return 0; }
  Id mul(Id a, Id b) const;
  Id inv(Id a) const { return inv_[a]; }
  Id pow(Id a, long long k) const;
  uint64_t order(Id a) const;
  Id conj(Id a, Id by) const { return mul(mul(inv(by), a), by); }  // by^-1 a by
  Id commutator(Id a, Id b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  // Right multiplication by the k-th generator, precomputed during closure.
  Id mul_gen(Id a, size_t k) const { return right_[k][a]; }

  const std::vector<Id>& generators() const { return gens_; }
  std::string label(Id a) const;
  const uint8_t* bytes(Id a) const { return elems_.at(a); }
  Id find_bytes(const uint8_t* key) const { return elems_.find(key); }

  bool is_perm_group() const { return degree_ > 0; }
  size_t degree() const { return degree_; }
  Permutation perm(Id a) const;
  std::optional<Id> find(const Permutation& p) const;
  int sign(Id a) const;

  // Names used when parsing words (e.g. "g", "h"); empty for perm groups.
  std::vector<std::string> generator_names;
  // Set for groups built from a named presentation family (e.g. "gpef").
  std::string family;
  std::vector<std::pair<std::string, unsigned>> family_params;

 private:
  ByteIndex elems_;
  ProductFn product_;
  LabelFn label_;
  std::vector<Id> gens_;
  std::vector<Id> inv_;
  std::vector<std::vector<Id>> right_;
  size_t degree_ = 0;
  size_t point_width_ = 0;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

// Membership mask plus sorted member list.
struct Subgroup {
  std::vector<char> mask;
  std::vector<GroupTable::Id> members;
  size_t size() const { return members.size(); }
  bool contains(GroupTable::Id a) const { return mask[a] != 0; }
};

Subgroup generate(const GroupTable& g, const std::vector<GroupTable::Id>& gens);
// Closure of gens under products and conjugation by `by` (default: g's generators).
Subgroup normal_closure(const GroupTable& g, const std::vector<GroupTable::Id>& gens,
                        const std::vector<GroupTable::Id>* by = nullptr);
bool generates(const GroupTable& g, const std::vector<GroupTable::Id>& gens);
bool is_normal(const GroupTable& g, const Subgroup& h);
std::vector<GroupTable::Id> generating_set(const GroupTable& g, const Subgroup& h);
GroupTable subgroup_table(const GroupPtr& g, const Subgroup& h);

Subgroup center(const GroupTable& g);
Subgroup derived_subgroup(const GroupTable& g);
GroupTable quotient(const GroupPtr& g, const Subgroup& n);
GroupTable direct_product(const GroupPtr& a, const GroupPtr& b);
// G x| C2 where the C2 generator acts through the involutory automorphism
// alpha (alpha[x] is the image of x). Generators: (g_i, 0) then (1, 1).
GroupTable semidirect_c2(const GroupPtr& g, std::vector<GroupTable::Id> alpha);

// nullopt: not nilpotent / not solvable.
std::optional<int> nilpotence_class(const GroupTable& g);
std::optional<int> derived_length(const GroupTable& g);
std::vector<Subgroup> upper_central_series(const GroupTable& g);

std::vector<std::vector<GroupTable::Id>> conjugacy_classes(const GroupTable& g);
std::vector<GroupTable::Id> involutions(const GroupTable& g);  // elements of order exactly 2
bool strongly_real(const GroupTable& g, GroupTable::Id x);

// Image table of the automorphism extending src[i] -> dst[i], if one exists.
// src must generate g.
std::optional<std::vector<GroupTable::Id>> hom_extension(const GroupTable& g,
                                                         const std::vector<GroupTable::Id>& src,
                                                         const std::vector<GroupTable::Id>& dst);
bool hom_extension_exists(const GroupTable& g, const std::vector<GroupTable::Id>& src,
                          const std::vector<GroupTable::Id>& dst);

struct InversionSurvey {
  uint64_t generating_pairs = 0;  // ordered pairs (x, y) with <x, y> = G
  uint64_t inverted = 0;          // of those, pairs inverted by an automorphism
  std::optional<std::pair<GroupTable::Id, GroupTable::Id>> counterexample;
  bool all_inverted() const { return generating_pairs == inverted; }
};
// Every automorphism is reachable through hom_extension, so outer and field
// automorphisms are covered without an explicit action.
InversionSurvey simultaneous_inversion_survey(const GroupTable& g, unsigned threads = 1);

uint64_t count_triples_brute(const GroupTable& g, const std::vector<GroupTable::Id>& a,
                             const std::vector<GroupTable::Id>& b,
                             const std::vector<GroupTable::Id>& c);

struct CharacterTable {
  std::string name;
  uint64_t order = 0;
  std::vector<uint64_t> class_sizes;
  std::vector<std::string> class_labels;
  std::vector<std::string> class_reps;  // cycle notation, optional
  std::vector<std::string> generators;  // cycle notation, optional
  std::vector<std::vector<std::complex<double>>> chars;  // chars[chi][class]
};

// Number of triples (a, b, c) in classes (i, j, k) with abc = 1.
double frobenius_count(const CharacterTable& t, size_t i, size_t j, size_t k);
// Rounded count, or nullopt when the formula output is not integral within tol.
std::optional<uint64_t> frobenius_count_integral(const CharacterTable& t, size_t i, size_t j, size_t k,
                                                 double tol = 1e-6);

// G_{p,e,f} = <g, h | g^{p^e} = h^{p^e} = 1, h^g = h^{p^f + 1}>.
GroupTable nilpotent_gpef(unsigned p, unsigned e, unsigned f);
// G_{2,e,2} extended by alpha: g^alpha = gh, h^alpha = h^-1. Generators g, h, alpha.
GroupTable extend_by_alpha(unsigned e);

}  // namespace etm
