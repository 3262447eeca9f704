#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "etm/parent.hpp"

namespace etm {

struct SearchOptions {
  // Exhaustive runs ignore `limit` for the purpose of proving emptiness; a
  // non-exhaustive run stops at the first witness.
  bool exhaustive = true;
  // Reduce by simultaneous conjugation; exact because conjugate tuples give
  // isomorphic maps.
  bool up_to_conjugacy = true;
  uint64_t limit = 0;  // 0: unlimited
  unsigned threads = 1;
  // Extra conjugating permutations normalizing G (e.g. S_n for A_n); inner
  // conjugation is used when empty.
  std::vector<Permutation> normalizer;
  // Required sign of each image (+1 / -1), or empty for no constraint.
  std::vector<int> parity;
};

struct SearchCounts {
  uint64_t tuples = 0;      // relation-satisfying tuples reaching the leaf filters
  uint64_t generating = 0;  // of those, generating G
  uint64_t forbidden_free = 0;
};

struct SearchResult {
  EtClass cls;
  // Image tuples ordered as generator_names(cls), sorted lexicographically by id.
  std::vector<std::vector<GroupTable::Id>> witnesses;
  SearchCounts counts;
  bool limit_hit = false;
  bool proved_empty = false;
};

SearchResult search_epimorphisms(EtClass rep, const GroupPtr& g, const SearchOptions& opts = {});

}  // namespace etm
