#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "etm/perm.hpp"

namespace etm {

// A map as three involutions r0, r1, r2 on flags 0..n-1 with (r0 r2)^2 = 1
// and a transitive monodromy group. Fixed points of r_i are boundary flags.
class FlagMap {
 public:
  FlagMap() = default;
  FlagMap(std::vector<uint32_t> r0, std::vector<uint32_t> r1, std::vector<uint32_t> r2);
  static FlagMap from_permutations(const Permutation& r0, const Permutation& r1, const Permutation& r2);

  uint32_t size() const { return uint32_t(r_[0].size()); }
  uint32_t r(int i, uint32_t flag) const { return r_[i][flag]; }
  const std::vector<uint32_t>& r(int i) const { return r_[i]; }
  Permutation perm(int i) const { return Permutation(r_[i]); }

  bool operator==(const FlagMap&) const = default;

 private:
  std::array<std::vector<uint32_t>, 3> r_;
};

struct MapSummary {
  uint32_t flags = 0;
  uint64_t vertices = 0, edges = 0, faces = 0;
  long long euler = 0;
  bool has_boundary = false;
  bool orientable_no_boundary = false;
  // Orientable genus (2 - chi) / 2 or non-orientable genus 2 - chi; absent
  // when the map has boundary.
  std::optional<long long> genus;
  // Orders of r0 r1 and r1 r2: the type {p, q} for edge-transitive maps.
  uint64_t order_r0r1 = 0, order_r1r2 = 0;
};

MapSummary summary(const FlagMap& m);

struct AutomorphismInfo {
  uint64_t order = 0;
  std::vector<uint32_t> orbit_of_flag;  // orbit index for every flag
  uint32_t orbit_count = 0;
};

AutomorphismInfo automorphism_group(const FlagMap& m);
// Every automorphism as a flag permutation, sorted; only for small maps.
std::vector<Permutation> automorphisms(const FlagMap& m);
bool is_regular(const FlagMap& m);
bool is_edge_transitive(const FlagMap& m);
FlagMap quotient_by_aut(const FlagMap& m);
bool is_isomorphic(const FlagMap& a, const FlagMap& b);
// Isomorphism taking flag 0 of a into the even-word orbit of flag 0 in b:
// for orientable maps without boundary, an orientation-preserving
// isomorphism with orientations fixed by flag 0. Chiral pairs are not
// isomorphic in this sense.
bool is_isomorphic_oriented(const FlagMap& a, const FlagMap& b);

FlagMap dual(const FlagMap& m);
FlagMap petrie(const FlagMap& m);
// Connected component of (0, 0) in the product of two maps.
FlagMap join(const FlagMap& a, const FlagMap& b);

// Order of the monodromy group <r0, r1, r2>; nullopt past cap.
std::optional<uint64_t> monodromy_order(const FlagMap& m, uint64_t cap);

}  // namespace etm
