#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace etm {

// Raised for malformed user input (bad cycle strings, inconsistent JSON, ...).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Permutation of {0, ..., n-1}. Cycle notation in and out is 1-indexed.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<uint32_t> images);

  static Permutation identity(size_t n);
  // Accepts "(1,2,3)(4,5)", "()" and tolerates whitespace. With degree 0 the
  // degree is the largest point mentioned.
  static Permutation parse(std::string_view text, size_t degree = 0);

  size_t degree() const { return img_.size(); }
  uint32_t operator[](size_t i) const { return img_[i]; }
  const std::vector<uint32_t>& images() const { return img_; }
  bool is_identity() const;
  std::string to_cycles() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<uint32_t> img_;
};

// compose(p, q) applies p first, then q.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
Permutation power(const Permutation& p, long long k);
Permutation conjugate(const Permutation& p, const Permutation& by);  // by^-1 p by
Permutation commutator(const Permutation& p, const Permutation& q);  // p^-1 q^-1 p q
uint64_t order_of(const Permutation& p);
std::vector<uint32_t> cycle_structure(const Permutation& p);  // descending lengths
int sign(const Permutation& p);

struct PermGroupSpec {
  size_t degree = 0;
  std::vector<Permutation> generators;

  PermGroupSpec() = default;
  PermGroupSpec(size_t n, std::vector<Permutation> gens);
};

using Partition = std::vector<std::vector<uint32_t>>;

Partition orbits(const PermGroupSpec& g);
bool is_transitive(const PermGroupSpec& g);
// Finest block system with a and b in the same block.
Partition block_system(const PermGroupSpec& g, uint32_t a, uint32_t b);
bool is_primitive(const PermGroupSpec& g);

// Schreier-Sims. nullopt when the group has more than cap elements.
std::optional<uint64_t> group_order(const PermGroupSpec& g, uint64_t cap);
// Basic orbit lengths of a stabilizer chain; their product is the order.
std::vector<uint64_t> base_orbit_sizes(const PermGroupSpec& g);

// Fixed-width byte strings with hashed lookup; the element store behind
// every group closure.
class ByteIndex {
 public:
  static constexpr uint32_t npos = UINT32_MAX;

  explicit ByteIndex(size_t width = 1) : width_(width) {}

  size_t width() const { return width_; }
  size_t size() const { return count_; }
  const uint8_t* at(uint32_t id) const { return data_.data() + size_t(id) * width_; }
  uint32_t find(const uint8_t* key) const;
  // Returns the id of key, inserting it if new; `inserted` reports which.
  uint32_t insert(const uint8_t* key, bool* inserted = nullptr);
  void reserve(size_t n);

 private:
  size_t hash(const uint8_t* key) const;
  void rehash(size_t slots);

  size_t width_;
  size_t count_ = 0;
  std::vector<uint8_t> data_;
  std::vector<uint32_t> slots_;
};

// Bytes per point used to store permutations of the given degree.
size_t perm_point_width(size_t degree);
void encode_perm(const Permutation& p, size_t point_width, uint8_t* out);
Permutation decode_perm(const uint8_t* in, size_t degree, size_t point_width);

}  // namespace etm
