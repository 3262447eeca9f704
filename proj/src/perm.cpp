#include "etm/perm.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <functional>
#include <numeric>

namespace etm {

Permutation::Permutation(std::vector<uint32_t> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (uint32_t x : img_) {
    if (x >= img_.size() || seen[x]) throw InputError("images do not form a bijection");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(size_t n) {
  std::vector<uint32_t> v(n);
  std::iota(v.begin(), v.end(), 0u);
  Permutation p;
  p.img_ = std::move(v);
  return p;
}

Permutation Permutation::parse(std::string_view text, size_t degree) {
  std::vector<std::vector<uint32_t>> cycles;
  size_t maxpt = 0;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw InputError("expected '(' in cycle notation: " + std::string(text));
    ++i;
    std::vector<uint32_t> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      skip_ws();
      size_t start = i;
      uint64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + uint64_t(text[i] - '0');
        if (v > UINT32_MAX) throw InputError("point out of range");
        ++i;
      }
      if (i == start || v == 0) throw InputError("bad point in cycle notation: " + std::string(text));
      cyc.push_back(uint32_t(v - 1));
      maxpt = std::max<size_t>(maxpt, v);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size()) throw InputError("unterminated cycle: " + std::string(text));
    ++i;
    cycles.push_back(std::move(cyc));
    skip_ws();
  }
  if (degree == 0) degree = maxpt;
  if (maxpt > degree) throw InputError("point exceeds degree in: " + std::string(text));
  std::vector<uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  std::vector<char> used(degree, 0);
  for (auto& c : cycles) {
    for (uint32_t x : c) {
      if (used[x]) throw InputError("point repeated in cycle notation: " + std::string(text));
      used[x] = 1;
    }
    for (size_t k = 0; k < c.size(); ++k) img[c[k]] = c[(k + 1) % c.size()];
  }
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<char> seen(img_.size(), 0);
  for (size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    out += '(';
    size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
      j = img_[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("degree mismatch");
  std::vector<uint32_t> v(p.degree());
  for (size_t i = 0; i < v.size(); ++i) v[i] = q[p[i]];
  return Permutation(std::move(v));
}

Permutation inverse(const Permutation& p) {
  std::vector<uint32_t> v(p.degree());
  for (size_t i = 0; i < v.size(); ++i) v[p[i]] = uint32_t(i);
  return Permutation(std::move(v));
}

Permutation power(const Permutation& p, long long k) {
  Permutation base = k < 0 ? inverse(p) : p;
  unsigned long long e = k < 0 ? 0ULL - static_cast<unsigned long long>(k) : static_cast<unsigned long long>(k);
  Permutation acc = Permutation::identity(p.degree());
  while (e) {
    if (e & 1) acc = compose(acc, base);
    base = compose(base, base);
    e >>= 1;
  }
  return acc;
}

Permutation conjugate(const Permutation& p, const Permutation& by) {
  return compose(compose(inverse(by), p), by);
}

Permutation commutator(const Permutation& p, const Permutation& q) {
  return compose(compose(inverse(p), inverse(q)), compose(p, q));
}

uint64_t order_of(const Permutation& p) {
  unsigned __int128 acc = 1;
  for (uint32_t len : cycle_structure(p)) {
    acc = acc / std::gcd(static_cast<uint64_t>(acc), uint64_t(len)) * len;
    if (acc > UINT64_MAX) throw std::overflow_error("permutation order exceeds 64 bits");
  }
  return static_cast<uint64_t>(acc);
}

std::vector<uint32_t> cycle_structure(const Permutation& p) {
  std::vector<uint32_t> lens;
  std::vector<char> seen(p.degree(), 0);
  for (size_t i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    uint32_t len = 0;
    for (size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

int sign(const Permutation& p) {
  size_t even_cycles = 0;
  for (uint32_t len : cycle_structure(p))
    if (len % 2 == 0) ++even_cycles;
  return even_cycles % 2 ? -1 : 1;
}

PermGroupSpec::PermGroupSpec(size_t n, std::vector<Permutation> gens) : degree(n), generators(std::move(gens)) {
  for (auto& g : generators)
    if (g.degree() != n) throw InputError("generator degree differs from group degree");
}

namespace {

struct UnionFind {
  std::vector<uint32_t> parent;
  explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  uint32_t find(uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(uint32_t a, uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
  Partition classes() {
    Partition out;
    std::vector<uint32_t> slot(parent.size(), UINT32_MAX);
    for (uint32_t i = 0; i < parent.size(); ++i) {
      uint32_t r = find(i);
      if (slot[r] == UINT32_MAX) {
        slot[r] = uint32_t(out.size());
        out.emplace_back();
      }
      out[slot[r]].push_back(i);
    }
    return out;
  }
};

}  // namespace

Partition orbits(const PermGroupSpec& g) {
  UnionFind uf(g.degree);
  for (auto& p : g.generators)
    for (uint32_t i = 0; i < g.degree; ++i) uf.unite(i, p[i]);
  return uf.classes();
}

bool is_transitive(const PermGroupSpec& g) { return g.degree > 0 && orbits(g).size() == 1; }

Partition block_system(const PermGroupSpec& g, uint32_t a, uint32_t b) {
  if (a >= g.degree || b >= g.degree) throw std::invalid_argument("point out of range");
  UnionFind uf(g.degree);
  std::vector<std::pair<uint32_t, uint32_t>> queue;
  if (uf.unite(a, b)) queue.emplace_back(a, b);
  for (size_t k = 0; k < queue.size(); ++k) {
    auto [x, y] = queue[k];
    for (auto& p : g.generators) {
      if (uf.unite(p[x], p[y])) queue.emplace_back(p[x], p[y]);
    }
  }
  return uf.classes();
}

bool is_primitive(const PermGroupSpec& g) {
  if (!is_transitive(g)) throw std::invalid_argument("primitivity is defined for transitive groups");
  for (uint32_t b = 1; b < g.degree; ++b)
    if (block_system(g, 0, b).size() != 1) return false;
  return true;
}

size_t perm_point_width(size_t degree) {
  if (degree <= 256) return 1;
  if (degree <= 65536) return 2;
  return 4;
}

void encode_perm(const Permutation& p, size_t w, uint8_t* out) {
  const size_t n = p.degree();
  if (w == 1) {
    for (size_t i = 0; i < n; ++i) out[i] = uint8_t(p[i]);
  } else if (w == 2) {
    for (size_t i = 0; i < n; ++i) {
      uint16_t v = uint16_t(p[i]);
      std::memcpy(out + 2 * i, &v, 2);
    }
  } else {
    std::memcpy(out, p.images().data(), 4 * n);
  }
}

Permutation decode_perm(const uint8_t* in, size_t n, size_t w) {
  std::vector<uint32_t> v(n);
  if (w == 1) {
    for (size_t i = 0; i < n; ++i) v[i] = in[i];
  } else if (w == 2) {
    for (size_t i = 0; i < n; ++i) {
      uint16_t x;
      std::memcpy(&x, in + 2 * i, 2);
      v[i] = x;
    }
  } else {
    std::memcpy(v.data(), in, 4 * n);
  }
  return Permutation(std::move(v));
}

size_t ByteIndex::hash(const uint8_t* key) const {
  return std::hash<std::string_view>{}(std::string_view(reinterpret_cast<const char*>(key), width_));
}

void ByteIndex::reserve(size_t n) {
  data_.reserve(n * width_);
  size_t want = 16;
  while (want < 2 * n) want <<= 1;
  if (want > slots_.size()) rehash(want);
}

void ByteIndex::rehash(size_t nslots) {
  slots_.assign(nslots, 0);
  const size_t mask = nslots - 1;
  for (uint32_t id = 0; id < count_; ++id) {
    size_t h = hash(at(id)) & mask;
    while (slots_[h]) h = (h + 1) & mask;
    slots_[h] = id + 1;
  }
}

uint32_t ByteIndex::find(const uint8_t* key) const {
  if (slots_.empty()) return npos;
  const size_t mask = slots_.size() - 1;
  size_t h = hash(key) & mask;
  while (uint32_t s = slots_[h]) {
    if (std::memcmp(at(s - 1), key, width_) == 0) return s - 1;
    h = (h + 1) & mask;
  }
  return npos;
}

uint32_t ByteIndex::insert(const uint8_t* key, bool* inserted) {
  if (2 * (count_ + 1) > slots_.size()) rehash(std::max<size_t>(16, slots_.size() * 2));
  const size_t mask = slots_.size() - 1;
  size_t h = hash(key) & mask;
  while (uint32_t s = slots_[h]) {
    if (std::memcmp(at(s - 1), key, width_) == 0) {
      if (inserted) *inserted = false;
      return s - 1;
    }
    h = (h + 1) & mask;
  }
  if (count_ >= UINT32_MAX - 1) throw CapExceeded("element store full");
  data_.insert(data_.end(), key, key + width_);
  slots_[h] = uint32_t(count_ + 1);
  if (inserted) *inserted = true;
  return uint32_t(count_++);
}

namespace {

// Schreier-Sims stabilizer chain.
struct ChainLevel {
  uint32_t base;
  std::vector<Permutation> gens;
  std::vector<std::optional<Permutation>> trans;  // trans[x]: base -> x
  std::vector<uint32_t> orbit;
};

class StabChain {
 public:
  explicit StabChain(size_t n) : n_(n) {}

  // Residue of g after sifting from `start`, and the level where it stopped.
  std::pair<Permutation, size_t> sift(Permutation g, size_t start) const {
    for (size_t i = start; i < levels_.size(); ++i) {
      uint32_t x = g[levels_[i].base];
      if (!levels_[i].trans[x]) return {g, i};
      g = compose(g, inverse(*levels_[i].trans[x]));
    }
    return {g, levels_.size()};
  }

  // r fixes the bases above `from`; it joins the generators of levels from..to.
  void insert(const Permutation& r, size_t from, size_t to) {
    if (to == levels_.size()) {
      uint32_t b = 0;
      while (r[b] == b) ++b;
      ChainLevel l;
      l.base = b;
      l.trans.assign(n_, std::nullopt);
      l.trans[b] = Permutation::identity(n_);
      l.orbit = {b};
      levels_.push_back(std::move(l));
    }
    for (size_t i = from; i <= to; ++i) {
      levels_[i].gens.push_back(r);
      extend_orbit(i);
    }
  }

  // Adds Schreier generators until every level passes the sifting test.
  void complete() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t i = levels_.size(); !changed && i-- > 0;) {
        const ChainLevel& l = levels_[i];
        for (size_t k = 0; !changed && k < l.orbit.size(); ++k)
          for (size_t s = 0; !changed && s < l.gens.size(); ++s) {
            uint32_t x = l.orbit[k];
            const Permutation& gen = l.gens[s];
            Permutation h = compose(compose(*l.trans[x], gen), inverse(*l.trans[gen[x]]));
            auto [r, at] = sift(h, i + 1);
            if (!r.is_identity()) {
              insert(r, i + 1, at);
              changed = true;
            }
          }
      }
    }
  }

  std::vector<uint64_t> orbit_sizes() const {
    std::vector<uint64_t> out;
    for (auto& l : levels_) out.push_back(l.orbit.size());
    return out;
  }

  std::optional<uint64_t> order() const {
    unsigned __int128 acc = 1;
    for (auto& l : levels_) {
      acc *= l.orbit.size();
      if (acc > UINT64_MAX) return std::nullopt;
    }
    return uint64_t(acc);
  }

 private:
  void extend_orbit(size_t level) {
    ChainLevel& l = levels_[level];
    for (size_t k = 0; k < l.orbit.size(); ++k)
      for (auto& gen : l.gens) {
        uint32_t y = gen[l.orbit[k]];
        if (!l.trans[y]) {
          l.trans[y] = compose(*l.trans[l.orbit[k]], gen);
          l.orbit.push_back(y);
        }
      }
  }

  size_t n_;
  std::vector<ChainLevel> levels_;
};

StabChain build_chain(const PermGroupSpec& g) {
  StabChain chain(g.degree);
  for (auto& p : g.generators) {
    auto [r, at] = chain.sift(p, 0);
    if (!r.is_identity()) chain.insert(r, 0, at);
  }
  chain.complete();
  return chain;
}

}  // namespace

std::vector<uint64_t> base_orbit_sizes(const PermGroupSpec& g) { return build_chain(g).orbit_sizes(); }

std::optional<uint64_t> group_order(const PermGroupSpec& g, uint64_t cap) {
  StabChain chain = build_chain(g);
  auto ord = chain.order();
  if (!ord || *ord > cap) return std::nullopt;
  return ord;
}

}  // namespace etm
