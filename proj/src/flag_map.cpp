#include "etm/flag_map.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace etm {

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
  void unite(uint32_t a, uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
  }
  // Class index per element, classes numbered by smallest member.
  std::vector<uint32_t> labels(uint32_t* count) {
    std::vector<uint32_t> lab(parent.size(), UINT32_MAX);
    uint32_t c = 0;
    for (uint32_t i = 0; i < parent.size(); ++i) {
      uint32_t r = find(i);
      if (lab[r] == UINT32_MAX) lab[r] = c++;
      lab[i] = lab[r];
    }
    if (count) *count = c;
    return lab;
  }
};

uint32_t count_orbits(const FlagMap& m, int i, int j) {
  UnionFind uf(m.size());
  for (uint32_t x = 0; x < m.size(); ++x) {
    uf.unite(x, m.r(i, x));
    uf.unite(x, m.r(j, x));
  }
  uint32_t c = 0;
  uf.labels(&c);
  return c;
}

// Spanning tree of the flag graph from flag 0 in BFS order.
struct Tree {
  std::vector<uint32_t> order, pos, parent;
  std::vector<uint8_t> gen;

  explicit Tree(const FlagMap& m) {
    const uint32_t n = m.size();
    pos.assign(n, UINT32_MAX);
    parent.assign(n, UINT32_MAX);
    gen.assign(n, 255);
    order.reserve(n);
    order.push_back(0);
    pos[0] = 0;
    for (size_t k = 0; k < order.size(); ++k) {
      uint32_t u = order[k];
      for (int i = 0; i < 3; ++i) {
        uint32_t v = m.r(i, u);
        if (pos[v] == UINT32_MAX) {
          pos[v] = uint32_t(order.size());
          parent[v] = u;
          gen[v] = uint8_t(i);
          order.push_back(v);
        }
      }
    }
  }

  // Letters leading from the root to u.
  std::vector<uint8_t> path(uint32_t u) const {
    std::vector<uint8_t> w;
    for (; u != 0; u = parent[u]) w.push_back(gen[u]);
    std::reverse(w.begin(), w.end());
    return w;
  }
};

// Words fixing the root of the tree's map (Schreier generators of the
// stabilizer). Any isomorphism sending the root to x forces x to be fixed
// by the same words in the target map.
std::vector<std::vector<uint8_t>> stabilizer_words(const FlagMap& m, const Tree& t) {
  std::vector<std::pair<uint32_t, int>> non_tree;
  for (uint32_t u : t.order) {
    for (int i = 0; i < 3; ++i) {
      uint32_t v = m.r(i, u);
      bool tree_edge = (t.parent[v] == u && t.gen[v] == i) || (t.parent[u] == v && t.gen[u] == i);
      if (!tree_edge && t.pos[v] >= t.pos[u]) non_tree.emplace_back(u, i);
    }
  }
  std::vector<size_t> pick;
  const size_t local = std::min<size_t>(8, non_tree.size());
  for (size_t k = 0; k < local; ++k) pick.push_back(k);
  std::mt19937 rng(20240531u);
  for (int k = 0; k < 24 && non_tree.size() > local; ++k)
    pick.push_back(local + rng() % (non_tree.size() - local));
  std::vector<std::vector<uint8_t>> words;
  for (size_t k : pick) {
    auto [u, i] = non_tree[k];
    uint32_t v = m.r(i, u);
    std::vector<uint8_t> w = t.path(u);
    w.push_back(uint8_t(i));
    std::vector<uint8_t> back = t.path(v);
    w.insert(w.end(), back.rbegin(), back.rend());
    words.push_back(std::move(w));
  }
  return words;
}

bool fixed_by_words(const FlagMap& m, const std::vector<std::vector<uint8_t>>& words, uint32_t x) {
  for (auto& w : words) {
    uint32_t y = x;
    for (uint8_t l : w) y = m.r(l, y);
    if (y != x) return false;
  }
  return true;
}

// The unique structure-preserving map src -> dst sending flag 0 to target,
// written into f; false if it does not exist.
bool try_extend(const FlagMap& src, const Tree& t, const FlagMap& dst, uint32_t target,
                std::vector<uint32_t>& f) {
  const uint32_t n = src.size();
  f.resize(n);
  for (uint32_t k = 0; k < n; ++k) {
    uint32_t u = t.order[k];
    f[u] = k == 0 ? target : dst.r(t.gen[u], f[t.parent[u]]);
    for (int i = 0; i < 3; ++i) {
      uint32_t v = src.r(i, u);
      if (t.pos[v] <= k && f[v] != dst.r(i, f[u])) return false;
    }
  }
  return true;
}

struct AutSearch {
  std::vector<char> in_orbit;
  std::vector<uint32_t> orbit;  // orbit of flag 0
  std::vector<std::vector<uint32_t>> gens;
};

AutSearch find_automorphisms(const FlagMap& m) {
  Tree t(m);
  AutSearch s;
  // Flags are grouped into orbits of the automorphisms found so far; a
  // failed candidate rules out its whole orbit.
  UnionFind uf(m.size());
  std::vector<char> bad(m.size(), 0);
  auto words = stabilizer_words(m, t);
  std::vector<uint32_t> f;
  for (uint32_t c = 1; c < m.size(); ++c) {
    uint32_t rc = uf.find(c);
    if (rc == uf.find(0) || bad[rc]) continue;
    if (!fixed_by_words(m, words, c) || !try_extend(m, t, m, c, f)) {
      bad[rc] = 1;
      continue;
    }
    for (uint32_t x = 0; x < m.size(); ++x) {
      uint32_t a = uf.find(x), b = uf.find(f[x]);
      if (a == b) continue;
      char mark = bad[a] | bad[b];
      uf.unite(a, b);
      bad[uf.find(a)] = mark;
    }
    s.gens.push_back(f);
  }
  uint32_t r0 = uf.find(0);
  s.in_orbit.assign(m.size(), 0);
  for (uint32_t x = 0; x < m.size(); ++x)
    if (uf.find(x) == r0) {
      s.in_orbit[x] = 1;
      s.orbit.push_back(x);
    }
  return s;
}

uint64_t perm_order_capped(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  // order of the product a then b; 0 if it does not fit in 64 bits
  const size_t n = a.size();
  std::vector<char> seen(n, 0);
  unsigned __int128 acc = 1;
  for (size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    uint64_t len = 0;
    for (size_t j = i; !seen[j]; j = b[a[j]]) {
      seen[j] = 1;
      ++len;
    }
    acc = acc / std::gcd(static_cast<uint64_t>(acc), len) * len;
    if (acc > UINT64_MAX) return 0;
  }
  return static_cast<uint64_t>(acc);
}

}  // namespace

FlagMap::FlagMap(std::vector<uint32_t> r0, std::vector<uint32_t> r1, std::vector<uint32_t> r2)
    : r_{std::move(r0), std::move(r1), std::move(r2)} {
  const size_t n = r_[0].size();
  if (n == 0) throw InputError("a map needs at least one flag");
  if (r_[1].size() != n || r_[2].size() != n) throw InputError("r0, r1, r2 differ in length");
  for (int i = 0; i < 3; ++i)
    for (size_t x = 0; x < n; ++x)
      if (r_[i][x] >= n || r_[i][r_[i][x]] != x) throw InputError("r" + std::to_string(i) + " is not an involution");
  for (size_t x = 0; x < n; ++x)
    if (r_[2][r_[0][r_[2][r_[0][x]]]] != x) throw InputError("(r0 r2)^2 is not the identity");
  std::vector<char> seen(n, 0);
  std::vector<uint32_t> queue{0};
  seen[0] = 1;
  for (size_t k = 0; k < queue.size(); ++k)
    for (int i = 0; i < 3; ++i) {
      uint32_t v = r_[i][queue[k]];
      if (!seen[v]) {
        seen[v] = 1;
        queue.push_back(v);
      }
    }
  if (queue.size() != n) throw InputError("flag set is not connected");
}

FlagMap FlagMap::from_permutations(const Permutation& r0, const Permutation& r1, const Permutation& r2) {
  return FlagMap(r0.images(), r1.images(), r2.images());
}

MapSummary summary(const FlagMap& m) {
  MapSummary s;
  s.flags = m.size();
  s.vertices = count_orbits(m, 1, 2);
  s.edges = count_orbits(m, 0, 2);
  s.faces = count_orbits(m, 0, 1);
  s.euler = (long long)s.vertices - (long long)s.edges + (long long)s.faces;
  for (int i = 0; i < 3 && !s.has_boundary; ++i)
    for (uint32_t x = 0; x < m.size(); ++x)
      if (m.r(i, x) == x) {
        s.has_boundary = true;
        break;
      }
  if (!s.has_boundary) {
    std::vector<int8_t> colour(m.size(), -1);
    std::vector<uint32_t> queue{0};
    colour[0] = 0;
    bool ok = true;
    for (size_t k = 0; k < queue.size() && ok; ++k) {
      uint32_t u = queue[k];
      for (int i = 0; i < 3; ++i) {
        uint32_t v = m.r(i, u);
        if (colour[v] < 0) {
          colour[v] = int8_t(1 - colour[u]);
          queue.push_back(v);
        } else if (colour[v] == colour[u]) {
          ok = false;
        }
      }
    }
    s.orientable_no_boundary = ok;
    s.genus = ok ? (2 - s.euler) / 2 : 2 - s.euler;
  }
  s.order_r0r1 = perm_order_capped(m.r(0), m.r(1));
  s.order_r1r2 = perm_order_capped(m.r(1), m.r(2));
  return s;
}

AutomorphismInfo automorphism_group(const FlagMap& m) {
  AutSearch s = find_automorphisms(m);
  AutomorphismInfo info;
  info.order = s.orbit.size();
  UnionFind uf(m.size());
  for (auto& g : s.gens)
    for (uint32_t x = 0; x < m.size(); ++x) uf.unite(x, g[x]);
  info.orbit_of_flag = uf.labels(&info.orbit_count);
  return info;
}

std::vector<Permutation> automorphisms(const FlagMap& m) {
  AutSearch s = find_automorphisms(m);
  Tree t(m);
  std::vector<Permutation> out;
  std::vector<uint32_t> f;
  for (uint32_t c : s.orbit) {
    if (!try_extend(m, t, m, c, f)) throw std::logic_error("orbit element without automorphism");
    out.emplace_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_regular(const FlagMap& m) { return automorphism_group(m).orbit_count == 1; }

FlagMap quotient_by_aut(const FlagMap& m) {
  AutomorphismInfo info = automorphism_group(m);
  std::array<std::vector<uint32_t>, 3> r;
  for (int i = 0; i < 3; ++i) {
    r[i].assign(info.orbit_count, UINT32_MAX);
    for (uint32_t x = 0; x < m.size(); ++x) r[i][info.orbit_of_flag[x]] = info.orbit_of_flag[m.r(i, x)];
  }
  return FlagMap(std::move(r[0]), std::move(r[1]), std::move(r[2]));
}

bool is_edge_transitive(const FlagMap& m) { return count_orbits(quotient_by_aut(m), 0, 2) == 1; }

bool is_isomorphic(const FlagMap& a, const FlagMap& b) {
  if (a.size() != b.size()) return false;
  Tree t(a);
  auto words = stabilizer_words(a, t);
  std::vector<uint32_t> f;
  for (uint32_t c = 0; c < b.size(); ++c)
    if (fixed_by_words(b, words, c) && try_extend(a, t, b, c, f)) return true;
  return false;
}

bool is_isomorphic_oriented(const FlagMap& a, const FlagMap& b) {
  if (a.size() != b.size()) return false;
  // Flags of b reachable from 0 by words of even length.
  std::vector<char> even(b.size(), 0);
  std::vector<uint32_t> queue{0};
  even[0] = 1;
  for (size_t k = 0; k < queue.size(); ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        uint32_t y = b.r(j, b.r(i, queue[k]));
        if (!even[y]) even[y] = 1, queue.push_back(y);
      }
  Tree t(a);
  auto words = stabilizer_words(a, t);
  std::vector<uint32_t> f;
  for (uint32_t c : queue)
    if (fixed_by_words(b, words, c) && try_extend(a, t, b, c, f)) return true;
  return false;
}

FlagMap dual(const FlagMap& m) { return FlagMap(m.r(2), m.r(1), m.r(0)); }

FlagMap petrie(const FlagMap& m) {
  std::vector<uint32_t> r0(m.size());
  for (uint32_t x = 0; x < m.size(); ++x) r0[x] = m.r(2, m.r(0, x));
  return FlagMap(std::move(r0), m.r(1), m.r(2));
}

FlagMap join(const FlagMap& a, const FlagMap& b) {
  std::unordered_map<uint64_t, uint32_t> id;
  std::vector<uint64_t> pairs{0};
  id[0] = 0;
  std::array<std::vector<uint32_t>, 3> r;
  for (size_t k = 0; k < pairs.size(); ++k) {
    uint32_t x = uint32_t(pairs[k] >> 32), y = uint32_t(pairs[k]);
    for (int i = 0; i < 3; ++i) {
      uint64_t key = (uint64_t(a.r(i, x)) << 32) | b.r(i, y);
      auto [it, fresh] = id.emplace(key, uint32_t(pairs.size()));
      if (fresh) pairs.push_back(key);
      r[i].push_back(it->second);
    }
  }
  return FlagMap(std::move(r[0]), std::move(r[1]), std::move(r[2]));
}

std::optional<uint64_t> monodromy_order(const FlagMap& m, uint64_t cap) {
  return group_order(PermGroupSpec(m.size(), {m.perm(0), m.perm(1), m.perm(2)}), cap);
}

}  // namespace etm
