#include "etm/group.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstring>
#include <numeric>
#include <thread>

namespace etm {

namespace {

using Id = GroupTable::Id;

void put32(uint8_t* out, uint32_t v) { std::memcpy(out, &v, 4); }
uint32_t get32(const uint8_t* in) {
  uint32_t v;
  std::memcpy(&v, in, 4);
  return v;
}

std::vector<uint8_t> pack32(std::initializer_list<uint32_t> vals) {
  std::vector<uint8_t> out(4 * vals.size());
  size_t k = 0;
  for (uint32_t v : vals) put32(out.data() + 4 * k++, v);
  return out;
}

template <typename T>
void compose_bytes(const uint8_t* a, const uint8_t* b, uint8_t* out, size_t n) {
  const T* pa = reinterpret_cast<const T*>(a);
  const T* pb = reinterpret_cast<const T*>(b);
  T* po = reinterpret_cast<T*>(out);
  for (size_t i = 0; i < n; ++i) po[i] = pb[pa[i]];
}

}  // namespace

GroupTable GroupTable::close(size_t width, const std::vector<uint8_t>& identity,
                             const std::vector<std::vector<uint8_t>>& gens, ProductFn product,
                             uint64_t cap, LabelFn label) {
  if (identity.size() != width) throw std::invalid_argument("identity width mismatch");
  GroupTable g;
  g.elems_ = ByteIndex(width);
  g.product_ = std::move(product);
  g.label_ = std::move(label);
  g.elems_.insert(identity.data());
  std::vector<uint8_t> gbytes;
  for (auto& s : gens) {
    if (s.size() != width) throw std::invalid_argument("generator width mismatch");
    gbytes.insert(gbytes.end(), s.begin(), s.end());
  }
  const size_t k = gens.size();
  g.right_.assign(k, {});
  std::vector<uint8_t> tmp(width), cur(width);
  for (uint32_t id = 0; id < g.elems_.size(); ++id) {
    // The element store may reallocate on insert, so copy the operand first.
    std::memcpy(cur.data(), g.elems_.at(id), width);
    for (size_t j = 0; j < k; ++j) {
      g.product_(cur.data(), gbytes.data() + j * width, tmp.data());
      bool ins = false;
      uint32_t r = g.elems_.insert(tmp.data(), &ins);
      if (ins && g.elems_.size() > cap) throw CapExceeded("group closure exceeds cap of " + std::to_string(cap));
      g.right_[j].push_back(r);
    }
  }
  for (size_t j = 0; j < k; ++j) g.gens_.push_back(g.right_[j][0]);
  // Inverses: walk the BFS tree, x = parent * s_j  =>  x^-1 = s_j^-1 parent^-1.
  const size_t n = g.elems_.size();
  std::vector<Id> gen_inv(k);
  for (size_t j = 0; j < k; ++j) {
    Id prev = 0, cur = g.right_[j][0];
    while (cur != 0) {
      prev = cur;
      cur = g.right_[j][cur];
    }
    gen_inv[j] = prev;
  }
  g.inv_.assign(n, UINT32_MAX);
  g.inv_[0] = 0;
  for (uint32_t id = 0; id < n; ++id) {
    for (size_t j = 0; j < k; ++j) {
      Id y = g.right_[j][id];
      if (g.inv_[y] == UINT32_MAX) g.inv_[y] = g.mul(gen_inv[j], g.inv_[id]);
    }
  }
  return g;
}

GroupTable GroupTable::from_permutations(const PermGroupSpec& spec, uint64_t cap) {
  const size_t n = spec.degree;
  if (n == 0) throw InputError("permutation group of degree 0");
  const size_t w = perm_point_width(n);
  const size_t width = n * w;
  std::vector<uint8_t> id(width);
  encode_perm(Permutation::identity(n), w, id.data());
  std::vector<std::vector<uint8_t>> gens;
  for (auto& p : spec.generators) {
    std::vector<uint8_t> b(width);
    encode_perm(p, w, b.data());
    gens.push_back(std::move(b));
  }
  ProductFn prod;
  if (w == 1)
    prod = [n](const uint8_t* a, const uint8_t* b, uint8_t* o) { compose_bytes<uint8_t>(a, b, o, n); };
  else if (w == 2)
    prod = [n](const uint8_t* a, const uint8_t* b, uint8_t* o) { compose_bytes<uint16_t>(a, b, o, n); };
  else
    prod = [n](const uint8_t* a, const uint8_t* b, uint8_t* o) { compose_bytes<uint32_t>(a, b, o, n); };
  GroupTable g = close(width, id, gens, std::move(prod), cap);
  g.degree_ = n;
  g.point_width_ = w;
  return g;
}

Id GroupTable::mul(Id a, Id b) const {
  const size_t w = elems_.width();
  uint8_t stackbuf[512];
  std::vector<uint8_t> heap;
  uint8_t* out = stackbuf;
  if (w > sizeof(stackbuf)) {
    heap.resize(w);
    out = heap.data();
  }
  product_(elems_.at(a), elems_.at(b), out);
  Id r = elems_.find(out);
  if (r == ByteIndex::npos) throw std::logic_error("product left the group");
  return r;
}

Id GroupTable::pow(Id a, long long k) const {
  Id base = k < 0 ? inv(a) : a;
  unsigned long long e = k < 0 ? 0ULL - static_cast<unsigned long long>(k) : static_cast<unsigned long long>(k);
  Id acc = 0;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return acc;
}

uint64_t GroupTable::order(Id a) const {
  uint64_t k = 1;
  for (Id x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

std::string GroupTable::label(Id a) const {
  if (is_perm_group()) return perm(a).to_cycles();
  if (label_) return label_(elems_.at(a));
  return "#" + std::to_string(a);
}

Permutation GroupTable::perm(Id a) const {
  if (!is_perm_group()) throw std::logic_error("not a permutation group");
  return decode_perm(elems_.at(a), degree_, point_width_);
}

std::optional<Id> GroupTable::find(const Permutation& p) const {
  if (!is_perm_group() || p.degree() != degree_) return std::nullopt;
  std::vector<uint8_t> b(degree_ * point_width_);
  encode_perm(p, point_width_, b.data());
  Id r = elems_.find(b.data());
  if (r == ByteIndex::npos) return std::nullopt;
  return r;
}

int GroupTable::sign(Id a) const { return etm::sign(perm(a)); }

Subgroup generate(const GroupTable& g, const std::vector<Id>& gens) {
  Subgroup h;
  h.mask.assign(g.size(), 0);
  h.mask[0] = 1;
  h.members.push_back(0);
  for (size_t i = 0; i < h.members.size(); ++i) {
    for (Id s : gens) {
      Id y = g.mul(h.members[i], s);
      if (!h.mask[y]) {
        h.mask[y] = 1;
        h.members.push_back(y);
      }
    }
  }
  std::sort(h.members.begin(), h.members.end());
  return h;
}

bool generates(const GroupTable& g, const std::vector<Id>& gens) { return generate(g, gens).size() == g.size(); }

Subgroup normal_closure(const GroupTable& g, const std::vector<Id>& gens, const std::vector<Id>* by) {
  const std::vector<Id>& conj_by = by ? *by : g.generators();
  std::vector<Id> s = gens;
  Subgroup h = generate(g, s);
  for (size_t i = 0; i < s.size(); ++i) {
    for (Id x : conj_by) {
      Id c = g.conj(s[i], x);
      if (!h.contains(c)) {
        s.push_back(c);
        h = generate(g, s);
      }
    }
  }
  return h;
}

bool is_normal(const GroupTable& g, const Subgroup& h) {
  for (Id m : h.members)
    for (Id x : g.generators())
      if (!h.contains(g.conj(m, x))) return false;
  return true;
}

std::vector<Id> generating_set(const GroupTable& g, const Subgroup& h) {
  std::vector<Id> s;
  Subgroup cur = generate(g, s);
  for (Id m : h.members) {
    if (cur.size() == h.size()) break;
    if (!cur.contains(m)) {
      s.push_back(m);
      cur = generate(g, s);
    }
  }
  return s;
}

GroupTable subgroup_table(const GroupPtr& g, const Subgroup& h) {
  std::vector<std::vector<uint8_t>> gens;
  for (Id s : generating_set(*g, h)) gens.push_back(pack32({s}));
  auto prod = [g](const uint8_t* a, const uint8_t* b, uint8_t* o) { put32(o, g->mul(get32(a), get32(b))); };
  auto lab = [g](const uint8_t* a) { return g->label(get32(a)); };
  return GroupTable::close(4, pack32({0}), gens, prod, UINT64_MAX, lab);
}

Subgroup center(const GroupTable& g) {
  Subgroup z;
  z.mask.assign(g.size(), 0);
  for (Id a = 0; a < g.size(); ++a) {
    bool central = true;
    for (Id x : g.generators())
      if (g.mul(a, x) != g.mul(x, a)) {
        central = false;
        break;
      }
    if (central) {
      z.mask[a] = 1;
      z.members.push_back(a);
    }
  }
  return z;
}

Subgroup derived_subgroup(const GroupTable& g) {
  const auto& gens = g.generators();
  std::vector<Id> comms;
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j) comms.push_back(g.commutator(gens[i], gens[j]));
  return normal_closure(g, comms);
}

GroupTable quotient(const GroupPtr& g, const Subgroup& n) {
  if (!is_normal(*g, n)) throw std::invalid_argument("subgroup is not normal");
  auto coset = std::make_shared<std::vector<uint32_t>>(g->size(), UINT32_MAX);
  auto rep = std::make_shared<std::vector<Id>>();
  for (Id a = 0; a < g->size(); ++a) {
    if ((*coset)[a] != UINT32_MAX) continue;
    uint32_t c = uint32_t(rep->size());
    rep->push_back(a);
    for (Id m : n.members) (*coset)[g->mul(a, m)] = c;
  }
  std::vector<std::vector<uint8_t>> gens;
  for (Id s : g->generators()) gens.push_back(pack32({(*coset)[s]}));
  auto prod = [g, coset, rep](const uint8_t* a, const uint8_t* b, uint8_t* o) {
    put32(o, (*coset)[g->mul((*rep)[get32(a)], (*rep)[get32(b)])]);
  };
  auto lab = [g, rep](const uint8_t* a) { return g->label((*rep)[get32(a)]) + "N"; };
  return GroupTable::close(4, pack32({0}), gens, prod, UINT64_MAX, lab);
}

GroupTable direct_product(const GroupPtr& a, const GroupPtr& b) {
  std::vector<std::vector<uint8_t>> gens;
  for (Id s : a->generators()) gens.push_back(pack32({s, 0}));
  for (Id s : b->generators()) gens.push_back(pack32({0, s}));
  auto prod = [a, b](const uint8_t* x, const uint8_t* y, uint8_t* o) {
    put32(o, a->mul(get32(x), get32(y)));
    put32(o + 4, b->mul(get32(x + 4), get32(y + 4)));
  };
  auto lab = [a, b](const uint8_t* x) { return "(" + a->label(get32(x)) + ", " + b->label(get32(x + 4)) + ")"; };
  return GroupTable::close(8, pack32({0, 0}), gens, prod, UINT64_MAX, lab);
}

GroupTable semidirect_c2(const GroupPtr& g, std::vector<Id> alpha) {
  if (alpha.size() != g->size()) throw std::invalid_argument("automorphism table size mismatch");
  auto al = std::make_shared<std::vector<Id>>(std::move(alpha));
  std::vector<std::vector<uint8_t>> gens;
  for (Id s : g->generators()) gens.push_back(pack32({s, 0}));
  gens.push_back(pack32({0, 1}));
  auto prod = [g, al](const uint8_t* x, const uint8_t* y, uint8_t* o) {
    uint32_t e = get32(x + 4), h = get32(y);
    put32(o, g->mul(get32(x), e ? (*al)[h] : h));
    put32(o + 4, e ^ get32(y + 4));
  };
  auto lab = [g](const uint8_t* x) { return g->label(get32(x)) + (get32(x + 4) ? " t" : ""); };
  return GroupTable::close(8, pack32({0, 0}), gens, prod, UINT64_MAX, lab);
}

std::vector<Subgroup> upper_central_series(const GroupTable& g) {
  std::vector<Subgroup> series;
  series.push_back(generate(g, {}));
  while (true) {
    const Subgroup& prev = series.back();
    Subgroup next;
    next.mask.assign(g.size(), 0);
    for (Id a = 0; a < g.size(); ++a) {
      bool ok = true;
      for (Id x : g.generators())
        if (!prev.contains(g.commutator(a, x))) {
          ok = false;
          break;
        }
      if (ok) {
        next.mask[a] = 1;
        next.members.push_back(a);
      }
    }
    if (next.size() == prev.size()) break;
    series.push_back(std::move(next));
    if (series.back().size() == g.size()) break;
  }
  return series;
}

std::optional<int> nilpotence_class(const GroupTable& g) {
  auto series = upper_central_series(g);
  if (series.back().size() != g.size()) return std::nullopt;
  return int(series.size()) - 1;
}

std::optional<int> derived_length(const GroupTable& g) {
  std::vector<Id> gens = g.generators();
  size_t cur_size = g.size();
  int len = 0;
  while (cur_size > 1) {
    std::vector<Id> comms;
    for (size_t i = 0; i < gens.size(); ++i)
      for (size_t j = i + 1; j < gens.size(); ++j) comms.push_back(g.commutator(gens[i], gens[j]));
    Subgroup d = normal_closure(g, comms, &gens);
    if (d.size() == cur_size) return std::nullopt;
    ++len;
    cur_size = d.size();
    gens = generating_set(g, d);
  }
  return len;
}

std::vector<std::vector<Id>> conjugacy_classes(const GroupTable& g) {
  std::vector<char> seen(g.size(), 0);
  std::vector<std::vector<Id>> out;
  for (Id a = 0; a < g.size(); ++a) {
    if (seen[a]) continue;
    std::vector<Id> cls{a};
    seen[a] = 1;
    for (size_t i = 0; i < cls.size(); ++i)
      for (Id x : g.generators()) {
        Id c = g.conj(cls[i], x);
        if (!seen[c]) {
          seen[c] = 1;
          cls.push_back(c);
        }
      }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<Id> involutions(const GroupTable& g) {
  std::vector<Id> out;
  for (Id a = 1; a < g.size(); ++a)
    if (g.mul(a, a) == 0) out.push_back(a);
  return out;
}

bool strongly_real(const GroupTable& g, Id x) {
  if (g.mul(x, x) == 0) return true;
  const Id xi = g.inv(x);
  for (Id t : involutions(g))
    if (g.conj(x, t) == xi) return true;
  return false;
}

std::optional<std::vector<Id>> hom_extension(const GroupTable& g, const std::vector<Id>& src,
                                             const std::vector<Id>& dst) {
  if (src.size() != dst.size()) throw std::invalid_argument("source and target tuples differ in length");
  const size_t k = src.size();
  for (size_t i = 0; i < k; ++i)
    if (g.order(src[i]) != g.order(dst[i])) return std::nullopt;
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j)
      if (g.order(g.mul(src[i], src[j])) != g.order(g.mul(dst[i], dst[j]))) return std::nullopt;
  std::vector<Id> img(g.size(), UINT32_MAX);
  std::vector<Id> queue{0};
  img[0] = 0;
  for (size_t q = 0; q < queue.size(); ++q) {
    Id x = queue[q];
    for (size_t i = 0; i < k; ++i) {
      Id y = g.mul(x, src[i]);
      Id fy = g.mul(img[x], dst[i]);
      if (img[y] == UINT32_MAX) {
        img[y] = fy;
        queue.push_back(y);
      } else if (img[y] != fy) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != g.size()) throw std::invalid_argument("source tuple does not generate the group");
  std::vector<char> hit(g.size(), 0);
  for (Id v : img) {
    if (hit[v]) return std::nullopt;
    hit[v] = 1;
  }
  return img;
}

bool hom_extension_exists(const GroupTable& g, const std::vector<Id>& src, const std::vector<Id>& dst) {
  return hom_extension(g, src, dst).has_value();
}

InversionSurvey simultaneous_inversion_survey(const GroupTable& g, unsigned threads) {
  auto classes = conjugacy_classes(g);
  struct Shard {
    uint64_t gen = 0, inv = 0;
    std::optional<std::pair<Id, Id>> first;
  };
  const size_t nc = classes.size();
  std::vector<Shard> shards(nc);
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t c; (c = next.fetch_add(1)) < nc;) {
      Shard& sh = shards[c];
      const Id x = classes[c][0];
      const uint64_t w = classes[c].size();
      for (Id y = 0; y < g.size(); ++y) {
        if (!generates(g, {x, y})) continue;
        sh.gen += w;
        if (hom_extension_exists(g, {x, y}, {g.inv(x), g.inv(y)}))
          sh.inv += w;
        else if (!sh.first)
          sh.first = std::make_pair(x, y);
      }
    }
  };
  threads = std::max(1u, threads);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  InversionSurvey out;
  for (auto& sh : shards) {
    out.generating_pairs += sh.gen;
    out.inverted += sh.inv;
    if (!out.counterexample && sh.first) out.counterexample = sh.first;
  }
  return out;
}

uint64_t count_triples_brute(const GroupTable& g, const std::vector<Id>& a, const std::vector<Id>& b,
                             const std::vector<Id>& c) {
  std::vector<char> in_c(g.size(), 0);
  for (Id x : c) in_c[x] = 1;
  uint64_t count = 0;
  for (Id x : a)
    for (Id y : b)
      if (in_c[g.inv(g.mul(x, y))]) ++count;
  return count;
}

double frobenius_count(const CharacterTable& t, size_t i, size_t j, size_t k) {
  std::complex<double> sum = 0;
  for (auto& chi : t.chars) sum += chi[i] * chi[j] * chi[k] / chi[0];
  double scale = double(t.class_sizes[i]) * double(t.class_sizes[j]) * double(t.class_sizes[k]) / double(t.order);
  return (scale * sum).real();
}

std::optional<uint64_t> frobenius_count_integral(const CharacterTable& t, size_t i, size_t j, size_t k, double tol) {
  std::complex<double> sum = 0;
  for (auto& chi : t.chars) sum += chi[i] * chi[j] * chi[k] / chi[0];
  double scale = double(t.class_sizes[i]) * double(t.class_sizes[j]) * double(t.class_sizes[k]) / double(t.order);
  std::complex<double> v = scale * sum;
  double r = std::round(v.real());
  if (std::abs(v.imag()) > tol || std::abs(v.real() - r) > tol || r < 0) return std::nullopt;
  return uint64_t(r);
}

namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

GroupTable nilpotent_gpef(unsigned p, unsigned e, unsigned f) {
  if (!is_prime(p) || e < 1 || f < 1 || f > e) throw std::invalid_argument("need p prime and 1 <= f <= e");
  uint64_t n = 1, pf = 1;
  for (unsigned i = 0; i < e; ++i) n *= p;
  for (unsigned i = 0; i < f; ++i) pf *= p;
  if (n * n > 100'000'000) throw std::invalid_argument("group too large");
  auto mpow = std::make_shared<std::vector<uint32_t>>(n);
  (*mpow)[0] = 1;
  for (uint64_t k = 1; k < n; ++k) (*mpow)[k] = uint32_t((*mpow)[k - 1] * ((pf + 1) % n) % n);
  const uint32_t N = uint32_t(n);
  auto prod = [mpow, N](const uint8_t* a, const uint8_t* b, uint8_t* o) {
    uint32_t i = get32(a), j = get32(a + 4), k = get32(b), l = get32(b + 4);
    put32(o, (i + k) % N);
    put32(o + 4, uint32_t((uint64_t((*mpow)[k]) * j + l) % N));
  };
  auto lab = [](const uint8_t* a) {
    return "g^" + std::to_string(get32(a)) + " h^" + std::to_string(get32(a + 4));
  };
  GroupTable g = GroupTable::close(8, pack32({0, 0}), {pack32({1, 0}), pack32({0, 1})}, prod, UINT64_MAX, lab);
  g.generator_names = {"g", "h"};
  g.family = "gpef";
  g.family_params = {{"p", p}, {"e", e}, {"f", f}};
  return g;
}

GroupTable extend_by_alpha(unsigned e) {
  if (e < 3 || e > 12) throw std::invalid_argument("extend_by_alpha needs 3 <= e <= 12");
  const uint32_t N = 1u << e;
  auto mpow = std::make_shared<std::vector<uint32_t>>(N);
  (*mpow)[0] = 1;
  for (uint32_t k = 1; k < N; ++k) (*mpow)[k] = (*mpow)[k - 1] * 5 % N;
  // Product inside G_{2,e,2} on normal forms (i, j).
  auto gmul = [mpow, N](uint32_t i, uint32_t j, uint32_t k, uint32_t l) {
    return std::make_pair((i + k) % N, uint32_t((uint64_t((*mpow)[k]) * j + l) % N));
  };
  // (gh)^k in normal form.
  auto gh = std::make_shared<std::vector<std::pair<uint32_t, uint32_t>>>(N);
  (*gh)[0] = {0, 0};
  for (uint32_t k = 1; k < N; ++k) (*gh)[k] = gmul((*gh)[k - 1].first, (*gh)[k - 1].second, 1, 1);
  auto prod = [gmul, gh, N](const uint8_t* a, const uint8_t* b, uint8_t* o) {
    uint32_t i = get32(a), j = get32(a + 4), ea = get32(a + 8);
    uint32_t k = get32(b), l = get32(b + 4), eb = get32(b + 8);
    std::pair<uint32_t, uint32_t> r;
    if (!ea) {
      r = gmul(i, j, k, l);
    } else {
      // alpha g^k h^l alpha = (gh)^k h^-l
      auto [u, v] = (*gh)[k];
      auto t = gmul(u, v, 0, (N - l) % N);
      r = gmul(i, j, t.first, t.second);
    }
    put32(o, r.first);
    put32(o + 4, r.second);
    put32(o + 8, ea ^ eb);
  };
  auto lab = [](const uint8_t* a) {
    std::string s = "g^" + std::to_string(get32(a)) + " h^" + std::to_string(get32(a + 4));
    if (get32(a + 8)) s += " alpha";
    return s;
  };
  GroupTable g = GroupTable::close(12, pack32({0, 0, 0}),
                                   {pack32({1, 0, 0}), pack32({0, 1, 0}), pack32({0, 0, 1})}, prod,
                                   UINT64_MAX, lab);
  g.generator_names = {"g", "h", "alpha"};
  g.family = "extend_by_alpha";
  g.family_params = {{"e", e}};
  return g;
}

}  // namespace etm
