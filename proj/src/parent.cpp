#include "etm/parent.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <stdexcept>

namespace etm {

namespace {

using C = EtClass;
using Id = GroupTable::Id;

struct ParentShape {
  std::vector<std::string> names;
  std::vector<bool> involutory;
  std::vector<std::string> words;
};

const ParentShape& shape(EtClass rep) {
  static const std::map<EtClass, ParentShape> shapes = {
      {C::C1, {{"R0", "R1", "R2"}, {true, true, true}, {"0", "1", "2"}}},
      {C::C2, {{"S1", "S2", "S3"}, {true, true, true}, {"1", "010", "2"}}},
      {C::C2ex, {{"S1", "S"}, {true, false}, {"2", "01"}}},
      {C::C2Pex, {{"X", "Y"}, {false, true}, {"12", "02"}}},
      {C::C3, {{"S0", "S1", "S2", "S3"}, {true, true, true, true}, {"1", "010", "212", "02102"}}},
      {C::C4, {{"S1", "S2", "S"}, {true, true, false}, {"1", "212", "0120"}}},
      {C::C5, {{"S", "S'"}, {false, false}, {"12", "0120"}}},
  };
  auto it = shapes.find(rep);
  if (it == shapes.end()) throw std::invalid_argument("no direct builder for class " + to_string(rep));
  return it->second;
}

RewriteEntry e(int target) { return {std::nullopt, target}; }
RewriteEntry e(int gen, bool inverse, int target) { return {Letter{gen, inverse}, target}; }

std::string reversed(std::string w) {
  std::reverse(w.begin(), w.end());
  return w;
}

// Gamma word of a letter; generators are words in involutions, so the
// inverse is the reversed word.
std::string letter_word(EtClass rep, const Letter& l) {
  const std::string& w = shape(rep).words[l.gen];
  return l.inverse ? reversed(w) : w;
}

std::string entry_word(EtClass rep, const RewriteEntry& en) {
  return en.word ? letter_word(rep, *en.word) : std::string();
}

std::vector<uint8_t> pack32(std::initializer_list<uint32_t> vals) {
  std::vector<uint8_t> out(4 * vals.size());
  size_t k = 0;
  for (uint32_t v : vals) {
    std::memcpy(out.data() + 4 * k, &v, 4);
    ++k;
  }
  return out;
}

Id image_of(const EpimorphismSpec& spec, const Letter& l) {
  Id x = spec.images.at(l.gen);
  return l.inverse ? spec.group->inv(x) : x;
}

}  // namespace

bool is_build_representative(EtClass t) {
  switch (t) {
    case C::C1: case C::C2: case C::C2ex: case C::C2Pex: case C::C3: case C::C4: case C::C5: return true;
    default: return false;
  }
}

const std::vector<std::string>& generator_names(EtClass rep) { return shape(rep).names; }
const std::vector<bool>& involutory_generators(EtClass rep) { return shape(rep).involutory; }
const std::vector<std::string>& generator_words(EtClass rep) { return shape(rep).words; }

const RewriteTable& rewrite_table(EtClass rep) {
  static const std::map<EtClass, RewriteTable> tables = [] {
    std::map<EtClass, RewriteTable> t;
    t[C::C1] = {C::C1, {""}, {{{e(0, false, 0)}, {e(1, false, 0)}, {e(2, false, 0)}}}};
    t[C::C2] = {C::C2, {"", "0"}, {{{e(1), e(0)}, {e(0, false, 0), e(1, false, 1)}, {e(2, false, 0), e(2, false, 1)}}}};
    t[C::C2ex] = {C::C2ex, {"", "0"}, {{{e(1), e(0)}, {e(1, true, 1), e(1, false, 0)}, {e(0, false, 0), e(0, false, 1)}}}};
    t[C::C2Pex] = {C::C2Pex, {"", "2"}, {{{e(1, false, 1), e(1, false, 0)}, {e(0, false, 1), e(0, true, 0)}, {e(1), e(0)}}}};
    const std::vector<RewriteEntry> r0 = {e(1), e(0), e(3), e(2)};
    const std::vector<RewriteEntry> r2 = {e(2), e(3), e(0), e(1)};
    const std::vector<std::string> v4 = {"", "0", "2", "02"};
    t[C::C3] = {C::C3, v4, {r0, {e(0, false, 0), e(1, false, 1), e(2, false, 2), e(3, false, 3)}, r2}};
    t[C::C4] = {C::C4, v4, {r0, {e(0, false, 0), e(2, false, 3), e(1, false, 2), e(2, true, 1)}, r2}};
    t[C::C5] = {C::C5, v4, {r0, {e(0, false, 2), e(1, false, 3), e(0, true, 0), e(1, true, 1)}, r2}};
    return t;
  }();
  auto it = tables.find(rep);
  if (it == tables.end()) throw std::invalid_argument("no rewrite table for class " + to_string(rep));
  return it->second;
}

bool gamma_word_is_identity(const std::string& word) {
  // Normal form in V4 * C2: alternate V4 elements (bitmask R0 = 1, R2 = 2)
  // with R1; a stack suffices.
  std::vector<int> st;  // V4 mask 1..3, or 4 for R1
  for (char ch : word) {
    int tok;
    if (ch == '0') tok = 1;
    else if (ch == '2') tok = 2;
    else if (ch == '1') tok = 4;
    else throw std::invalid_argument("bad letter in Gamma word");
    if (tok == 4) {
      if (!st.empty() && st.back() == 4) st.pop_back();
      else st.push_back(4);
    } else {
      if (!st.empty() && st.back() != 4) {
        int m = st.back() ^ tok;
        st.pop_back();
        if (m) st.push_back(m);
      } else {
        st.push_back(tok);
      }
    }
  }
  return st.empty();
}

std::vector<std::string> rewrite_soundness_failures() {
  std::vector<std::string> out;
  for (EtClass rep : {C::C1, C::C2, C::C2ex, C::C2Pex, C::C3, C::C4, C::C5}) {
    const RewriteTable& t = rewrite_table(rep);
    const size_t n = t.transversal.size();
    for (int i = 0; i < 3; ++i)
      for (size_t j = 0; j < n; ++j) {
        const RewriteEntry& en = t.r[i][j];
        // e_j R_i (w e_k)^-1 = e_j R_i e_k^-1 w^-1
        std::string w = t.transversal[j] + char('0' + i) + reversed(t.transversal[en.target]) +
                        reversed(entry_word(rep, en));
        if (!gamma_word_is_identity(w))
          out.push_back(to_string(rep) + ": e_" + std::to_string(j) + " R" + std::to_string(i) + " mismatch");
      }
    // Relations R_i^2 and (R0 R2)^2 on formal flags (g, j): the accumulated
    // word must be trivial in N(T), which embeds in Gamma.
    auto run = [&](const std::vector<int>& seq, size_t j) {
      std::string w;
      size_t cur = j;
      for (int i : seq) {
        const RewriteEntry& en = t.r[i][cur];
        w += entry_word(rep, en);
        cur = size_t(en.target);
      }
      return cur == j && gamma_word_is_identity(w);
    };
    for (size_t j = 0; j < n; ++j) {
      for (int i = 0; i < 3; ++i)
        if (!run({i, i}, j)) out.push_back(to_string(rep) + ": r" + std::to_string(i) + "^2 fails at " + std::to_string(j));
      if (!run({0, 2, 0, 2}, j)) out.push_back(to_string(rep) + ": (r0 r2)^2 fails at " + std::to_string(j));
    }
  }
  return out;
}

const std::vector<ForbiddenPattern>& forbidden_patterns(EtClass rep) {
  static const std::map<EtClass, std::vector<ForbiddenPattern>> pats = {
      {C::C1, {}},
      {C::C2, {{{{1}, {0}, {2}}, "0", C::C1}}},
      {C::C2ex, {{{{0}, {1, true}}, "0", C::C1}}},
      {C::C2Pex, {{{{0, true}, {1}}, "2", C::C1}}},
      {C::C3,
       {{{{1}, {0}, {3}, {2}}, "0", C::C2s},
        {{{2}, {3}, {0}, {1}}, "2", C::C2},
        {{{3}, {2}, {1}, {0}}, "02", C::C2P}}},
      {C::C4, {{{{1}, {0}, {2, true}}, "2", C::C2}}},
      {C::C5,
       {{{{0, true}, {1, true}}, "2", C::C2},
        {{{1}, {0}}, "0", C::C2sex},
        {{{1, true}, {0, true}}, "02", C::C2Pex}}},
  };
  auto it = pats.find(rep);
  if (it == pats.end()) throw std::invalid_argument("no forbidden patterns for class " + to_string(rep));
  return it->second;
}

std::vector<std::string> forbidden_soundness_failures() {
  std::vector<std::string> out;
  for (EtClass rep : {C::C1, C::C2, C::C2ex, C::C2Pex, C::C3, C::C4, C::C5}) {
    const auto& words = generator_words(rep);
    for (const auto& p : forbidden_patterns(rep))
      for (size_t i = 0; i < words.size(); ++i) {
        // conjugator^-1 gen_i conjugator = image_i
        std::string w = reversed(p.conjugator) + words[i] + p.conjugator + reversed(letter_word(rep, p.images[i]));
        if (!gamma_word_is_identity(w))
          out.push_back(to_string(rep) + ": pattern via " + p.conjugator + " wrong on " + generator_names(rep)[i]);
      }
  }
  return out;
}

std::vector<std::string> check_spec(const EpimorphismSpec& spec) {
  std::vector<std::string> v;
  if (!is_build_representative(spec.cls)) {
    v.push_back("class " + to_string(spec.cls) + " has no direct builder");
    return v;
  }
  if (!spec.group) {
    v.push_back("no target group");
    return v;
  }
  const GroupTable& g = *spec.group;
  const auto& names = generator_names(spec.cls);
  if (spec.images.size() != names.size()) {
    v.push_back("expected " + std::to_string(names.size()) + " images");
    return v;
  }
  for (Id x : spec.images)
    if (x >= g.size()) {
      v.push_back("image outside the group");
      return v;
    }
  const auto& inv = involutory_generators(spec.cls);
  for (size_t i = 0; i < names.size(); ++i)
    if (inv[i] && g.mul(spec.images[i], spec.images[i]) != 0) v.push_back(names[i] + "^2 != 1");
  if (spec.cls == C::C1) {
    Id p = g.mul(spec.images[0], spec.images[2]);
    if (g.mul(p, p) != 0) v.push_back("(R0R2)^2 != 1");
  }
  if (!generates(g, spec.images)) v.push_back("images do not generate the group");
  return v;
}

std::vector<size_t> matched_patterns(const EpimorphismSpec& spec) {
  std::vector<size_t> out;
  const auto& pats = forbidden_patterns(spec.cls);
  for (size_t k = 0; k < pats.size(); ++k) {
    std::vector<Id> dst;
    for (const Letter& l : pats[k].images) dst.push_back(image_of(spec, l));
    if (hom_extension_exists(*spec.group, spec.images, dst)) out.push_back(k);
  }
  return out;
}

bool has_forbidden_automorphism(const EpimorphismSpec& spec) {
  const auto& pats = forbidden_patterns(spec.cls);
  for (const auto& p : pats) {
    std::vector<Id> dst;
    for (const Letter& l : p.images) dst.push_back(image_of(spec, l));
    if (hom_extension_exists(*spec.group, spec.images, dst)) return true;
  }
  return false;
}

FlagMap build_map(const EpimorphismSpec& spec) {
  auto v = check_spec(spec);
  if (!v.empty()) throw std::invalid_argument("invalid spec: " + v.front());
  const GroupTable& g = *spec.group;
  const RewriteTable& t = rewrite_table(spec.cls);
  const uint32_t nt = uint32_t(t.transversal.size());
  const uint64_t total = uint64_t(g.size()) * nt;
  if (total > UINT32_MAX - 1) throw CapExceeded("map too large");
  // Right multiplication tables, shared between entries using the same element.
  std::map<Id, std::vector<Id>> right;
  auto right_mul = [&](Id s) -> const std::vector<Id>& {
    auto it = right.find(s);
    if (it != right.end()) return it->second;
    std::vector<Id> r(g.size());
    const auto& gens = g.generators();
    auto k = std::find(gens.begin(), gens.end(), s);
    Id si = g.inv(s);
    auto ki = std::find(gens.begin(), gens.end(), si);
    auto it2 = right.find(si);
    if (it2 != right.end()) {
      for (Id x = 0; x < g.size(); ++x) r[it2->second[x]] = x;
    } else if (k != gens.end()) {
      size_t kk = size_t(k - gens.begin());
      for (Id x = 0; x < g.size(); ++x) r[x] = g.mul_gen(x, kk);
    } else if (ki != gens.end()) {
      size_t kk = size_t(ki - gens.begin());
      for (Id x = 0; x < g.size(); ++x) r[g.mul_gen(x, kk)] = x;
    } else {
      for (Id x = 0; x < g.size(); ++x) r[x] = g.mul(x, s);
    }
    return right.emplace(s, std::move(r)).first->second;
  };
  std::array<std::vector<uint32_t>, 3> r;
  for (int i = 0; i < 3; ++i) {
    r[i].resize(total);
    for (uint32_t j = 0; j < nt; ++j) {
      const RewriteEntry& en = t.r[i][j];
      if (en.word) {
        const std::vector<Id>& rm = right_mul(image_of(spec, *en.word));
        for (Id x = 0; x < g.size(); ++x) r[i][uint64_t(x) * nt + j] = rm[x] * nt + uint32_t(en.target);
      } else {
        for (Id x = 0; x < g.size(); ++x) r[i][uint64_t(x) * nt + j] = x * nt + uint32_t(en.target);
      }
    }
  }
  return FlagMap(std::move(r[0]), std::move(r[1]), std::move(r[2]));
}

EtClass expected_class(const EpimorphismSpec& spec) {
  auto v = check_spec(spec);
  if (!v.empty()) throw std::invalid_argument("invalid spec: " + v.front());
  const auto matched = matched_patterns(spec);
  const auto& pats = forbidden_patterns(spec.cls);
  switch (spec.cls) {
    case C::C1:
      return C::C1;
    case C::C2: case C::C2ex: case C::C2Pex:
      return matched.empty() ? spec.cls : C::C1;
    case C::C3: case C::C5:
      // The matched conjugators together with 1 form a subgroup of V4.
      if (matched.empty()) return spec.cls;
      if (matched.size() == pats.size()) return C::C1;
      if (matched.size() == 1) return *pats[matched[0]].overgroup;
      throw std::logic_error("matched conjugators do not form a subgroup");
    case C::C4: {
      if (matched.empty()) return C::C4;
      // N(4) <R2> = N(2): extend theta by R2 -> t, t acting as the matched
      // automorphism, and ask the class-2 question in G x| <t>.
      std::vector<Id> dst;
      for (const Letter& l : pats[0].images) dst.push_back(image_of(spec, l));
      auto alpha = hom_extension(*spec.group, spec.images, dst);
      auto big = std::make_shared<const GroupTable>(semidirect_c2(spec.group, std::move(*alpha)));
      auto find = [&](Id x, uint32_t eps) {
        auto b = pack32({x, eps});
        return big->find_bytes(b.data());
      };
      EpimorphismSpec up{C::C2, big, {find(spec.images[0], 0), find(spec.images[2], 1), find(0, 1)}};
      return has_forbidden_automorphism(up) ? C::C1 : C::C2;
    }
    default:
      throw std::invalid_argument("not a build representative");
  }
}

FlagMap transform_spec(const EpimorphismSpec& spec, const std::vector<Op>& ops) {
  return apply_ops(build_map(spec), ops);
}

std::vector<int> orientation_signs(EtClass rep, const std::vector<Op>& ops) {
  std::array<std::string, 3> w = {"0", "1", "2"};
  for (Op op : ops) {
    if (op == Op::Dual) std::swap(w[0], w[2]);
    else w[0] = w[0] + w[2];
  }
  auto eval = [](const std::string& word, int mask) {
    int s = 1;
    for (char ch : word)
      if (mask >> (ch - '0') & 1) s = -s;
    return s;
  };
  // mask bit i set: the character is -1 on R_i
  int found = -1;
  for (int mask = 0; mask < 8; ++mask)
    if (eval(w[0], mask) == -1 && eval(w[1], mask) == -1 && eval(w[2], mask) == -1) found = mask;
  if (found < 0) throw std::logic_error("no orientation character");
  std::vector<int> out;
  for (const auto& gw : generator_words(rep)) out.push_back(eval(gw, found));
  return out;
}

}  // namespace etm
