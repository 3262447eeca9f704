#include "etm/classes.hpp"

#include <stdexcept>

namespace etm {

namespace {

using C = EtClass;

const char* const kLabels[14] = {"1", "2", "2s", "2P", "2ex", "2sex", "2Pex", "3", "4", "4s", "4P", "5", "5s", "5P"};

FlagMap perm_map(std::vector<uint32_t> r0, std::vector<uint32_t> r1, std::vector<uint32_t> r2) {
  return FlagMap(std::move(r0), std::move(r1), std::move(r2));
}

}  // namespace

std::string to_string(EtClass t) { return kLabels[int(t)]; }

std::optional<EtClass> parse_class(std::string_view s) {
  std::string norm(s);
  for (auto& ch : norm)
    if (ch == '*') ch = 's';
  for (int i = 0; i < 14; ++i)
    if (norm == kLabels[i]) return EtClass(i);
  return std::nullopt;
}

int class_index(EtClass t) {
  if (t == C::C1) return 1;
  if (int(t) <= int(C::C2Pex)) return 2;
  return 4;
}

EtClass omega_dual(EtClass t) {
  switch (t) {
    case C::C2: return C::C2s;
    case C::C2s: return C::C2;
    case C::C2ex: return C::C2sex;
    case C::C2sex: return C::C2ex;
    case C::C4: return C::C4s;
    case C::C4s: return C::C4;
    case C::C5: return C::C5s;
    case C::C5s: return C::C5;
    default: return t;
  }
}

EtClass omega_petrie(EtClass t) {
  switch (t) {
    case C::C2s: return C::C2P;
    case C::C2P: return C::C2s;
    case C::C2sex: return C::C2Pex;
    case C::C2Pex: return C::C2sex;
    case C::C4s: return C::C4P;
    case C::C4P: return C::C4s;
    case C::C5s: return C::C5P;
    case C::C5P: return C::C5s;
    default: return t;
  }
}

std::vector<EtClass> covered(EtClass t) {
  switch (t) {
    case C::C1: return {};
    case C::C2: case C::C2s: case C::C2P:
    case C::C2ex: case C::C2sex: case C::C2Pex: return {C::C1};
    case C::C3: return {C::C1, C::C2, C::C2s, C::C2P};
    case C::C4: return {C::C1, C::C2};
    case C::C4s: return {C::C1, C::C2s};
    case C::C4P: return {C::C1, C::C2P};
    case C::C5: return {C::C1, C::C2, C::C2sex, C::C2Pex};
    case C::C5s: return {C::C1, C::C2s, C::C2ex, C::C2Pex};
    case C::C5P: return {C::C1, C::C2P, C::C2ex, C::C2sex};
  }
  return {};
}

bool covers(EtClass t, EtClass u) {
  if (t == u) return true;
  for (EtClass c : covered(t))
    if (c == u) return true;
  return false;
}

std::string to_string(Op op) { return op == Op::Dual ? "D" : "P"; }

std::optional<Op> parse_op(std::string_view s) {
  if (s == "D" || s == "dual") return Op::Dual;
  if (s == "P" || s == "petrie") return Op::Petrie;
  return std::nullopt;
}

EtClass apply_ops(EtClass t, const std::vector<Op>& ops) {
  for (Op op : ops) t = op == Op::Dual ? omega_dual(t) : omega_petrie(t);
  return t;
}

FlagMap apply_ops(const FlagMap& m, const std::vector<Op>& ops) {
  FlagMap out = m;
  for (Op op : ops) out = op == Op::Dual ? dual(out) : petrie(out);
  return out;
}

EtClass representative(EtClass t) {
  switch (t) {
    case C::C2: case C::C2s: case C::C2P: return C::C2;
    case C::C2ex: case C::C2sex: case C::C2Pex: return t == C::C2Pex ? C::C2Pex : C::C2ex;
    case C::C4: case C::C4s: case C::C4P: return C::C4;
    case C::C5: case C::C5s: case C::C5P: return C::C5;
    default: return t;
  }
}

std::vector<Op> ops_from_representative(EtClass t) {
  switch (t) {
    case C::C2s: case C::C4s: case C::C5s: case C::C2sex: return {Op::Dual};
    case C::C2P: case C::C4P: case C::C5P: return {Op::Dual, Op::Petrie};
    default: return {};
  }
}

FlagMap basic_map(EtClass t) {
  const std::vector<uint32_t> id1{0}, id2{0, 1}, sw{1, 0};
  const std::vector<uint32_t> id4{0, 1, 2, 3};
  const std::vector<uint32_t> a{1, 0, 3, 2};  // (12)(34)
  const std::vector<uint32_t> b{3, 2, 1, 0};  // (14)(23)
  switch (t) {
    case C::C1: return perm_map(id1, id1, id1);
    // r_i swaps the two cosets exactly when R_i lies outside the subgroup.
    case C::C2: return perm_map(sw, id2, id2);
    case C::C2s: return perm_map(id2, id2, sw);
    case C::C2P: return perm_map(sw, id2, sw);
    case C::C2ex: return perm_map(sw, sw, id2);
    case C::C2sex: return perm_map(id2, sw, sw);
    case C::C2Pex: return perm_map(sw, sw, sw);
    case C::C3: return perm_map(a, id4, b);
    case C::C4: return perm_map(a, {3, 1, 2, 0}, b);
    case C::C4s: return perm_map(a, {1, 0, 2, 3}, b);
    case C::C4P: return perm_map(a, {2, 1, 0, 3}, b);
    case C::C5: return perm_map(a, {3, 2, 1, 0}, b);
    case C::C5s: return perm_map(a, {1, 0, 3, 2}, b);
    case C::C5P: return perm_map(a, {2, 3, 0, 1}, b);
  }
  throw std::invalid_argument("unknown class");
}

std::optional<EtClass> classify(const FlagMap& m) {
  FlagMap q = quotient_by_aut(m);
  if (q.size() > 4) return std::nullopt;
  // One edge: <r0, r2> transitive on the quotient flags.
  std::vector<char> seen(q.size(), 0);
  std::vector<uint32_t> queue{0};
  seen[0] = 1;
  for (size_t k = 0; k < queue.size(); ++k)
    for (int i : {0, 2}) {
      uint32_t v = q.r(i, queue[k]);
      if (!seen[v]) {
        seen[v] = 1;
        queue.push_back(v);
      }
    }
  if (queue.size() != q.size()) return std::nullopt;
  for (EtClass t : kAllClasses) {
    FlagMap b = basic_map(t);
    if (b.size() == q.size() && is_isomorphic(q, b)) return t;
  }
  throw std::logic_error("edge-transitive quotient matches no basic map");
}

}  // namespace etm
