#include "etm/json_io.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace etm {

namespace {

template <class T>
T get_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw InputError(std::string("field \"") + key + "\" has the wrong type");
  }
}

std::vector<uint32_t> index_array(const json& j, const char* key, size_t n) {
  auto v = get_field<std::vector<long long>>(j, key);
  if (v.size() != n) throw InputError(std::string("\"") + key + "\" must have " + std::to_string(n) + " entries");
  std::vector<uint32_t> out;
  for (long long x : v) {
    if (x < 0 || size_t(x) >= n) throw InputError(std::string("\"") + key + "\" entry out of range");
    out.push_back(uint32_t(x));
  }
  return out;
}

// Product of tokens "name" or "name^k", separated by spaces or '*'.
GroupTable::Id eval_word(const GroupTable& g, const std::string& word) {
  std::string w = word;
  for (char& c : w)
    if (c == '*') c = ' ';
  std::istringstream in(w);
  GroupTable::Id acc = g.identity();
  std::string tok;
  while (in >> tok) {
    if (tok == "1" || tok == "e") continue;
    std::string name = tok;
    long long k = 1;
    if (auto pos = tok.find('^'); pos != std::string::npos) {
      name = tok.substr(0, pos);
      try {
        size_t used = 0;
        k = std::stoll(tok.substr(pos + 1), &used);
        if (used != tok.size() - pos - 1) throw InputError("");
      } catch (const std::exception&) {
        throw InputError("bad exponent in \"" + tok + "\"");
      }
    }
    auto it = std::find(g.generator_names.begin(), g.generator_names.end(), name);
    if (it == g.generator_names.end()) throw InputError("unknown generator \"" + name + "\"");
    acc = g.mul(acc, g.pow(g.generators()[size_t(it - g.generator_names.begin())], k));
  }
  return acc;
}

double parse_rational(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (!v.is_string()) throw InputError("character entries must be numbers or \"a/b\" strings");
  std::string s = v.get<std::string>();
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return std::stod(s);
    double den = std::stod(s.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in \"" + s + "\"");
    return std::stod(s.substr(0, slash)) / den;
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError("bad number \"" + s + "\"");
  }
}

std::complex<double> parse_entry(const json& v) {
  if (v.is_array()) {
    if (v.size() != 2) throw InputError("complex entries are [re, im]");
    return {parse_rational(v[0]), parse_rational(v[1])};
  }
  return {parse_rational(v), 0.0};
}

}  // namespace

json perm_to_json(const Permutation& p) {
  json j;
  j["degree"] = p.degree();
  j["images"] = p.images();
  return j;
}

Permutation perm_from_json(const json& j) {
  if (j.is_string()) return Permutation::parse(j.get<std::string>());
  size_t n = get_field<size_t>(j, "degree");
  return Permutation(index_array(j, "images", n));
}

json map_to_json(const FlagMap& m) {
  json j;
  j["flags"] = m.size();
  j["r0"] = m.r(0);
  j["r1"] = m.r(1);
  j["r2"] = m.r(2);
  return j;
}

FlagMap map_from_json(const json& j) {
  size_t n = get_field<size_t>(j, "flags");
  return FlagMap(index_array(j, "r0", n), index_array(j, "r1", n), index_array(j, "r2", n));
}

json summary_to_json(const MapSummary& s) {
  json j;
  j["flags"] = s.flags;
  j["V"] = s.vertices;
  j["E"] = s.edges;
  j["F"] = s.faces;
  j["chi"] = s.euler;
  j["has_boundary"] = s.has_boundary;
  j["orientable_no_boundary"] = s.orientable_no_boundary;
  if (s.genus) j["genus"] = *s.genus;
  else j["genus"] = nullptr;
  j["type"] = {s.order_r0r1, s.order_r1r2};
  return j;
}

json group_to_json(const GroupTable& g) {
  json j;
  if (!g.family.empty()) {
    j["family"] = g.family;
    for (auto& [k, v] : g.family_params) j[k] = v;
    return j;
  }
  if (!g.is_perm_group()) throw std::invalid_argument("group has no serializable description");
  j["degree"] = g.degree();
  json gens = json::array();
  for (auto s : g.generators()) gens.push_back(g.perm(s).to_cycles());
  j["generators"] = gens;
  return j;
}

GroupPtr group_from_json(const json& j, uint64_t cap) {
  if (!j.is_object()) throw InputError("group must be an object");
  if (j.contains("family")) {
    auto fam = get_field<std::string>(j, "family");
    try {
      if (fam == "gpef")
        return std::make_shared<const GroupTable>(
            nilpotent_gpef(get_field<unsigned>(j, "p"), get_field<unsigned>(j, "e"), get_field<unsigned>(j, "f")));
      if (fam == "extend_by_alpha") return std::make_shared<const GroupTable>(extend_by_alpha(get_field<unsigned>(j, "e")));
      if (fam == "sym") return symmetric_group(get_field<unsigned>(j, "n"));
      if (fam == "alt") return alternating_group(get_field<unsigned>(j, "n"));
      if (fam == "psl2") return psl2_group(get_field<unsigned>(j, "q"));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    throw InputError("unknown group family \"" + fam + "\"");
  }
  auto gens = get_field<std::vector<std::string>>(j, "generators");
  size_t n = j.contains("degree") ? get_field<size_t>(j, "degree") : 0;
  std::vector<Permutation> perms;
  for (auto& s : gens) perms.push_back(Permutation::parse(s, n));
  if (n == 0)
    for (auto& p : perms) n = std::max(n, p.degree());
  for (auto& p : perms)
    if (p.degree() != n) p = Permutation::parse(p.to_cycles(), n);
  if (perms.empty()) perms.push_back(Permutation::identity(std::max<size_t>(n, 1)));
  return std::make_shared<const GroupTable>(GroupTable::from_permutations({std::max<size_t>(n, 1), perms}, cap));
}

json spec_to_json(const EpimorphismSpec& s) {
  json j;
  j["class"] = to_string(s.cls);
  j["group"] = group_to_json(*s.group);
  json im = json::object();
  const auto& names = generator_names(s.cls);
  for (size_t i = 0; i < s.images.size(); ++i)
    im[names[i]] = s.group->is_perm_group() ? s.group->perm(s.images[i]).to_cycles() : s.group->label(s.images[i]);
  j["images"] = im;
  return j;
}

EpimorphismSpec spec_from_json(const json& j, uint64_t cap) {
  auto label = get_field<std::string>(j, "class");
  auto cls = parse_class(label);
  if (!cls) throw InputError("unknown class \"" + label + "\"");
  if (!is_build_representative(*cls))
    throw InputError("class " + label + " is built from " + to_string(representative(*cls)) + " via dual/Petrie");
  if (!j.contains("group")) throw InputError("missing field \"group\"");
  EpimorphismSpec s{*cls, group_from_json(j.at("group"), cap), {}};
  const json& im = j.contains("images") ? j.at("images") : throw InputError("missing field \"images\"");
  for (const auto& name : generator_names(*cls)) {
    if (!im.contains(name)) throw InputError("missing image for " + name);
    auto text = im.at(name).get<std::string>();
    if (s.group->is_perm_group()) {
      auto id = s.group->find(Permutation::parse(text, s.group->degree()));
      if (!id) throw InputError("image of " + name + " is not in the group");
      s.images.push_back(*id);
    } else {
      s.images.push_back(eval_word(*s.group, text));
    }
  }
  if (im.size() != s.images.size()) throw InputError("unexpected generator names in \"images\"");
  return s;
}

json realization_to_json(const Realization& r) {
  json j;
  j["class"] = to_string(r.cls);
  j["spec"] = spec_to_json(r.spec);
  json ops = json::array();
  for (Op op : r.ops) ops.push_back(to_string(op));
  j["ops"] = ops;
  j["source"] = r.source;
  return j;
}

json verdict_to_json(const Verdict& v) {
  json j;
  j["realizable"] = v.realizable;
  j["provenance"] = to_string(v.provenance);
  if (v.realization) j["realization"] = realization_to_json(*v.realization);
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

CharacterTable chartable_from_json(const json& j) {
  CharacterTable t;
  t.name = j.value("name", std::string());
  t.order = get_field<uint64_t>(j, "order");
  if (!j.contains("classes") || !j.at("classes").is_array()) throw InputError("missing \"classes\" array");
  for (const auto& c : j.at("classes")) {
    t.class_sizes.push_back(get_field<uint64_t>(c, "size"));
    t.class_labels.push_back(c.value("label", std::string()));
    t.class_reps.push_back(c.value("rep", std::string()));
  }
  if (j.contains("generators")) t.generators = get_field<std::vector<std::string>>(j, "generators");
  if (!j.contains("chars") || !j.at("chars").is_array()) throw InputError("missing \"chars\" array");
  for (const auto& row : j.at("chars")) {
    if (!row.is_array() || row.size() != t.class_sizes.size()) throw InputError("character row has the wrong length");
    std::vector<std::complex<double>> r;
    for (const auto& v : row) r.push_back(parse_entry(v));
    t.chars.push_back(std::move(r));
  }
  return t;
}

std::string data_dir() {
  if (const char* env = std::getenv("ETM_DATA_DIR")) return env;
  return ETM_DATA_DIR;
}

CharacterTable load_chartable(const std::string& name) {
  return chartable_from_json(read_json_file(data_dir() + "/chartables/" + name + ".json"));
}

json read_json_file(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace etm
