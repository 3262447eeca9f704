#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "etm/suites.hpp"

using namespace etm;

namespace {

struct Global {
  std::string format = "json";
  unsigned threads = 1;
  uint64_t cap = 10'000'000;
};

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

EtClass class_arg(const std::string& s) {
  auto c = parse_class(s);
  if (!c) throw InputError("unknown class \"" + s + "\"");
  return *c;
}

std::string type_string(const MapSummary& s) {
  return "{" + std::to_string(s.order_r0r1) + "," + std::to_string(s.order_r1r2) + "}";
}

std::string summary_markdown(const MapSummary& s) {
  std::ostringstream out;
  out << "| flags | V | E | F | chi | genus | orientable | boundary | type |\n|---|---|---|---|---|---|---|---|---|\n";
  out << "| " << s.flags << " | " << s.vertices << " | " << s.edges << " | " << s.faces << " | " << s.euler << " | "
      << (s.genus ? std::to_string(*s.genus) : "-") << " | " << (s.orientable_no_boundary ? "yes" : "no") << " | "
      << (s.has_boundary ? "yes" : "no") << " | " << type_string(s) << " |\n";
  return out.str();
}

json search_to_json(const SearchResult& r, const GroupTable& g) {
  json j;
  j["class"] = to_string(r.cls);
  j["proved_empty"] = r.proved_empty;
  j["limit_hit"] = r.limit_hit;
  j["counts"] = {{"tuples", r.counts.tuples}, {"generating", r.counts.generating}, {"forbidden_free", r.counts.forbidden_free}};
  json ws = json::array();
  for (const auto& w : r.witnesses) {
    json im = json::object();
    const auto& names = generator_names(r.cls);
    for (size_t i = 0; i < w.size(); ++i) im[names[i]] = g.is_perm_group() ? g.perm(w[i]).to_cycles() : g.label(w[i]);
    ws.push_back(im);
  }
  j["witnesses"] = ws;
  return j;
}

// "2..8" or "2,3,5".
std::vector<unsigned> parse_params(const std::string& s) {
  std::vector<unsigned> out;
  try {
    if (auto dots = s.find(".."); dots != std::string::npos) {
      unsigned a = unsigned(std::stoul(s.substr(0, dots))), b = unsigned(std::stoul(s.substr(dots + 2)));
      for (unsigned n = a; n <= b; ++n) out.push_back(n);
      return out;
    }
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(unsigned(std::stoul(tok)));
  } catch (const std::exception&) {
    throw InputError("bad parameter list \"" + s + "\"");
  }
  return out;
}

GroupKind kind_arg(const std::string& s) {
  if (s == "sym") return GroupKind::Sym;
  if (s == "alt") return GroupKind::Alt;
  if (s == "psl2" || s == "l2") return GroupKind::L2;
  throw InputError("unknown group kind \"" + s + "\"");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge-transitive maps: build, classify, realize and verify"};
  app.require_subcommand(1);
  Global g;
  app.fallthrough();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "md"}));
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--cap", g.cap, "Largest group or map to build");

  std::function<int()> action;

  auto* basic = app.add_subcommand("basic", "Emit the basic map N(T) of a class");
  std::string basic_class;
  basic->add_option("class", basic_class)->required();
  basic->callback([&] { action = [&] { emit(map_to_json(basic_map(class_arg(basic_class)))); return 0; }; });

  auto* build = app.add_subcommand("build", "Build the map of an epimorphism spec");
  std::string build_in, build_as;
  build->add_option("spec,--spec", build_in, "Spec JSON file, or - for stdin")->required();
  build->add_option("--as", build_as, "Target class in the same orbit under dual/Petrie");
  build->callback([&] {
    action = [&] {
      EpimorphismSpec s = spec_from_json(read_json_file(build_in), g.cap);
      uint64_t flags = s.group->size() * uint64_t(class_index(s.cls));
      if (flags > g.cap) throw CapExceeded("map would have " + std::to_string(flags) + " flags");
      if (build_as.empty()) {
        emit(map_to_json(build_map(s)));
      } else {
        emit(map_to_json(realize_map(realization_for(class_arg(build_as), s, "cli"))));
      }
      return 0;
    };
  });

  auto* classify_cmd = app.add_subcommand("classify", "Print the class of an edge-transitive map");
  std::string classify_in;
  classify_cmd->add_option("map", classify_in)->required();
  classify_cmd->callback([&] {
    action = [&] {
      auto c = classify(map_from_json(read_json_file(classify_in)));
      if (g.format == "md") std::cout << (c ? to_string(*c) : "not edge-transitive") << "\n";
      else emit(c ? json(to_string(*c)) : json(nullptr));
      return 0;
    };
  });

  auto* info = app.add_subcommand("info", "Summarize a map");
  std::string info_in;
  info->add_option("map", info_in)->required();
  info->callback([&] {
    action = [&] {
      FlagMap m = map_from_json(read_json_file(info_in));
      MapSummary s = summary(m);
      if (g.format == "md") {
        std::cout << summary_markdown(s);
        return 0;
      }
      json j = summary_to_json(s);
      auto a = automorphism_group(m);
      j["aut_order"] = a.order;
      j["flag_orbits"] = a.orbit_count;
      auto c = classify(m);
      j["class"] = c ? json(to_string(*c)) : json(nullptr);
      emit(j);
      return 0;
    };
  });

  auto* op = app.add_subcommand("op", "Dual, Petrie dual or join of maps");
  std::string op_name;
  std::vector<std::string> op_in;
  op->add_option("operation", op_name)->required()->check(CLI::IsMember({"dual", "petrie", "join"}));
  op->add_option("maps", op_in)->required();
  op->callback([&] {
    action = [&] {
      size_t want = op_name == "join" ? 2 : 1;
      if (op_in.size() != want) throw InputError(op_name + " takes " + std::to_string(want) + " map(s)");
      FlagMap a = map_from_json(read_json_file(op_in[0]));
      if (op_name == "dual") emit(map_to_json(dual(a)));
      else if (op_name == "petrie") emit(map_to_json(petrie(a)));
      else emit(map_to_json(join(a, map_from_json(read_json_file(op_in[1])))));
      return 0;
    };
  });

  auto* realize = app.add_subcommand("realize", "Construct a map from a named family");
  std::string family, rclass = "1";
  unsigned rn = 0, rq = 0, re = 0, rm = 0;
  bool rmap = false, rinverse = false;
  realize->add_option("family,--family", family)
      ->required()
      ->check(CLI::IsMember({"sym", "sym-even", "alt", "alt-small", "psl2", "psl2-class2", "nilpotent-chiral", "dihedral",
                             "edmonds-k8"}));
  realize->add_option("--class", rclass, "Target class");
  realize->add_option("-n,--n", rn, "Degree for sym / alt families");
  realize->add_option("-q,--q", rq, "Field order for psl2");
  realize->add_option("-e,--e", re, "Exponent for nilpotent-chiral");
  realize->add_option("-m,--m", rm, "Rotation order for dihedral");
  realize->add_flag("--map", rmap, "Emit the built map instead of the realization");
  realize->add_flag("--inverse", rinverse, "edmonds-k8: the omega^-1 member of the pair");
  realize->callback([&] {
    action = [&]() -> int {
      EtClass t = class_arg(rclass);
      auto need = [](unsigned v, const char* name) {
        if (v == 0) throw InputError(std::string("missing -") + name);
        return v;
      };
      std::optional<Realization> r;
      auto wrap = [&](EpimorphismSpec s, const std::string& src) { r = realization_for(t, std::move(s), src); };
      try {
        if (family == "sym" || family == "alt" || family == "psl2") {
          GroupKind kind = family == "sym" ? GroupKind::Sym : family == "alt" ? GroupKind::Alt : GroupKind::L2;
          unsigned p = kind == GroupKind::L2 ? need(rq, "q") : need(rn, "n");
          Verdict v = table1_verdict(kind, p, t, g.threads);
          if (!v.realization || !rmap) {
            emit(verdict_to_json(v));
            return 0;
          }
          r = v.realization;
        } else if (family == "sym-even") {
          auto v = sym_even(t, need(rn, "n"));
          if (auto* u = std::get_if<Unrealizable>(&v)) {
            emit({{"realizable", false}, {"provenance", to_string(u->provenance)}, {"note", u->reason}});
            return 0;
          }
          r = std::get<Realization>(v);
        } else if (family == "alt-small") {
          wrap(alt_small(representative(t), need(rn, "n")), "alt-small");
        } else if (family == "psl2-class2") {
          wrap(psl2_class2_q7(), "psl2-class2");
        } else if (family == "nilpotent-chiral") {
          wrap(nilpotent_chiral(need(re, "e")), "nilpotent-chiral");
        } else if (family == "dihedral") {
          wrap(dihedral_spec(need(rm, "m")), "dihedral");
        } else {
          auto [a, b] = edmonds_k8();
          wrap(rinverse ? b : a, "edmonds-k8");
        }
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
      uint64_t flags = r->spec.group->size() * uint64_t(class_index(r->spec.cls));
      if (rmap && flags > g.cap) throw CapExceeded("map would have " + std::to_string(flags) + " flags");
      if (rmap) emit(map_to_json(realize_map(*r)));
      else emit(realization_to_json(*r));
      return 0;
    };
  });

  auto* search = app.add_subcommand("search", "Search epimorphisms onto a group");
  std::string search_in, sclass;
  uint64_t slimit = 0;
  std::vector<int> sparity;
  search->add_option("group,--group", search_in, "Group JSON file, or - for stdin")->required();
  search->add_option("--class", sclass, "Representative class")->required();
  search->add_option("--limit", slimit, "Stop after this many witnesses");
  search->add_option("--parity", sparity, "Required sign of each image (+1 / -1)")->delimiter(',');
  bool sexhaustive = false;
  search->add_flag("--exhaustive", sexhaustive, "Accepted for clarity; searches are exhaustive unless --limit is set");
  search->callback([&] {
    action = [&] {
      EtClass t = class_arg(sclass);
      if (!is_build_representative(t))
        throw InputError("search takes one of 1, 2, 2ex, 2Pex, 3, 4, 5; " + sclass + " is in the orbit of " +
                         to_string(representative(t)));
      GroupPtr grp = group_from_json(read_json_file(search_in), g.cap);
      SearchOptions o;
      o.threads = g.threads;
      o.limit = slimit;
      o.exhaustive = slimit == 0;
      o.parity = sparity;
      emit(search_to_json(search_epimorphisms(t, grp, o), *grp));
      return 0;
    };
  });

  auto* verify = app.add_subcommand("verify", "Run a named verification suite");
  std::vector<std::string> suites;
  bool with_runtime = false;
  verify->add_option("suite", suites, "Suite names, or all")->required();
  verify->add_flag("--runtime", with_runtime, "Include wall-clock runtime");
  verify->callback([&] {
    action = [&] {
      if (suites.size() == 1 && suites[0] == "all") suites = suite_names();
      SuiteOptions o{g.threads, g.cap};
      bool ok = true;
      json all = json::array();
      for (const auto& name : suites) {
        SuiteReport r;
        try {
          r = run_suite(name, o);
        } catch (const std::invalid_argument& e) {
          throw InputError(e.what());
        }
        ok = ok && r.ok();
        if (g.format == "md") std::cout << report_to_markdown(r, with_runtime) << "\n";
        else all.push_back(report_to_json(r, with_runtime));
      }
      if (g.format == "json") emit(all.size() == 1 ? all[0] : all);
      return ok ? 0 : 1;
    };
  });

  auto* table = app.add_subcommand("table", "Render realizability grids as markdown");
  std::string tkind = "sym", tparams = "2..8";
  bool teven = false;
  table->add_option("kind", tkind)->check(CLI::IsMember({"sym", "alt", "psl2", "l2"}));
  table->add_option("--params", tparams, "Degrees or field orders, as a..b or a,b,c");
  table->add_flag("--even", teven, "Orientable boundary-free realizations");
  table->callback([&] {
    action = [&] {
      GroupKind k = kind_arg(tkind);
      if (teven && k == GroupKind::L2) throw InputError("--even covers sym and alt only");
      std::string md = table_markdown(k, parse_params(tparams), teven, g.threads);
      std::cout << md;
      return md.find('!') == std::string::npos ? 0 : 1;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    return action();
  } catch (const InputError& e) {
    std::cerr << "etm: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "etm: malformed input: " << e.what() << "\n";
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "etm: " << e.what() << " (raise --cap)\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "etm: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "etm: " << e.what() << "\n";
    return 1;
  }
}
