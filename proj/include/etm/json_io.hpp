#pragma once

#include <string>

#include <json.hpp>

#include "etm/realize.hpp"

namespace etm {

using json = nlohmann::ordered_json;

// All parsers throw InputError on malformed input.
json perm_to_json(const Permutation& p);
Permutation perm_from_json(const json& j);

json map_to_json(const FlagMap& m);
FlagMap map_from_json(const json& j);

json summary_to_json(const MapSummary& s);

// {"generators": ["(1,2,3)", ...], "degree": n} or {"family": "gpef", "p", "e", "f"}.
// Also accepted: {"family": "sym" | "alt", "n"}, {"family": "psl2", "q"},
// {"family": "extend_by_alpha", "e"}.
json group_to_json(const GroupTable& g);
GroupPtr group_from_json(const json& j, uint64_t cap = 10'000'000);

// {"class": "2Pex", "group": {...}, "images": {"X": "(1,2,3)", ...}}.
// Non-permutation groups write images as words in the group's generator names.
json spec_to_json(const EpimorphismSpec& s);
EpimorphismSpec spec_from_json(const json& j, uint64_t cap = 10'000'000);

json realization_to_json(const Realization& r);
json verdict_to_json(const Verdict& v);

// {"name", "order", "classes": [{"size", "label", "rep"?}], "chars": [[entry...]]}
// with entries given as numbers, "a/b" strings or [re, im] pairs of those.
CharacterTable chartable_from_json(const json& j);
CharacterTable load_chartable(const std::string& name);  // from the data directory

json read_json_file(const std::string& path);  // "-" reads stdin
std::string data_dir();

}  // namespace etm
