#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "etm/flag_map.hpp"

namespace etm {

// The 14 classes of edge-transitive maps. Serialized labels use "s" for *.
enum class EtClass : uint8_t { C1, C2, C2s, C2P, C2ex, C2sex, C2Pex, C3, C4, C4s, C4P, C5, C5s, C5P };

inline constexpr std::array<EtClass, 14> kAllClasses = {
    EtClass::C1,  EtClass::C2, EtClass::C2s, EtClass::C2P, EtClass::C2ex, EtClass::C2sex, EtClass::C2Pex,
    EtClass::C3,  EtClass::C4, EtClass::C4s, EtClass::C4P, EtClass::C5,   EtClass::C5s,   EtClass::C5P};

std::string to_string(EtClass t);
// Accepts the serialized labels and "*" in place of "s".
std::optional<EtClass> parse_class(std::string_view s);

int class_index(EtClass t);  // n_T: 1, 2 or 4
EtClass omega_dual(EtClass t);
EtClass omega_petrie(EtClass t);
std::vector<EtClass> covered(EtClass t);  // classes properly covered by t
bool covers(EtClass t, EtClass u);        // u == t or u in covered(t)

enum class Op : uint8_t { Dual, Petrie };
std::string to_string(Op op);
std::optional<Op> parse_op(std::string_view s);  // "D"/"dual", "P"/"petrie"
EtClass apply_ops(EtClass t, const std::vector<Op>& ops);
FlagMap apply_ops(const FlagMap& m, const std::vector<Op>& ops);

// The class among {1, 2, 2ex, 2Pex, 3, 4, 5} in t's orbit under <D, P>, and
// ops with apply_ops(representative(t), ops) == t.
EtClass representative(EtClass t);
std::vector<Op> ops_from_representative(EtClass t);

FlagMap basic_map(EtClass t);

// nullopt when the map is not edge-transitive.
std::optional<EtClass> classify(const FlagMap& m);

}  // namespace etm
