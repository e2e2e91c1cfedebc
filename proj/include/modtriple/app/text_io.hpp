#pragma once

#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "modtriple/functors.hpp"

namespace modtriple::io {

using json = nlohmann::ordered_json;

// Reads a file path, "-" for stdin, or inline JSON text. Syntax errors carry line and column.
json load_json(const std::string& source);

json space_to_json(const CurveSpace& s);
CurveSpace space_from_json(const json& j);

json triple_to_json(const ModulusTriple& t);
ModulusTriple triple_from_json(const json& j);

json map_to_json(const RationalMap& f);
RationalMap map_from_json(const json& j);

json component_to_json(const Component& c);
Component component_from_json(const json& j);

json cycle_to_json(const Cycle& c);
// source/target given here replace (or supply) the ones stored in j
Cycle cycle_from_json(const json& j, const std::optional<ModulusTriple>& source = {},
                      const std::optional<ModulusTriple>& target = {});

json iy_to_json(const IYObject& o);
IYObject iy_from_json(const json& j);
json mlog_to_json(const MlogObject& o);
MlogObject mlog_from_json(const json& j);
json ne_to_json(const NePair& x);
NePair ne_from_json(const json& j);
json pair_to_json(const ModulusPair& m);
ModulusPair pair_from_json(const json& j);

Divisor divisor_from_json(const json& j);

// Any object of the file formats, recognized by its keys (a bare string is a divisor).
using Object = std::variant<Divisor, RationalMap, ModulusTriple, Cycle, IYObject, MlogObject, NePair, ModulusPair>;
Object object_from_json(const json& j);
json object_to_json(const Object& o);
std::string object_kind(const Object& o);

}  // namespace modtriple::io
