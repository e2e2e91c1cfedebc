#include "modtriple/app/text_io.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "modtriple/error.hpp"

namespace modtriple::io {
namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field \"") + key + "\"");
  return *it;
}

std::string text_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) fail(std::string("field \"") + key + "\" must be a string");
  return v.get<std::string>();
}

Divisor effective_field(const json& j, const char* key) {
  Divisor d = divisor_from_json(field(j, key));
  if (!d.is_effective()) throw Error(ErrorKind::NotEffective, std::string(key) + " = " + d.to_string() + " is not effective");
  return d;
}

std::string slurp(std::istream& in) { return std::string(std::istreambuf_iterator<char>(in), {}); }

}  // namespace

json load_json(const std::string& source) {
  std::string text;
  if (source == "-") {
    text = slurp(std::cin);
  } else if (std::error_code ec; std::filesystem::is_regular_file(source, ec)) {
    std::ifstream in(source);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + source);
    text = slurp(in);
  } else {
    text = source;
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    size_t line = 1, col = 1;
    for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail("line " + std::to_string(line) + ", column " + std::to_string(col) + ": invalid JSON");
  }
}

Divisor divisor_from_json(const json& j) {
  if (!j.is_string()) fail("a divisor must be written as a string");
  return parse_divisor(j.get<std::string>());
}

json space_to_json(const CurveSpace& s) {
  if (s.is_proper()) return json{{"kind", "proper"}};
  json b = json::array();
  for (const auto& p : s.boundary) b.push_back(p.to_string());
  return json{{"kind", "open"}, {"boundary", b}};
}

CurveSpace space_from_json(const json& j) {
  std::string kind = text_field(j, "kind");
  if (kind == "proper") return CurveSpace::proper();
  if (kind != "open") fail("total kind must be \"proper\" or \"open\", got \"" + kind + "\"");
  const json& b = field(j, "boundary");
  if (!b.is_array()) fail("boundary must be an array of points");
  PointSet pts;
  for (const auto& p : b) {
    if (!p.is_string()) fail("boundary entries must be point strings");
    if (!pts.insert(parse_point(p.get<std::string>())).second)
      throw Error(ErrorKind::SemanticError, "boundary point repeated: " + p.get<std::string>());
  }
  return CurveSpace::open(std::move(pts));
}

json triple_to_json(const ModulusTriple& t) {
  return json{{"total", space_to_json(t.total)}, {"plus", t.plus.to_string()}, {"minus", t.minus.to_string()}};
}

ModulusTriple triple_from_json(const json& j) {
  return ModulusTriple::make(space_from_json(field(j, "total")), effective_field(j, "plus"), effective_field(j, "minus"));
}

json map_to_json(const RationalMap& f) {
  if (f.is_constant()) return json{{"const", f.constant_value().to_string()}};
  return json{{"num", f.num().to_string()}, {"den", f.den().to_string()}};
}

RationalMap map_from_json(const json& j) {
  if (j.is_object() && j.contains("const")) {
    ClosedPoint c = parse_point(text_field(j, "const"));
    if (c.degree() != 1) throw Error(ErrorKind::SemanticError, "a constant map needs a rational point");
    return RationalMap::constant(c);
  }
  Poly num = parse_poly(text_field(j, "num"));
  Poly den = j.contains("den") ? parse_poly(text_field(j, "den")) : Poly(1L);
  if (num.is_zero() && den.is_zero()) throw Error(ErrorKind::SemanticError, "map 0/0");
  return RationalMap::fraction(num, den);
}

json component_to_json(const Component& c) {
  return json{{"a", map_to_json(c.a)}, {"b", map_to_json(c.b)}, {"mult", c.mult}};
}

Component component_from_json(const json& j) {
  Mult m = 1;
  if (j.is_object() && j.contains("mult")) {
    if (!j["mult"].is_number_integer()) fail("mult must be an integer");
    m = j["mult"].get<Mult>();
  }
  if (m < 1) throw Error(ErrorKind::SemanticError, "component multiplicity must be at least 1");
  return Component::make(map_from_json(field(j, "a")), map_from_json(field(j, "b")), m);
}

json cycle_to_json(const Cycle& c) {
  json comps = json::array();
  for (const auto& x : c.components) comps.push_back(component_to_json(x));
  return json{{"source", triple_to_json(c.source)}, {"target", triple_to_json(c.target)}, {"components", comps}};
}

Cycle cycle_from_json(const json& j, const std::optional<ModulusTriple>& source, const std::optional<ModulusTriple>& target) {
  ModulusTriple s = source ? *source : triple_from_json(field(j, "source"));
  ModulusTriple t = target ? *target : triple_from_json(field(j, "target"));
  const json& comps = field(j, "components");
  if (!comps.is_array()) fail("components must be an array");
  std::vector<Component> out;
  for (const auto& c : comps) out.push_back(component_from_json(c));
  return Cycle::make(std::move(s), std::move(t), std::move(out));
}

json iy_to_json(const IYObject& o) { return json{{"Y", o.Y.to_string()}, {"Z", o.Z.to_string()}}; }
IYObject iy_from_json(const json& j) { return IYObject::make(divisor_from_json(field(j, "Y")), divisor_from_json(field(j, "Z"))); }

json mlog_to_json(const MlogObject& o) {
  return json{{"boundary", o.boundary.to_string()}, {"modulus", o.modulus.to_string()}};
}
MlogObject mlog_from_json(const json& j) {
  return MlogObject::make(divisor_from_json(field(j, "boundary")), divisor_from_json(field(j, "modulus")));
}

json ne_to_json(const NePair& x) { return json{{"infinity", x.infinity.to_string()}}; }
NePair ne_from_json(const json& j) { return NePair{divisor_from_json(field(j, "infinity"))}; }

json pair_to_json(const ModulusPair& m) {
  return json{{"total", space_to_json(m.total)}, {"infinity", m.infinity.to_string()}};
}
ModulusPair pair_from_json(const json& j) {
  return ModulusPair::make(space_from_json(field(j, "total")), divisor_from_json(field(j, "infinity")));
}

Object object_from_json(const json& j) {
  if (j.is_string()) return divisor_from_json(j);
  if (!j.is_object()) fail("expected an object or a divisor string");
  if (j.contains("components")) return cycle_from_json(j);
  if (j.contains("total") && j.contains("plus")) return triple_from_json(j);
  if (j.contains("total") && j.contains("infinity")) return pair_from_json(j);
  if (j.contains("infinity")) return ne_from_json(j);
  if (j.contains("num") || j.contains("const")) return map_from_json(j);
  if (j.contains("Y") || j.contains("Z")) return iy_from_json(j);
  if (j.contains("boundary") && j.contains("modulus")) return mlog_from_json(j);
  fail("unrecognized object: keys match no known format");
}

json object_to_json(const Object& o) {
  struct V {
    json operator()(const Divisor& d) const { return d.to_string(); }
    json operator()(const RationalMap& f) const { return map_to_json(f); }
    json operator()(const ModulusTriple& t) const { return triple_to_json(t); }
    json operator()(const Cycle& c) const { return cycle_to_json(c); }
    json operator()(const IYObject& x) const { return iy_to_json(x); }
    json operator()(const MlogObject& x) const { return mlog_to_json(x); }
    json operator()(const NePair& x) const { return ne_to_json(x); }
    json operator()(const ModulusPair& x) const { return pair_to_json(x); }
  };
  return std::visit(V{}, o);
}

std::string object_kind(const Object& o) {
  static const char* names[] = {"divisor", "map", "triple", "cycle", "iy", "mlog", "ne-pair", "modulus-pair"};
  return names[o.index()];
}

}  // namespace modtriple::io
