#include "massey/io.hpp"

#include <cctype>
#include <json.hpp>

#include "massey/error.hpp"

namespace massey {
namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    throw SyntaxError(offset, "invalid JSON");
  }
}

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorCode::SyntaxError, what);
}

const json& require_object(const json& j, const std::string& what) {
  if (!j.is_object()) schema_error(what + " must be a JSON object");
  return j;
}

std::int64_t require_integer(const json& j, const std::string& what) {
  if (!j.is_number_integer()) schema_error(what + " must be an integer");
  return j.get<std::int64_t>();
}

json u4_array(const U4Element& m) {
  return json::array({m.a1.value(), m.a2.value(), m.a3.value(), m.u.value(),
                      m.v.value(), m.w.value()});
}

}  // namespace

ContextDescriptor parse_context_descriptor(std::string_view text) {
  const json j = parse_json(text);
  require_object(j, "context descriptor");
  ContextDescriptor d;
  for (const auto& [key, value] : j.items()) {
    if (key == "l") {
      d.l = require_integer(value, "\"l\"");
    } else if (key == "g") {
      const std::int64_t g = require_integer(value, "\"g\"");
      if (g < 0 || g > 1'000'000) throw Error(ErrorCode::BadGenus, "genus out of range");
      d.g = static_cast<int>(g);
    } else if (key == "flavor") {
      if (!value.is_string()) schema_error("\"flavor\" must be a string");
      d.flavor = parse_flavor(value.get<std::string>());
    } else {
      schema_error("unknown key \"" + key + "\" in context descriptor");
    }
  }
  return d;
}

std::string to_json(const ContextDescriptor& d) {
  json j;
  j["l"] = d.l;
  j["g"] = d.g;
  j["flavor"] = std::string(to_string(d.flavor));
  return j.dump();
}

GeneratorSymbol parse_generator(std::string_view name) {
  if (name.size() < 2 || (name[0] != 'x' && name[0] != 'y'))
    throw SyntaxError(0, "expected a generator name like x1 or y2");
  std::int64_t index = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i])))
      throw SyntaxError(i, "expected a digit");
    index = index * 10 + (name[i] - '0');
    if (index > 1'000'000) throw SyntaxError(i, "generator index too large");
  }
  if (index < 1) throw SyntaxError(1, "generator index must be positive");
  return {name[0] == 'x' ? GeneratorSymbol::Kind::X : GeneratorSymbol::Kind::Y,
          static_cast<int>(index)};
}

CharacterTriple parse_characters(const NilGroupContext& ctx,
                                 std::string_view text) {
  const json j = parse_json(text);
  require_object(j, "character file");
  for (const auto& [key, value] : j.items())
    if (key != "chi1" && key != "chi2" && key != "chi3")
      schema_error("unknown key \"" + key + "\" in character file");

  auto one = [&](const char* key) {
    Character c = Character::zero(ctx);
    if (!j.contains(key)) return c;
    require_object(j.at(key), std::string("\"") + key + "\"");
    for (const auto& [name, value] : j.at(key).items()) {
      const GeneratorSymbol g = parse_generator(name);
      if (g.position() >= ctx.rank())
        throw Error(ErrorCode::UnknownGenerator,
                    name + " is not a generator of this group");
      c.values[g.position()] =
          ctx.field().reduce(require_integer(value, key + ("." + name)));
    }
    return c;
  };
  return {one("chi1"), one("chi2"), one("chi3")};
}

std::string to_json(const NilGroupContext& ctx, const CharacterTriple& chi) {
  json j = json::object();
  for (int i = 1; i <= 3; ++i) {
    json c = json::object();
    for (std::size_t k = 0; k < ctx.rank(); ++k)
      if (chi[i].values[k] != 0)
        c[GeneratorSymbol::from_position(k).name()] = chi[i].values[k];
    j["chi" + std::to_string(i)] = std::move(c);
  }
  return j.dump();
}

std::vector<std::pair<GeneratorSymbol, GroupWord>> parse_automorphism(
    std::string_view text) {
  const json j = parse_json(text);
  require_object(j, "automorphism file");
  std::vector<std::pair<GeneratorSymbol, GroupWord>> out;
  for (const auto& [name, value] : j.items()) {
    const GeneratorSymbol g = parse_generator(name);
    if (!value.is_string())
      schema_error("image of " + name + " must be a word string");
    try {
      out.emplace_back(g, parse_word(value.get<std::string>()));
    } catch (const SyntaxError& e) {
      throw SyntaxError(e.offset(), "image of " + name + ": " + e.reason());
    }
  }
  return out;
}

std::string witness_json(const NilGroupContext& ctx,
                         const U4Representation& rho,
                         const std::optional<U4Element>& phi_matrix) {
  json j = json::object();
  for (std::size_t k = 0; k < rho.images.size() && k < ctx.rank(); ++k)
    j[GeneratorSymbol::from_position(k).name()] = u4_array(rho.images[k]);
  if (phi_matrix) j["phi_matrix"] = u4_array(*phi_matrix);
  return j.dump();
}

}  // namespace massey
