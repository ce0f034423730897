#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "massey/massey.hpp"
#include "massey/nilgroup.hpp"
#include "massey/word.hpp"

namespace massey {

/// {"l": 5, "g": 2, "flavor": "surface"}
struct ContextDescriptor {
  std::int64_t l = 5;
  int g = 2;
  Flavor flavor = Flavor::Surface;
};

/// Parse failures throw SyntaxError with the byte offset in the JSON text;
/// schema violations throw Error(SyntaxError).
ContextDescriptor parse_context_descriptor(std::string_view json);
std::string to_json(const ContextDescriptor& d);

/// "x3" or "y12". Throws SyntaxError.
GeneratorSymbol parse_generator(std::string_view name);

/// {"chi1": {"x1": 1, ...}, "chi2": {...}, "chi3": {...}}; generators left
/// out are 0. Throws UnknownGenerator for generators outside ctx.
CharacterTriple parse_characters(const NilGroupContext& ctx,
                                 std::string_view json);
std::string to_json(const NilGroupContext& ctx, const CharacterTriple& chi);

/// {"x1": "x1", "y1": "[[x1,x2],x2]^-8 y1", ...}. Word syntax errors are
/// rethrown with the generator named in the message and the offset inside
/// that word.
std::vector<std::pair<GeneratorSymbol, GroupWord>> parse_automorphism(
    std::string_view json);

/// generator -> [a1, a2, a3, u, v, w], plus "phi_matrix" when given.
std::string witness_json(const NilGroupContext& ctx,
                         const U4Representation& rho,
                         const std::optional<U4Element>& phi_matrix = {});

}  // namespace massey
