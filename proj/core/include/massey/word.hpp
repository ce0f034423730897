#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "massey/lie.hpp"

namespace massey {

struct GroupWord;

/// generator | [w1, w2] | (w)
struct WordAtom {
  enum class Kind { Generator, Bracket, Group };

  Kind kind = Kind::Generator;
  GeneratorSymbol generator{GeneratorSymbol::Kind::X, 1};
  /// Two entries for a bracket, one for a parenthesized group.
  std::vector<GroupWord> children;

  static WordAtom gen(GeneratorSymbol g);
  static WordAtom bracket(GroupWord left, GroupWord right);
  static WordAtom group(GroupWord inner);
};

struct WordTerm {
  WordAtom atom;
  std::int64_t exponent = 1;
};

/// Product of terms, left to right. No terms means the identity, written "1".
struct GroupWord {
  std::vector<WordTerm> terms;
};

bool operator==(const WordAtom& a, const WordAtom& b);
bool operator==(const WordTerm& a, const WordTerm& b);
bool operator==(const GroupWord& a, const GroupWord& b);

/// Grammar:
///   word      := term { whitespace term } | "1"
///   term      := atom [ "^" signed-integer ]
///   atom      := generator | "[" word "," word "]" | "(" word ")"
///   generator := ("x" | "y") positive-integer
/// Whitespace is also tolerated around brackets, commas and between
/// self-delimiting terms. Throws SyntaxError with the offending byte offset.
GroupWord parse_word(std::string_view text);

/// Canonical text: single spaces between terms, exponent omitted when 1.
std::string print_word(const GroupWord& word);

}  // namespace massey
