#include "massey/word.hpp"

#include <cctype>
#include <limits>

#include "massey/error.hpp"

namespace massey {

WordAtom WordAtom::gen(GeneratorSymbol g) {
  WordAtom a;
  a.kind = Kind::Generator;
  a.generator = g;
  return a;
}

WordAtom WordAtom::bracket(GroupWord left, GroupWord right) {
  WordAtom a;
  a.kind = Kind::Bracket;
  a.children.push_back(std::move(left));
  a.children.push_back(std::move(right));
  return a;
}

WordAtom WordAtom::group(GroupWord inner) {
  WordAtom a;
  a.kind = Kind::Group;
  a.children.push_back(std::move(inner));
  return a;
}

bool operator==(const WordAtom& a, const WordAtom& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == WordAtom::Kind::Generator) return a.generator == b.generator;
  return a.children == b.children;
}

bool operator==(const WordTerm& a, const WordTerm& b) {
  return a.exponent == b.exponent && a.atom == b.atom;
}

bool operator==(const GroupWord& a, const GroupWord& b) {
  return a.terms == b.terms;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupWord parse() {
    GroupWord w = word();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return w;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(pos_, what);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  static bool starts_atom(char c) {
    return c == 'x' || c == 'y' || c == '[' || c == '(';
  }

  GroupWord word() {
    skip_ws();
    GroupWord w;
    if (peek() == '1') {
      ++pos_;
      if (std::isdigit(static_cast<unsigned char>(peek())))
        fail("a word cannot start with a number");
      return w;
    }
    if (!starts_atom(peek())) fail("expected a generator, '[' or '('");
    while (true) {
      w.terms.push_back(term());
      skip_ws();
      if (!starts_atom(peek())) break;
    }
    return w;
  }

  WordTerm term() {
    WordTerm t{atom(), 1};
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      t.exponent = signed_integer();
    }
    return t;
  }

  WordAtom atom() {
    const char c = peek();
    if (c == 'x' || c == 'y') {
      ++pos_;
      const auto kind =
          c == 'x' ? GeneratorSymbol::Kind::X : GeneratorSymbol::Kind::Y;
      const std::size_t start = pos_;
      const std::int64_t index = unsigned_integer();
      if (index < 1) {
        pos_ = start;
        fail("generator index must be positive");
      }
      if (index > std::numeric_limits<int>::max()) {
        pos_ = start;
        fail("generator index too large");
      }
      return WordAtom::gen({kind, static_cast<int>(index)});
    }
    if (c == '[') {
      ++pos_;
      GroupWord left = word();
      skip_ws();
      if (peek() != ',') fail("expected ','");
      ++pos_;
      GroupWord right = word();
      skip_ws();
      if (peek() != ']') fail("expected ']'");
      ++pos_;
      return WordAtom::bracket(std::move(left), std::move(right));
    }
    if (c == '(') {
      ++pos_;
      GroupWord inner = word();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return WordAtom::group(std::move(inner));
    }
    fail("expected a generator, '[' or '('");
  }

  std::int64_t unsigned_integer() {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected an integer");
    std::int64_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      if (value > (std::numeric_limits<std::int64_t>::max() - 9) / 10)
        fail("integer too large");
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    return value;
  }

  std::int64_t signed_integer() {
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
    }
    const std::int64_t v = unsigned_integer();
    return negative ? -v : v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print_into(const GroupWord& w, std::string& out);

void print_atom(const WordAtom& a, std::string& out) {
  switch (a.kind) {
    case WordAtom::Kind::Generator: out += a.generator.name(); break;
    case WordAtom::Kind::Bracket:
      out += '[';
      print_into(a.children.at(0), out);
      out += ',';
      print_into(a.children.at(1), out);
      out += ']';
      break;
    case WordAtom::Kind::Group:
      out += '(';
      print_into(a.children.at(0), out);
      out += ')';
      break;
  }
}

void print_into(const GroupWord& w, std::string& out) {
  if (w.terms.empty()) {
    out += '1';
    return;
  }
  for (std::size_t i = 0; i < w.terms.size(); ++i) {
    if (i) out += ' ';
    print_atom(w.terms[i].atom, out);
    if (w.terms[i].exponent != 1)
      out += '^' + std::to_string(w.terms[i].exponent);
  }
}

}  // namespace

GroupWord parse_word(std::string_view text) { return Parser(text).parse(); }

std::string print_word(const GroupWord& word) {
  std::string out;
  print_into(word, out);
  return out;
}

}  // namespace massey
