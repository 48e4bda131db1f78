#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "relmatch/nfa.hpp"

namespace relmatch {

enum class RegexKind : std::uint8_t { kEmptySet, kEpsilon, kLiteral, kConcat, kAlt, kStar };

struct RegexNode {
  RegexKind kind = RegexKind::kEmptySet;
  Symbol symbol = 0;        // kLiteral
  std::uint32_t left = 0;   // kConcat, kAlt, kStar
  std::uint32_t right = 0;  // kConcat, kAlt
};

/// Node pool plus root. Children always have smaller ids than their parent,
/// so a node may be shared by several parents (the compiler expands shared
/// subtrees once per use).
class RegexAst {
 public:
  using Id = std::uint32_t;

  Id empty_set() { return add({RegexKind::kEmptySet, 0, 0, 0}); }
  Id epsilon() { return add({RegexKind::kEpsilon, 0, 0, 0}); }
  Id literal(Symbol a) { return add({RegexKind::kLiteral, a, 0, 0}); }
  Id concat(Id l, Id r) { return add({RegexKind::kConcat, 0, l, r}); }
  Id alt(Id l, Id r) { return add({RegexKind::kAlt, 0, l, r}); }
  Id star(Id inner) { return add({RegexKind::kStar, 0, inner, 0}); }

  const RegexNode& node(Id id) const { return nodes_[id]; }
  std::size_t node_count() const { return nodes_.size(); }
  Id root() const { return root_; }
  void set_root(Id id) { root_ = id; }

  /// Number of nodes in the tree under root(), counting shared subtrees once
  /// per occurrence.
  std::size_t tree_size() const;
  Symbol max_symbol() const;

 private:
  Id add(RegexNode n) {
    nodes_.push_back(n);
    return static_cast<Id>(nodes_.size() - 1);
  }

  std::vector<RegexNode> nodes_;
  Id root_ = 0;
};

/// Byte <-> symbol interning, first occurrence gets the next free id.
class Alphabet {
 public:
  Symbol intern(unsigned char c);
  std::optional<Symbol> find(unsigned char c) const;
  std::optional<unsigned char> character(Symbol a) const;
  Symbol size() const { return static_cast<Symbol>(chars_.size()); }

  /// Interns every byte of `text`; unseen bytes get fresh ids.
  Word encode(std::string_view text);
  /// Symbols without a character are written as <id>.
  std::string decode(WordView w) const;

 private:
  std::array<Symbol, 256> codes_{};
  std::vector<unsigned char> chars_;
};

class RegexSyntaxError : public std::runtime_error {
 public:
  RegexSyntaxError(std::size_t position, const std::string& what)
      : std::runtime_error("position " + std::to_string(position) + ": " + what),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

struct ParsedRegex {
  RegexAst ast;
  Alphabet alphabet;
};

/// Syntax: literal bytes, `|`, postfix `*`, `(` `)`, `\e` (epsilon), `\0`
/// (empty set), escapes `\\ \| \* \( \)`. Star binds tighter than
/// concatenation, which binds tighter than `|`. Empty alternatives are errors.
ParsedRegex parse_regex(std::string_view text);

/// Fully parenthesised text form, parseable by parse_regex given the same
/// alphabet order.
std::string to_regex_text(const RegexAst& ast, const Alphabet& alphabet);

/// Thompson construction; at most 4 transitions per AST node.
Nfa compile_thompson(const RegexAst& ast, Symbol sigma);
Nfa compile_thompson(const RegexAst& ast);

/// parse + compile + trim.
struct CompiledRegex {
  Nfa nfa;
  Alphabet alphabet;
};
CompiledRegex compile_regex(std::string_view text);

}  // namespace relmatch
