#include "relmatch/regex.hpp"

#include <algorithm>
#include <utility>

namespace relmatch {

std::size_t RegexAst::tree_size() const {
  if (nodes_.empty()) return 0;
  std::size_t count = 0;
  std::vector<Id> stack{root_};
  while (!stack.empty()) {
    const RegexNode& n = nodes_[stack.back()];
    stack.pop_back();
    ++count;
    if (n.kind == RegexKind::kConcat || n.kind == RegexKind::kAlt) {
      stack.push_back(n.left);
      stack.push_back(n.right);
    } else if (n.kind == RegexKind::kStar) {
      stack.push_back(n.left);
    }
  }
  return count;
}

Symbol RegexAst::max_symbol() const {
  Symbol top = 0;
  for (const RegexNode& n : nodes_) {
    if (n.kind == RegexKind::kLiteral) top = std::max(top, n.symbol);
  }
  return top;
}

Symbol Alphabet::intern(unsigned char c) {
  if (codes_[c] == 0) {
    chars_.push_back(c);
    codes_[c] = static_cast<Symbol>(chars_.size());
  }
  return codes_[c];
}

std::optional<Symbol> Alphabet::find(unsigned char c) const {
  if (codes_[c] == 0) return std::nullopt;
  return codes_[c];
}

std::optional<unsigned char> Alphabet::character(Symbol a) const {
  if (a == 0 || a > chars_.size()) return std::nullopt;
  return chars_[a - 1];
}

Word Alphabet::encode(std::string_view text) {
  Word w;
  w.reserve(text.size());
  for (char c : text) w.push_back(intern(static_cast<unsigned char>(c)));
  return w;
}

std::string Alphabet::decode(WordView w) const {
  std::string out;
  for (Symbol a : w) {
    if (auto c = character(a)) {
      out.push_back(static_cast<char>(*c));
    } else {
      out += "<" + std::to_string(a) + ">";
    }
  }
  return out;
}

namespace {

bool is_special(char c) { return c == '|' || c == '*' || c == '(' || c == ')' || c == '\\'; }

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ParsedRegex run() {
    ParsedRegex out;
    ast_ = &out.ast;
    alphabet_ = &out.alphabet;
    const RegexAst::Id root = parse_alt(0);
    if (pos_ < text_.size()) {
      // parse_alt only stops early on ')'.
      throw RegexSyntaxError(pos_, "unbalanced ')'");
    }
    out.ast.set_root(root);
    return out;
  }

 private:
  static constexpr std::size_t kMaxDepth = 5000;

  RegexAst::Id parse_alt(std::size_t depth) {
    if (depth > kMaxDepth) throw RegexSyntaxError(pos_, "nesting too deep");
    RegexAst::Id left = parse_concat(depth);
    while (pos_ < text_.size() && text_[pos_] == '|') {
      ++pos_;
      const RegexAst::Id right = parse_concat(depth);
      left = ast_->alt(left, right);
    }
    return left;
  }

  RegexAst::Id parse_concat(std::size_t depth) {
    const std::size_t start = pos_;
    std::optional<RegexAst::Id> result;
    while (pos_ < text_.size() && text_[pos_] != '|' && text_[pos_] != ')') {
      if (text_[pos_] == '*') throw RegexSyntaxError(pos_, "dangling '*'");
      RegexAst::Id item = parse_atom(depth);
      while (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        item = ast_->star(item);
      }
      result = result ? ast_->concat(*result, item) : item;
    }
    if (!result) throw RegexSyntaxError(start, "empty alternative");
    return *result;
  }

  RegexAst::Id parse_atom(std::size_t depth) {
    const char c = text_[pos_];
    if (c == '(') {
      const std::size_t open = pos_++;
      const RegexAst::Id inner = parse_alt(depth + 1);
      if (pos_ >= text_.size() || text_[pos_] != ')') throw RegexSyntaxError(open, "unbalanced '('");
      ++pos_;
      return inner;
    }
    if (c == '\\') {
      if (pos_ + 1 >= text_.size()) throw RegexSyntaxError(pos_, "trailing backslash");
      const char e = text_[pos_ + 1];
      pos_ += 2;
      if (e == 'e') return ast_->epsilon();
      if (e == '0') return ast_->empty_set();
      if (is_special(e)) return ast_->literal(alphabet_->intern(static_cast<unsigned char>(e)));
      throw RegexSyntaxError(pos_ - 2, std::string("bad escape '\\") + e + "'");
    }
    ++pos_;
    return ast_->literal(alphabet_->intern(static_cast<unsigned char>(c)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  RegexAst* ast_ = nullptr;
  Alphabet* alphabet_ = nullptr;
};

}  // namespace

ParsedRegex parse_regex(std::string_view text) { return Parser(text).run(); }

std::string to_regex_text(const RegexAst& ast, const Alphabet& alphabet) {
  std::string out;
  // Explicit stack of pending actions: a node to print or a literal string.
  std::vector<std::pair<RegexAst::Id, const char*>> stack{{ast.root(), nullptr}};
  while (!stack.empty()) {
    auto [id, text] = stack.back();
    stack.pop_back();
    if (text != nullptr) {
      out += text;
      continue;
    }
    const RegexNode& n = ast.node(id);
    switch (n.kind) {
      case RegexKind::kEmptySet:
        out += "\\0";
        break;
      case RegexKind::kEpsilon:
        out += "\\e";
        break;
      case RegexKind::kLiteral: {
        const auto c = alphabet.character(n.symbol);
        if (!c) throw std::invalid_argument("literal without a character");
        if (is_special(static_cast<char>(*c))) out.push_back('\\');
        out.push_back(static_cast<char>(*c));
        break;
      }
      case RegexKind::kConcat:
        out += "(";
        stack.push_back({0, ")"});
        stack.push_back({n.right, nullptr});
        stack.push_back({n.left, nullptr});
        break;
      case RegexKind::kAlt:
        out += "(";
        stack.push_back({0, ")"});
        stack.push_back({n.right, nullptr});
        stack.push_back({0, "|"});
        stack.push_back({n.left, nullptr});
        break;
      case RegexKind::kStar:
        out += "(";
        stack.push_back({0, ")*"});
        stack.push_back({n.left, nullptr});
        break;
    }
  }
  return out;
}

Nfa compile_thompson(const RegexAst& ast, Symbol sigma) {
  struct Fragment {
    State start;
    State end;
  };
  std::vector<Transition> transitions;
  State next_state = 0;
  auto fresh = [&] { return next_state++; };

  std::vector<Fragment> fragments;
  std::vector<std::pair<RegexAst::Id, bool>> stack{{ast.root(), false}};
  while (!stack.empty()) {
    auto [id, expanded] = stack.back();
    stack.pop_back();
    const RegexNode& n = ast.node(id);
    if (!expanded) {
      stack.push_back({id, true});
      if (n.kind == RegexKind::kConcat || n.kind == RegexKind::kAlt) {
        stack.push_back({n.right, false});
        stack.push_back({n.left, false});
      } else if (n.kind == RegexKind::kStar) {
        stack.push_back({n.left, false});
      }
      continue;
    }
    switch (n.kind) {
      case RegexKind::kEmptySet: {
        const State s = fresh(), e = fresh();
        fragments.push_back({s, e});
        break;
      }
      case RegexKind::kEpsilon: {
        const State s = fresh(), e = fresh();
        transitions.push_back({s, kEpsilon, e});
        fragments.push_back({s, e});
        break;
      }
      case RegexKind::kLiteral: {
        const State s = fresh(), e = fresh();
        transitions.push_back({s, n.symbol, e});
        fragments.push_back({s, e});
        break;
      }
      case RegexKind::kConcat: {
        const Fragment r = fragments.back();
        fragments.pop_back();
        const Fragment l = fragments.back();
        fragments.pop_back();
        transitions.push_back({l.end, kEpsilon, r.start});
        fragments.push_back({l.start, r.end});
        break;
      }
      case RegexKind::kAlt: {
        const Fragment r = fragments.back();
        fragments.pop_back();
        const Fragment l = fragments.back();
        fragments.pop_back();
        const State s = fresh(), e = fresh();
        transitions.push_back({s, kEpsilon, l.start});
        transitions.push_back({s, kEpsilon, r.start});
        transitions.push_back({l.end, kEpsilon, e});
        transitions.push_back({r.end, kEpsilon, e});
        fragments.push_back({s, e});
        break;
      }
      case RegexKind::kStar: {
        const Fragment inner = fragments.back();
        fragments.pop_back();
        const State s = fresh(), e = fresh();
        transitions.push_back({s, kEpsilon, inner.start});
        transitions.push_back({inner.end, kEpsilon, inner.start});
        transitions.push_back({inner.end, kEpsilon, e});
        transitions.push_back({s, kEpsilon, e});
        fragments.push_back({s, e});
        break;
      }
    }
  }
  const Fragment whole = fragments.back();
  return Nfa(next_state, sigma, whole.start, whole.end, std::move(transitions));
}

Nfa compile_thompson(const RegexAst& ast) { return compile_thompson(ast, ast.max_symbol()); }

CompiledRegex compile_regex(std::string_view text) {
  ParsedRegex parsed = parse_regex(text);
  Nfa nfa = trim(compile_thompson(parsed.ast, parsed.alphabet.size()));
  return {std::move(nfa), std::move(parsed.alphabet)};
}

}  // namespace relmatch
