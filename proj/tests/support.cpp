#include "support.hpp"

#include <map>
#include <tuple>

namespace relmatch::testing {

namespace {

RegexAst::Id grow(RegexAst& ast, std::size_t budget, Symbol sigma, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 99);
  if (budget <= 1) {
    const int r = pick(rng);
    if (r < 8) return ast.epsilon();
    if (r < 11) return ast.empty_set();
    return ast.literal(std::uniform_int_distribution<Symbol>(1, sigma)(rng));
  }
  const int r = pick(rng);
  if (r < 20) return ast.star(grow(ast, budget - 1, sigma, rng));
  if (budget >= 3 && r < 90) {
    const std::size_t left = std::uniform_int_distribution<std::size_t>(1, budget - 2)(rng);
    const RegexAst::Id l = grow(ast, left, sigma, rng);
    const RegexAst::Id rr = grow(ast, budget - 1 - left, sigma, rng);
    return r < 55 ? ast.concat(l, rr) : ast.alt(l, rr);
  }
  return grow(ast, 1, sigma, rng);
}

struct AstMatcher {
  const RegexAst& ast;
  WordView u;
  std::map<std::tuple<RegexAst::Id, std::size_t, std::size_t>, bool> memo;

  bool run(RegexAst::Id id, std::size_t i, std::size_t j) {
    const auto key = std::make_tuple(id, i, j);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    memo[key] = false;  // star recursion on (id, i, i) bottoms out here
    const RegexNode& n = ast.node(id);
    bool result = false;
    switch (n.kind) {
      case RegexKind::kEmptySet:
        break;
      case RegexKind::kEpsilon:
        result = i == j;
        break;
      case RegexKind::kLiteral:
        result = j == i + 1 && u[i] == n.symbol;
        break;
      case RegexKind::kConcat:
        for (std::size_t k = i; k <= j && !result; ++k) result = run(n.left, i, k) && run(n.right, k, j);
        break;
      case RegexKind::kAlt:
        result = run(n.left, i, j) || run(n.right, i, j);
        break;
      case RegexKind::kStar:
        result = i == j;
        for (std::size_t k = i + 1; k <= j && !result; ++k) result = run(n.left, i, k) && run(id, k, j);
        break;
    }
    memo[key] = result;
    return result;
  }
};

}  // namespace

RegexAst random_ast(std::size_t max_nodes, Symbol sigma, std::mt19937_64& rng) {
  RegexAst ast;
  const std::size_t budget = std::uniform_int_distribution<std::size_t>(1, max_nodes)(rng);
  ast.set_root(grow(ast, budget, sigma, rng));
  return ast;
}

bool ast_accepts(const RegexAst& ast, WordView u) {
  AstMatcher m{ast, u, {}};
  return m.run(ast.root(), 0, u.size());
}

std::vector<Word> all_words(Symbol sigma, std::size_t max_len) {
  std::vector<Word> out{Word{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (Symbol a = 1; a <= sigma; ++a) {
        Word next = out[i];
        next.push_back(a);
        out.push_back(std::move(next));
      }
    }
    begin = end;
  }
  return out;
}

Instance random_instance(std::size_t max_nodes, Symbol sigma, std::mt19937_64& rng) {
  Instance inst;
  inst.ast = random_ast(max_nodes, sigma, rng);
  inst.nfa = trim(compile_thompson(inst.ast, sigma));
  return inst;
}

Nfa chain_automaton(WordView u, Symbol sigma) {
  std::vector<Transition> ts;
  for (std::size_t i = 0; i < u.size(); ++i) {
    ts.push_back({static_cast<State>(i), u[i], static_cast<State>(i + 1)});
  }
  const std::size_t n = u.size() + 1;
  return Nfa(n, sigma, 0, static_cast<State>(n - 1), std::move(ts));
}

Word word(const std::string& s) {
  Word w;
  for (char c : s) w.push_back(static_cast<Symbol>(c - 'a' + 1));
  return w;
}

std::string show(WordView w) {
  std::string s;
  for (Symbol a : w) s.push_back(a == 0 ? '?' : static_cast<char>('a' + a - 1));
  return s;
}

}  // namespace relmatch::testing
