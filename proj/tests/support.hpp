#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "relmatch/nfa.hpp"
#include "relmatch/regex.hpp"

namespace relmatch::testing {

// Random AST with at most max_nodes nodes over symbols 1..sigma.
RegexAst random_ast(std::size_t max_nodes, Symbol sigma, std::mt19937_64& rng);

// Membership straight from the AST, memoised over (node, i, j).
bool ast_accepts(const RegexAst& ast, WordView u);

// Every word over 1..sigma of length <= max_len, shortest first.
std::vector<Word> all_words(Symbol sigma, std::size_t max_len);

// Trimmed automaton of a random AST, plus the AST itself.
struct Instance {
  RegexAst ast;
  Nfa nfa = Nfa::empty(1);
};
Instance random_instance(std::size_t max_nodes, Symbol sigma, std::mt19937_64& rng);

// Linear automaton for the single word u.
Nfa chain_automaton(WordView u, Symbol sigma);

Word word(const std::string& s);  // "abc" -> {1, 2, 3}
std::string show(WordView w);     // inverse of word(); 0 prints as '?'

}  // namespace relmatch::testing
