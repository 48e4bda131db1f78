#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <utility>

#include "relmatch/nfa.hpp"
#include "relmatch/paths.hpp"

// Slow reference implementations for tests and --oracle cross-checks. Nothing
// here reuses the engines' traversal code.
namespace relmatch::oracle {

/// u R w, straight from the definitions.
bool in_relation(WordView u, WordView w, Relation rel);

/// The strings u with u R w and |u| <= max_len, over symbols 1..sigma for the
/// padding of infinite relations. max_len is required for extension,
/// left-extension and supersequence (std::invalid_argument otherwise) and
/// optional for the rest.
std::set<Word> enumerate_relation(WordView w, Relation rel, std::optional<std::size_t> max_len,
                                  Symbol sigma);

/// Membership by explicit state sets and fixpoint epsilon-closure.
bool naive_accepts(const Nfa& a, WordView u);

/// Optimum over {u : u R w, u in L(a)}.
///
/// Finite relations: enumerate and filter. Infinite relations: explore the
/// finite quotient of Σ* by (state set of a, progress towards containing w);
/// min is a breadth-first search, max is Unbounded iff a cycle survives among
/// quotient nodes that can still reach acceptance, else a longest path.
LengthAnswer brute_quantitative(const Nfa& a, WordView w, Relation rel, Optimum mode);

bool brute_match(const Nfa& a, WordView w, Relation rel);

/// Universal variant by enumeration; only for finite relations or when
/// max_len is given (then checks strings up to that length).
bool brute_universal(const Nfa& a, WordView w, Relation rel,
                     std::optional<std::size_t> max_len = std::nullopt);

/// (longest common subsequence, shortest common supersequence) lengths.
std::pair<std::size_t, std::size_t> lcs_scs_dp(WordView u, WordView v);

}  // namespace relmatch::oracle
