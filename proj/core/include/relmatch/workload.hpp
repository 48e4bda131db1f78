#pragma once

#include <cstdint>
#include <random>

#include "relmatch/nfa.hpp"

namespace relmatch {

/// Random automaton on n states, q0 = 0, qf = n - 1, m uniform transitions;
/// each label is epsilon with probability epsilon_share. Not trimmed.
Nfa random_nfa(std::size_t n, Symbol sigma, std::size_t m, double epsilon_share, std::mt19937_64& rng);

/// Scaling-benchmark automaton with about m transitions and m / 16 states.
///
/// States 0..n-2 form one strongly connected block (a chain plus a back edge,
/// then random transitions over symbols 1..sigma-1); the only way into the
/// final state n-1 is a single transition labelled sigma. Texts over
/// 1..sigma-1 therefore never match by subsequence and always match by
/// supersequence, and both engines must read the whole text.
Nfa bench_automaton(std::size_t m, Symbol sigma, std::uint64_t seed);

/// Uniform word over lo..hi.
Word random_word(std::size_t length, Symbol lo, Symbol hi, std::mt19937_64& rng);

}  // namespace relmatch
