#pragma once

#include <cstdint>
#include <optional>

#include "relmatch/nfa.hpp"

namespace relmatch {

/// Every prefix of w, including ε and w, is accepted. O(|w| * m).
bool universal_prefix(const Nfa& a, WordView w);

/// Every infix of w is accepted: the prefix check on every suffix. O(|w|^2 * m).
bool universal_infix(const Nfa& a, WordView w);

struct UniversalResult {
  enum class Verdict { kHolds, kFails, kCapExceeded };

  Verdict verdict = Verdict::kHolds;
  std::optional<Word> counterexample;  // kFails only: some u R w that is rejected
  std::uint64_t explored = 0;          // subsequences or subset states generated
};

std::string_view to_string(UniversalResult::Verdict v);

inline constexpr std::uint64_t kDefaultUniversalCap = 1'000'000;

/// Exhaustive checkers for the hard relations.
///
/// subsequence: walks the distinct subsequences of w (each once, via a
/// next-occurrence table) and simulates `a` incrementally; `cap` bounds the
/// number of subsequences. supersequence, extension, left-extension: builds
/// the automaton B for the strings related to w over the alphabet
/// 1..max(sigma, max symbol of w) and checks L(B) ⊆ L(a) by a breadth-first
/// search over pairs (B state, subset of states of a); `cap` bounds the
/// number of distinct subsets.
UniversalResult universal_bounded(const Nfa& a, WordView w, Relation rel,
                                  std::uint64_t cap = kDefaultUniversalCap);

/// Any relation; prefix, infix and equality are exact and ignore the cap.
UniversalResult universal_check(const Nfa& a, WordView w, Relation rel,
                                std::uint64_t cap = kDefaultUniversalCap);

}  // namespace relmatch
