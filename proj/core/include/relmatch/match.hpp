#pragma once

#include "relmatch/nfa.hpp"

namespace relmatch {

/// Does `a` accept some u with u R w?
///
/// subsequence and supersequence run the linear matchers; the other relations
/// are variants of the state-set simulation on the trimmed automaton.
bool match(const Nfa& a, WordView w, Relation rel);

}  // namespace relmatch
