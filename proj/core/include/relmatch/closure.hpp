#pragma once

#include <vector>

#include "relmatch/nfa.hpp"

namespace relmatch {

/// A_⊑: adds a self-loop (p, b, p) for every state p and symbol b. Accepts w
/// iff some subsequence of w is accepted by `a`. Size O(n*sigma + m), so only
/// oracles and the baseline engine build it.
Nfa upward_automaton(const Nfa& a);

/// A_⊒: adds a parallel epsilon-transition next to every symbol transition.
/// Accepts w iff some supersequence of w is accepted by `a`.
Nfa downward_automaton(const Nfa& a);

struct Condensation {
  std::vector<State> scc_of;  // original state -> condensed state
  Nfa condensed;
};

/// Quotient of `a` by its strongly connected components. Condensed state ids
/// are in topological order, transitions are deduplicated and sorted by
/// (source, label, target).
Condensation condense(const Nfa& a);

}  // namespace relmatch
