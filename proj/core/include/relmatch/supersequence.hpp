#pragma once

#include <cstdint>
#include <vector>

#include "relmatch/closure.hpp"
#include "relmatch/self_loop_registry.hpp"
#include "relmatch/simulation.hpp"
#include "relmatch/state_set.hpp"
#include "relmatch/transition_index.hpp"

namespace relmatch {

struct SupersequenceStats {
  std::uint64_t deletions = 0;      // condensed transitions removed, at most m'
  std::uint64_t removed_states = 0;
  std::uint64_t pushes = 0;         // registry pushes, at most n'
  std::uint64_t registry_cost = 0;  // states visited by registry pops
  std::uint64_t steps = 0;
};

/// O(|w| + m) test for "some supersequence of w is accepted".
///
/// Works on cond(A_⊒), which is a DAG apart from self-loops. The active set
/// starts as every condensed state and only shrinks; a step deletes exactly the
/// states not reachable by a w[i]-labelled path from another live state.
/// Deletions are logical (in-degree counters and step stamps), so the
/// automaton is never modified and the matcher can be reused.
class SupersequenceMatcher {
 public:
  /// Trims `a`, builds A_⊒ and condenses it.
  explicit SupersequenceMatcher(const Nfa& a);

  /// With a trace the run never exits early and records every S_i over the
  /// condensed states.
  bool match(WordView w, SupersequenceStats* stats = nullptr, SimulationTrace* trace = nullptr);

  const TransitionIndex& condensed() const { return index_; }
  bool empty_language() const { return empty_; }

 private:
  bool empty_;
  TransitionIndex index_;
  std::vector<std::uint32_t> base_indeg_;

  StateSet alive_;
  std::vector<std::uint32_t> indeg_;
  std::vector<std::uint32_t> markstep_;
  SelfLoopRegistry registry_;
  std::vector<State> doomed_;  // G
};

bool match_supersequence(const Nfa& a, WordView w, SupersequenceStats* stats = nullptr);

}  // namespace relmatch
