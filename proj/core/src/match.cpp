#include "relmatch/match.hpp"

#include <numeric>

#include "relmatch/simulation.hpp"
#include "relmatch/subsequence.hpp"
#include "relmatch/supersequence.hpp"

namespace relmatch {

namespace {

bool match_prefix(const TransitionIndex& index, WordView w) {
  StateSetSimulator sim(index);
  sim.start();
  if (sim.accepting()) return true;
  for (Symbol a : w) {
    sim.step(a);
    if (sim.accepting()) return true;
    if (sim.dead()) return false;
  }
  return false;
}

// Every position may start a fresh run.
bool match_infix(const TransitionIndex& index, WordView w) {
  StateSetSimulator sim(index);
  sim.start();
  if (sim.accepting()) return true;
  for (Symbol a : w) {
    sim.step(a);
    sim.add_and_close(index.initial());
    if (sim.accepting()) return true;
  }
  return false;
}

// On a trimmed automaton every state is reachable and co-reachable, so a run
// over w may start and end anywhere.
StateSetSimulator run_from_everywhere(const TransitionIndex& index, WordView w) {
  std::vector<State> all(index.state_count());
  std::iota(all.begin(), all.end(), State{0});
  StateSetSimulator sim(index);
  sim.start_from(all);
  for (Symbol a : w) {
    if (sim.dead()) break;
    sim.step(a);
  }
  return sim;
}

}  // namespace

bool match(const Nfa& a, WordView w, Relation rel) {
  if (rel == Relation::kSupersequence) return match_supersequence(a, w);
  const Nfa trimmed = trim(a);
  if (trimmed.is_canonical_empty()) return false;
  const TransitionIndex index(trimmed);
  switch (rel) {
    case Relation::kEquality:
      return simulate_membership(index, w);
    case Relation::kPrefix:
      return match_prefix(index, w);
    case Relation::kInfix:
      return match_infix(index, w);
    case Relation::kExtension:
      return !run_from_everywhere(index, w).dead();
    case Relation::kLeftExtension:
      return run_from_everywhere(index, w).accepting();
    case Relation::kSubsequence:
      return match_subsequence(index, w);
    case Relation::kSupersequence:
      break;
  }
  return match_supersequence(a, w);
}

}  // namespace relmatch
