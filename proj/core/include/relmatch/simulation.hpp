#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "relmatch/state_set.hpp"
#include "relmatch/transition_index.hpp"

namespace relmatch {

/// Extends `set` in place by everything reachable over epsilon-transitions.
/// Only members at positions >= `from` are used as seeds; earlier members are
/// assumed closed already. Returns the number of transitions inspected.
std::uint64_t epsilon_closure(const TransitionIndex& index, StateSet& set, std::size_t from = 0);

/// Copying form: closure of `seeds`.
std::vector<State> epsilon_closure(const TransitionIndex& index, std::span<const State> seeds);

/// State-set simulation: S_0 = CC({q0}), S_i = CC(delta(S_{i-1}, w[i])).
///
/// Two double-buffered StateSets; reusable across queries, since every start
/// is an O(1) clear.
class StateSetSimulator {
 public:
  explicit StateSetSimulator(const TransitionIndex& index);

  void start();
  void start_from(std::span<const State> seeds);
  void step(Symbol a);
  // S := S ∪ CC({q}).
  void add_and_close(State q);

  const StateSet& active() const { return current_; }
  bool accepting() const { return current_.contains(index_->accepting()); }
  bool dead() const { return current_.empty(); }

  /// Transitions inspected since construction.
  std::uint64_t work() const { return work_; }

 private:
  const TransitionIndex* index_;
  StateSet current_;
  StateSet next_;
  std::uint64_t work_ = 0;
};

/// Sorted S_0 .. S_|w|.
using SimulationTrace = std::vector<std::vector<State>>;

/// Classic O(|w| * m) membership test.
bool simulate_membership(const TransitionIndex& index, WordView w, SimulationTrace* trace = nullptr);
bool simulate_membership(const Nfa& a, WordView w, SimulationTrace* trace = nullptr);

}  // namespace relmatch
