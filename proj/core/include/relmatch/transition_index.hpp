#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "relmatch/lazy_array.hpp"
#include "relmatch/nfa.hpp"

namespace relmatch {

/// Sorted adjacency of an automaton.
///
/// outgoing(q) is the list L[q]: every transition leaving q, sorted by
/// (label, target). outgoing(q, a) is T[q, a]: the a-transitions leaving q,
/// with the self-loop (q, a, q) stored first when it exists, so
/// has_self_loop() is a constant-time check. Both are built with counting
/// sorts in O(n + sigma + m). The index owns a copy of the automaton and is
/// immutable after construction.
class TransitionIndex {
 public:
  explicit TransitionIndex(Nfa nfa);

  const Nfa& nfa() const { return nfa_; }
  std::size_t state_count() const { return nfa_.state_count(); }
  Symbol sigma() const { return nfa_.sigma(); }
  State initial() const { return nfa_.initial(); }
  State accepting() const { return nfa_.accepting(); }
  std::size_t transition_count() const { return nfa_.size(); }

  std::span<const Transition> outgoing(State q) const {
    return std::span<const Transition>(sorted_).subspan(offsets_[q], offsets_[q + 1] - offsets_[q]);
  }

  /// Position of L[q]'s first element in sorted_transitions(); transition
  /// ids used by the matchers are positions in that array.
  std::uint32_t first_id(State q) const { return offsets_[q]; }
  std::span<const Transition> sorted_transitions() const { return sorted_; }

  std::span<const Transition> outgoing(State q, Symbol a) const;

  bool has_self_loop(State q, Symbol a) const {
    const auto group = outgoing(q, a);
    return !group.empty() && group.front().target == q;
  }

 private:
  struct Range {
    std::uint32_t begin;
    std::uint32_t count;
  };

  Nfa nfa_;
  std::vector<std::uint32_t> offsets_;  // n + 1 entries into sorted_
  std::vector<Transition> sorted_;      // L lists, concatenated
  std::vector<Transition> by_label_;    // T lists, self-loop first in each group
  PairTable<Range> groups_;             // (q, a) -> range in by_label_
};

/// Convenience spelling used throughout the tests.
inline TransitionIndex build_indices(Nfa nfa) { return TransitionIndex(std::move(nfa)); }

/// Stable counting sort of transitions by (source, label, target).
std::vector<Transition> sort_transitions(std::span<const Transition> transitions,
                                         std::size_t state_count, Symbol sigma);

}  // namespace relmatch
