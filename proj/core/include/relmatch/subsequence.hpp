#pragma once

#include <cstdint>

#include "relmatch/lazy_array.hpp"
#include "relmatch/simulation.hpp"
#include "relmatch/state_set.hpp"
#include "relmatch/transition_index.hpp"

namespace relmatch {

struct SubsequenceStats {
  std::uint64_t marks = 0;         // transitions marked, never exceeds m
  std::uint64_t h_insertions = 0;  // transitions appended to H, never exceeds m
  std::uint64_t steps = 0;         // symbols consumed before answering
};

/// O(|w| + m) test for "some subsequence of w is accepted".
///
/// Simulates A_⊑ without building it: the active set only grows, and each
/// transition is queued in H[label] once when its source activates and marked
/// once when consumed. Scratch is sized once and reset in O(1) per query.
class SubsequenceMatcher {
 public:
  explicit SubsequenceMatcher(const TransitionIndex& index);

  /// With a trace the run never exits early and records every S_i.
  bool match(WordView w, SubsequenceStats* stats = nullptr, SimulationTrace* trace = nullptr);

 private:
  static constexpr std::uint32_t kNil = static_cast<std::uint32_t>(-1);

  void close_and_enqueue(std::size_t from, SubsequenceStats& stats);

  const TransitionIndex* index_;
  StateSet active_;
  LazyArray<bool> marked_;
  LazyArray<std::uint32_t> head_;  // H[a] as intrusive FIFO lists over transition ids
  LazyArray<std::uint32_t> tail_;
  std::vector<std::uint32_t> next_;
};

bool match_subsequence(const TransitionIndex& index, WordView w, SubsequenceStats* stats = nullptr);

}  // namespace relmatch
