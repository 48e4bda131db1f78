#pragma once

#include <cstdint>
#include <vector>

#include "relmatch/lazy_array.hpp"
#include "relmatch/transition_index.hpp"

namespace relmatch {

/// Set of states supporting "remove every member without an a-self-loop".
///
/// Members live in a doubly linked list, new ones on the right. B[q, a] = 1
/// records that q was examined for a and has an a-self-loop. A pop walks
/// right to left and stops at the first member with B[q, a] = 1: everything to
/// its left was examined for a earlier and kept. With every state pushed at
/// most once, any sequence of l operations costs O(l + m) in total.
class SelfLoopRegistry {
 public:
  explicit SelfLoopRegistry(const TransitionIndex& index);

  /// Throws std::logic_error when q was already pushed since the last reset.
  void push(State q);

  /// Appends the removed states to `out`, right to left.
  void pop(Symbol a, std::vector<State>& out);

  bool contains(State q) const { return status_.value_or(q, kNever) == kMember; }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  /// Members from left to right.
  std::vector<State> contents() const;

  /// States visited by pop() since the last reset.
  std::uint64_t traversal_cost() const { return traversal_cost_; }
  std::uint64_t operations() const { return operations_; }

  void reset();

 private:
  static constexpr std::uint8_t kNever = 0;
  static constexpr std::uint8_t kMember = 1;
  static constexpr std::uint8_t kRemoved = 2;

  void unlink(State q);

  const TransitionIndex* index_;
  LazyArray<std::uint8_t> status_;
  std::vector<State> prev_;
  std::vector<State> next_;
  PairTable<bool> examined_;  // B[q, a]
  State head_ = kNoState;
  State tail_ = kNoState;
  std::size_t size_ = 0;
  std::uint64_t traversal_cost_ = 0;
  std::uint64_t operations_ = 0;
};

}  // namespace relmatch
