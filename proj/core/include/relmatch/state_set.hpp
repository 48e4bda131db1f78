#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "relmatch/types.hpp"

namespace relmatch {

/// Set of states over a fixed universe 0..capacity-1.
///
/// A characteristic array (epoch-stamped, so clear() is O(1)) plus a dense
/// member list for iteration. Insertion appends to the member list, so the
/// list doubles as a FIFO work queue for closure computations.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::size_t capacity) : stamp_(capacity, 0), position_(capacity, 0) {
    members_.reserve(capacity);
  }

  std::size_t capacity() const { return stamp_.size(); }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(State q) const { return stamp_[q] == epoch_; }
  std::span<const State> members() const { return members_; }

  bool insert(State q) {
    if (contains(q)) return false;
    stamp_[q] = epoch_;
    position_[q] = static_cast<std::uint32_t>(members_.size());
    members_.push_back(q);
    return true;
  }

  // Swap-removal: reorders the member list.
  bool erase(State q) {
    if (!contains(q)) return false;
    stamp_[q] = epoch_ - 1;
    const std::uint32_t pos = position_[q];
    const State last = members_.back();
    members_[pos] = last;
    position_[last] = pos;
    members_.pop_back();
    return true;
  }

  void clear() {
    members_.clear();
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
  }

  void fill_all() {
    clear();
    for (State q = 0; q < capacity(); ++q) insert(q);
  }

  std::vector<State> sorted() const {
    std::vector<State> out(members_.begin(), members_.end());
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint32_t> position_;
  std::vector<State> members_;
  std::uint32_t epoch_ = 1;
};

}  // namespace relmatch
