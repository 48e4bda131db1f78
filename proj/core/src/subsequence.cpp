#include "relmatch/subsequence.hpp"

namespace relmatch {

SubsequenceMatcher::SubsequenceMatcher(const TransitionIndex& index)
    : index_(&index),
      active_(index.state_count()),
      marked_(index.transition_count()),
      head_(std::size_t{index.sigma()} + 1),
      tail_(std::size_t{index.sigma()} + 1),
      next_(index.transition_count(), kNil) {}

// Closes the states added at positions >= from over unmarked epsilon
// transitions, then appends their symbol transitions to H.
void SubsequenceMatcher::close_and_enqueue(std::size_t from, SubsequenceStats& stats) {
  for (std::size_t i = from; i < active_.size(); ++i) {
    const State q = active_.members()[i];
    const auto out = index_->outgoing(q);
    const std::uint32_t base = index_->first_id(q);
    for (std::uint32_t k = 0; k < out.size() && out[k].is_epsilon(); ++k) {
      if (marked_.is_set(base + k)) continue;
      marked_.set(base + k, true);
      ++stats.marks;
      active_.insert(out[k].target);
    }
  }
  for (std::size_t i = from; i < active_.size(); ++i) {
    const State q = active_.members()[i];
    const auto out = index_->outgoing(q);
    const std::uint32_t base = index_->first_id(q);
    for (std::uint32_t k = 0; k < out.size(); ++k) {
      const Symbol a = out[k].label;
      if (a == kEpsilon) continue;
      const std::uint32_t id = base + k;
      next_[id] = kNil;
      if (const std::uint32_t* last = tail_.find(a); last != nullptr && *last != kNil) {
        next_[*last] = id;
      } else {
        head_.set(a, id);
      }
      tail_.set(a, id);
      ++stats.h_insertions;
    }
  }
}

bool SubsequenceMatcher::match(WordView w, SubsequenceStats* stats_out, SimulationTrace* trace) {
  SubsequenceStats stats;
  active_.clear();
  marked_.reset();
  head_.reset();
  tail_.reset();

  const State qf = index_->accepting();
  const Symbol sigma = index_->sigma();
  active_.insert(index_->initial());
  close_and_enqueue(0, stats);
  if (trace != nullptr) {
    trace->clear();
    trace->push_back(active_.sorted());
  }

  bool found = active_.contains(qf);
  for (Symbol a : w) {
    if (found && trace == nullptr) break;
    ++stats.steps;
    if (a != kEpsilon && a <= sigma) {
      const std::size_t before = active_.size();
      std::uint32_t id = head_.value_or(a, kNil);
      while (id != kNil) {
        marked_.set(id, true);
        ++stats.marks;
        active_.insert(index_->sorted_transitions()[id].target);
        id = next_[id];
      }
      head_.set(a, kNil);
      tail_.set(a, kNil);
      close_and_enqueue(before, stats);
      found = found || active_.contains(qf);
    }
    if (trace != nullptr) trace->push_back(active_.sorted());
  }
  if (stats_out != nullptr) *stats_out = stats;
  return found;
}

bool match_subsequence(const TransitionIndex& index, WordView w, SubsequenceStats* stats) {
  SubsequenceMatcher matcher(index);
  return matcher.match(w, stats);
}

}  // namespace relmatch
