#include "relmatch/self_loop_registry.hpp"

#include <stdexcept>
#include <string>

namespace relmatch {

SelfLoopRegistry::SelfLoopRegistry(const TransitionIndex& index)
    : index_(&index),
      status_(index.state_count()),
      prev_(index.state_count(), kNoState),
      next_(index.state_count(), kNoState),
      examined_(index.state_count(), std::size_t{index.sigma()} + 1) {}

void SelfLoopRegistry::push(State q) {
  if (status_.value_or(q, kNever) != kNever) {
    throw std::logic_error("state " + std::to_string(q) + " pushed twice");
  }
  ++operations_;
  status_.set(q, kMember);
  prev_[q] = tail_;
  next_[q] = kNoState;
  if (tail_ != kNoState) {
    next_[tail_] = q;
  } else {
    head_ = q;
  }
  tail_ = q;
  ++size_;
}

void SelfLoopRegistry::unlink(State q) {
  const State p = prev_[q], n = next_[q];
  if (p != kNoState) {
    next_[p] = n;
  } else {
    head_ = n;
  }
  if (n != kNoState) {
    prev_[n] = p;
  } else {
    tail_ = p;
  }
  status_.set(q, kRemoved);
  --size_;
}

void SelfLoopRegistry::pop(Symbol a, std::vector<State>& out) {
  ++operations_;
  State q = tail_;
  while (q != kNoState) {
    if (examined_.find(q, a) != nullptr) break;
    ++traversal_cost_;
    const State left = prev_[q];
    if (index_->has_self_loop(q, a)) {
      examined_.set(q, a, true);
    } else {
      unlink(q);
      out.push_back(q);
    }
    q = left;
  }
}

std::vector<State> SelfLoopRegistry::contents() const {
  std::vector<State> out;
  out.reserve(size_);
  for (State q = head_; q != kNoState; q = next_[q]) out.push_back(q);
  return out;
}

void SelfLoopRegistry::reset() {
  status_.reset();
  examined_.reset();
  head_ = tail_ = kNoState;
  size_ = 0;
  traversal_cost_ = 0;
  operations_ = 0;
}

}  // namespace relmatch
