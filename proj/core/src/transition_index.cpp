#include "relmatch/transition_index.hpp"

#include <algorithm>
#include <utility>

namespace relmatch {

namespace {

template <class Key>
void counting_pass(std::vector<Transition>& items, std::size_t buckets, Key key) {
  std::vector<std::uint32_t> start(buckets + 1, 0);
  for (const Transition& t : items) ++start[key(t) + 1];
  for (std::size_t b = 0; b < buckets; ++b) start[b + 1] += start[b];
  std::vector<Transition> out(items.size());
  for (const Transition& t : items) out[start[key(t)]++] = t;
  items = std::move(out);
}

}  // namespace

std::vector<Transition> sort_transitions(std::span<const Transition> transitions,
                                         std::size_t state_count, Symbol sigma) {
  std::vector<Transition> items(transitions.begin(), transitions.end());
  // LSD radix sort: least significant key first, every pass stable.
  counting_pass(items, state_count, [](const Transition& t) { return t.target; });
  counting_pass(items, std::size_t{sigma} + 1, [](const Transition& t) { return t.label; });
  counting_pass(items, state_count, [](const Transition& t) { return t.source; });
  return items;
}

TransitionIndex::TransitionIndex(Nfa nfa)
    : nfa_(std::move(nfa)),
      groups_(nfa_.state_count(), std::size_t{nfa_.sigma()} + 1) {
  const std::size_t n = nfa_.state_count();
  sorted_ = sort_transitions(nfa_.transitions(), n, nfa_.sigma());

  offsets_.assign(n + 1, 0);
  for (const Transition& t : sorted_) ++offsets_[t.source + 1];
  for (std::size_t q = 0; q < n; ++q) offsets_[q + 1] += offsets_[q];

  by_label_ = sorted_;
  std::size_t i = 0;
  while (i < by_label_.size()) {
    std::size_t j = i;
    const State q = by_label_[i].source;
    const Symbol a = by_label_[i].label;
    while (j < by_label_.size() && by_label_[j].source == q && by_label_[j].label == a) ++j;
    auto loop = std::find_if(by_label_.begin() + static_cast<std::ptrdiff_t>(i),
                             by_label_.begin() + static_cast<std::ptrdiff_t>(j),
                             [](const Transition& t) { return t.is_self_loop(); });
    if (loop != by_label_.begin() + static_cast<std::ptrdiff_t>(i) &&
        loop != by_label_.begin() + static_cast<std::ptrdiff_t>(j)) {
      std::rotate(by_label_.begin() + static_cast<std::ptrdiff_t>(i), loop, loop + 1);
    }
    groups_.set(q, a, Range{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j - i)});
    i = j;
  }
}

std::span<const Transition> TransitionIndex::outgoing(State q, Symbol a) const {
  const Range* range = groups_.find(q, a);
  if (range == nullptr) return {};
  return std::span<const Transition>(by_label_).subspan(range->begin, range->count);
}

}  // namespace relmatch
