#include "relmatch/supersequence.hpp"

#include <algorithm>
#include <limits>

namespace relmatch {

namespace {

Nfa condensed_downward(const Nfa& a) { return condense(downward_automaton(trim(a))).condensed; }

}  // namespace

SupersequenceMatcher::SupersequenceMatcher(const Nfa& a)
    : empty_(trim(a).is_canonical_empty()),
      index_(condensed_downward(a)),
      base_indeg_(index_.state_count(), 0),
      alive_(index_.state_count()),
      indeg_(index_.state_count(), 0),
      markstep_(index_.state_count(), 0),
      registry_(index_) {
  for (const Transition& t : index_.sorted_transitions()) {
    if (!t.is_self_loop()) ++base_indeg_[t.target];
  }
}

bool SupersequenceMatcher::match(WordView w, SupersequenceStats* stats_out, SimulationTrace* trace) {
  SupersequenceStats stats;
  if (trace != nullptr) trace->clear();
  if (empty_) {
    if (stats_out != nullptr) *stats_out = stats;
    return false;
  }

  const State qf = index_.accepting();
  alive_.fill_all();
  std::copy(base_indeg_.begin(), base_indeg_.end(), indeg_.begin());
  std::fill(markstep_.begin(), markstep_.end(), 0);
  registry_.reset();
  for (State q = 0; q < index_.state_count(); ++q) {
    if (indeg_[q] == 0) {
      registry_.push(q);
      ++stats.pushes;
    }
  }
  if (trace != nullptr) trace->push_back(alive_.sorted());

  bool final_alive = true;
  std::uint32_t step = 0;
  for (Symbol raw : w) {
    if (!final_alive && trace == nullptr) break;
    ++step;
    ++stats.steps;
    // Symbol 0 never occurs in a word; map it to a label nothing carries.
    const Symbol a = raw == kEpsilon ? std::numeric_limits<Symbol>::max() : raw;

    doomed_.clear();
    registry_.pop(a, doomed_);
    for (std::size_t g = 0; g < doomed_.size(); ++g) {
      const State q = doomed_[g];
      alive_.erase(q);
      ++stats.removed_states;
      if (q == qf) final_alive = false;
      for (const Transition& t : index_.outgoing(q)) {
        if (t.is_self_loop()) continue;
        const State target = t.target;
        --indeg_[target];
        ++stats.deletions;
        if (t.label == a || index_.has_self_loop(target, a)) markstep_[target] = step;
        if (indeg_[target] == 0) {
          if (markstep_[target] == step) {
            registry_.push(target);
            ++stats.pushes;
          } else {
            doomed_.push_back(target);
          }
        }
      }
    }
    if (trace != nullptr) trace->push_back(alive_.sorted());
  }
  stats.registry_cost = registry_.traversal_cost();
  if (stats_out != nullptr) *stats_out = stats;
  return final_alive;
}

bool match_supersequence(const Nfa& a, WordView w, SupersequenceStats* stats) {
  SupersequenceMatcher matcher(a);
  return matcher.match(w, stats);
}

}  // namespace relmatch
