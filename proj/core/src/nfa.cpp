#include "relmatch/nfa.hpp"

#include <string>
#include <utility>

namespace relmatch {

namespace {

// Compressed adjacency in either direction, built by counting sort.
struct Adjacency {
  std::vector<std::uint32_t> offsets;
  std::vector<State> neighbours;
};

Adjacency build_adjacency(const Nfa& a, bool forward) {
  Adjacency adj;
  const std::size_t n = a.state_count();
  adj.offsets.assign(n + 1, 0);
  for (const Transition& t : a.transitions()) {
    ++adj.offsets[(forward ? t.source : t.target) + 1];
  }
  for (std::size_t q = 0; q < n; ++q) adj.offsets[q + 1] += adj.offsets[q];
  adj.neighbours.resize(a.size());
  std::vector<std::uint32_t> fill(adj.offsets.begin(), adj.offsets.end() - 1);
  for (const Transition& t : a.transitions()) {
    const State from = forward ? t.source : t.target;
    adj.neighbours[fill[from]++] = forward ? t.target : t.source;
  }
  return adj;
}

std::vector<bool> search(const Nfa& a, State start, bool forward) {
  const Adjacency adj = build_adjacency(a, forward);
  std::vector<bool> seen(a.state_count(), false);
  std::vector<State> stack{start};
  seen[start] = true;
  while (!stack.empty()) {
    const State q = stack.back();
    stack.pop_back();
    for (std::uint32_t i = adj.offsets[q]; i < adj.offsets[q + 1]; ++i) {
      const State r = adj.neighbours[i];
      if (!seen[r]) {
        seen[r] = true;
        stack.push_back(r);
      }
    }
  }
  return seen;
}

}  // namespace

Nfa::Nfa(std::size_t state_count, Symbol sigma, State initial, State accepting,
         std::vector<Transition> transitions)
    : state_count_(state_count),
      sigma_(sigma),
      initial_(initial),
      accepting_(accepting),
      transitions_(std::move(transitions)) {
  if (state_count_ == 0) throw std::invalid_argument("automaton needs at least one state");
  if (state_count_ > kNoState) throw std::invalid_argument("too many states");
  if (initial_ >= state_count_ || accepting_ >= state_count_) {
    throw std::invalid_argument("initial or final state out of range");
  }
  for (const Transition& t : transitions_) {
    if (t.source >= state_count_ || t.target >= state_count_) {
      throw std::invalid_argument("transition endpoint out of range");
    }
    if (t.label > sigma_) throw std::invalid_argument("transition label exceeds sigma");
  }
}

Nfa Nfa::empty(Symbol sigma) { return Nfa(2, sigma, 0, 1, {}); }

std::vector<bool> reachable_from(const Nfa& a, State start) { return search(a, start, true); }

std::vector<bool> coreachable_to(const Nfa& a, State goal) { return search(a, goal, false); }

Nfa trim(const Nfa& a) {
  const std::vector<bool> forward = reachable_from(a, a.initial());
  if (!forward[a.accepting()]) return Nfa::empty(a.sigma());
  const std::vector<bool> backward = coreachable_to(a, a.accepting());

  std::vector<State> renumber(a.state_count(), kNoState);
  State next = 0;
  for (State q = 0; q < a.state_count(); ++q) {
    if (forward[q] && backward[q]) renumber[q] = next++;
  }
  std::vector<Transition> kept;
  kept.reserve(a.size());
  for (const Transition& t : a.transitions()) {
    if (renumber[t.source] != kNoState && renumber[t.target] != kNoState) {
      kept.push_back({renumber[t.source], t.label, renumber[t.target]});
    }
  }
  return Nfa(next, a.sigma(), renumber[a.initial()], renumber[a.accepting()], std::move(kept));
}

Nfa with_single_final(std::size_t state_count, Symbol sigma, State initial,
                      std::span<const State> finals, std::vector<Transition> transitions) {
  const State fresh = static_cast<State>(state_count);
  for (State f : finals) {
    if (f >= state_count) throw std::invalid_argument("final state out of range");
    transitions.push_back({f, kEpsilon, fresh});
  }
  return Nfa(state_count + 1, sigma, initial, fresh, std::move(transitions));
}

std::size_t symbol_target_count(const Nfa& a) {
  std::vector<bool> seen(a.state_count(), false);
  seen[a.initial()] = true;
  std::size_t count = 1;
  for (const Transition& t : a.transitions()) {
    if (!t.is_epsilon() && !seen[t.target]) {
      seen[t.target] = true;
      ++count;
    }
  }
  return count;
}

}  // namespace relmatch
