#include "relmatch/simulation.hpp"

namespace relmatch {

std::uint64_t epsilon_closure(const TransitionIndex& index, StateSet& set, std::size_t from) {
  std::uint64_t work = 0;
  // The member list grows while we scan it: a FIFO queue for free.
  for (std::size_t i = from; i < set.size(); ++i) {
    const State q = set.members()[i];
    for (const Transition& t : index.outgoing(q, kEpsilon)) {
      ++work;
      set.insert(t.target);
    }
  }
  return work;
}

std::vector<State> epsilon_closure(const TransitionIndex& index, std::span<const State> seeds) {
  StateSet set(index.state_count());
  for (State q : seeds) set.insert(q);
  epsilon_closure(index, set);
  return set.sorted();
}

StateSetSimulator::StateSetSimulator(const TransitionIndex& index)
    : index_(&index), current_(index.state_count()), next_(index.state_count()) {}

void StateSetSimulator::start() {
  current_.clear();
  current_.insert(index_->initial());
  work_ += epsilon_closure(*index_, current_);
}

void StateSetSimulator::start_from(std::span<const State> seeds) {
  current_.clear();
  for (State q : seeds) current_.insert(q);
  work_ += epsilon_closure(*index_, current_);
}

void StateSetSimulator::step(Symbol a) {
  next_.clear();
  if (a != kEpsilon) {
    for (State q : current_.members()) {
      for (const Transition& t : index_->outgoing(q, a)) {
        ++work_;
        next_.insert(t.target);
      }
    }
  }
  work_ += epsilon_closure(*index_, next_);
  std::swap(current_, next_);
}

void StateSetSimulator::add_and_close(State q) {
  const std::size_t from = current_.size();
  if (current_.insert(q)) work_ += epsilon_closure(*index_, current_, from);
}

bool simulate_membership(const TransitionIndex& index, WordView w, SimulationTrace* trace) {
  StateSetSimulator sim(index);
  sim.start();
  if (trace != nullptr) {
    trace->clear();
    trace->push_back(sim.active().sorted());
  }
  for (Symbol a : w) {
    sim.step(a);
    if (trace != nullptr) {
      trace->push_back(sim.active().sorted());
    } else if (sim.dead()) {
      return false;
    }
  }
  return sim.accepting();
}

bool simulate_membership(const Nfa& a, WordView w, SimulationTrace* trace) {
  const TransitionIndex index(a);
  return simulate_membership(index, w, trace);
}

}  // namespace relmatch
