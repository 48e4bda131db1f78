#include "relmatch/workload.hpp"

#include <algorithm>
#include <stdexcept>

namespace relmatch {

Nfa random_nfa(std::size_t n, Symbol sigma, std::size_t m, double epsilon_share, std::mt19937_64& rng) {
  if (n == 0) throw std::invalid_argument("random_nfa needs at least one state");
  std::uniform_int_distribution<State> state(0, static_cast<State>(n - 1));
  std::uniform_int_distribution<Symbol> symbol(1, std::max<Symbol>(sigma, 1));
  std::bernoulli_distribution epsilon(sigma == 0 ? 1.0 : epsilon_share);
  std::vector<Transition> transitions;
  transitions.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const State p = state(rng);
    const Symbol a = epsilon(rng) ? kEpsilon : symbol(rng);
    transitions.push_back({p, a, state(rng)});
  }
  return Nfa(n, sigma, 0, static_cast<State>(n - 1), std::move(transitions));
}

Nfa bench_automaton(std::size_t m, Symbol sigma, std::uint64_t seed) {
  if (sigma < 2) throw std::invalid_argument("bench_automaton needs sigma >= 2");
  const std::size_t n = std::max<std::size_t>(m / 16, 3);
  const State qf = static_cast<State>(n - 1);
  const State last = static_cast<State>(n - 2);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<State> state(0, last);
  std::uniform_int_distribution<Symbol> symbol(1, sigma - 1);
  std::bernoulli_distribution epsilon(1.0 / 16);

  std::vector<Transition> transitions;
  transitions.reserve(std::max(m, n + 1));
  for (State q = 0; q < last; ++q) transitions.push_back({q, symbol(rng), q + 1});
  transitions.push_back({last, symbol(rng), 0});
  transitions.push_back({last, sigma, qf});
  while (transitions.size() < m) {
    const State p = state(rng);
    transitions.push_back({p, epsilon(rng) ? kEpsilon : symbol(rng), state(rng)});
  }
  return Nfa(n, sigma, 0, qf, std::move(transitions));
}

Word random_word(std::size_t length, Symbol lo, Symbol hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<Symbol> symbol(lo, hi);
  Word w(length);
  for (Symbol& a : w) a = symbol(rng);
  return w;
}

}  // namespace relmatch
