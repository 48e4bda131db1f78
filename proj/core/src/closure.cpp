#include "relmatch/closure.hpp"

#include <algorithm>

#include "relmatch/scc.hpp"
#include "relmatch/transition_index.hpp"

namespace relmatch {

Nfa upward_automaton(const Nfa& a) {
  std::vector<Transition> transitions(a.transitions().begin(), a.transitions().end());
  transitions.reserve(transitions.size() + a.state_count() * a.sigma());
  for (State p = 0; p < a.state_count(); ++p) {
    for (Symbol b = 1; b <= a.sigma(); ++b) transitions.push_back({p, b, p});
  }
  return Nfa(a.state_count(), a.sigma(), a.initial(), a.accepting(), std::move(transitions));
}

Nfa downward_automaton(const Nfa& a) {
  std::vector<Transition> transitions(a.transitions().begin(), a.transitions().end());
  for (const Transition& t : a.transitions()) {
    if (!t.is_epsilon()) transitions.push_back({t.source, kEpsilon, t.target});
  }
  return Nfa(a.state_count(), a.sigma(), a.initial(), a.accepting(), std::move(transitions));
}

Condensation condense(const Nfa& a) {
  const std::size_t n = a.state_count();
  std::vector<std::uint32_t> offsets(n + 1, 0);
  for (const Transition& t : a.transitions()) ++offsets[t.source + 1];
  for (std::size_t q = 0; q < n; ++q) offsets[q + 1] += offsets[q];
  std::vector<std::uint32_t> targets(a.size());
  std::vector<std::uint32_t> fill(offsets.begin(), offsets.end() - 1);
  for (const Transition& t : a.transitions()) targets[fill[t.source]++] = t.target;

  const SccResult scc = strongly_connected_components(CsrView{offsets, targets});

  std::vector<Transition> mapped;
  mapped.reserve(a.size());
  for (const Transition& t : a.transitions()) {
    mapped.push_back({scc.component[t.source], t.label, scc.component[t.target]});
  }
  mapped = sort_transitions(mapped, scc.count, a.sigma());
  mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());

  Condensation result{
      std::vector<State>(scc.component.begin(), scc.component.end()),
      Nfa(scc.count, a.sigma(), scc.component[a.initial()], scc.component[a.accepting()],
          std::move(mapped))};
  return result;
}

}  // namespace relmatch
