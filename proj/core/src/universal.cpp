#include "relmatch/universal.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>

#include "relmatch/simulation.hpp"
#include "relmatch/transition_index.hpp"

namespace relmatch {

std::string_view to_string(UniversalResult::Verdict v) {
  switch (v) {
    case UniversalResult::Verdict::kHolds:
      return "true";
    case UniversalResult::Verdict::kFails:
      return "false";
    case UniversalResult::Verdict::kCapExceeded:
      return "cap-exceeded";
  }
  return "false";
}

namespace {

using Verdict = UniversalResult::Verdict;

// Length of the shortest rejected prefix of w, if any.
std::optional<std::size_t> first_rejected_prefix(const TransitionIndex& index, WordView w) {
  StateSetSimulator sim(index);
  sim.start();
  if (!sim.accepting()) return 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    sim.step(w[i]);
    if (!sim.accepting()) return i + 1;
  }
  return std::nullopt;
}

UniversalResult fails_with(WordView u, std::uint64_t explored) {
  return {Verdict::kFails, Word(u.begin(), u.end()), explored};
}

UniversalResult check_prefix(const TransitionIndex& index, WordView w) {
  if (auto bad = first_rejected_prefix(index, w)) return fails_with(w.first(*bad), *bad + 1);
  return {Verdict::kHolds, std::nullopt, w.size() + 1};
}

UniversalResult check_infix(const TransitionIndex& index, WordView w) {
  std::uint64_t explored = 0;
  for (std::size_t i = 0; i <= w.size(); ++i) {
    const WordView suffix = w.subspan(i);
    if (auto bad = first_rejected_prefix(index, suffix)) {
      return fails_with(suffix.first(*bad), explored + *bad + 1);
    }
    explored += suffix.size() + 1;
  }
  return {Verdict::kHolds, std::nullopt, explored};
}

void step_set(const TransitionIndex& index, const StateSet& from, Symbol a, StateSet& to) {
  to.clear();
  for (State q : from.members()) {
    for (const Transition& t : index.outgoing(q, a)) to.insert(t.target);
  }
  epsilon_closure(index, to);
}

UniversalResult check_subsequence(const TransitionIndex& index, WordView w, std::uint64_t cap) {
  constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);
  std::vector<Symbol> symbols(w.begin(), w.end());
  std::sort(symbols.begin(), symbols.end());
  symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  const std::size_t k = symbols.size();

  // next[i * k + c]: first position >= i holding symbols[c].
  std::vector<std::uint32_t> next((w.size() + 1) * k, kNone);
  for (std::size_t i = w.size(); i-- > 0;) {
    std::copy_n(next.begin() + static_cast<std::ptrdiff_t>((i + 1) * k), k,
                next.begin() + static_cast<std::ptrdiff_t>(i * k));
    const auto c = std::lower_bound(symbols.begin(), symbols.end(), w[i]) - symbols.begin();
    next[i * k + static_cast<std::size_t>(c)] = static_cast<std::uint32_t>(i);
  }

  std::vector<StateSet> sets(w.size() + 1, StateSet(index.state_count()));
  sets[0].insert(index.initial());
  epsilon_closure(index, sets[0]);
  std::uint64_t explored = 1;
  Word current;
  if (!sets[0].contains(index.accepting())) return fails_with(current, explored);

  struct Frame {
    std::uint32_t position;
    std::uint32_t next_symbol;
  };
  std::vector<Frame> stack{{0, 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next_symbol == k) {
      stack.pop_back();
      if (!current.empty()) current.pop_back();
      continue;
    }
    const std::uint32_t c = f.next_symbol++;
    const std::uint32_t j = next[f.position * k + c];
    if (j == kNone) continue;
    const std::size_t depth = current.size();
    step_set(index, sets[depth], symbols[c], sets[depth + 1]);
    current.push_back(symbols[c]);
    if (++explored > cap) return {Verdict::kCapExceeded, std::nullopt, explored};
    if (!sets[depth + 1].contains(index.accepting())) return fails_with(current, explored);
    stack.push_back({j + 1, 0});
  }
  return {Verdict::kHolds, std::nullopt, explored};
}

// Inclusion of the related-strings automaton B in L(a). B has states 0..|w|
// with the chain i -w[i]-> i+1 and Σ-loops where the relation allows padding.
UniversalResult check_inclusion(const TransitionIndex& index, WordView w, Relation rel,
                                std::uint64_t cap) {
  const std::size_t len = w.size();
  Symbol sigma = index.sigma();
  for (Symbol a : w) sigma = std::max(sigma, a);

  auto has_loop = [&](std::size_t b) {
    switch (rel) {
      case Relation::kSupersequence:
        return true;
      case Relation::kExtension:
        return b == 0 || b == len;
      case Relation::kLeftExtension:
        return b == 0;
      default:
        return false;
    }
  };

  std::map<std::vector<State>, std::uint32_t> subset_ids;
  std::vector<std::vector<State>> subsets;
  auto intern = [&](std::vector<State> s) -> std::optional<std::uint32_t> {
    auto it = subset_ids.find(s);
    if (it != subset_ids.end()) return it->second;
    if (subsets.size() >= cap) return std::nullopt;
    const auto id = static_cast<std::uint32_t>(subsets.size());
    subset_ids.emplace(s, id);
    subsets.push_back(std::move(s));
    return id;
  };

  struct Node {
    std::uint32_t b;
    std::uint32_t subset;
    std::uint32_t parent;
    Symbol symbol;
  };
  std::vector<Node> nodes;
  std::unordered_set<std::uint64_t> seen;
  auto key = [&](std::uint32_t b, std::uint32_t subset) {
    return static_cast<std::uint64_t>(subset) * (len + 1) + b;
  };
  auto rebuild = [&](std::uint32_t at) {
    Word u;
    for (std::uint32_t v = at; v != 0; v = nodes[v].parent) u.push_back(nodes[v].symbol);
    std::reverse(u.begin(), u.end());
    return u;
  };

  const State qf = index.accepting();
  StateSetSimulator sim(index);
  sim.start();
  const auto start = intern(sim.active().sorted());
  if (!start) return {Verdict::kCapExceeded, std::nullopt, subsets.size()};
  nodes.push_back({0, *start, 0, kEpsilon});
  seen.insert(key(0, *start));

  for (std::uint32_t at = 0; at < nodes.size(); ++at) {
    const Node node = nodes[at];
    const std::vector<State> subset = subsets[node.subset];
    if (node.b == len && !std::binary_search(subset.begin(), subset.end(), qf)) {
      return fails_with(rebuild(at), subsets.size());
    }
    for (Symbol a = 1; a <= sigma; ++a) {
      std::uint32_t successors[2];
      int count = 0;
      if (has_loop(node.b)) successors[count++] = node.b;
      if (node.b < len && w[node.b] == a) successors[count++] = node.b + 1;
      if (count == 0) continue;
      sim.start_from(subset);
      sim.step(a);
      const auto next = intern(sim.active().sorted());
      if (!next) return {Verdict::kCapExceeded, std::nullopt, subsets.size()};
      for (int s = 0; s < count; ++s) {
        if (seen.insert(key(successors[s], *next)).second) {
          nodes.push_back({successors[s], *next, at, a});
        }
      }
    }
  }
  return {Verdict::kHolds, std::nullopt, subsets.size()};
}

}  // namespace

bool universal_prefix(const Nfa& a, WordView w) {
  const TransitionIndex index(trim(a));
  return !first_rejected_prefix(index, w).has_value();
}

bool universal_infix(const Nfa& a, WordView w) {
  for (std::size_t i = 0; i <= w.size(); ++i) {
    if (!universal_prefix(a, w.subspan(i))) return false;
  }
  return true;
}

UniversalResult universal_bounded(const Nfa& a, WordView w, Relation rel, std::uint64_t cap) {
  const TransitionIndex index(trim(a));
  switch (rel) {
    case Relation::kSubsequence:
      return check_subsequence(index, w, cap);
    case Relation::kSupersequence:
    case Relation::kExtension:
    case Relation::kLeftExtension:
      return check_inclusion(index, w, rel, cap);
    default:
      throw std::invalid_argument("universal_bounded handles subsequence, supersequence, "
                                  "extension and left-extension");
  }
}

UniversalResult universal_check(const Nfa& a, WordView w, Relation rel, std::uint64_t cap) {
  switch (rel) {
    case Relation::kEquality: {
      const TransitionIndex index(trim(a));
      if (simulate_membership(index, w)) return {Verdict::kHolds, std::nullopt, 1};
      return fails_with(w, 1);
    }
    case Relation::kPrefix:
      return check_prefix(TransitionIndex(trim(a)), w);
    case Relation::kInfix:
      return check_infix(TransitionIndex(trim(a)), w);
    default:
      return universal_bounded(a, w, rel, cap);
  }
}

}  // namespace relmatch
