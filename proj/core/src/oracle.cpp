#include "relmatch/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace relmatch::oracle {

namespace {

bool is_subsequence(WordView small, WordView big) {
  std::size_t j = 0;
  for (std::size_t i = 0; i < big.size() && j < small.size(); ++i) {
    if (big[i] == small[j]) ++j;
  }
  return j == small.size();
}

bool is_infix(WordView small, WordView big) {
  if (small.size() > big.size()) return false;
  for (std::size_t i = 0; i + small.size() <= big.size(); ++i) {
    if (std::equal(small.begin(), small.end(), big.begin() + static_cast<std::ptrdiff_t>(i))) return true;
  }
  return false;
}

bool is_prefix(WordView small, WordView big) {
  return small.size() <= big.size() && std::equal(small.begin(), small.end(), big.begin());
}

bool is_suffix(WordView small, WordView big) {
  return small.size() <= big.size() &&
         std::equal(small.begin(), small.end(), big.end() - static_cast<std::ptrdiff_t>(small.size()));
}

using NaiveSet = std::set<State>;

NaiveSet closure(const Nfa& a, NaiveSet s) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Transition& t : a.transitions()) {
      if (t.label == kEpsilon && s.count(t.source) != 0 && s.insert(t.target).second) changed = true;
    }
  }
  return s;
}

NaiveSet advance(const Nfa& a, const NaiveSet& s, Symbol c) {
  NaiveSet next;
  for (const Transition& t : a.transitions()) {
    if (t.label == c && s.count(t.source) != 0) next.insert(t.target);
  }
  return closure(a, std::move(next));
}

// Progress of a growing string u towards "u R w" for the infinite relations.
class Progress {
 public:
  Progress(WordView w, Relation rel) : w_(w), rel_(rel) {}

  std::size_t initial() const {
    if (rel_ == Relation::kExtension && w_.empty()) return found();
    return 0;
  }

  std::size_t next(std::size_t p, Symbol c) const {
    switch (rel_) {
      case Relation::kSupersequence:
        return p < w_.size() && w_[p] == c ? p + 1 : p;
      case Relation::kLeftExtension:
        return border(p, c);
      default: {
        if (p == found()) return p;
        const std::size_t k = border(p, c);
        return k == w_.size() ? found() : k;
      }
    }
  }

  bool done(std::size_t p) const {
    return rel_ == Relation::kExtension ? p == found() : p == w_.size();
  }

 private:
  std::size_t found() const { return w_.size() + 1; }

  // Longest k with w[0..k) a suffix of w[0..p) c.
  std::size_t border(std::size_t p, Symbol c) const {
    Word s(w_.begin(), w_.begin() + static_cast<std::ptrdiff_t>(p));
    s.push_back(c);
    for (std::size_t k = std::min(w_.size(), s.size());; --k) {
      if (is_suffix(w_.first(k), s)) return k;
      if (k == 0) return 0;
    }
  }

  WordView w_;
  Relation rel_;
};

// Reachable part of (state set, progress) nodes under symbols 1..alphabet.
struct Quotient {
  struct Node {
    NaiveSet states;
    std::size_t progress;
    std::size_t parent;
    Symbol symbol;
  };
  std::vector<Node> nodes;
  std::vector<std::vector<std::size_t>> successors;  // successors[v][c-1], or npos when dropped
};

constexpr std::size_t kNpos = static_cast<std::size_t>(-1);

Quotient explore(const Nfa& a, WordView w, Relation rel, Symbol alphabet, bool keep_empty) {
  const Progress progress(w, rel);
  Quotient q;
  std::map<std::pair<NaiveSet, std::size_t>, std::size_t> ids;
  q.nodes.push_back({closure(a, {a.initial()}), progress.initial(), kNpos, kEpsilon});
  ids[{q.nodes[0].states, q.nodes[0].progress}] = 0;
  for (std::size_t v = 0; v < q.nodes.size(); ++v) {
    q.successors.emplace_back(alphabet, kNpos);
    for (Symbol c = 1; c <= alphabet; ++c) {
      NaiveSet next = advance(a, q.nodes[v].states, c);
      if (next.empty() && !keep_empty) continue;
      const std::size_t p = progress.next(q.nodes[v].progress, c);
      auto [it, fresh] = ids.try_emplace({next, p}, q.nodes.size());
      if (fresh) q.nodes.push_back({std::move(next), p, v, c});
      q.successors[v][c - 1] = it->second;
    }
  }
  return q;
}

Word path_to(const Quotient& q, std::size_t v) {
  Word u;
  for (; q.nodes[v].parent != kNpos; v = q.nodes[v].parent) u.push_back(q.nodes[v].symbol);
  std::reverse(u.begin(), u.end());
  return u;
}

LengthAnswer quotient_optimum(const Nfa& a, WordView w, Relation rel, Optimum mode) {
  const Progress progress(w, rel);
  const Quotient q = explore(a, w, rel, a.sigma(), false);
  const std::size_t n = q.nodes.size();
  auto accepting = [&](std::size_t v) {
    return q.nodes[v].states.count(a.accepting()) != 0 && progress.done(q.nodes[v].progress);
  };

  if (mode == Optimum::kMin) {
    // Nodes were discovered breadth-first, so parent paths are shortest.
    for (std::size_t v = 0; v < n; ++v) {
      if (accepting(v)) return LengthAnswer::finite(path_to(q, v));
    }
    return LengthAnswer::no_match();
  }

  // Nodes that can still reach acceptance.
  std::vector<std::vector<std::size_t>> predecessors(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t u : q.successors[v]) {
      if (u != kNpos) predecessors[u].push_back(v);
    }
  }
  std::vector<bool> useful(n, false);
  std::vector<std::size_t> stack;
  for (std::size_t v = 0; v < n; ++v) {
    if (accepting(v)) {
      useful[v] = true;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t u : predecessors[v]) {
      if (!useful[u]) {
        useful[u] = true;
        stack.push_back(u);
      }
    }
  }
  if (!useful[0]) return LengthAnswer::no_match();

  // A cycle through useful nodes pumps; otherwise take a longest path.
  std::vector<int> colour(n, 0);
  std::vector<long long> best(n, -1);
  std::vector<std::size_t> choice(n, kNpos);
  std::vector<Symbol> choice_symbol(n, kEpsilon);
  bool cycle = false;
  std::function<void(std::size_t)> visit = [&](std::size_t v) {
    colour[v] = 1;
    best[v] = accepting(v) ? 0 : -1;
    for (Symbol c = 1; c <= a.sigma(); ++c) {
      const std::size_t u = q.successors[v][c - 1];
      if (u == kNpos || !useful[u]) continue;
      if (colour[u] == 1) {
        cycle = true;
        continue;
      }
      if (colour[u] == 0) visit(u);
      if (best[u] >= 0 && best[u] + 1 > best[v]) {
        best[v] = best[u] + 1;
        choice[v] = u;
        choice_symbol[v] = c;
      }
    }
    colour[v] = 2;
  };
  visit(0);
  if (cycle) return LengthAnswer::unbounded();

  Word u;
  for (std::size_t v = 0; choice[v] != kNpos; v = choice[v]) u.push_back(choice_symbol[v]);
  return LengthAnswer::finite(std::move(u));
}

}  // namespace

bool in_relation(WordView u, WordView w, Relation rel) {
  switch (rel) {
    case Relation::kEquality:
      return u.size() == w.size() && std::equal(u.begin(), u.end(), w.begin());
    case Relation::kPrefix:
      return is_prefix(u, w);
    case Relation::kInfix:
      return is_infix(u, w);
    case Relation::kExtension:
      return is_infix(w, u);
    case Relation::kLeftExtension:
      return is_suffix(w, u);
    case Relation::kSubsequence:
      return is_subsequence(u, w);
    case Relation::kSupersequence:
      return is_subsequence(w, u);
  }
  return false;
}

std::set<Word> enumerate_relation(WordView w, Relation rel, std::optional<std::size_t> max_len,
                                  Symbol sigma) {
  const std::size_t limit = max_len.value_or(w.size());
  std::set<Word> out;
  if (is_infinite(rel)) {
    if (!max_len) throw std::invalid_argument("max_len is required for infinite relations");
    // Every string over 1..sigma up to the limit, then filter.
    Word u;
    std::function<void()> grow = [&] {
      if (in_relation(u, w, rel)) out.insert(u);
      if (u.size() == limit) return;
      for (Symbol c = 1; c <= sigma; ++c) {
        u.push_back(c);
        grow();
        u.pop_back();
      }
    };
    grow();
    return out;
  }
  switch (rel) {
    case Relation::kEquality:
      out.insert(Word(w.begin(), w.end()));
      break;
    case Relation::kPrefix:
      for (std::size_t i = 0; i <= w.size(); ++i) out.insert(Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i)));
      break;
    case Relation::kInfix:
      out.insert(Word{});
      for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j <= w.size(); ++j) {
          out.insert(Word(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(j)));
        }
      }
      break;
    case Relation::kSubsequence: {
      if (w.size() > 24) throw std::invalid_argument("word too long for subsequence enumeration");
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << w.size()); ++mask) {
        Word u;
        for (std::size_t i = 0; i < w.size(); ++i) {
          if ((mask >> i) & 1U) u.push_back(w[i]);
        }
        out.insert(std::move(u));
      }
      break;
    }
    default:
      break;
  }
  std::erase_if(out, [&](const Word& u) { return u.size() > limit; });
  return out;
}

bool naive_accepts(const Nfa& a, WordView u) {
  NaiveSet s = closure(a, {a.initial()});
  for (Symbol c : u) s = advance(a, s, c);
  return s.count(a.accepting()) != 0;
}

LengthAnswer brute_quantitative(const Nfa& a, WordView w, Relation rel, Optimum mode) {
  if (is_infinite(rel)) return quotient_optimum(a, w, rel, mode);
  const Word* chosen = nullptr;
  const std::set<Word> candidates = enumerate_relation(w, rel, std::nullopt, a.sigma());
  for (const Word& u : candidates) {
    if (!naive_accepts(a, u)) continue;
    if (chosen == nullptr || (mode == Optimum::kMin ? u.size() < chosen->size() : u.size() > chosen->size())) {
      chosen = &u;
    }
  }
  if (chosen == nullptr) return LengthAnswer::no_match();
  return LengthAnswer::finite(*chosen);
}

bool brute_match(const Nfa& a, WordView w, Relation rel) {
  return brute_quantitative(a, w, rel, Optimum::kMin).kind != LengthAnswer::Kind::kNoMatch;
}

bool brute_universal(const Nfa& a, WordView w, Relation rel, std::optional<std::size_t> max_len) {
  if (!is_infinite(rel) || max_len) {
    Symbol sigma = a.sigma();
    for (Symbol c : w) sigma = std::max(sigma, c);
    for (const Word& u : enumerate_relation(w, rel, max_len, sigma)) {
      if (!naive_accepts(a, u)) return false;
    }
    return true;
  }
  // Infinite relation without a bound: a rejected related string exists iff
  // some reachable quotient node has completed progress but no final state.
  Symbol sigma = a.sigma();
  for (Symbol c : w) sigma = std::max(sigma, c);
  const Progress progress(w, rel);
  const Quotient q = explore(a, w, rel, sigma, true);
  for (const auto& node : q.nodes) {
    if (progress.done(node.progress) && node.states.count(a.accepting()) == 0) return false;
  }
  return true;
}

std::pair<std::size_t, std::size_t> lcs_scs_dp(WordView u, WordView v) {
  std::vector<std::vector<std::size_t>> lcs(u.size() + 1, std::vector<std::size_t>(v.size() + 1, 0));
  for (std::size_t i = 1; i <= u.size(); ++i) {
    for (std::size_t j = 1; j <= v.size(); ++j) {
      lcs[i][j] = u[i - 1] == v[j - 1] ? lcs[i - 1][j - 1] + 1 : std::max(lcs[i - 1][j], lcs[i][j - 1]);
    }
  }
  // Shortest common supersequence by its own recurrence.
  std::vector<std::vector<std::size_t>> scs(u.size() + 1, std::vector<std::size_t>(v.size() + 1, 0));
  for (std::size_t i = 0; i <= u.size(); ++i) {
    for (std::size_t j = 0; j <= v.size(); ++j) {
      if (i == 0 || j == 0) {
        scs[i][j] = i + j;
      } else if (u[i - 1] == v[j - 1]) {
        scs[i][j] = scs[i - 1][j - 1] + 1;
      } else {
        scs[i][j] = std::min(scs[i - 1][j], scs[i][j - 1]) + 1;
      }
    }
  }
  const std::size_t p = lcs[u.size()][v.size()];
  const std::size_t q = scs[u.size()][v.size()];
  if (p + q != u.size() + v.size()) throw std::logic_error("lcs + scs != |u| + |v|");
  return {p, q};
}

}  // namespace relmatch::oracle
