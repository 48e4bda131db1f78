#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "relmatch/lazy_array.hpp"
#include "relmatch/nfa.hpp"
#include "relmatch/simulation.hpp"
#include "relmatch/state_set.hpp"
#include "relmatch/transition_index.hpp"
#include "relmatch/workload.hpp"
#include "support.hpp"

using namespace relmatch;
using namespace relmatch::testing;

namespace {

std::vector<Transition> sorted_copy(std::span<const Transition> ts) {
  std::vector<Transition> v(ts.begin(), ts.end());
  std::sort(v.begin(), v.end(), [](const Transition& x, const Transition& y) {
    return std::tie(x.source, x.label, x.target) < std::tie(y.source, y.label, y.target);
  });
  return v;
}

}  // namespace

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(Nfa(0, 1, 0, 0, {}), std::invalid_argument);
  CHECK_THROWS_AS(Nfa(2, 1, 0, 2, {}), std::invalid_argument);
  CHECK_THROWS_AS(Nfa(2, 1, 0, 1, {{0, 2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Nfa(2, 1, 0, 1, {{0, 1, 5}}), std::invalid_argument);
  CHECK_NOTHROW(Nfa(2, 1, 0, 1, {{0, 1, 1}, {1, kEpsilon, 0}}));
  CHECK(Nfa::empty(3).is_canonical_empty());
  CHECK(Nfa::empty(3).sigma() == 3);
}

TEST_CASE("trim removes dead branches") {
  // 0 -a-> 1 -b-> 2(final), 1 -a-> 3 (dead), 4 unreachable -> 2.
  const Nfa a(5, 2, 0, 2, {{0, 1, 1}, {1, 2, 2}, {1, 1, 3}, {4, 1, 2}, {3, 2, 3}});
  const Nfa t = trim(a);
  CHECK(t.state_count() == 3);
  CHECK(t.size() == 2);
  for (const Word& u : all_words(2, 4)) CHECK(simulate_membership(a, u) == simulate_membership(t, u));
  CHECK(trim(t) == t);
}

TEST_CASE("trim of an empty language") {
  const Nfa a(3, 2, 0, 2, {{0, 1, 1}, {1, 2, 1}});
  const Nfa t = trim(a);
  CHECK(t.is_canonical_empty());
  for (const Word& u : all_words(2, 3)) CHECK_FALSE(simulate_membership(t, u));
}

TEST_CASE("trim is idempotent on 1000 random automata") {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 1000; ++iter) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
    const std::size_t m = std::uniform_int_distribution<std::size_t>(0, 30)(rng);
    const Nfa a = random_nfa(n, 3, m, 0.2, rng);
    const Nfa t = trim(a);
    REQUIRE(trim(t) == t);
    if (!t.is_canonical_empty()) {
      CHECK(t.state_count() <= 2 * t.size() + 2);
    }
  }
}

TEST_CASE("with_single_final") {
  const std::vector<State> finals{1, 2};
  const Nfa a = with_single_final(3, 2, 0, finals, {{0, 1, 1}, {0, 2, 2}});
  CHECK(a.state_count() == 4);
  CHECK(a.accepting() == 3);
  CHECK(simulate_membership(a, Word{1}));
  CHECK(simulate_membership(a, Word{2}));
  CHECK_FALSE(simulate_membership(a, Word{}));
}

TEST_CASE("text format") {
  const Nfa a(3, 2, 0, 2, {{0, 1, 1}, {1, kEpsilon, 2}, {2, 2, 2}});
  const std::string text = to_text(a);
  CHECK(text == "nfa 3 2 1 3\n1 1 2\n2 e 3\n3 2 3\n");
  CHECK(parse_nfa_text(text) == a);
  CHECK(parse_nfa_text("\n  nfa 2 1 1 2 \n\n1 1 2\n") == Nfa(2, 1, 0, 1, {{0, 1, 1}}));

  CHECK_THROWS_AS(parse_nfa_text(""), NfaFormatError);
  CHECK_THROWS_AS(parse_nfa_text("dfa 2 1 1 2\n"), NfaFormatError);
  CHECK_THROWS_AS(parse_nfa_text("nfa 2 1 1 3\n"), NfaFormatError);
  CHECK_THROWS_AS(parse_nfa_text("nfa 2 1 1 2\n1 2 2\n"), NfaFormatError);
  CHECK_THROWS_AS(parse_nfa_text("nfa 2 1 1 2\n1 x 2\n"), NfaFormatError);
  CHECK_THROWS_AS(parse_nfa_text("nfa 2 1 1 2\n0 1 2\n"), NfaFormatError);
  try {
    parse_nfa_text("nfa 2 1 1 2\n1 1 2\n1 1\n");
    FAIL("expected an error");
  } catch (const NfaFormatError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("transition index orders self-loops first") {
  const Nfa a(2, 2, 0, 1, {{0, 1, 1}, {0, 1, 0}, {0, 2, 1}});
  const TransitionIndex idx(a);
  const auto t = idx.outgoing(0, 1);
  REQUIRE(t.size() == 2);
  CHECK(t[0] == Transition{0, 1, 0});
  CHECK(idx.has_self_loop(0, 1));
  CHECK_FALSE(idx.has_self_loop(0, 2));
  CHECK(idx.outgoing(1).empty());
  CHECK(idx.outgoing(1, 1).empty());
  CHECK(idx.outgoing(1, 2).empty());

  const auto l = idx.outgoing(0);
  REQUIRE(l.size() == 3);
  CHECK(l[0] == Transition{0, 1, 0});
  CHECK(l[1] == Transition{0, 1, 1});
  CHECK(l[2] == Transition{0, 2, 1});
}

TEST_CASE("epsilon-only automaton populates T[q, 0] only") {
  const Nfa a(3, 2, 0, 2, {{0, kEpsilon, 1}, {1, kEpsilon, 2}});
  const TransitionIndex idx(a);
  CHECK(idx.outgoing(0, kEpsilon).size() == 1);
  for (State q = 0; q < 3; ++q) {
    for (Symbol x = 1; x <= 2; ++x) CHECK(idx.outgoing(q, x).empty());
  }
}

TEST_CASE("T lists concatenate to L as multisets") {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 10)(rng);
    const Symbol sigma = std::uniform_int_distribution<Symbol>(1, 4)(rng);
    const Nfa a = random_nfa(n, sigma, 40, 0.2, rng);
    const TransitionIndex idx(a);
    std::vector<Transition> all;
    for (State q = 0; q < n; ++q) {
      std::vector<Transition> from_t;
      for (Symbol x = 0; x <= sigma; ++x) {
        const auto group = idx.outgoing(q, x);
        for (const Transition& t : group) {
          CHECK(t.source == q);
          CHECK(t.label == x);
        }
        bool loop = false;
        for (const Transition& t : group) loop = loop || t.is_self_loop();
        CHECK(idx.has_self_loop(q, x) == loop);
        from_t.insert(from_t.end(), group.begin(), group.end());
      }
      const auto l = idx.outgoing(q);
      CHECK(std::is_sorted(l.begin(), l.end(), [](const Transition& x, const Transition& y) {
        return std::tie(x.label, x.target) < std::tie(y.label, y.target);
      }));
      CHECK(sorted_copy(from_t) == sorted_copy(l));
      CHECK(idx.sorted_transitions().subspan(idx.first_id(q), l.size()).data() == l.data());
      all.insert(all.end(), l.begin(), l.end());
    }
    CHECK(sorted_copy(all) == sorted_copy(a.transitions()));
  }
}

TEST_CASE("LazyArray matches a fully initialised array") {
  std::mt19937_64 rng(9);
  constexpr std::size_t kSize = 1000;
  LazyArray<std::uint32_t> lazy(kSize);
  std::vector<std::optional<std::uint32_t>> ref(kSize);
  std::uniform_int_distribution<std::size_t> cell(0, kSize - 1);
  std::uniform_int_distribution<int> op(0, 999);
  for (int i = 0; i < 100000; ++i) {
    const int o = op(rng);
    const std::size_t c = cell(rng);
    if (o < 450) {
      const auto v = static_cast<std::uint32_t>(rng());
      lazy.set(c, v);
      ref[c] = v;
    } else if (o < 998) {
      REQUIRE(lazy.is_set(c) == ref[c].has_value());
      if (ref[c]) REQUIRE(*lazy.find(c) == *ref[c]);
      REQUIRE(lazy.value_or(c, 7) == ref[c].value_or(7));
    } else {
      lazy.reset();
      std::fill(ref.begin(), ref.end(), std::nullopt);
    }
  }
}

TEST_CASE("PairTable dense and sparse") {
  PairTable<int> dense(4, 3);
  PairTable<int> sparse(std::size_t{1} << 20, std::size_t{1} << 20);
  for (PairTable<int>* t : {&dense, &sparse}) {
    CHECK(t->find(1, 2) == nullptr);
    t->set(1, 2, 5);
    REQUIRE(t->find(1, 2) != nullptr);
    CHECK(*t->find(1, 2) == 5);
    CHECK(t->find(2, 1) == nullptr);
    t->reset();
    CHECK(t->find(1, 2) == nullptr);
  }
}

TEST_CASE("StateSet") {
  StateSet s(6);
  CHECK(s.insert(3));
  CHECK_FALSE(s.insert(3));
  CHECK(s.insert(1));
  CHECK(s.insert(5));
  CHECK(s.size() == 3);
  CHECK(s.erase(3));
  CHECK_FALSE(s.erase(3));
  CHECK_FALSE(s.contains(3));
  CHECK(s.sorted() == std::vector<State>{1, 5});
  // Members list holds each member exactly once.
  for (State q = 0; q < 6; ++q) {
    const auto m = s.members();
    CHECK(std::count(m.begin(), m.end(), q) == (s.contains(q) ? 1 : 0));
  }
  s.clear();
  CHECK(s.empty());
  CHECK_FALSE(s.contains(1));
  s.fill_all();
  CHECK(s.size() == 6);
}
