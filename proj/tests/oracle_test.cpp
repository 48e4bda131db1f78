#include <doctest.h>

#include <random>

#include "relmatch/closure.hpp"
#include "relmatch/oracle.hpp"
#include "relmatch/workload.hpp"
#include "support.hpp"

using namespace relmatch;
using namespace relmatch::testing;
using relmatch::oracle::enumerate_relation;

namespace {

std::set<Word> words(std::initializer_list<const char*> list) {
  std::set<Word> out;
  for (const char* s : list) out.insert(word(s));
  return out;
}

}  // namespace

TEST_CASE("in_relation definitions") {
  using oracle::in_relation;
  CHECK(in_relation(word("ab"), word("ab"), Relation::kEquality));
  CHECK(in_relation(word("b"), word("abc"), Relation::kInfix));
  CHECK_FALSE(in_relation(word("ac"), word("abc"), Relation::kInfix));
  CHECK(in_relation(word("ab"), word("abc"), Relation::kPrefix));
  CHECK(in_relation(word("xabcx"), word("abc"), Relation::kExtension));
  CHECK(in_relation(word("xabc"), word("abc"), Relation::kLeftExtension));
  CHECK_FALSE(in_relation(word("abcx"), word("abc"), Relation::kLeftExtension));
  CHECK(in_relation(word("ac"), word("abc"), Relation::kSubsequence));
  CHECK(in_relation(word("xaybzc"), word("abc"), Relation::kSupersequence));
  CHECK_FALSE(in_relation(word("cab"), word("abc"), Relation::kSupersequence));
}

TEST_CASE("enumerate_relation examples") {
  CHECK(enumerate_relation(word("ab"), Relation::kPrefix, std::nullopt, 2) == words({"", "a", "ab"}));
  CHECK(enumerate_relation(word("ab"), Relation::kSubsequence, std::nullopt, 2) ==
        words({"", "a", "b", "ab"}));
  CHECK(enumerate_relation(word("a"), Relation::kSupersequence, 3, 1) == words({"a", "aa", "aaa"}));
  CHECK(enumerate_relation(word("a"), Relation::kLeftExtension, 2, 2) == words({"a", "aa", "ba"}));
  CHECK(enumerate_relation(word("ab"), Relation::kInfix, 1, 2) == words({"", "a", "b"}));
  CHECK_THROWS_AS(enumerate_relation(word("a"), Relation::kExtension, std::nullopt, 2), std::invalid_argument);
}

TEST_CASE("enumeration sizes and duality") {
  std::mt19937_64 rng(51);
  for (int iter = 0; iter < 100; ++iter) {
    const std::size_t len = std::uniform_int_distribution<std::size_t>(0, 7)(rng);
    const Word w = random_word(len, 1, 2, rng);
    CHECK(enumerate_relation(w, Relation::kPrefix, std::nullopt, 2).size() == len + 1);
    CHECK(enumerate_relation(w, Relation::kInfix, std::nullopt, 2).size() <= len * (len + 1) / 2 + 1);
    CHECK(enumerate_relation(w, Relation::kSubsequence, std::nullopt, 2).size() <= (std::size_t{1} << len));
  }
  for (const Word& u : all_words(2, 4)) {
    const auto subs = enumerate_relation(u, Relation::kSubsequence, std::nullopt, 2);
    for (const Word& w : all_words(2, 4)) {
      const auto supers = enumerate_relation(w, Relation::kSupersequence, u.size(), 2);
      REQUIRE((subs.count(w) == 1) == (supers.count(u) == 1));
    }
  }
}

TEST_CASE("brute_quantitative examples") {
  CompiledRegex ab = compile_regex("ab");
  Alphabet alpha = ab.alphabet;
  CHECK(oracle::brute_quantitative(ab.nfa, alpha.encode("ba"), Relation::kSubsequence, Optimum::kMin).kind ==
        LengthAnswer::Kind::kNoMatch);

  CompiledRegex opt = compile_regex("a|\\e");
  const LengthAnswer e = oracle::brute_quantitative(opt.nfa, Word{2, 1}, Relation::kSubsequence, Optimum::kMin);
  CHECK(e.kind == LengthAnswer::Kind::kFinite);
  CHECK(e.length == 0);

  CompiledRegex a = compile_regex("a");
  const LengthAnswer one = oracle::brute_quantitative(a.nfa, Word{1}, Relation::kInfix, Optimum::kMax);
  CHECK(one.length == 1);
  CHECK(one.witness == Word{1});

  CompiledRegex star = compile_regex("a*b");
  CHECK(oracle::brute_quantitative(star.nfa, Word{2}, Relation::kExtension, Optimum::kMax).kind ==
        LengthAnswer::Kind::kUnbounded);
}

TEST_CASE("naive_accepts against the AST") {
  std::mt19937_64 rng(52);
  for (int iter = 0; iter < 300; ++iter) {
    const Instance inst = random_instance(8, 2, rng);
    for (const Word& u : all_words(2, 4)) REQUIRE(oracle::naive_accepts(inst.nfa, u) == ast_accepts(inst.ast, u));
  }
}

TEST_CASE("lcs and scs") {
  CHECK(oracle::lcs_scs_dp(word("abc"), word("abc")) == std::pair<std::size_t, std::size_t>{3, 3});
  CHECK(oracle::lcs_scs_dp(word("a"), word("b")) == std::pair<std::size_t, std::size_t>{0, 2});
  CHECK(oracle::lcs_scs_dp(Word{}, word("ab")) == std::pair<std::size_t, std::size_t>{0, 2});

  const Word u = word("abcbdab"), v = word("bdcaba");
  const auto su = enumerate_relation(u, Relation::kSubsequence, std::nullopt, 4);
  const auto sv = enumerate_relation(v, Relation::kSubsequence, std::nullopt, 4);
  std::size_t best = 0;
  for (const Word& x : su) {
    if (sv.count(x) != 0) best = std::max(best, x.size());
  }
  CHECK(best == 4);
  CHECK(oracle::lcs_scs_dp(u, v).first == best);
  CHECK(oracle::lcs_scs_dp(u, v).second == u.size() + v.size() - best);
}

TEST_CASE("brute_universal with a length bound") {
  CompiledRegex r = compile_regex("(a|b)*a");
  CHECK_FALSE(oracle::brute_universal(r.nfa, Word{1}, Relation::kSupersequence, 2));
  CHECK(oracle::brute_universal(r.nfa, Word{1}, Relation::kSupersequence, 1));
  CHECK(oracle::brute_universal(r.nfa, Word{1}, Relation::kLeftExtension));
  CHECK_FALSE(oracle::brute_universal(r.nfa, Word{1}, Relation::kExtension));
}
