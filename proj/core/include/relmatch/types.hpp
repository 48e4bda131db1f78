#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace relmatch {

// States are dense ids 0..n-1. Symbols are 1..sigma; 0 is reserved for epsilon.
using State = std::uint32_t;
using Symbol = std::uint32_t;

inline constexpr Symbol kEpsilon = 0;
inline constexpr State kNoState = static_cast<State>(-1);

using Word = std::vector<Symbol>;
using WordView = std::span<const Symbol>;

// The string relation u R w asked for by a query: "does the automaton accept
// some u with u R w".
enum class Relation {
  kEquality,
  kInfix,
  kPrefix,
  kExtension,      // w is an infix of u
  kLeftExtension,  // u = v w
  kSubsequence,
  kSupersequence,  // w is a subsequence of u
};

inline constexpr Relation kAllRelations[] = {
    Relation::kEquality,      Relation::kInfix,       Relation::kPrefix,
    Relation::kExtension,     Relation::kLeftExtension, Relation::kSubsequence,
    Relation::kSupersequence,
};

// Relations whose Lambda(w) is infinite.
constexpr bool is_infinite(Relation r) {
  return r == Relation::kExtension || r == Relation::kLeftExtension ||
         r == Relation::kSupersequence;
}

std::string_view to_string(Relation r);
std::optional<Relation> parse_relation(std::string_view name);

enum class Optimum { kMin, kMax };

}  // namespace relmatch
