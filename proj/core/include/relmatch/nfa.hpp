#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "relmatch/types.hpp"

namespace relmatch {

struct Transition {
  State source = 0;
  Symbol label = kEpsilon;
  State target = 0;

  bool is_epsilon() const { return label == kEpsilon; }
  bool is_self_loop() const { return source == target; }

  friend bool operator==(const Transition&, const Transition&) = default;
};

/// Epsilon-NFA with a single initial and a single final state.
///
/// States are 0..state_count()-1, symbols 1..sigma(), label 0 is epsilon.
/// Immutable once constructed; the constructor validates every endpoint and
/// label and throws std::invalid_argument otherwise.
class Nfa {
 public:
  Nfa(std::size_t state_count, Symbol sigma, State initial, State accepting,
      std::vector<Transition> transitions);

  /// Two states, no transitions: the canonical automaton for the empty language.
  static Nfa empty(Symbol sigma);

  std::size_t state_count() const { return state_count_; }
  Symbol sigma() const { return sigma_; }
  State initial() const { return initial_; }
  State accepting() const { return accepting_; }
  std::span<const Transition> transitions() const { return transitions_; }
  std::size_t size() const { return transitions_.size(); }

  bool is_canonical_empty() const {
    return state_count_ == 2 && transitions_.empty() && initial_ != accepting_;
  }

  friend bool operator==(const Nfa&, const Nfa&) = default;

 private:
  std::size_t state_count_;
  Symbol sigma_;
  State initial_;
  State accepting_;
  std::vector<Transition> transitions_;
};

/// Restricts `a` to states reachable from the initial state and co-reachable
/// to the final one, renumbering survivors densely in their original order.
/// Returns Nfa::empty() when the final state is unreachable.
Nfa trim(const Nfa& a);

/// Reachability masks used by trim and by relation simulations.
std::vector<bool> reachable_from(const Nfa& a, State start);
std::vector<bool> coreachable_to(const Nfa& a, State goal);

/// Normalises an automaton with several final states by adding one fresh
/// final state reached by epsilon from each of them.
Nfa with_single_final(std::size_t state_count, Symbol sigma, State initial,
                      std::span<const State> finals, std::vector<Transition> transitions);

/// Number of distinct states among the initial state and the targets of
/// symbol-labelled transitions. Every run visits at most this many distinct
/// "after reading i symbols" states.
std::size_t symbol_target_count(const Nfa& a);

// -- Text format ------------------------------------------------------------
//
//   nfa <n> <sigma> <q0> <qf>
//   <src> <label> <dst>        one line per transition, label `e` for epsilon
//
// States in the file are 1-based. Writing is bit-exact: the header, then one
// line per transition in stored order, every line terminated by '\n'.

class NfaFormatError : public std::runtime_error {
 public:
  NfaFormatError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

void write_nfa(std::ostream& out, const Nfa& a);
std::string to_text(const Nfa& a);
Nfa read_nfa(std::istream& in);
Nfa parse_nfa_text(std::string_view text);

}  // namespace relmatch
