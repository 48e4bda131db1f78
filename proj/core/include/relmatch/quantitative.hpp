#pragma once

#include "relmatch/nfa.hpp"
#include "relmatch/paths.hpp"

namespace relmatch {

/// Shortest (kMin) or longest (kMax) u with u R w accepted by `a`, with a
/// witness. kMax may report Unbounded for extension, left-extension and
/// supersequence. O(|w| * m) time and space.
LengthAnswer quantitative_match(const Nfa& a, WordView w, Relation rel, Optimum mode);

}  // namespace relmatch
