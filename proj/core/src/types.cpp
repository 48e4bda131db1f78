#include "relmatch/types.hpp"

namespace relmatch {

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::kEquality: return "equality";
    case Relation::kInfix: return "infix";
    case Relation::kPrefix: return "prefix";
    case Relation::kExtension: return "extension";
    case Relation::kLeftExtension: return "left-extension";
    case Relation::kSubsequence: return "subsequence";
    case Relation::kSupersequence: return "supersequence";
  }
  return "?";
}

std::optional<Relation> parse_relation(std::string_view name) {
  for (Relation r : kAllRelations) {
    if (to_string(r) == name) return r;
  }
  return std::nullopt;
}

}  // namespace relmatch
