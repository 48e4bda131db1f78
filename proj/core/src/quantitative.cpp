#include "relmatch/quantitative.hpp"

namespace relmatch {

LengthAnswer quantitative_match(const Nfa& a, WordView w, Relation rel, Optimum mode) {
  const Nfa trimmed = trim(a);
  if (trimmed.is_canonical_empty()) return LengthAnswer::no_match();
  const ProductGraph pg = build_product_graph(trimmed, w, rel);
  return mode == Optimum::kMin ? st_min_path(pg) : st_max_path(pg);
}

}  // namespace relmatch
