#pragma once

#include <cstdint>

#include "relmatch/product_graph.hpp"

namespace relmatch {

struct LengthAnswer {
  enum class Kind { kNoMatch, kFinite, kUnbounded };

  Kind kind = Kind::kNoMatch;
  std::uint64_t length = 0;  // kFinite only
  Word witness;              // kFinite only, |witness| == length

  static LengthAnswer no_match() { return {}; }
  static LengthAnswer unbounded() { return {Kind::kUnbounded, 0, {}}; }
  static LengthAnswer finite(Word witness) {
    const auto len = witness.size();
    return {Kind::kFinite, len, std::move(witness)};
  }
};

std::string_view to_string(LengthAnswer::Kind kind);

/// Minimum-weight st-path by 0-1 BFS on the part of the graph that lies on
/// some st-path. Never Unbounded. The witness is the path label.
LengthAnswer st_min_path(const LabeledGraph& g, std::uint32_t s, std::uint32_t t);

/// Maximum-weight st-path. Unbounded iff some strongly connected component of
/// the trimmed graph holds a weight-1 edge; otherwise a longest path over the
/// condensation in topological order.
LengthAnswer st_max_path(const LabeledGraph& g, std::uint32_t s, std::uint32_t t);

inline LengthAnswer st_min_path(const ProductGraph& pg) { return st_min_path(pg.graph, pg.source, pg.sink); }
inline LengthAnswer st_max_path(const ProductGraph& pg) { return st_max_path(pg.graph, pg.source, pg.sink); }

}  // namespace relmatch
