#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace relmatch {

/// Graph in compressed sparse row form: the successors of v are
/// targets[offsets[v] .. offsets[v+1]).
struct CsrView {
  std::span<const std::uint32_t> offsets;
  std::span<const std::uint32_t> targets;

  std::size_t vertex_count() const { return offsets.empty() ? 0 : offsets.size() - 1; }
};

struct SccResult {
  std::vector<std::uint32_t> component;  // vertex -> component id
  std::uint32_t count = 0;
};

/// Strongly connected components by iterative Tarjan.
///
/// Component ids follow a topological order of the condensation: every edge
/// u -> v with different components satisfies component[u] < component[v].
SccResult strongly_connected_components(const CsrView& graph);

}  // namespace relmatch
