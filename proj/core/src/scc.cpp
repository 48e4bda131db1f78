#include "relmatch/scc.hpp"

#include <limits>

namespace relmatch {

SccResult strongly_connected_components(const CsrView& graph) {
  constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
  const std::size_t n = graph.vertex_count();

  std::vector<std::uint32_t> index(n, kUnvisited);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> stack;
  // Call frames: vertex plus the next edge to look at.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> frames;

  SccResult result;
  result.component.assign(n, 0);
  std::uint32_t next_index = 0;

  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.emplace_back(root, graph.offsets[root]);
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!frames.empty()) {
      auto& [v, edge] = frames.back();
      if (edge < graph.offsets[v + 1]) {
        const std::uint32_t w = graph.targets[edge++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, graph.offsets[w]);
        } else if (on_stack[w] && index[w] < low[v]) {
          low[v] = index[w];
        }
        continue;
      }
      const std::uint32_t done = v;
      frames.pop_back();
      if (!frames.empty()) {
        const std::uint32_t parent = frames.back().first;
        if (low[done] < low[parent]) low[parent] = low[done];
      }
      if (low[done] == index[done]) {
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          result.component[w] = result.count;
        } while (w != done);
        ++result.count;
      }
    }
  }

  // Tarjan finishes sinks first; flip so sources get the small ids.
  for (auto& c : result.component) c = result.count - 1 - c;
  return result;
}

}  // namespace relmatch
