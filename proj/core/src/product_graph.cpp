#include "relmatch/product_graph.hpp"

#include <stdexcept>

namespace relmatch {

LabeledGraph::LabeledGraph(std::size_t vertex_count,
                           std::span<const std::pair<std::uint32_t, Edge>> edges)
    : offsets_(vertex_count + 1, 0), edges_(edges.size()) {
  for (const auto& [from, e] : edges) ++offsets_[from + 1];
  for (std::size_t v = 0; v < vertex_count; ++v) offsets_[v + 1] += offsets_[v];
  std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [from, e] : edges) edges_[fill[from]++] = e;
}

ProductGraph build_product_graph(const Nfa& a, WordView w, Relation rel) {
  const std::size_t n = a.state_count();
  const std::size_t len = w.size();
  const std::size_t columns = len + 1;
  const std::size_t base = n * columns;
  if (base + 2 * n + 2 > static_cast<std::size_t>(UINT32_MAX)) {
    throw std::length_error("product graph too large");
  }

  ProductGraph pg;
  pg.states = n;
  pg.columns = columns;
  std::vector<std::pair<std::uint32_t, Edge>> edges;
  auto vid = [&](std::size_t i, State q) { return pg.vertex(i, q); };
  auto add = [&](std::uint32_t from, std::uint32_t to, Symbol label, int weight) {
    edges.push_back({from, Edge{to, label, static_cast<std::uint8_t>(weight)}});
  };

  for (std::size_t i = 0; i <= len; ++i) {
    for (const Transition& t : a.transitions()) {
      if (t.is_epsilon()) {
        add(vid(i, t.source), vid(i, t.target), kEpsilon, 0);
      } else if (i < len && w[i] == t.label) {
        add(vid(i, t.source), vid(i + 1, t.target), t.label, 1);
      }
    }
  }

  std::size_t vertex_count = base;
  auto copy_automaton = [&](std::uint32_t offset) {
    for (const Transition& t : a.transitions()) {
      add(offset + t.source, offset + t.target, t.label, t.is_epsilon() ? 0 : 1);
    }
  };

  pg.source = vid(0, a.initial());
  pg.sink = vid(len, a.accepting());
  switch (rel) {
    case Relation::kEquality:
      break;
    case Relation::kPrefix: {
      pg.sink = static_cast<std::uint32_t>(vertex_count++);
      for (std::size_t i = 0; i <= len; ++i) add(vid(i, a.accepting()), pg.sink, kEpsilon, 0);
      break;
    }
    case Relation::kInfix: {
      pg.source = static_cast<std::uint32_t>(vertex_count++);
      pg.sink = static_cast<std::uint32_t>(vertex_count++);
      for (std::size_t i = 0; i <= len; ++i) {
        add(pg.source, vid(i, a.initial()), kEpsilon, 0);
        add(vid(i, a.accepting()), pg.sink, kEpsilon, 0);
      }
      break;
    }
    case Relation::kLeftExtension:
    case Relation::kExtension: {
      const auto left = static_cast<std::uint32_t>(base);
      vertex_count += n;
      copy_automaton(left);
      for (State q = 0; q < n; ++q) add(left + q, vid(0, q), kEpsilon, 0);
      pg.source = left + a.initial();
      if (rel == Relation::kExtension) {
        const auto right = static_cast<std::uint32_t>(base + n);
        vertex_count += n;
        copy_automaton(right);
        for (State q = 0; q < n; ++q) add(vid(len, q), right + q, kEpsilon, 0);
        pg.sink = right + a.accepting();
      }
      break;
    }
    case Relation::kSubsequence: {
      for (std::size_t i = 0; i < len; ++i) {
        for (State q = 0; q < n; ++q) add(vid(i, q), vid(i + 1, q), kEpsilon, 0);
      }
      break;
    }
    case Relation::kSupersequence: {
      for (std::size_t i = 0; i <= len; ++i) {
        for (const Transition& t : a.transitions()) {
          if (!t.is_epsilon()) add(vid(i, t.source), vid(i, t.target), t.label, 1);
        }
      }
      break;
    }
  }
  pg.graph = LabeledGraph(vertex_count, edges);
  return pg;
}

}  // namespace relmatch
