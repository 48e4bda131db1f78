#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "relmatch/nfa.hpp"

namespace relmatch {

struct Edge {
  std::uint32_t target = 0;
  Symbol label = kEpsilon;
  std::uint8_t weight = 0;
};

/// Directed graph with labelled 0/1-weighted edges in CSR form.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  /// Builds from (source, edge) pairs; edges keep their relative order per source.
  LabeledGraph(std::size_t vertex_count, std::span<const std::pair<std::uint32_t, Edge>> edges);

  std::size_t vertex_count() const { return offsets_.size() - 1; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> out(std::uint32_t v) const {
    return std::span<const Edge>(edges_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
  }
  std::span<const std::uint32_t> offsets() const { return offsets_; }

 private:
  std::vector<std::uint32_t> offsets_{0};
  std::vector<Edge> edges_;
};

/// G_{A,w} plus the source/target gadgets of one relation.
///
/// Base vertex (i, q) has id i * n + q for i in 0..|w|. Relations that need
/// automaton copies append them after the base vertices: the left copy q_<-
/// at base_count + q, the right copy q_-> at base_count + n + q. Prefix and
/// infix add fresh source/target vertices at the end.
struct ProductGraph {
  LabeledGraph graph;
  std::uint32_t source = 0;
  std::uint32_t sink = 0;
  std::size_t states = 0;
  std::size_t columns = 0;  // |w| + 1

  std::uint32_t vertex(std::size_t i, State q) const {
    return static_cast<std::uint32_t>(i * states + q);
  }
  std::size_t base_count() const { return states * columns; }
};

/// st-paths correspond to accepting runs over strings u with u R w; a path's
/// weight is |u| and its label is u.
ProductGraph build_product_graph(const Nfa& a, WordView w, Relation rel);

}  // namespace relmatch
