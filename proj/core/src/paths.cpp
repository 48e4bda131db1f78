#include "relmatch/paths.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "relmatch/scc.hpp"

namespace relmatch {

std::string_view to_string(LengthAnswer::Kind kind) {
  switch (kind) {
    case LengthAnswer::Kind::kNoMatch:
      return "no-match";
    case LengthAnswer::Kind::kFinite:
      return "finite";
    case LengthAnswer::Kind::kUnbounded:
      return "unbounded";
  }
  return "no-match";
}

namespace {

constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

// Vertices on some s-t path.
std::vector<bool> live_vertices(const LabeledGraph& g, std::uint32_t s, std::uint32_t t) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> forward(n, false);
  std::vector<std::uint32_t> stack{s};
  forward[s] = true;
  while (!stack.empty()) {
    const std::uint32_t v = stack.back();
    stack.pop_back();
    for (const Edge& e : g.out(v)) {
      if (!forward[e.target]) {
        forward[e.target] = true;
        stack.push_back(e.target);
      }
    }
  }
  std::vector<bool> live(n, false);
  if (!forward[t]) return live;

  // Reverse adjacency restricted to forward-reachable vertices.
  std::vector<std::uint32_t> roffsets(n + 1, 0);
  for (std::uint32_t v = 0; v < n; ++v) {
    if (!forward[v]) continue;
    for (const Edge& e : g.out(v)) ++roffsets[e.target + 1];
  }
  for (std::size_t v = 0; v < n; ++v) roffsets[v + 1] += roffsets[v];
  std::vector<std::uint32_t> sources(roffsets[n]);
  std::vector<std::uint32_t> fill(roffsets.begin(), roffsets.end() - 1);
  for (std::uint32_t v = 0; v < n; ++v) {
    if (!forward[v]) continue;
    for (const Edge& e : g.out(v)) sources[fill[e.target]++] = v;
  }
  stack.push_back(t);
  live[t] = true;
  while (!stack.empty()) {
    const std::uint32_t v = stack.back();
    stack.pop_back();
    for (std::uint32_t i = roffsets[v]; i < roffsets[v + 1]; ++i) {
      const std::uint32_t u = sources[i];
      if (!live[u]) {
        live[u] = true;
        stack.push_back(u);
      }
    }
  }
  return live;
}

}  // namespace

LengthAnswer st_min_path(const LabeledGraph& g, std::uint32_t s, std::uint32_t t) {
  const std::vector<bool> live = live_vertices(g, s, t);
  if (!live[t]) return LengthAnswer::no_match();

  const std::size_t n = g.vertex_count();
  std::vector<std::uint64_t> dist(n, std::numeric_limits<std::uint64_t>::max());
  std::vector<std::uint32_t> parent(n, kNone);
  std::vector<Symbol> via(n, kEpsilon);
  std::vector<bool> done(n, false);
  std::deque<std::uint32_t> queue{s};
  dist[s] = 0;
  while (!queue.empty()) {
    const std::uint32_t v = queue.front();
    queue.pop_front();
    if (done[v]) continue;
    done[v] = true;
    if (v == t) break;
    for (const Edge& e : g.out(v)) {
      if (!live[e.target]) continue;
      const std::uint64_t d = dist[v] + e.weight;
      if (d < dist[e.target]) {
        dist[e.target] = d;
        parent[e.target] = v;
        via[e.target] = e.label;
        if (e.weight == 0) {
          queue.push_front(e.target);
        } else {
          queue.push_back(e.target);
        }
      }
    }
  }

  Word witness;
  for (std::uint32_t v = t; v != s; v = parent[v]) {
    if (via[v] != kEpsilon) witness.push_back(via[v]);
  }
  std::reverse(witness.begin(), witness.end());
  LengthAnswer answer = LengthAnswer::finite(std::move(witness));
  answer.length = dist[t];
  return answer;
}

LengthAnswer st_max_path(const LabeledGraph& g, std::uint32_t s, std::uint32_t t) {
  const std::vector<bool> live = live_vertices(g, s, t);
  if (!live[t]) return LengthAnswer::no_match();

  const std::size_t n = g.vertex_count();
  // Strip dead vertices' edges so components are those of the trimmed graph.
  std::vector<std::uint32_t> offsets(n + 1, 0);
  std::vector<std::uint32_t> targets;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (live[v]) {
      for (const Edge& e : g.out(v)) {
        if (live[e.target]) targets.push_back(e.target);
      }
    }
    offsets[v + 1] = static_cast<std::uint32_t>(targets.size());
  }
  const SccResult scc = strongly_connected_components(CsrView{offsets, targets});
  const auto& comp = scc.component;

  for (std::uint32_t v = 0; v < n; ++v) {
    if (!live[v]) continue;
    for (const Edge& e : g.out(v)) {
      if (e.weight != 0 && live[e.target] && comp[e.target] == comp[v]) {
        return LengthAnswer::unbounded();
      }
    }
  }

  // Vertices grouped by component, components in topological order.
  std::vector<std::uint32_t> start(scc.count + 1, 0);
  for (std::uint32_t v = 0; v < n; ++v) {
    if (live[v]) ++start[comp[v] + 1];
  }
  for (std::uint32_t c = 0; c < scc.count; ++c) start[c + 1] += start[c];
  std::vector<std::uint32_t> members(start[scc.count]);
  {
    std::vector<std::uint32_t> fill(start.begin(), start.end() - 1);
    for (std::uint32_t v = 0; v < n; ++v) {
      if (live[v]) members[fill[comp[v]]++] = v;
    }
  }

  struct Entry {
    std::int64_t best = -1;
    std::uint32_t from = kNone;  // tail of the entering edge
    std::uint32_t to = kNone;    // head of the entering edge
    Symbol label = kEpsilon;
  };
  std::vector<Entry> entry(scc.count);
  entry[comp[s]].best = 0;
  entry[comp[s]].to = s;
  for (std::uint32_t c = comp[s]; c < scc.count; ++c) {
    if (entry[c].best < 0) continue;
    for (std::uint32_t i = start[c]; i < start[c + 1]; ++i) {
      const std::uint32_t v = members[i];
      for (const Edge& e : g.out(v)) {
        if (!live[e.target] || comp[e.target] == c) continue;
        const std::int64_t cand = entry[c].best + e.weight;
        Entry& next = entry[comp[e.target]];
        if (cand > next.best) next = {cand, v, e.target, e.label};
      }
    }
  }

  // Walk back from t; inside a component connect entry vertex to exit vertex
  // by BFS (all internal edges weigh 0).
  std::vector<std::uint32_t> bfs_parent(n, kNone);
  std::vector<Symbol> bfs_label(n, kEpsilon);
  Word reversed;
  std::uint32_t exit = t;
  std::uint32_t c = comp[t];
  while (true) {
    const std::uint32_t enter = entry[c].to;
    if (enter != exit) {
      std::deque<std::uint32_t> queue{enter};
      bfs_parent[enter] = enter;
      while (!queue.empty() && bfs_parent[exit] == kNone) {
        const std::uint32_t v = queue.front();
        queue.pop_front();
        for (const Edge& e : g.out(v)) {
          if (!live[e.target] || comp[e.target] != c || bfs_parent[e.target] != kNone) continue;
          bfs_parent[e.target] = v;
          bfs_label[e.target] = e.label;
          queue.push_back(e.target);
        }
      }
      for (std::uint32_t v = exit; v != enter; v = bfs_parent[v]) {
        if (bfs_label[v] != kEpsilon) reversed.push_back(bfs_label[v]);
      }
    }
    if (c == comp[s]) break;
    if (entry[c].label != kEpsilon) reversed.push_back(entry[c].label);
    exit = entry[c].from;
    c = comp[exit];
  }
  std::reverse(reversed.begin(), reversed.end());
  LengthAnswer answer = LengthAnswer::finite(std::move(reversed));
  answer.length = static_cast<std::uint64_t>(entry[comp[t]].best);
  return answer;
}

}  // namespace relmatch
