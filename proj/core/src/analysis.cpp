#include "koutgraph/analysis.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace kout {

namespace {

ComponentSummary summarize(std::uint32_t survivor_count, std::vector<std::uint32_t> sizes) {
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  ComponentSummary s;
  s.survivor_count = survivor_count;
  s.component_count = static_cast<std::uint32_t>(sizes.size());
  s.largest = sizes.empty() ? 0 : sizes.front();
  s.outside_giant = survivor_count - s.largest;
  s.connected = s.component_count <= 1;
  s.component_sizes = std::move(sizes);
  return s;
}

std::vector<NodeId> all_labels(std::uint32_t n) {
  std::vector<NodeId> v(n);
  std::iota(v.begin(), v.end(), NodeId{1});
  return v;
}

}  // namespace

ComponentSummary components(const AdjacencyList& graph, std::span<const NodeId> vertices) {
  const std::uint32_t n = graph.node_count();
  // parent[v] == 0 marks a label outside the vertex set.
  std::vector<NodeId> parent(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::uint32_t> size(static_cast<std::size_t>(n) + 1, 0);
  for (NodeId v : vertices) {
    parent[v] = v;
    size[v] = 1;
  }
  auto find = [&](NodeId x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (NodeId u : vertices) {
    for (NodeId v : graph.neighbors(u)) {
      if (v < u || parent[v] == 0) continue;
      NodeId a = find(u);
      NodeId b = find(v);
      if (a == b) continue;
      if (size[a] < size[b]) std::swap(a, b);
      parent[b] = a;
      size[a] += size[b];
    }
  }
  std::vector<std::uint32_t> sizes;
  for (NodeId v : vertices) {
    if (parent[v] == v) sizes.push_back(size[v]);
  }
  return summarize(static_cast<std::uint32_t>(vertices.size()), std::move(sizes));
}

ComponentSummary components_bfs(const AdjacencyList& graph, std::span<const NodeId> vertices) {
  const std::uint32_t n = graph.node_count();
  // 0 = not in the vertex set, 1 = unvisited member, 2 = visited
  std::vector<char> state(static_cast<std::size_t>(n) + 1, 0);
  for (NodeId v : vertices) state[v] = 1;
  std::vector<std::uint32_t> sizes;
  std::vector<NodeId> queue;
  for (NodeId root : vertices) {
    if (state[root] != 1) continue;
    queue.assign(1, root);
    state[root] = 2;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (NodeId v : graph.neighbors(queue[head])) {
        if (state[v] == 1) {
          state[v] = 2;
          queue.push_back(v);
        }
      }
    }
    sizes.push_back(static_cast<std::uint32_t>(queue.size()));
  }
  return summarize(static_cast<std::uint32_t>(vertices.size()), std::move(sizes));
}

ComponentSummary components(const AdjacencyList& graph) {
  const auto labels = all_labels(graph.node_count());
  return components(graph, labels);
}

ComponentSummary components(const KOutGraph& graph) { return components(graph.adjacency); }

ComponentSummary components(const BaselineGraph& graph) { return components(graph.adjacency); }

ComponentSummary components(const ResidualGraph& graph) {
  return components(graph.adjacency, graph.survivors);
}

}  // namespace kout
