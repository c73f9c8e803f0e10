#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "koutgraph/deletion.hpp"
#include "koutgraph/graph.hpp"

namespace kout {

struct ComponentSummary {
  std::uint32_t survivor_count = 0;
  std::uint32_t component_count = 0;
  std::vector<std::uint32_t> component_sizes;  // descending
  std::uint32_t largest = 0;
  std::uint32_t outside_giant = 0;  // survivor_count - largest
  bool connected = true;            // empty and singleton graphs count as connected

  friend bool operator==(const ComponentSummary&, const ComponentSummary&) = default;
};

/// Component decomposition of the subgraph induced on `vertices` with a
/// disjoint-set forest (union by size, path halving). Edges to labels not
/// in `vertices` are ignored.
ComponentSummary components(const AdjacencyList& graph, std::span<const NodeId> vertices);

/// Same contract, computed by breadth-first traversal. Kept as an
/// independent cross-check of the disjoint-set path.
ComponentSummary components_bfs(const AdjacencyList& graph, std::span<const NodeId> vertices);

ComponentSummary components(const AdjacencyList& graph);
ComponentSummary components(const KOutGraph& graph);
ComponentSummary components(const BaselineGraph& graph);
ComponentSummary components(const ResidualGraph& graph);

template <typename Graph>
bool is_connected(const Graph& graph) {
  return components(graph).connected;
}

}  // namespace kout
