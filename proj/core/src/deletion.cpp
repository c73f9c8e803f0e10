#include "koutgraph/deletion.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "koutgraph/error.hpp"

namespace kout {

DeletionSpec DeletionSpec::count(std::uint32_t gamma, Seed seed) {
  return DeletionSpec{DeletionMode::kCount, static_cast<double>(gamma), seed};
}

DeletionSpec DeletionSpec::fraction(double alpha, Seed seed) {
  return DeletionSpec{DeletionMode::kFraction, alpha, seed};
}

std::uint32_t DeletionSpec::realized_gamma(std::uint32_t n) const {
  double gamma = 0.0;
  if (mode == DeletionMode::kCount) {
    if (!(value >= 0.0) || value != std::floor(value)) {
      throw InvalidParameter("deletion count must be a nonnegative integer");
    }
    gamma = value;
  } else {
    if (!(value > 0.0 && value < 1.0)) {
      throw InvalidParameter("deletion fraction must lie in (0,1), got " + std::to_string(value));
    }
    // nearbyint under the default rounding mode: nearest, ties to even.
    gamma = std::nearbyint(value * static_cast<double>(n));
  }
  if (gamma > static_cast<double>(n)) {
    throw InvalidParameter("cannot delete " + std::to_string(static_cast<long long>(gamma)) +
                           " of " + std::to_string(n) + " nodes");
  }
  return static_cast<std::uint32_t>(gamma);
}

namespace {

ResidualGraph induce(const AdjacencyList& graph, std::vector<NodeId> deleted) {
  const std::uint32_t n = graph.node_count();
  std::vector<char> dead(static_cast<std::size_t>(n) + 1, 0);
  for (NodeId v : deleted) dead[v] = 1;

  ResidualGraph residual;
  residual.parent_n = n;
  residual.survivors.reserve(n - deleted.size());
  std::vector<Edge> edges;
  edges.reserve(graph.edge_count());
  for (NodeId u = 1; u <= n; ++u) {
    if (dead[u]) continue;
    residual.survivors.push_back(u);
    for (NodeId v : graph.neighbors(u)) {
      if (u < v && !dead[v]) edges.emplace_back(u, v);
    }
  }
  residual.deleted = std::move(deleted);
  residual.adjacency = AdjacencyList::from_edges(n, edges);
  return residual;
}

}  // namespace

ResidualGraph delete_uniform(const AdjacencyList& graph, const DeletionSpec& spec) {
  const std::uint32_t n = graph.node_count();
  const std::uint32_t gamma = spec.realized_gamma(n);
  Rng rng(spec.seed);
  std::vector<NodeId> deleted = sample_subset(rng, n, gamma);
  for (auto& v : deleted) ++v;
  return induce(graph, std::move(deleted));
}

ResidualGraph delete_uniform(const KOutGraph& graph, const DeletionSpec& spec) {
  return delete_uniform(graph.adjacency, spec);
}

ResidualGraph delete_uniform(const BaselineGraph& graph, const DeletionSpec& spec) {
  return delete_uniform(graph.adjacency, spec);
}

ResidualGraph delete_explicit(const AdjacencyList& graph, std::span<const NodeId> nodes) {
  const std::uint32_t n = graph.node_count();
  std::vector<NodeId> deleted(nodes.begin(), nodes.end());
  for (NodeId v : deleted) {
    if (v < 1 || v > n) {
      throw InvalidParameter("cannot delete label " + std::to_string(v) + ": outside [1, " +
                             std::to_string(n) + "]");
    }
  }
  std::sort(deleted.begin(), deleted.end());
  deleted.erase(std::unique(deleted.begin(), deleted.end()), deleted.end());
  return induce(graph, std::move(deleted));
}

ResidualGraph delete_explicit(const KOutGraph& graph, std::span<const NodeId> nodes) {
  return delete_explicit(graph.adjacency, nodes);
}

ResidualGraph delete_explicit(const BaselineGraph& graph, std::span<const NodeId> nodes) {
  return delete_explicit(graph.adjacency, nodes);
}

}  // namespace kout
