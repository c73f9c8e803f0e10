#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "koutgraph/graph.hpp"
#include "koutgraph/rng.hpp"

namespace kout {

enum class DeletionMode { kCount, kFraction };

/// How many nodes to delete, and the seed of the deletion stream.
/// In fraction mode the realized count is round(alpha * n), ties to even.
struct DeletionSpec {
  DeletionMode mode = DeletionMode::kCount;
  double value = 0.0;  // gamma in count mode, alpha in fraction mode
  Seed seed;

  static DeletionSpec count(std::uint32_t gamma, Seed seed = {});
  static DeletionSpec fraction(double alpha, Seed seed = {});

  /// Throws InvalidParameter when the realized gamma is not in [0, n], when
  /// a count is not a nonnegative integer, or when alpha is not in (0, 1).
  std::uint32_t realized_gamma(std::uint32_t n) const;
};

/// Induced subgraph on the survivors R = V \ D. Survivors keep their
/// original labels; `adjacency` is indexed by those labels and deleted
/// labels have empty neighbor lists.
struct ResidualGraph {
  std::uint32_t parent_n = 0;
  std::vector<NodeId> deleted;    // sorted
  std::vector<NodeId> survivors;  // sorted
  AdjacencyList adjacency;

  std::uint32_t gamma() const noexcept { return static_cast<std::uint32_t>(deleted.size()); }
  std::size_t edge_count() const noexcept { return adjacency.edge_count(); }
};

/// Deletes an exactly uniform gamma-subset drawn from `spec.seed`, which is
/// independent of whatever seeded the graph.
ResidualGraph delete_uniform(const AdjacencyList& graph, const DeletionSpec& spec);
ResidualGraph delete_uniform(const KOutGraph& graph, const DeletionSpec& spec);
ResidualGraph delete_uniform(const BaselineGraph& graph, const DeletionSpec& spec);

/// Deletes exactly `nodes` (duplicates ignored). Labels outside [1, n]
/// throw InvalidParameter.
ResidualGraph delete_explicit(const AdjacencyList& graph, std::span<const NodeId> nodes);
ResidualGraph delete_explicit(const KOutGraph& graph, std::span<const NodeId> nodes);
ResidualGraph delete_explicit(const BaselineGraph& graph, std::span<const NodeId> nodes);

}  // namespace kout
