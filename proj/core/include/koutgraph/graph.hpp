#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "koutgraph/rng.hpp"

namespace kout {

/// Vertex label in [1, n]. Labels are 1-based throughout, including files.
using NodeId = std::uint32_t;

using Edge = std::pair<NodeId, NodeId>;

/// The n selection sets: node i picked `row(i)`, k distinct labels other
/// than i. Rows are stored sorted.
class SelectionProfile {
 public:
  SelectionProfile() = default;

  /// Validates every row; throws InvalidProfile on a wrong row length,
  /// self pick, duplicate pick or out-of-range label.
  SelectionProfile(std::uint32_t n, std::uint32_t k,
                   std::vector<std::vector<NodeId>> rows);

  std::uint32_t n() const noexcept { return n_; }
  std::uint32_t k() const noexcept { return k_; }

  std::span<const NodeId> row(NodeId i) const noexcept {
    return {picks_.data() + static_cast<std::size_t>(i - 1) * k_, k_};
  }

  std::vector<std::vector<NodeId>> rows() const;

  friend bool operator==(const SelectionProfile&, const SelectionProfile&) = default;

 private:
  friend SelectionProfile make_profile_unchecked(std::uint32_t, std::uint32_t,
                                                 std::vector<NodeId>);

  std::uint32_t n_ = 0;
  std::uint32_t k_ = 0;
  std::vector<NodeId> picks_;  // row-major, n * k
};

/// Builds a profile from row-major picks already known to be valid and sorted.
SelectionProfile make_profile_unchecked(std::uint32_t n, std::uint32_t k,
                                        std::vector<NodeId> picks);

/// Undirected simple graph on labels 1..n in compressed sparse row form.
/// Neighbor lists are sorted and free of duplicates and self-loops.
class AdjacencyList {
 public:
  AdjacencyList() = default;

  /// Edges may repeat and appear in either orientation; self-loops are
  /// rejected with InvalidParameter.
  static AdjacencyList from_edges(std::uint32_t n, std::span<const Edge> edges);

  std::uint32_t node_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const noexcept {
    return {targets_.data() + offsets_[v - 1], offsets_[v] - offsets_[v - 1]};
  }
  std::size_t degree(NodeId v) const noexcept { return offsets_[v] - offsets_[v - 1]; }

  /// Binary search over the sorted neighbor list.
  bool has_edge(NodeId u, NodeId v) const noexcept;

  /// Each undirected edge once, as (smaller, larger), in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const AdjacencyList&, const AdjacencyList&) = default;

 private:
  std::uint32_t n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> targets_;
};

/// Random K-out graph together with the selections that generated it.
struct KOutGraph {
  SelectionProfile profile;
  AdjacencyList adjacency;

  std::uint32_t n() const noexcept { return profile.n(); }
  std::uint32_t k() const noexcept { return profile.k(); }
  std::size_t edge_count() const noexcept { return adjacency.edge_count(); }
};

/// Erdos-Renyi G(n, p) graph.
struct BaselineGraph {
  std::uint32_t n = 0;
  double p = 0.0;
  Seed seed;
  AdjacencyList adjacency;

  std::size_t edge_count() const noexcept { return adjacency.edge_count(); }
};

/// Draws every node's selection set as an independent, exactly uniform
/// k-subset of the other n - 1 labels, then applies the adjacency rule.
/// Requires n >= 2 and 1 <= k <= n - 1.
KOutGraph sample_kout(std::uint32_t n, std::uint32_t k, Seed seed);

/// Edge {i, j} is present iff j is in row(i) or i is in row(j).
KOutGraph adjacency_from_selections(SelectionProfile profile);

/// Each of the n(n-1)/2 pairs present independently with probability p.
/// Uses geometric skipping over the pair index, so the cost is linear in
/// n plus the number of edges.
BaselineGraph sample_er(std::uint32_t n, double p, Seed seed);

}  // namespace kout
