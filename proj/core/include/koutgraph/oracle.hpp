#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "koutgraph/deletion.hpp"
#include "koutgraph/fraction.hpp"
#include "koutgraph/graph.hpp"

namespace kout {

struct ConnectedPredicate {};

/// Fewer than lambda survivors outside the largest component.
struct OutsideGiantBelow {
  std::uint32_t lambda = 1;
};

using OraclePredicate = std::variant<ConnectedPredicate, OutsideGiantBelow>;

std::string to_string(const OraclePredicate& predicate);

/// Largest instance the oracle accepts: n <= 7 and C(n-1, k)^n <= 10^7.
inline constexpr std::uint32_t kOracleMaxNodes = 7;
inline constexpr std::uint64_t kOracleMaxProfiles = 10'000'000;

/// Throws InstanceTooLarge unless (n, k) is within the guard.
void check_oracle_guard(std::uint32_t n, std::uint32_t k);

/// k-subsets of {0, ..., universe-1} in lexicographic order.
std::vector<std::uint32_t> unrank_subset(std::uint64_t rank, std::uint32_t universe,
                                         std::uint32_t k);
std::uint64_t rank_subset(std::span<const std::uint32_t> subset, std::uint32_t universe);

/// Exact probability of `event` on the residual graph after deleting
/// `deleted`, by enumerating every selection profile of the survivors with
/// equal weight. Picks of deleted nodes never reach the residual graph, so
/// they are fixed rather than enumerated.
Fraction enumerate_probability(std::uint32_t n, std::uint32_t k,
                               std::span<const NodeId> deleted,
                               const std::function<bool(const ResidualGraph&)>& event);

/// Exact P[predicate] for the residual graph with gamma uniformly deleted
/// nodes. Node labels are exchangeable, so D is fixed to the last gamma
/// labels {n - gamma + 1, ..., n}.
Fraction exact_probability(std::uint32_t n, std::uint32_t k, std::uint32_t gamma,
                           const OraclePredicate& predicate);

}  // namespace kout
