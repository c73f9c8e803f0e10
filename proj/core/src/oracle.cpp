#include "koutgraph/oracle.hpp"

#include <algorithm>
#include <string>

#include "koutgraph/analysis.hpp"
#include "koutgraph/error.hpp"

namespace kout {

std::string to_string(const OraclePredicate& predicate) {
  if (const auto* p = std::get_if<OutsideGiantBelow>(&predicate)) {
    return "outside_giant_lt_" + std::to_string(p->lambda);
  }
  return "connected";
}

void check_oracle_guard(std::uint32_t n, std::uint32_t k) {
  if (n < 2 || k < 1 || k >= n) {
    throw InvalidParameter("oracle needs n >= 2 and 1 <= k <= n-1");
  }
  const std::string what = "n=" + std::to_string(n) + " k=" + std::to_string(k);
  if (n > kOracleMaxNodes) {
    throw InstanceTooLarge("oracle instance too large (" + what + "): n must be <= " +
                           std::to_string(kOracleMaxNodes));
  }
  const std::uint64_t choices = binomial(n - 1, k);
  std::uint64_t profiles = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    profiles *= choices;
    if (profiles > kOracleMaxProfiles) {
      throw InstanceTooLarge("oracle instance too large (" + what +
                             "): C(n-1,k)^n exceeds 10^7 profiles");
    }
  }
}

std::vector<std::uint32_t> unrank_subset(std::uint64_t rank, std::uint32_t universe,
                                         std::uint32_t k) {
  if (rank >= binomial(universe, k)) throw InvalidParameter("subset rank out of range");
  std::vector<std::uint32_t> subset;
  subset.reserve(k);
  std::uint32_t x = 0;
  for (std::uint32_t pos = 0; pos < k; ++pos) {
    for (;; ++x) {
      const std::uint64_t with_x = binomial(universe - x - 1, k - pos - 1);
      if (rank < with_x) break;
      rank -= with_x;
    }
    subset.push_back(x++);
  }
  return subset;
}

std::uint64_t rank_subset(std::span<const std::uint32_t> subset, std::uint32_t universe) {
  const auto k = static_cast<std::uint32_t>(subset.size());
  std::uint64_t rank = 0;
  std::uint32_t x = 0;
  for (std::uint32_t pos = 0; pos < k; ++pos) {
    for (; x < subset[pos]; ++x) rank += binomial(universe - x - 1, k - pos - 1);
    ++x;
  }
  return rank;
}

Fraction enumerate_probability(std::uint32_t n, std::uint32_t k,
                               std::span<const NodeId> deleted,
                               const std::function<bool(const ResidualGraph&)>& event) {
  check_oracle_guard(n, k);
  std::vector<char> dead(static_cast<std::size_t>(n) + 1, 0);
  for (NodeId v : deleted) {
    if (v < 1 || v > n) throw InvalidParameter("deleted label outside [1, n]");
    dead[v] = 1;
  }

  // choices[i][c] = the c-th selection row of node i in lexicographic order.
  const auto per_node = static_cast<std::uint32_t>(binomial(n - 1, k));
  std::vector<std::vector<std::vector<NodeId>>> choices(n);
  for (NodeId i = 1; i <= n; ++i) {
    const std::uint32_t count = dead[i] ? 1 : per_node;
    for (std::uint32_t c = 0; c < count; ++c) {
      std::vector<NodeId> row;
      for (std::uint32_t v : unrank_subset(c, n - 1, k)) {
        row.push_back(v + 1 >= i ? v + 2 : v + 1);
      }
      choices[i - 1].push_back(std::move(row));
    }
  }

  std::vector<std::uint32_t> digit(n, 0);
  std::vector<NodeId> picks(static_cast<std::size_t>(n) * k);
  std::uint64_t hits = 0;
  std::uint64_t total = 0;
  for (;;) {
    for (std::uint32_t i = 0; i < n; ++i) {
      const auto& row = choices[i][digit[i]];
      std::copy(row.begin(), row.end(), picks.begin() + static_cast<std::ptrdiff_t>(i) * k);
    }
    const KOutGraph graph = adjacency_from_selections(make_profile_unchecked(n, k, picks));
    if (event(delete_explicit(graph, deleted))) ++hits;
    ++total;

    std::uint32_t i = 0;
    for (; i < n; ++i) {
      if (++digit[i] < choices[i].size()) break;
      digit[i] = 0;
    }
    if (i == n) break;
  }
  return Fraction(hits, total);
}

Fraction exact_probability(std::uint32_t n, std::uint32_t k, std::uint32_t gamma,
                           const OraclePredicate& predicate) {
  check_oracle_guard(n, k);
  if (gamma > n) throw InvalidParameter("gamma must be <= n");
  if (const auto* p = std::get_if<OutsideGiantBelow>(&predicate); p && p->lambda < 1) {
    throw InvalidParameter("lambda must be >= 1");
  }
  std::vector<NodeId> deleted;
  for (NodeId v = n - gamma + 1; v <= n; ++v) deleted.push_back(v);

  return enumerate_probability(n, k, deleted, [&](const ResidualGraph& residual) {
    const ComponentSummary summary = components(residual);
    if (const auto* p = std::get_if<OutsideGiantBelow>(&predicate)) {
      return summary.outside_giant < p->lambda;
    }
    return summary.connected;
  });
}

}  // namespace kout
