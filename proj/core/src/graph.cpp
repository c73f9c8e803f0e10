#include "koutgraph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "koutgraph/error.hpp"

namespace kout {

namespace {

void check_kout_parameters(std::uint32_t n, std::uint32_t k) {
  if (n < 2) {
    throw InvalidParameter("k-out graph needs n >= 2, got n=" + std::to_string(n));
  }
  if (k == 0 || k >= n) {
    throw InvalidParameter("k-out graph needs 1 <= k <= n-1, got n=" + std::to_string(n) +
                           " k=" + std::to_string(k));
  }
}

AdjacencyList adjacency_of(const SelectionProfile& profile) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(profile.n()) * profile.k());
  for (NodeId i = 1; i <= profile.n(); ++i) {
    for (NodeId j : profile.row(i)) edges.emplace_back(i, j);
  }
  return AdjacencyList::from_edges(profile.n(), edges);
}

}  // namespace

SelectionProfile::SelectionProfile(std::uint32_t n, std::uint32_t k,
                                   std::vector<std::vector<NodeId>> rows)
    : n_(n), k_(k) {
  if (rows.size() != n) {
    throw InvalidProfile("profile has " + std::to_string(rows.size()) + " rows, expected " +
                         std::to_string(n));
  }
  if (n >= 2 && (k == 0 || k >= n)) {
    throw InvalidProfile("profile needs 1 <= k <= n-1, got n=" + std::to_string(n) +
                         " k=" + std::to_string(k));
  }
  picks_.reserve(static_cast<std::size_t>(n) * k);
  for (NodeId i = 1; i <= n; ++i) {
    auto& row = rows[i - 1];
    const std::string where = "node " + std::to_string(i);
    if (row.size() != k) {
      throw InvalidProfile(where + " has " + std::to_string(row.size()) +
                           " selections, expected " + std::to_string(k));
    }
    std::sort(row.begin(), row.end());
    for (std::size_t t = 0; t < row.size(); ++t) {
      if (row[t] < 1 || row[t] > n) {
        throw InvalidProfile(where + " selects label " + std::to_string(row[t]) +
                             " outside [1, " + std::to_string(n) + "]");
      }
      if (row[t] == i) throw InvalidProfile(where + " selects itself");
      if (t > 0 && row[t] == row[t - 1]) {
        throw InvalidProfile(where + " selects " + std::to_string(row[t]) + " twice");
      }
    }
    picks_.insert(picks_.end(), row.begin(), row.end());
  }
}

std::vector<std::vector<NodeId>> SelectionProfile::rows() const {
  std::vector<std::vector<NodeId>> out;
  out.reserve(n_);
  for (NodeId i = 1; i <= n_; ++i) {
    auto r = row(i);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

SelectionProfile make_profile_unchecked(std::uint32_t n, std::uint32_t k,
                                        std::vector<NodeId> picks) {
  SelectionProfile profile;
  profile.n_ = n;
  profile.k_ = k;
  profile.picks_ = std::move(picks);
  return profile;
}

AdjacencyList AdjacencyList::from_edges(std::uint32_t n, std::span<const Edge> edges) {
  AdjacencyList adj;
  adj.n_ = n;
  std::vector<std::size_t> degree(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw InvalidParameter("edge {" + std::to_string(u) + "," + std::to_string(v) +
                             "} outside [1, " + std::to_string(n) + "]");
    }
    if (u == v) throw InvalidParameter("self-loop at node " + std::to_string(u));
    ++degree[u];
    ++degree[v];
  }
  // Counting sort into buckets, then sort and deduplicate each bucket.
  std::vector<std::size_t> start(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t v = 1; v <= n; ++v) start[v] = start[v - 1] + degree[v];
  std::vector<NodeId> raw(start[n]);
  std::vector<std::size_t> cursor(start.begin(), start.end() - 1);
  for (const auto& [u, v] : edges) {
    raw[cursor[u - 1]++] = v;
    raw[cursor[v - 1]++] = u;
  }
  adj.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  adj.targets_.clear();
  adj.targets_.reserve(raw.size());
  for (std::size_t v = 0; v < n; ++v) {
    auto first = raw.begin() + static_cast<std::ptrdiff_t>(start[v]);
    auto last = raw.begin() + static_cast<std::ptrdiff_t>(start[v + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    adj.targets_.insert(adj.targets_.end(), first, last);
    adj.offsets_[v + 1] = adj.targets_.size();
  }
  return adj;
}

bool AdjacencyList::has_edge(NodeId u, NodeId v) const noexcept {
  if (u < 1 || u > n_ || v < 1 || v > n_) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> AdjacencyList::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId u = 1; u <= n_; ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

KOutGraph sample_kout(std::uint32_t n, std::uint32_t k, Seed seed) {
  check_kout_parameters(n, k);
  Rng rng(seed);
  std::vector<NodeId> picks;
  picks.reserve(static_cast<std::size_t>(n) * k);
  for (NodeId i = 1; i <= n; ++i) {
    // Subset of {0..n-2}; value v maps to label v+1, skipping i.
    for (std::uint32_t v : sample_subset(rng, n - 1, k)) {
      const NodeId label = v + 1;
      picks.push_back(label >= i ? label + 1 : label);
    }
  }
  // Rows come out sorted: the skip map is monotone.
  auto profile = make_profile_unchecked(n, k, std::move(picks));
  AdjacencyList adjacency = adjacency_of(profile);
  return KOutGraph{std::move(profile), std::move(adjacency)};
}

KOutGraph adjacency_from_selections(SelectionProfile profile) {
  check_kout_parameters(profile.n(), profile.k());
  AdjacencyList adjacency = adjacency_of(profile);
  return KOutGraph{std::move(profile), std::move(adjacency)};
}

BaselineGraph sample_er(std::uint32_t n, double p, Seed seed) {
  if (n < 1) throw InvalidParameter("G(n,p) needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidParameter("edge probability must lie in [0,1], got " + std::to_string(p));
  }
  std::vector<Edge> edges;
  if (p >= 1.0) {
    edges.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (NodeId u = 1; u <= n; ++u) {
      for (NodeId v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
    }
  } else if (p > 0.0) {
    // Batagelj-Brandes: walk the pairs (v, w), w < v, in row order and jump
    // over a geometric number of absent pairs between successive edges.
    Rng rng(seed);
    const double log_q = std::log1p(-p);
    edges.reserve(static_cast<std::size_t>(p * n * (n - 1) / 2.0 * 1.1) + 16);
    std::int64_t v = 1;
    std::int64_t w = -1;
    const std::int64_t nn = n;
    while (v < nn) {
      const double u = rng.uniform01();
      const double skip = std::floor(std::log1p(-u) / log_q);
      if (skip >= static_cast<double>(nn) * static_cast<double>(nn)) break;
      w += 1 + static_cast<std::int64_t>(skip);
      while (w >= v && v < nn) {
        w -= v;
        ++v;
      }
      if (v < nn) {
        edges.emplace_back(static_cast<NodeId>(w + 1), static_cast<NodeId>(v + 1));
      }
    }
  }
  return BaselineGraph{n, p, seed, AdjacencyList::from_edges(n, edges)};
}

}  // namespace kout
