#include "koutgraph/deletion.hpp"

#include <gtest/gtest.h>

#include <map>
#include <numeric>

#include "koutgraph/error.hpp"
#include "test_support.hpp"

namespace kout {
namespace {

KOutGraph mutual_pairs() {
  return adjacency_from_selections(SelectionProfile(4, 1, {{2}, {1}, {4}, {3}}));
}

TEST(DeleteUniform, ZeroDeletionKeepsEverything) {
  const auto g = sample_kout(50, 2, Seed{1});
  const auto r = delete_uniform(g, DeletionSpec::count(0, Seed{2}));
  EXPECT_TRUE(r.deleted.empty());
  EXPECT_EQ(r.survivors.size(), 50u);
  EXPECT_EQ(r.adjacency, g.adjacency);
}

TEST(DeleteUniform, CliqueStaysCliqueOnSurvivors) {
  const auto g = sample_kout(5, 4, Seed{1});
  const auto r = delete_uniform(g, DeletionSpec::count(2, Seed{8}));
  ASSERT_EQ(r.survivors.size(), 3u);
  EXPECT_EQ(r.edge_count(), 3u);
  for (NodeId u : r.survivors) {
    for (NodeId v : r.survivors) {
      if (u != v) EXPECT_TRUE(r.adjacency.has_edge(u, v));
    }
  }
}

TEST(DeleteExplicit, InducedSubgraphOfMutualPairs) {
  const std::vector<NodeId> d{4};
  const auto r = delete_explicit(mutual_pairs(), d);
  EXPECT_EQ(r.survivors, (std::vector<NodeId>{1, 2, 3}));
  EXPECT_EQ(r.adjacency.edges(), (std::vector<Edge>{{1, 2}}));
}

TEST(DeleteExplicit, PicksAimedAtDeletedNodesAreWasted) {
  const auto g = adjacency_from_selections(SelectionProfile(4, 1, {{4}, {4}, {4}, {3}}));
  const std::vector<NodeId> d{4};
  const auto r = delete_explicit(g, d);
  EXPECT_EQ(r.survivors, (std::vector<NodeId>{1, 2, 3}));
  EXPECT_EQ(r.edge_count(), 0u);
}

TEST(DeleteExplicit, EmptyAndFullSets) {
  const auto g = sample_kout(6, 2, Seed{3});
  const auto none = delete_explicit(g, std::vector<NodeId>{});
  EXPECT_EQ(none.adjacency, g.adjacency);
  std::vector<NodeId> all(6);
  std::iota(all.begin(), all.end(), 1u);
  const auto gone = delete_explicit(g, all);
  EXPECT_TRUE(gone.survivors.empty());
  EXPECT_EQ(gone.edge_count(), 0u);
}

TEST(DeleteExplicit, RejectsOutOfRangeLabels) {
  const auto g = sample_kout(6, 2, Seed{3});
  EXPECT_THROW(delete_explicit(g, std::vector<NodeId>{7}), InvalidParameter);
  EXPECT_THROW(delete_explicit(g, std::vector<NodeId>{0}), InvalidParameter);
}

TEST(DeleteUniform, RejectsTooManyDeletions) {
  const auto g = sample_kout(6, 2, Seed{3});
  EXPECT_THROW(delete_uniform(g, DeletionSpec::count(7, Seed{})), InvalidParameter);
  EXPECT_NO_THROW(delete_uniform(g, DeletionSpec::count(6, Seed{})));
}

TEST(DeletionSpec, FractionRoundsHalfToEven) {
  EXPECT_EQ(DeletionSpec::fraction(0.5).realized_gamma(5000), 2500u);
  EXPECT_EQ(DeletionSpec::fraction(0.5).realized_gamma(5), 2u);   // 2.5 -> 2
  EXPECT_EQ(DeletionSpec::fraction(0.5).realized_gamma(7), 4u);   // 3.5 -> 4
  EXPECT_EQ(DeletionSpec::fraction(0.3).realized_gamma(10), 3u);
  EXPECT_THROW(DeletionSpec::fraction(0.0).realized_gamma(10), InvalidParameter);
  EXPECT_THROW(DeletionSpec::fraction(1.0).realized_gamma(10), InvalidParameter);
}

TEST(DeleteUniform, SameSeedSameDeletionOnDifferentGraphs) {
  const auto a = sample_kout(100, 2, Seed{1});
  const auto b = sample_kout(100, 3, Seed{2});
  const auto spec = DeletionSpec::count(30, Seed{77});
  EXPECT_EQ(delete_uniform(a, spec).deleted, delete_uniform(b, spec).deleted);
}

TEST(DeleteUniform, ComplementDeletionPartitionsVertices) {
  const auto g = sample_kout(40, 2, Seed{5});
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto r = delete_uniform(g, DeletionSpec::count(static_cast<std::uint32_t>(s), Seed{s}));
    const auto complement = delete_explicit(g, r.survivors);
    EXPECT_EQ(complement.deleted, r.survivors);
    EXPECT_EQ(complement.survivors, r.deleted);
  }
}

TEST(DeleteExplicit, InducedSubgraphPropertyExhaustive) {
  // Every deletion set of a few 8-node graphs.
  for (std::uint64_t s = 0; s < 5; ++s) {
    const auto g = sample_kout(8, 1 + s % 3, Seed{s});
    for (unsigned mask = 0; mask < 256; ++mask) {
      std::vector<NodeId> d;
      for (NodeId v = 1; v <= 8; ++v) {
        if (mask & (1u << (v - 1))) d.push_back(v);
      }
      const auto r = delete_explicit(g, d);
      ASSERT_EQ(r.survivors.size(), 8 - d.size());
      testing::expect_simple_undirected(r.adjacency);
      for (NodeId u = 1; u <= 8; ++u) {
        for (NodeId v = 1; v <= 8; ++v) {
          const bool alive = !(mask & (1u << (u - 1))) && !(mask & (1u << (v - 1)));
          ASSERT_EQ(r.adjacency.has_edge(u, v), alive && g.adjacency.has_edge(u, v));
        }
      }
    }
  }
}

TEST(DeleteUniform, DeletionSetsAreUniform) {
  const auto g = sample_kout(5, 2, Seed{0});
  std::map<std::vector<NodeId>, int> freq;
  const int draws = 100'000;
  for (int s = 0; s < draws; ++s) {
    ++freq[delete_uniform(g, DeletionSpec::count(2, Seed{static_cast<std::uint64_t>(s)})).deleted];
  }
  ASSERT_EQ(freq.size(), 10u);
  for (const auto& [set, count] : freq) {
    EXPECT_NEAR(static_cast<double>(count) / draws, 0.1, 0.01);
  }
}

}  // namespace
}  // namespace kout
