#include "koutgraph/serialization.hpp"

#include <gtest/gtest.h>

#include "json.hpp"
#include "koutgraph/error.hpp"

namespace kout {
namespace {

using nlohmann::json;

TEST(GraphJson, KOutRoundTripRebuildsAdjacency) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto g = sample_kout(30 + s, 1 + s % 4, Seed{s});
    const auto parsed = graph_from_json(graph_to_json(g, Seed{s}));
    const auto& back = std::get<KOutGraph>(parsed);
    ASSERT_EQ(back.profile, g.profile);
    ASSERT_EQ(back.adjacency, g.adjacency);
  }
}

TEST(GraphJson, KOutLayout) {
  const auto g = adjacency_from_selections(SelectionProfile(3, 1, {{2}, {1}, {1}}));
  const json doc = json::parse(graph_to_json(g, Seed{5}));
  EXPECT_EQ(doc["model"], "kout");
  EXPECT_EQ(doc["n"], 3);
  EXPECT_EQ(doc["k"], 1);
  EXPECT_EQ(doc["seed"], 5);
  EXPECT_EQ(doc["selections"], json::parse("[[2],[1],[1]]"));
  EXPECT_FALSE(doc.contains("adjacency"));
}

TEST(GraphJson, ErResamplesFromSeed) {
  const auto g = sample_er(300, 0.02, Seed{77});
  const std::string text = graph_to_json(g);
  const json doc = json::parse(text);
  EXPECT_EQ(doc["model"], "er");
  EXPECT_FALSE(doc.contains("selections"));
  const auto& back = std::get<BaselineGraph>(graph_from_json(text));
  EXPECT_EQ(back.adjacency, g.adjacency);
}

TEST(GraphJson, LargeSeedSurvives) {
  const std::uint64_t seed = 18446744073709551615ull;
  const auto g = sample_kout(5, 2, Seed{seed});
  EXPECT_EQ(json::parse(graph_to_json(g, Seed{seed}))["seed"].get<std::uint64_t>(), seed);
}

TEST(GraphJson, RejectsMalformedDocuments) {
  EXPECT_THROW(graph_from_json("not json"), InvalidParameter);
  EXPECT_THROW(graph_from_json(R"({"model":"kout","n":3,"seed":1})"), InvalidParameter);
  EXPECT_THROW(graph_from_json(R"({"model":"ba","n":3,"seed":1})"), InvalidParameter);
  EXPECT_THROW(graph_from_json(R"({"model":"kout","n":3,"k":1,"seed":1,
                                   "selections":[[1],[1],[1]]})"),
               InvalidProfile);
  EXPECT_THROW(graph_from_json(R"({"model":"kout","n":3,"k":1,"seed":-1,
                                   "selections":[[2],[1],[1]]})"),
               InvalidParameter);
  EXPECT_THROW(graph_from_json(R"({"model":"er","n":3,"p":2,"seed":1})"), InvalidParameter);
}

TEST(SummaryJson, FieldNames) {
  ComponentSummary s{3, 2, {2, 1}, 2, 1, false};
  EXPECT_EQ(summary_to_json(s),
            "{\"survivor_count\":3,\"component_count\":2,\"component_sizes\":[2,1],"
            "\"largest\":2,\"outside_giant\":1,\"connected\":false}\n");
}

TEST(BoundJson, IncludesTermsOnRequest) {
  const json plain = json::parse(bound_to_json(union_bound_pz(50, 3, 5)));
  EXPECT_FALSE(plain.contains("per_r_terms"));
  EXPECT_TRUE(plain.contains("pz_bound"));
  EXPECT_TRUE(plain.contains("clamped"));
  const json full = json::parse(bound_to_json(union_bound_pz(50, 3, 5, true)));
  EXPECT_EQ(full["per_r_terms"].size(), 22u);
}

TEST(ConfigJson, ParsesAllFields) {
  const auto c = config_from_json(R"({"model":"both","n":5000,"k_values":[3,4],
      "deletion":{"mode":"fraction","value":0.4},"trials":100,"master_seed":7,"lambda":20})");
  EXPECT_EQ(c.model, Model::kBoth);
  EXPECT_EQ(c.n, 5000u);
  EXPECT_EQ(c.k_values, (std::vector<std::uint32_t>{3, 4}));
  EXPECT_EQ(c.deletion_mode, DeletionMode::kFraction);
  EXPECT_DOUBLE_EQ(c.deletion_value, 0.4);
  EXPECT_EQ(c.trials, 100u);
  EXPECT_EQ(c.master_seed, 7u);
  EXPECT_EQ(c.lambda, 20u);
  const auto again = config_from_json(config_to_json(c));
  EXPECT_EQ(config_to_json(again), config_to_json(c));
}

TEST(ConfigJson, RejectsBadConfigs) {
  const char* base_deletion = R"("deletion":{"mode":"count","value":10})";
  EXPECT_THROW(config_from_json(std::string(R"({"model":"kout","n":100,"k_values":[2],)") +
                                base_deletion + R"(,"trials":5,"master_seed":1,"extra":1})"),
               InvalidParameter);
  EXPECT_THROW(config_from_json(std::string(R"({"model":"kout","n":100,"k_values":[],)") +
                                base_deletion + R"(,"trials":5,"master_seed":1})"),
               InvalidParameter);
  EXPECT_THROW(config_from_json(R"({"model":"kout","n":100,"k_values":[2],
      "deletion":{"mode":"count","value":2.5},"trials":5,"master_seed":1})"),
               InvalidParameter);
  EXPECT_THROW(config_from_json(R"({"model":"kout","n":100,"k_values":[2],
      "deletion":{"mode":"percent","value":2},"trials":5,"master_seed":1})"),
               InvalidParameter);
}

TEST(SweepCsv, HeaderAndRowFormat) {
  SweepResult result;
  SweepRow row;
  row.model = Model::kEr;
  row.n = 5000;
  row.k = 3;
  row.gamma = 2000;
  row.trials = 100;
  row.master_seed = 9;
  row.prob_connected = 0.25;
  row.mean_outside_giant = 1.5;
  row.max_outside_giant = 7;
  row.p95_outside_giant = 4;
  row.mean_components = 2.5;
  result.rows.push_back(row);
  row.model = Model::kKOut;
  row.prob_giant_within_lambda = 0.1;
  result.rows.push_back(row);
  EXPECT_EQ(sweep_to_csv(result),
            std::string(kSweepCsvHeader) + "\n" +
                "er,5000,3,2000,100,9,0.25,1.5,7,4,2.5,\n"
                "kout,5000,3,2000,100,9,0.25,1.5,7,4,2.5,0.1\n");
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(std::stod(format_double(1.0 / 3.0)), 1.0 / 3.0);
}

}  // namespace
}  // namespace kout
