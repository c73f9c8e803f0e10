#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "koutgraph/deletion.hpp"
#include "koutgraph/rng.hpp"

namespace kout {

enum class Model { kKOut, kEr, kBoth };

std::string to_string(Model model);
/// Parses "kout", "er" or "both"; throws InvalidParameter otherwise.
Model parse_model(const std::string& text);

struct KOutParams {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
};

struct ErParams {
  std::uint32_t n = 0;
  double p = 0.0;
};

using GraphParams = std::variant<KOutParams, ErParams>;

struct TrialResult {
  bool connected = true;
  std::uint32_t outside_giant = 0;
  std::uint32_t component_count = 0;

  friend bool operator==(const TrialResult&, const TrialResult&) = default;
};

/// Samples one graph from `graph_seed`, deletes per `deletion` (which
/// carries its own seed) and summarizes the residual graph.
TrialResult run_trial(const GraphParams& params, const DeletionSpec& deletion, Seed graph_seed);

struct ExperimentConfig {
  Model model = Model::kKOut;
  std::uint32_t n = 0;
  std::vector<std::uint32_t> k_values;
  DeletionMode deletion_mode = DeletionMode::kCount;
  double deletion_value = 0.0;
  std::uint32_t trials = 1;
  std::uint64_t master_seed = 0;
  std::optional<std::uint32_t> lambda;

  /// Throws InvalidParameter on an empty k list, k outside [1, n-1],
  /// zero trials, n < 2 or an unrealizable deletion.
  void validate() const;
};

struct SweepRow {
  Model model = Model::kKOut;  // kKOut or kEr
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t gamma = 0;
  std::uint32_t trials = 0;
  std::uint64_t master_seed = 0;
  std::uint32_t connected_trials = 0;
  double prob_connected = 0.0;
  double mean_outside_giant = 0.0;
  std::uint32_t max_outside_giant = 0;
  std::uint32_t p95_outside_giant = 0;  // nearest-rank 95th percentile
  double mean_components = 0.0;
  std::optional<double> prob_giant_within_lambda;  // fraction with outside_giant < lambda

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

struct SweepResult {
  std::vector<SweepRow> rows;

  friend bool operator==(const SweepResult&, const SweepResult&) = default;
};

/// Trial seeds are pure functions of the master seed and the cell
/// coordinates, so the output is identical for any worker count.
///
///   graph seed    = derive_seed(master, {model tag, n, k, gamma, index})
///   deletion seed = derive_seed(master, {"del" tag, n, k, gamma, index})
///
/// The deletion seed omits the model, so K-out and ER cells with the same
/// (k, gamma, index) delete the same node set.
Seed trial_graph_seed(std::uint64_t master, Model model, std::uint32_t n, std::uint32_t k,
                      std::uint32_t gamma, std::uint64_t index);
Seed trial_deletion_seed(std::uint64_t master, std::uint32_t n, std::uint32_t k,
                         std::uint32_t gamma, std::uint64_t index);

/// ER edge probability with the same mean degree as a K-out graph: 2k/n,
/// capped at 1.
double matched_er_probability(std::uint32_t n, std::uint32_t k);

/// Runs every trial of every row. Rows appear in k_values order; with
/// model == kBoth each k yields a kout row then an er row. workers == 0
/// means std::thread::hardware_concurrency().
SweepResult run_sweep(const ExperimentConfig& config, unsigned workers = 0);

/// Paired K-out versus ER sweep; requires model == kBoth.
SweepResult compare_er(const ExperimentConfig& config, unsigned workers = 0);

}  // namespace kout
