#include "koutgraph/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "koutgraph/analysis.hpp"
#include "koutgraph/error.hpp"
#include "koutgraph/graph.hpp"

namespace kout {

namespace {

constexpr std::uint64_t kKOutTag = 0x6b6f7574;  // "kout"
constexpr std::uint64_t kErTag = 0x6572;        // "er"
constexpr std::uint64_t kDeletionTag = 0x64656c;  // "del"

struct Cell {
  Model model;
  std::uint32_t k;
  GraphParams params;
};

SweepRow aggregate(const ExperimentConfig& config, const Cell& cell, std::uint32_t gamma,
                   std::span<const TrialResult> trials) {
  SweepRow row;
  row.model = cell.model;
  row.n = config.n;
  row.k = cell.k;
  row.gamma = gamma;
  row.trials = static_cast<std::uint32_t>(trials.size());
  row.master_seed = config.master_seed;

  std::vector<std::uint32_t> outside;
  outside.reserve(trials.size());
  std::uint64_t outside_sum = 0;
  std::uint64_t component_sum = 0;
  std::uint32_t within_lambda = 0;
  for (const auto& t : trials) {
    row.connected_trials += t.connected ? 1 : 0;
    outside.push_back(t.outside_giant);
    outside_sum += t.outside_giant;
    component_sum += t.component_count;
    if (config.lambda && t.outside_giant < *config.lambda) ++within_lambda;
  }
  const double count = static_cast<double>(trials.size());
  row.prob_connected = row.connected_trials / count;
  row.mean_outside_giant = static_cast<double>(outside_sum) / count;
  row.mean_components = static_cast<double>(component_sum) / count;
  std::sort(outside.begin(), outside.end());
  row.max_outside_giant = outside.back();
  const std::size_t rank = (95 * outside.size() + 99) / 100;  // ceil(0.95 T)
  row.p95_outside_giant = outside[rank - 1];
  if (config.lambda) row.prob_giant_within_lambda = within_lambda / count;
  return row;
}

SweepResult execute(const ExperimentConfig& config, bool paired, unsigned workers) {
  config.validate();
  const std::uint32_t n = config.n;
  const DeletionSpec deletion_template{config.deletion_mode, config.deletion_value, Seed{}};
  const std::uint32_t gamma = deletion_template.realized_gamma(n);

  std::vector<Cell> cells;
  for (std::uint32_t k : config.k_values) {
    if (paired || config.model == Model::kKOut) {
      cells.push_back({Model::kKOut, k, KOutParams{n, k}});
    }
    if (paired || config.model == Model::kEr) {
      cells.push_back({Model::kEr, k, ErParams{n, matched_er_probability(n, k)}});
    }
  }

  const std::uint64_t trials = config.trials;
  const std::uint64_t task_count = cells.size() * trials;
  std::vector<TrialResult> results(task_count);
  std::vector<std::exception_ptr> errors(cells.size());
  std::mutex error_mutex;
  std::atomic<std::uint64_t> next{0};

  auto work = [&] {
    for (;;) {
      const std::uint64_t task = next.fetch_add(1, std::memory_order_relaxed);
      if (task >= task_count) return;
      const std::size_t c = task / trials;
      const std::uint64_t index = task % trials;
      const Cell& cell = cells[c];
      try {
        DeletionSpec deletion = deletion_template;
        deletion.seed = trial_deletion_seed(config.master_seed, n, cell.k, gamma, index);
        results[task] = run_trial(
            cell.params, deletion,
            trial_graph_seed(config.master_seed, cell.model, n, cell.k, gamma, index));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!errors[c]) errors[c] = std::current_exception();
      }
    }
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, task_count));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (!errors[c]) continue;
    const std::string where = "sweep cell model=" + to_string(cells[c].model) +
                              " k=" + std::to_string(cells[c].k) +
                              " gamma=" + std::to_string(gamma) + ": ";
    try {
      std::rethrow_exception(errors[c]);
    } catch (const InvalidParameter& e) {
      throw InvalidParameter(where + e.what());
    } catch (const std::exception& e) {
      throw std::runtime_error(where + e.what());
    }
  }

  SweepResult result;
  result.rows.reserve(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const std::span<const TrialResult> slice(results.data() + c * trials, trials);
    result.rows.push_back(aggregate(config, cells[c], gamma, slice));
  }
  return result;
}

}  // namespace

std::string to_string(Model model) {
  switch (model) {
    case Model::kKOut: return "kout";
    case Model::kEr: return "er";
    case Model::kBoth: return "both";
  }
  return "unknown";
}

Model parse_model(const std::string& text) {
  if (text == "kout") return Model::kKOut;
  if (text == "er") return Model::kEr;
  if (text == "both") return Model::kBoth;
  throw InvalidParameter("unknown model '" + text + "' (expected kout, er or both)");
}

TrialResult run_trial(const GraphParams& params, const DeletionSpec& deletion, Seed graph_seed) {
  const ResidualGraph residual = std::visit(
      [&](const auto& p) -> ResidualGraph {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, KOutParams>) {
          return delete_uniform(sample_kout(p.n, p.k, graph_seed), deletion);
        } else {
          return delete_uniform(sample_er(p.n, p.p, graph_seed), deletion);
        }
      },
      params);
  const ComponentSummary summary = components(residual);
  return TrialResult{summary.connected, summary.outside_giant, summary.component_count};
}

void ExperimentConfig::validate() const {
  if (n < 2) throw InvalidParameter("experiment needs n >= 2");
  if (k_values.empty()) throw InvalidParameter("k_values must not be empty");
  for (std::uint32_t k : k_values) {
    if (k < 1 || k >= n) {
      throw InvalidParameter("k=" + std::to_string(k) + " outside [1, n-1]");
    }
  }
  if (trials < 1) throw InvalidParameter("trials must be >= 1");
  if (lambda && *lambda < 1) throw InvalidParameter("lambda must be >= 1");
  DeletionSpec{deletion_mode, deletion_value, Seed{}}.realized_gamma(n);
}

Seed trial_graph_seed(std::uint64_t master, Model model, std::uint32_t n, std::uint32_t k,
                      std::uint32_t gamma, std::uint64_t index) {
  const std::uint64_t tag = model == Model::kEr ? kErTag : kKOutTag;
  return derive_seed(Seed{master}, {tag, n, k, gamma, index});
}

Seed trial_deletion_seed(std::uint64_t master, std::uint32_t n, std::uint32_t k,
                         std::uint32_t gamma, std::uint64_t index) {
  return derive_seed(Seed{master}, {kDeletionTag, n, k, gamma, index});
}

double matched_er_probability(std::uint32_t n, std::uint32_t k) {
  return std::min(1.0, 2.0 * k / static_cast<double>(n));
}

SweepResult run_sweep(const ExperimentConfig& config, unsigned workers) {
  return execute(config, config.model == Model::kBoth, workers);
}

SweepResult compare_er(const ExperimentConfig& config, unsigned workers) {
  if (config.model != Model::kBoth) {
    throw InvalidParameter("ER comparison needs model=both");
  }
  return execute(config, true, workers);
}

}  // namespace kout
