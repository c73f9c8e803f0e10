#pragma once

#include <string>
#include <variant>

#include "koutgraph/analysis.hpp"
#include "koutgraph/graph.hpp"
#include "koutgraph/montecarlo.hpp"
#include "koutgraph/thresholds.hpp"

namespace kout {

// Parsing functions throw InvalidParameter on malformed documents and
// InvalidProfile on bad selections.

/// {"model":"kout","n":..,"k":..,"seed":..,"selections":[[..],..]}
std::string graph_to_json(const KOutGraph& graph, Seed seed);
/// {"model":"er","n":..,"p":..,"seed":..}
std::string graph_to_json(const BaselineGraph& graph);

/// Rebuilds adjacency from the selections (kout) or by resampling
/// from (n, p, seed) (er).
std::variant<KOutGraph, BaselineGraph> graph_from_json(const std::string& text);

std::string summary_to_json(const ComponentSummary& summary);
std::string bound_to_json(const BoundReport& report);

ExperimentConfig config_from_json(const std::string& text);
std::string config_to_json(const ExperimentConfig& config);

inline constexpr const char* kSweepCsvHeader =
    "model,n,k,gamma,trials,master_seed,prob_connected,mean_outside_giant,"
    "max_outside_giant,p95_outside_giant,mean_components,prob_giant_within_lambda";

/// Header line plus one row per cell, LF line endings. Reals use the
/// shortest round-trip decimal form.
std::string sweep_to_csv(const SweepResult& result);

/// Shortest decimal string that parses back to exactly `value`.
std::string format_double(double value);

}  // namespace kout
