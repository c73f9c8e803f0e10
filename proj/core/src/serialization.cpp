#include "koutgraph/serialization.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "json.hpp"
#include "koutgraph/error.hpp"

namespace kout {

namespace {

using ordered_json = nlohmann::ordered_json;
using json = nlohmann::json;

json parse_document(const std::string& text, const char* what) {
  try {
    json doc = json::parse(text);
    if (!doc.is_object()) throw InvalidParameter(std::string(what) + " must be a JSON object");
    return doc;
  } catch (const json::parse_error& e) {
    throw InvalidParameter(std::string("malformed ") + what + ": " + e.what());
  }
}

const json& require(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw InvalidParameter(std::string("missing field \"") + key + "\"");
  return *it;
}

std::uint64_t as_unsigned(const json& value, const char* key, std::uint64_t max) {
  if (!value.is_number_unsigned()) {
    throw InvalidParameter(std::string("field \"") + key + "\" must be a nonnegative integer");
  }
  const auto v = value.get<std::uint64_t>();
  if (v > max) throw InvalidParameter(std::string("field \"") + key + "\" is too large");
  return v;
}

std::uint32_t as_u32(const json& value, const char* key) {
  return static_cast<std::uint32_t>(as_unsigned(value, key, UINT32_MAX));
}

double as_real(const json& value, const char* key) {
  if (!value.is_number()) {
    throw InvalidParameter(std::string("field \"") + key + "\" must be a number");
  }
  return value.get<double>();
}

void reject_unknown(const json& doc, std::initializer_list<const char*> allowed) {
  const std::set<std::string> keys(allowed.begin(), allowed.end());
  for (const auto& [key, _] : doc.items()) {
    if (!keys.contains(key)) throw InvalidParameter("unknown field \"" + key + "\"");
  }
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) throw std::runtime_error("cannot format double");
  return std::string(buf, end);
}

std::string graph_to_json(const KOutGraph& graph, Seed seed) {
  ordered_json doc;
  doc["model"] = "kout";
  doc["n"] = graph.n();
  doc["k"] = graph.k();
  doc["seed"] = seed.master;
  auto rows = ordered_json::array();
  for (NodeId i = 1; i <= graph.n(); ++i) {
    auto r = graph.profile.row(i);
    rows.push_back(std::vector<NodeId>(r.begin(), r.end()));
  }
  doc["selections"] = std::move(rows);
  return doc.dump() + "\n";
}

std::string graph_to_json(const BaselineGraph& graph) {
  ordered_json doc;
  doc["model"] = "er";
  doc["n"] = graph.n;
  doc["p"] = graph.p;
  doc["seed"] = graph.seed.master;
  return doc.dump() + "\n";
}

std::variant<KOutGraph, BaselineGraph> graph_from_json(const std::string& text) {
  const json doc = parse_document(text, "graph file");
  const json& model = require(doc, "model");
  if (!model.is_string()) throw InvalidParameter("field \"model\" must be a string");
  const std::uint32_t n = as_u32(require(doc, "n"), "n");
  const Seed seed{as_unsigned(require(doc, "seed"), "seed", UINT64_MAX)};

  if (model == "er") {
    reject_unknown(doc, {"model", "n", "p", "seed"});
    return sample_er(n, as_real(require(doc, "p"), "p"), seed);
  }
  if (model != "kout") {
    throw InvalidParameter("graph model must be \"kout\" or \"er\"");
  }
  reject_unknown(doc, {"model", "n", "k", "seed", "selections"});
  const std::uint32_t k = as_u32(require(doc, "k"), "k");
  const json& selections = require(doc, "selections");
  if (!selections.is_array()) throw InvalidParameter("field \"selections\" must be an array");
  std::vector<std::vector<NodeId>> rows;
  rows.reserve(selections.size());
  for (const auto& row : selections) {
    if (!row.is_array()) throw InvalidProfile("each selection row must be an array");
    std::vector<NodeId> picks;
    for (const auto& label : row) picks.push_back(as_u32(label, "selections"));
    rows.push_back(std::move(picks));
  }
  return adjacency_from_selections(SelectionProfile(n, k, std::move(rows)));
}

std::string summary_to_json(const ComponentSummary& summary) {
  ordered_json doc;
  doc["survivor_count"] = summary.survivor_count;
  doc["component_count"] = summary.component_count;
  doc["component_sizes"] = summary.component_sizes;
  doc["largest"] = summary.largest;
  doc["outside_giant"] = summary.outside_giant;
  doc["connected"] = summary.connected;
  return doc.dump() + "\n";
}

std::string bound_to_json(const BoundReport& report) {
  ordered_json doc;
  doc["n"] = report.n;
  doc["k"] = report.k;
  doc["gamma"] = report.gamma;
  doc["pz_bound"] = report.pz_bound;
  doc["log_sum"] = report.log_sum;
  doc["clamped"] = report.clamped;
  if (report.per_r_terms) doc["per_r_terms"] = *report.per_r_terms;
  return doc.dump() + "\n";
}

ExperimentConfig config_from_json(const std::string& text) {
  const json doc = parse_document(text, "sweep config");
  reject_unknown(doc, {"model", "n", "k_values", "deletion", "trials", "master_seed", "lambda"});
  ExperimentConfig config;
  const json& model = require(doc, "model");
  if (!model.is_string()) throw InvalidParameter("field \"model\" must be a string");
  config.model = parse_model(model.get<std::string>());
  config.n = as_u32(require(doc, "n"), "n");
  const json& ks = require(doc, "k_values");
  if (!ks.is_array()) throw InvalidParameter("field \"k_values\" must be an array");
  for (const auto& k : ks) config.k_values.push_back(as_u32(k, "k_values"));

  const json& deletion = require(doc, "deletion");
  if (!deletion.is_object()) throw InvalidParameter("field \"deletion\" must be an object");
  reject_unknown(deletion, {"mode", "value"});
  const json& mode = require(deletion, "mode");
  if (mode == "fraction") {
    config.deletion_mode = DeletionMode::kFraction;
    config.deletion_value = as_real(require(deletion, "value"), "value");
  } else if (mode == "count") {
    config.deletion_mode = DeletionMode::kCount;
    config.deletion_value = as_u32(require(deletion, "value"), "value");
  } else {
    throw InvalidParameter("deletion mode must be \"fraction\" or \"count\"");
  }
  config.trials = as_u32(require(doc, "trials"), "trials");
  config.master_seed = as_unsigned(require(doc, "master_seed"), "master_seed", UINT64_MAX);
  if (auto it = doc.find("lambda"); it != doc.end() && !it->is_null()) {
    config.lambda = as_u32(*it, "lambda");
  }
  config.validate();
  return config;
}

std::string config_to_json(const ExperimentConfig& config) {
  ordered_json doc;
  doc["model"] = to_string(config.model);
  doc["n"] = config.n;
  doc["k_values"] = config.k_values;
  ordered_json deletion;
  if (config.deletion_mode == DeletionMode::kFraction) {
    deletion["mode"] = "fraction";
    deletion["value"] = config.deletion_value;
  } else {
    deletion["mode"] = "count";
    deletion["value"] = static_cast<std::uint64_t>(config.deletion_value);
  }
  doc["deletion"] = std::move(deletion);
  doc["trials"] = config.trials;
  doc["master_seed"] = config.master_seed;
  if (config.lambda) doc["lambda"] = *config.lambda;
  return doc.dump() + "\n";
}

std::string sweep_to_csv(const SweepResult& result) {
  std::ostringstream out;
  out << kSweepCsvHeader << '\n';
  for (const auto& row : result.rows) {
    out << to_string(row.model) << ',' << row.n << ',' << row.k << ',' << row.gamma << ','
        << row.trials << ',' << row.master_seed << ',' << format_double(row.prob_connected)
        << ',' << format_double(row.mean_outside_giant) << ',' << row.max_outside_giant << ','
        << row.p95_outside_giant << ',' << format_double(row.mean_components) << ',';
    if (row.prob_giant_within_lambda) out << format_double(*row.prob_giant_within_lambda);
    out << '\n';
  }
  return out.str();
}

}  // namespace kout
