#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "koutgraph/analysis.hpp"
#include "koutgraph/deletion.hpp"
#include "koutgraph/error.hpp"
#include "koutgraph/graph.hpp"
#include "koutgraph/montecarlo.hpp"
#include "koutgraph/oracle.hpp"
#include "koutgraph/serialization.hpp"
#include "koutgraph/thresholds.hpp"

namespace kout::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

/// Unreadable or unwritable files are parameter errors (exit 2).
class FileError : public InvalidParameter {
 public:
  using InvalidParameter::InvalidParameter;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FileError("cannot write " + path);
  out << content;
  if (!out.flush()) throw FileError("cannot write " + path);
}

std::string one_line(std::string text) {
  std::replace(text.begin(), text.end(), '\n', ' ');
  while (!text.empty() && text.back() == ' ') text.pop_back();
  return text;
}

struct SampleArgs {
  std::string model;
  std::uint32_t n = 0;
  std::optional<std::uint32_t> k;
  std::optional<double> p;
  std::uint64_t seed = 0;
  std::string out;
};

struct AnalyzeArgs {
  std::string in;
  std::optional<std::uint32_t> gamma;
  std::optional<double> alpha;
  std::uint64_t del_seed = 0;
};

struct ThresholdArgs {
  std::string goal;
  std::uint32_t n = 0;
  std::optional<std::uint32_t> gamma;
  std::optional<double> alpha;
  std::optional<std::uint32_t> lambda;
  std::uint32_t slack = 0;
};

struct SweepArgs {
  std::string config;
  std::string out;
  unsigned workers = 0;
};

struct BoundArgs {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t gamma = 0;
  bool terms = false;
};

struct OracleArgs {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t gamma = 0;
  std::optional<std::uint32_t> lambda;
};

void run_sample(const SampleArgs& a, std::ostream& out) {
  std::string text;
  if (a.model == "kout") {
    if (!a.k || a.p) throw InvalidParameter("sample --model kout needs --k and no --p");
    const KOutGraph graph = sample_kout(a.n, *a.k, Seed{a.seed});
    text = graph_to_json(graph, Seed{a.seed});
  } else {
    if (!a.p || a.k) throw InvalidParameter("sample --model er needs --p and no --k");
    text = graph_to_json(sample_er(a.n, *a.p, Seed{a.seed}));
  }
  write_file(a.out, text);
  out << "wrote " << a.out << "\n";
}

void run_analyze(const AnalyzeArgs& a, std::ostream& out) {
  const auto graph = graph_from_json(read_file(a.in));
  const AdjacencyList& adjacency = std::visit(
      [](const auto& g) -> const AdjacencyList& { return g.adjacency; }, graph);
  ComponentSummary summary;
  if (a.gamma || a.alpha) {
    const DeletionSpec spec = a.gamma ? DeletionSpec::count(*a.gamma, Seed{a.del_seed})
                                      : DeletionSpec::fraction(*a.alpha, Seed{a.del_seed});
    summary = components(delete_uniform(adjacency, spec));
  } else {
    summary = components(adjacency);
  }
  out << summary_to_json(summary);
}

void run_threshold(const ThresholdArgs& a, std::ostream& out) {
  ThresholdQuery q;
  q.goal = a.goal == "giant" ? ThresholdGoal::kGiant : ThresholdGoal::kConnectivity;
  q.n = a.n;
  q.gamma = a.gamma;
  q.alpha = a.alpha;
  q.lambda = a.lambda;
  q.slack = a.slack;
  const ThresholdAnswer answer = evaluate_threshold(q);

  ordered_json doc;
  doc["goal"] = a.goal;
  doc["n"] = a.n;
  if (a.gamma) doc["gamma"] = *a.gamma;
  if (a.alpha) doc["alpha"] = *a.alpha;
  if (a.lambda) doc["lambda"] = *a.lambda;
  doc["slack"] = a.slack;
  doc["regime"] = to_string(answer.regime);
  doc["function"] = threshold_function(answer.regime);
  doc["threshold"] = answer.threshold;
  doc["recommended_k"] = answer.min_k;
  out << doc.dump() << "\n";
}

void run_sweep_command(const SweepArgs& a, std::ostream& err) {
  const ExperimentConfig config = config_from_json(read_file(a.config));
  const SweepResult result = config.model == Model::kBoth ? compare_er(config, a.workers)
                                                          : run_sweep(config, a.workers);
  for (const auto& row : result.rows) {
    err << "cell model=" << to_string(row.model) << " n=" << row.n << " k=" << row.k
        << " gamma=" << row.gamma << " prob_connected=" << format_double(row.prob_connected)
        << " max_outside_giant=" << row.max_outside_giant << "\n";
  }
  write_file(a.out, sweep_to_csv(result));
}

void run_bound(const BoundArgs& a, std::ostream& out) {
  out << bound_to_json(union_bound_pz(a.n, a.k, a.gamma, a.terms));
}

void run_oracle(const OracleArgs& a, std::ostream& out) {
  const OraclePredicate predicate =
      a.lambda ? OraclePredicate{OutsideGiantBelow{*a.lambda}} : OraclePredicate{ConnectedPredicate{}};
  const Fraction value = exact_probability(a.n, a.k, a.gamma, predicate);
  ordered_json doc;
  doc["n"] = a.n;
  doc["k"] = a.k;
  doc["gamma"] = a.gamma;
  doc["predicate"] = to_string(predicate);
  doc["fraction"] = value.to_string();
  doc["numerator"] = value.numerator();
  doc["denominator"] = value.denominator();
  doc["decimal"] = value.to_double();
  out << doc.dump() << "\n";
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random K-out graphs under random node deletion", "koutsim"};
  app.require_subcommand(1);

  SampleArgs sample;
  auto* sample_cmd = app.add_subcommand("sample", "Sample a graph and write it as JSON");
  sample_cmd->add_option("--model", sample.model, "kout or er")
      ->required()
      ->check(CLI::IsMember({"kout", "er"}));
  sample_cmd->add_option("--n", sample.n, "Node count")->required();
  auto* k_opt = sample_cmd->add_option("--k", sample.k, "Selections per node (kout)");
  auto* p_opt = sample_cmd->add_option("--p", sample.p, "Edge probability (er)");
  k_opt->excludes(p_opt);
  sample_cmd->add_option("--seed", sample.seed, "Master seed")->required();
  sample_cmd->add_option("--out", sample.out, "Output graph file")->required();

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Component summary of a graph file");
  analyze_cmd->add_option("--in", analyze.in, "Graph file")->required();
  auto* del_opt = analyze_cmd->add_option("--delete", analyze.gamma, "Delete this many nodes");
  auto* frac_opt =
      analyze_cmd->add_option("--delete-frac", analyze.alpha, "Delete this fraction of nodes");
  del_opt->excludes(frac_opt);
  analyze_cmd->add_option("--del-seed", analyze.del_seed, "Deletion seed");

  ThresholdArgs threshold;
  auto* threshold_cmd = app.add_subcommand("threshold", "Threshold and recommended K");
  threshold_cmd->add_option("--goal", threshold.goal, "connectivity or giant")
      ->required()
      ->check(CLI::IsMember({"connectivity", "giant"}));
  threshold_cmd->add_option("--n", threshold.n, "Node count")->required();
  auto* gamma_opt = threshold_cmd->add_option("--gamma", threshold.gamma, "Deleted node count");
  auto* alpha_opt = threshold_cmd->add_option("--alpha", threshold.alpha, "Deleted fraction");
  gamma_opt->excludes(alpha_opt);
  threshold_cmd->add_option("--lambda", threshold.lambda, "Allowed nodes outside the giant");
  threshold_cmd->add_option("--slack", threshold.slack, "Additive margin on K");

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a Monte Carlo sweep from a config file");
  sweep_cmd->add_option("--config", sweep.config, "Sweep config JSON")->required();
  sweep_cmd->add_option("--out", sweep.out, "Output CSV")->required();
  sweep_cmd->add_option("--workers", sweep.workers, "Worker threads (default: all cores)");

  BoundArgs bound;
  auto* bound_cmd = app.add_subcommand("bound", "Union bound on the disconnection probability");
  bound_cmd->add_option("--n", bound.n, "Node count")->required();
  bound_cmd->add_option("--k", bound.k, "Selections per node")->required();
  bound_cmd->add_option("--gamma", bound.gamma, "Deleted node count")->required();
  bound_cmd->add_flag("--terms", bound.terms, "Include the per-r terms");

  OracleArgs oracle;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exact probability by enumeration");
  oracle_cmd->add_option("--n", oracle.n, "Node count")->required();
  oracle_cmd->add_option("--k", oracle.k, "Selections per node")->required();
  oracle_cmd->add_option("--gamma", oracle.gamma, "Deleted node count")->required();
  oracle_cmd->add_option("--lambda", oracle.lambda,
                         "Probability of fewer than lambda nodes outside the giant");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "koutsim: " << one_line(e.what()) << "\n";
    return kExitInvalid;
  }

  try {
    if (*sample_cmd) run_sample(sample, out);
    else if (*analyze_cmd) run_analyze(analyze, out);
    else if (*threshold_cmd) run_threshold(threshold, out);
    else if (*sweep_cmd) run_sweep_command(sweep, err);
    else if (*bound_cmd) run_bound(bound, out);
    else if (*oracle_cmd) run_oracle(oracle, out);
  } catch (const InvalidParameter& e) {
    err << "koutsim: " << one_line(e.what()) << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "koutsim: " << one_line(e.what()) << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace kout::cli
