// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Every tolerance is fixed here.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "koutgraph/analysis.hpp"
#include "koutgraph/montecarlo.hpp"
#include "koutgraph/oracle.hpp"
#include "koutgraph/serialization.hpp"
#include "koutgraph/thresholds.hpp"

namespace {

using namespace kout;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      pass = false;
      detail << " [violated: " << what << "]";
    }
  }
};

double binomial_se(double p, double trials) { return std::sqrt(p * (1.0 - p) / trials); }

ExperimentConfig config(Model model, std::uint32_t n, std::vector<std::uint32_t> ks,
                        DeletionMode mode, double value, std::uint32_t trials,
                        std::uint64_t seed) {
  ExperimentConfig c;
  c.model = model;
  c.n = n;
  c.k_values = std::move(ks);
  c.deletion_mode = mode;
  c.deletion_value = value;
  c.trials = trials;
  c.master_seed = seed;
  return c;
}

// Shared between the linear-deletion transition and union-bound criteria.
SweepResult& linear_sweep() {
  static SweepResult result = run_sweep(config(Model::kKOut, 5000, {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14},
                                               DeletionMode::kFraction, 0.5, 200, 20210601));
  return result;
}

const SweepRow& row_for(const SweepResult& result, Model model, std::uint32_t k) {
  for (const auto& row : result.rows) {
    if (row.model == model && row.k == k) return row;
  }
  throw std::runtime_error("missing sweep row");
}

Outcome oracle_equivalence() {
  Outcome o;
  struct Case { std::uint32_t n, k, gamma; };
  const Case cases[] = {{3, 1, 0}, {4, 1, 0}, {4, 1, 1}, {5, 2, 0}, {5, 2, 1}, {6, 1, 2}};
  const std::uint32_t trials = 100'000;
  o.require(exact_probability(4, 1, 0, ConnectedPredicate{}) == Fraction(78, 81), "P(4,1,0) = 78/81");
  o.require(exact_probability(4, 1, 1, ConnectedPredicate{}) == Fraction(17, 27), "P(4,1,1) = 17/27");
  for (const auto& c : cases) {
    const Fraction exact = exact_probability(c.n, c.k, c.gamma, ConnectedPredicate{});
    const double p = exact.to_double();
    const auto row = run_sweep(config(Model::kKOut, c.n, {c.k}, DeletionMode::kCount, c.gamma,
                                      trials, 1000 + c.n * 100 + c.k * 10 + c.gamma))
                         .rows.at(0);
    const double tolerance = 3 * binomial_se(p, trials);
    const double diff = std::abs(row.prob_connected - p);
    o.detail << " (" << c.n << "," << c.k << "," << c.gamma << "): exact " << exact << " mc "
             << row.prob_connected << ";";
    o.require(diff <= tolerance, "MC within 3 SE of oracle at n=" + std::to_string(c.n));
  }
  return o;
}

Outcome exact_vs_formula() {
  Outcome o;
  const std::vector<NodeId> deleted{4};
  const Fraction isolated = enumerate_probability(
      4, 1, deleted, [](const ResidualGraph& r) { return r.adjacency.degree(1) == 0; });
  const Fraction formula = cut_event_probability_exact(4, 1, 1, 1);
  o.detail << " oracle " << isolated << ", formula " << formula << ", double "
           << cut_event_probability(4, 1, 1, 1) << ";";
  o.require(isolated == Fraction(4, 27), "oracle isolation frequency is 4/27");
  o.require(formula == isolated, "exact formula equals oracle frequency");
  o.require(std::abs(cut_event_probability(4, 1, 1, 1) - 4.0 / 27.0) < 1e-15,
            "log-space evaluation matches 4/27");
  int points = 0;
  for (std::uint32_t n = 2; n <= 12; ++n) {
    for (std::uint32_t k = 1; k <= 3 && k < n; ++k) {
      for (std::uint32_t gamma = 0; gamma <= 3 && gamma + 2 <= n; ++gamma) {
        for (std::uint32_t r = 1; r + gamma + 1 <= n; ++r) {
          ++points;
          const double exact = cut_event_probability(n, k, gamma, r);
          const double bound = cut_event_upper_bound(n, k, gamma, r);
          if (!(exact >= 0.0 && exact <= bound * (1 + 1e-12) && bound <= 1.0)) {
            o.require(false, "bound dominates exact at n=" + std::to_string(n) + " k=" +
                                 std::to_string(k) + " gamma=" + std::to_string(gamma) +
                                 " r=" + std::to_string(r));
          }
        }
      }
    }
  }
  o.detail << " grid points " << points;
  return o;
}

Outcome linear_transition() {
  Outcome o;
  const double threshold = r1(0.5, 5000);
  const auto& low = row_for(linear_sweep(), Model::kKOut, 4);
  const auto& high = row_for(linear_sweep(), Model::kKOut, 11);
  o.detail << " r1=" << threshold << " P(K=4)=" << low.prob_connected
           << " P(K=11)=" << high.prob_connected;
  o.require(threshold > 4 && threshold < 11, "threshold between K=4 and K=11");
  o.require(low.prob_connected <= 0.10, "P(K=4) <= 0.10");
  o.require(high.prob_connected >= 0.95, "P(K=11) >= 0.95");
  return o;
}

Outcome robustness_at_two() {
  Outcome o;
  const auto row = run_sweep(config(Model::kKOut, 50000, {2}, DeletionMode::kCount, 100, 100,
                                    20210602))
                       .rows.at(0);
  o.detail << " max_outside_giant=" << row.max_outside_giant
           << " prob_connected=" << row.prob_connected;
  o.require(row.max_outside_giant <= 2, "max_outside_giant <= 2");
  return o;
}

Outcome sublinear_connectivity() {
  Outcome o;
  struct Case { std::uint32_t gamma, k; };
  for (const auto& c : {Case{1000, 4}, Case{2000, 5}}) {
    const auto row = run_sweep(config(Model::kKOut, 50000, {c.k}, DeletionMode::kCount, c.gamma,
                                      100, 20210603 + c.gamma))
                         .rows.at(0);
    o.detail << " gamma=" << c.gamma << " K=" << c.k << " P=" << row.prob_connected << ";";
    o.require(row.prob_connected >= 0.95, "P >= 0.95 at gamma=" + std::to_string(c.gamma));
  }
  return o;
}

Outcome giant_bound() {
  Outcome o;
  ThresholdQuery q;
  q.goal = ThresholdGoal::kGiant;
  q.n = 50000;
  q.gamma = 250;
  q.lambda = 250;
  const std::uint32_t k = min_k(q);
  auto c = config(Model::kKOut, 50000, {k}, DeletionMode::kCount, 250, 100, 20210604);
  c.lambda = 250;
  const auto row = run_sweep(c).rows.at(0);
  o.detail << " min_k=" << k << " max_outside_giant=" << row.max_outside_giant
           << " P(outside<250)=" << *row.prob_giant_within_lambda;
  o.require(k == 2, "min_k(giant, gamma=250, lambda=250) = 2");
  o.require(row.prob_giant_within_lambda == 1.0, "outside_giant < 250 in every trial");
  return o;
}

Outcome union_bound_dominance() {
  Outcome o;
  int cells = 0;
  for (const auto& row : linear_sweep().rows) {
    const auto report = union_bound_pz(row.n, row.k, row.gamma);
    if (!(report.pz_bound < 0.5)) continue;
    ++cells;
    const double disconnected = 1.0 - row.prob_connected;
    const double limit = report.pz_bound + 3 * binomial_se(report.pz_bound, row.trials);
    o.detail << " K=" << row.k << ": " << disconnected << " <= " << report.pz_bound << ";";
    o.require(disconnected <= limit, "dominance at K=" + std::to_string(row.k));
  }
  o.require(cells > 0, "at least one cell with pz < 0.5");
  return o;
}

Outcome er_comparison() {
  Outcome o;
  const auto result = compare_er(config(Model::kBoth, 5000, {3, 4, 5, 6, 7, 8},
                                        DeletionMode::kFraction, 0.4, 100, 20210605));
  int strict = 0;
  for (std::uint32_t k = 3; k <= 8; ++k) {
    const auto& kout = row_for(result, Model::kKOut, k);
    const auto& er = row_for(result, Model::kEr, k);
    o.detail << " K=" << k << ": " << kout.max_outside_giant << " vs " << er.max_outside_giant
             << ";";
    o.require(kout.max_outside_giant <= er.max_outside_giant,
              "kout <= er at K=" + std::to_string(k));
    strict += kout.max_outside_giant < er.max_outside_giant ? 1 : 0;
  }
  o.require(strict >= 3, "strict inequality at >= 3 K values");
  return o;
}

Outcome reproducibility() {
  Outcome o;
  auto c = config(Model::kBoth, 1000, {2, 3, 5}, DeletionMode::kFraction, 0.3, 40, 20210606);
  c.lambda = 5;
  const std::string one = sweep_to_csv(run_sweep(c, 1));
  const std::string again = sweep_to_csv(run_sweep(c, 1));
  const std::string eight = sweep_to_csv(run_sweep(c, 8));
  o.detail << " " << one.size() << " bytes";
  o.require(one == again, "identical on rerun");
  o.require(one == eight, "identical at 1 and 8 workers");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"oracle equivalence (MC vs exact enumeration)", oracle_equivalence},
      {"exact cut probability vs oracle; bound dominance grid", exact_vs_formula},
      {"linear-deletion connectivity transition (n=5000, alpha=0.5)", linear_transition},
      {"robustness at K=2 (n=50000, gamma=100)", robustness_at_two},
      {"sublinear connectivity points (n=50000)", sublinear_connectivity},
      {"giant-component bound (n=50000, gamma=250, lambda=250)", giant_bound},
      {"union-bound dominance over the transition sweep", union_bound_dominance},
      {"K-out vs Erdos-Renyi max outside giant (n=5000, alpha=0.4)", er_comparison},
      {"sweep reproducibility across reruns and worker counts", reproducibility},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail << " exception: " << e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s (%.1fs):%s\n", outcome.pass ? "PASS" : "FAIL", c.name, seconds,
                outcome.detail.str().c_str());
    std::fflush(stdout);
    failures += outcome.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
