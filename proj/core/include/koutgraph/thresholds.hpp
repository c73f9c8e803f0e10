#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "koutgraph/fraction.hpp"

namespace kout {

// All logarithms below are natural logarithms.

/// Critical K for connectivity when a fraction alpha of the nodes is deleted:
/// log n / (1 - alpha - log alpha). Requires 0 < alpha < 1 and n >= 2.
double r1(double alpha, std::uint32_t n);

/// Connectivity threshold for a sublinear number gamma of deletions:
/// log(gamma) / (log 2 + 1/2).
///
/// Evaluates the formula as written. Published numerical examples for
/// gamma = 1000 and 2000 (6.79, 7.37) equal this value plus one; callers that
/// want that reading can add 1.
double r2(std::uint32_t gamma);

/// Giant-component threshold, sublinear deletion, at most lambda nodes
/// outside the giant: 1 + log(1 + gamma/lambda) / (log 2 + 1/2).
double r3(std::uint32_t gamma, std::uint32_t lambda);

/// Giant-component threshold, linear deletion:
/// 1 + [log(1 + n alpha/lambda) + alpha + log(1 - alpha)]
///     / [(1 - alpha)/2 - log((1 + alpha)/2)].
double r4(double alpha, std::uint32_t lambda, std::uint32_t n);

/// Denominator of r4; strictly positive on (0, 1).
double r4_denominator(double alpha);

enum class ThresholdGoal { kConnectivity, kGiant };

enum class Regime {
  kSublinearSmall,    // connectivity, gamma < sqrt(n): K >= 2 suffices
  kSublinear,         // connectivity, sqrt(n) <= gamma < n: r2
  kLinear,            // connectivity, gamma = alpha n: r1
  kGiantSublinear,    // giant, gamma given as a count: r3
  kGiantLinear,       // giant, gamma = alpha n: r4
};

std::string to_string(Regime regime);
/// Name of the threshold function a regime uses ("r1".."r4", or "none").
std::string threshold_function(Regime regime);

struct ThresholdQuery {
  ThresholdGoal goal = ThresholdGoal::kConnectivity;
  std::uint32_t n = 0;
  std::optional<std::uint32_t> gamma;
  std::optional<double> alpha;
  std::optional<std::uint32_t> lambda;
  std::uint32_t slack = 0;
};

struct ThresholdAnswer {
  Regime regime;
  double threshold;  // 0 in the sublinear-small regime
  std::uint32_t min_k;
};

/// Regime dispatch plus the recommendation. Exactly one of gamma and alpha
/// must be set; the giant goal needs lambda. The recommended K is the
/// smallest integer strictly above the threshold, raised to the goal's floor
/// (2 for connectivity, 1 for giant), plus `slack`.
ThresholdAnswer evaluate_threshold(const ThresholdQuery& query);

std::uint32_t min_k(const ThresholdQuery& query);

/// Probability that a fixed set of r survivors and the other n - gamma - r
/// survivors pick no one across the split:
///   (C(gamma+r-1, k) / C(n-1, k))^r * (C(n-r-1, k) / C(n-1, k))^(n-gamma-r).
/// Evaluated in log space through lgamma. Requires 1 <= r <= n - gamma - 1
/// and 1 <= k <= n - 1.
double cut_event_probability(std::uint32_t n, std::uint32_t k, std::uint32_t gamma,
                             std::uint32_t r);

/// Same quantity as an exact rational, for small instances.
Fraction cut_event_probability_exact(std::uint32_t n, std::uint32_t k, std::uint32_t gamma,
                                     std::uint32_t r);

/// ((gamma+r)/n)^(r k) * ((n-r)/n)^(k (n-gamma-r)); dominates
/// cut_event_probability on the same arguments.
double cut_event_upper_bound(std::uint32_t n, std::uint32_t k, std::uint32_t gamma,
                             std::uint32_t r);

struct BoundReport {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t gamma = 0;
  double pz_bound = 1.0;
  /// log of the unclamped sum; finite even when the sum overflows a double
  double log_sum = 0.0;
  bool clamped = false;
  std::optional<std::vector<double>> per_r_terms;  // r = 1, 2, ...
};

/// Union bound on the probability that the residual graph has a cut of size
/// 1..floor((n-gamma)/2), hence on its disconnection probability:
///   sum_r C(n-gamma, r) ((gamma+r)/n)^(r k) ((n-r)/n)^(k (n-gamma-r)),
/// clamped at 1. Requires gamma <= n - 2 and k >= 1.
BoundReport union_bound_pz(std::uint32_t n, std::uint32_t k, std::uint32_t gamma,
                           bool keep_terms = false);

}  // namespace kout
