#include "koutgraph/thresholds.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <string>

#include "koutgraph/error.hpp"

namespace kout {

namespace {

const double kLog2PlusHalf = std::log(2.0) + 0.5;

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw DomainError("alpha must lie in (0,1), got " + std::to_string(alpha));
  }
}

double log_binomial(double n, double k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

void check_cut_args(std::uint32_t n, std::uint32_t k, std::uint32_t gamma, std::uint32_t r) {
  if (k < 1 || k >= n) {
    throw DomainError("cut probability needs 1 <= k <= n-1, got n=" + std::to_string(n) +
                      " k=" + std::to_string(k));
  }
  if (gamma >= n || r < 1 || r > n - gamma - 1) {
    throw DomainError("cut size r must lie in [1, n-gamma-1], got n=" + std::to_string(n) +
                      " gamma=" + std::to_string(gamma) + " r=" + std::to_string(r));
  }
}

}  // namespace

double r1(double alpha, std::uint32_t n) {
  check_alpha(alpha);
  if (n < 2) throw DomainError("r1 needs n >= 2");
  return std::log(static_cast<double>(n)) / (1.0 - alpha - std::log(alpha));
}

double r2(std::uint32_t gamma) {
  if (gamma < 1) throw DomainError("r2 needs gamma >= 1");
  return std::log(static_cast<double>(gamma)) / kLog2PlusHalf;
}

double r3(std::uint32_t gamma, std::uint32_t lambda) {
  if (lambda < 1) throw DomainError("r3 needs lambda >= 1");
  return 1.0 + std::log1p(static_cast<double>(gamma) / lambda) / kLog2PlusHalf;
}

double r4_denominator(double alpha) {
  check_alpha(alpha);
  return (1.0 - alpha) / 2.0 - std::log((1.0 + alpha) / 2.0);
}

double r4(double alpha, std::uint32_t lambda, std::uint32_t n) {
  check_alpha(alpha);
  if (lambda < 1) throw DomainError("r4 needs lambda >= 1");
  if (n < 2) throw DomainError("r4 needs n >= 2");
  const double denominator = r4_denominator(alpha);
  assert(denominator > 0.0);
  const double numerator =
      std::log1p(static_cast<double>(n) * alpha / lambda) + alpha + std::log1p(-alpha);
  return 1.0 + numerator / denominator;
}

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::kSublinearSmall: return "sublinear-small";
    case Regime::kSublinear: return "sublinear";
    case Regime::kLinear: return "linear";
    case Regime::kGiantSublinear: return "giant-sublinear";
    case Regime::kGiantLinear: return "giant-linear";
  }
  return "unknown";
}

std::string threshold_function(Regime regime) {
  switch (regime) {
    case Regime::kSublinearSmall: return "none";
    case Regime::kSublinear: return "r2";
    case Regime::kLinear: return "r1";
    case Regime::kGiantSublinear: return "r3";
    case Regime::kGiantLinear: return "r4";
  }
  return "unknown";
}

ThresholdAnswer evaluate_threshold(const ThresholdQuery& q) {
  if (q.n < 2) throw InvalidQuery("threshold query needs n >= 2");
  if (q.gamma.has_value() == q.alpha.has_value()) {
    throw InvalidQuery("threshold query needs exactly one of gamma and alpha");
  }
  if (q.alpha) check_alpha(*q.alpha);
  if (q.gamma && *q.gamma >= q.n) {
    throw InvalidQuery("gamma must be below n; give a fraction for linear deletion");
  }
  if (q.lambda && *q.lambda < 1) throw InvalidQuery("lambda must be >= 1");

  ThresholdAnswer answer{};
  std::uint32_t floor_k = 1;
  if (q.goal == ThresholdGoal::kConnectivity) {
    floor_k = 2;
    if (q.alpha) {
      answer.regime = Regime::kLinear;
      answer.threshold = r1(*q.alpha, q.n);
    } else if (static_cast<double>(*q.gamma) < std::sqrt(static_cast<double>(q.n))) {
      answer.regime = Regime::kSublinearSmall;
      answer.threshold = 0.0;
    } else {
      answer.regime = Regime::kSublinear;
      answer.threshold = r2(*q.gamma);
    }
  } else {
    if (!q.lambda) throw InvalidQuery("giant-component query needs lambda");
    if (q.alpha) {
      answer.regime = Regime::kGiantLinear;
      answer.threshold = r4(*q.alpha, *q.lambda, q.n);
    } else {
      answer.regime = Regime::kGiantSublinear;
      answer.threshold = r3(*q.gamma, *q.lambda);
    }
  }
  // Smallest integer strictly above the threshold.
  const double above = std::floor(answer.threshold) + 1.0;
  if (above > static_cast<double>(std::numeric_limits<std::uint32_t>::max() - q.slack)) {
    throw InvalidQuery("recommended K does not fit in 32 bits");
  }
  const auto base = std::max(floor_k, static_cast<std::uint32_t>(std::max(above, 0.0)));
  answer.min_k = base + q.slack;
  return answer;
}

std::uint32_t min_k(const ThresholdQuery& query) { return evaluate_threshold(query).min_k; }

double cut_event_probability(std::uint32_t n, std::uint32_t k, std::uint32_t gamma,
                             std::uint32_t r) {
  check_cut_args(n, k, gamma, r);
  if (gamma + r - 1 < k) return 0.0;
  if (n - r - 1 < k) return 0.0;  // n - gamma - r >= 1, so the second factor vanishes
  const double lc = log_binomial(n - 1.0, k);
  const double first = log_binomial(gamma + r - 1.0, k) - lc;
  const double second = log_binomial(n - r - 1.0, k) - lc;
  const double log_p = r * first + static_cast<double>(n - gamma - r) * second;
  return std::min(1.0, std::exp(log_p));
}

Fraction cut_event_probability_exact(std::uint32_t n, std::uint32_t k, std::uint32_t gamma,
                                     std::uint32_t r) {
  check_cut_args(n, k, gamma, r);
  const std::uint64_t all = binomial(n - 1, k);
  const Fraction first(binomial(gamma + r - 1, k), all);
  const Fraction second(binomial(n - r - 1, k), all);
  return first.pow(r) * second.pow(n - gamma - r);
}

double cut_event_upper_bound(std::uint32_t n, std::uint32_t k, std::uint32_t gamma,
                             std::uint32_t r) {
  check_cut_args(n, k, gamma, r);
  const double dn = n;
  const double log_b = static_cast<double>(r) * k * std::log((gamma + r) / dn) +
                       static_cast<double>(k) * (n - gamma - r) * std::log1p(-(r / dn));
  return std::exp(log_b);
}

BoundReport union_bound_pz(std::uint32_t n, std::uint32_t k, std::uint32_t gamma,
                           bool keep_terms) {
  if (k < 1) throw DomainError("union bound needs k >= 1");
  if (n < 2 || gamma > n - 2) {
    throw DomainError("union bound needs 0 <= gamma <= n-2, got n=" + std::to_string(n) +
                      " gamma=" + std::to_string(gamma));
  }
  const std::uint32_t m = n - gamma;
  const double dn = n;
  std::vector<double> log_terms;
  log_terms.reserve(m / 2);
  for (std::uint32_t r = 1; r <= m / 2; ++r) {
    log_terms.push_back(log_binomial(m, r) +
                        static_cast<double>(r) * k * std::log((gamma + r) / dn) +
                        static_cast<double>(k) * (m - r) * std::log1p(-(r / dn)));
  }
  // log-sum-exp
  const double peak = *std::max_element(log_terms.begin(), log_terms.end());
  double scaled = 0.0;
  for (double t : log_terms) scaled += std::exp(t - peak);

  BoundReport report;
  report.n = n;
  report.k = k;
  report.gamma = gamma;
  report.log_sum = peak + std::log(scaled);
  report.clamped = report.log_sum >= 0.0;
  report.pz_bound = report.clamped ? 1.0 : std::exp(report.log_sum);
  if (keep_terms) {
    std::vector<double> terms;
    terms.reserve(log_terms.size());
    for (double t : log_terms) terms.push_back(std::exp(t));
    report.per_r_terms = std::move(terms);
  }
  return report;
}

}  // namespace kout
