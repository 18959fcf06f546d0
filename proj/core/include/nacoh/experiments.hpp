#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nacoh/cochain.hpp"
#include "nacoh/cocycle_search.hpp"
#include "nacoh/group.hpp"

namespace nacoh {

// Settings for threshold sweeps and quotient experiments. Read from a
// "key = value" text file (see parse_config).
struct ExperimentConfig {
  std::size_t n = 0;
  // Coefficient group for sweeps.
  std::optional<std::string> group;
  // Quotient experiments: largest index N; derived as floor(n^c) when only
  // `c` is given.
  std::optional<std::size_t> max_index;
  std::optional<double> c;
  // Either explicit probabilities or coefficients alpha with p = alpha log n / n.
  std::vector<double> p_list;
  std::vector<double> alpha_list;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  std::string out;
  // Reuse trial seeds across grid cells (monotone coupling across p).
  bool share_seeds = true;
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::size_t threads = 0;

  // Throws std::invalid_argument on an inconsistent configuration.
  void validate() const;
};

// Keys: n, group, max_index, c, p_list, alpha_list (comma separated), trials,
// seed, out, share_seeds, node_budget, threads. '#' starts a comment.
// Throws std::runtime_error on unknown keys or malformed values.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig read_config_file(const std::string& path);

// p = coefficient * log(n) / n
double log_scaled_probability(std::size_t n, double coefficient);

// Largest index floor(n^c), robust to floating-point error at integer powers.
std::size_t index_bound(std::size_t n, double c);

// Probability of the quotient regime, (6 + 7c) log n / n.
double quotient_regime_probability(std::size_t n, double c);

enum class TrialOutcome : std::uint8_t { no, yes, infeasible };

struct CellResult {
  double p = 0.0;
  std::optional<double> alpha;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;   // trials where the event was found
  std::uint64_t infeasible = 0;  // trials whose search exceeded the node budget
  double estimate = 0.0;         // successes / trials
  double standard_error = 0.0;   // sqrt(estimate (1 - estimate) / trials)
  double wall_ms = 0.0;
  std::vector<TrialOutcome> outcomes;
};

struct ExperimentResult {
  std::string kind;  // "sweep" or "quotient"
  ExperimentConfig config;
  std::string group;              // sweep coefficient group
  std::size_t max_index = 0;      // quotient experiments
  std::vector<std::string> catalog;
  std::vector<CellResult> cells;

  bool any_infeasible() const;
};

// Trial seed for cell `cell`, trial `trial`.
std::uint64_t trial_seed(const ExperimentConfig& config, std::size_t cell, std::uint64_t trial);

// For each p, samples Y(n,p) `trials` times and counts trials with
// H^1(Y;G) != {[1]}.
ExperimentResult threshold_sweep(const ExperimentConfig& config, const GroupPtr& group);

// Samples Y(n,p) at p = (6+7c) log n / n (or the explicit p_list) and counts
// trials where pi_1(Y) has a nontrivial quotient of order <= max_index.
// Throws std::invalid_argument when the regime probability exceeds 1.
ExperimentResult quotient_experiment(const ExperimentConfig& config);

struct CocycleProbability {
  std::size_t norm = 0;  // ||d1 phi||
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double empirical = 0.0;
  double closed_form = 0.0;  // (1-p)^||d1 phi||
  // Binomial standard error at the closed-form probability.
  double standard_error = 0.0;
};

// [phi] survives in Y iff no triangle of Y lies in B(phi). Triangle presence
// uses the same per-triple draws as sample_complex, so only the triples of
// B(phi) need to be drawn.
CocycleProbability estimate_cocycle_probability(const Cochain1& phi, double p,
                                                std::uint64_t trials, std::uint64_t seed);

struct UnionBound {
  // Per-term exponent 2 + c - (6+7c)/3 (= -4c/3).
  double exponent = 0.0;
  // sum_{k=1}^{k_max} n^{exponent k}
  double simplified_sum = 0.0;
  // sum_{k=1}^{k_max} C(C(n,2),k) |G|^k (1-p)^{kn/3}, p = (6+7c) log n / n;
  // present when a group order is supplied.
  std::optional<double> chain_sum;
  double p = 0.0;
};

// Throws std::invalid_argument for n < 2 or c < 0.
UnionBound union_bound_value(std::size_t n, double c, std::size_t k_max,
                             std::optional<std::size_t> group_order = std::nullopt);

// JSON carries everything; per-cell wall-clock times live under a separate
// top-level "timing" key, omitted when include_timing is false. CSV columns:
// p,trials,successes,estimate,stderr.
void write_json(std::ostream& out, const ExperimentResult& result, bool include_timing = true);
void write_csv(std::ostream& out, const ExperimentResult& result);

// Writes <stem>.json and <stem>.csv, where stem is `path` minus a trailing
// ".json" or ".csv".
void write_result_files(const std::string& path, const ExperimentResult& result);

}  // namespace nacoh
