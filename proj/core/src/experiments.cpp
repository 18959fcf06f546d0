#include "nacoh/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "nacoh/complex.hpp"
#include "nacoh/parallel.hpp"
#include "nacoh/rng.hpp"

namespace nacoh {

// ---------------------------------------------------------------------------
// Configuration

void ExperimentConfig::validate() const {
  if (n < 3) throw std::invalid_argument("config: n must be >= 3");
  if (trials < 1) throw std::invalid_argument("config: trials must be >= 1");
  if (!p_list.empty() && !alpha_list.empty()) {
    throw std::invalid_argument("config: give p_list or alpha_list, not both");
  }
  for (const double p : p_list) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("config: p values must lie in [0,1]");
  }
  for (const double a : alpha_list) {
    const double p = log_scaled_probability(n, a);
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("config: alpha grid yields p outside [0,1]");
    }
  }
  if (c && *c < 0.0) throw std::invalid_argument("config: c must be non-negative");
}

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
  std::istringstream in(text);
  T value{};
  if (!(in >> value)) throw std::runtime_error("config: bad value for '" + key + "': " + text);
  std::string rest;
  if (in >> rest) throw std::runtime_error("config: bad value for '" + key + "': " + text);
  return value;
}

std::vector<double> parse_list(const std::string& key, const std::string& text) {
  std::vector<double> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(parse_number<double>(key, item));
  }
  if (out.empty()) throw std::runtime_error("config: empty list for '" + key + "'");
  return out;
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw std::runtime_error("config: bad boolean for '" + key + "': " + text);
}

}  // namespace

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig config;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "n") {
      config.n = parse_number<std::size_t>(key, value);
    } else if (key == "group") {
      config.group = value;
    } else if (key == "max_index") {
      config.max_index = parse_number<std::size_t>(key, value);
    } else if (key == "c") {
      config.c = parse_number<double>(key, value);
    } else if (key == "p_list") {
      config.p_list = parse_list(key, value);
    } else if (key == "alpha_list") {
      config.alpha_list = parse_list(key, value);
    } else if (key == "trials") {
      config.trials = parse_number<std::uint64_t>(key, value);
    } else if (key == "seed") {
      config.seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "out") {
      config.out = value;
    } else if (key == "share_seeds") {
      config.share_seeds = parse_bool(key, value);
    } else if (key == "node_budget") {
      config.node_budget = parse_number<std::uint64_t>(key, value);
    } else if (key == "threads") {
      config.threads = parse_number<std::size_t>(key, value);
    } else {
      throw std::runtime_error("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  return config;
}

ExperimentConfig read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  return parse_config(in);
}

double log_scaled_probability(std::size_t n, double coefficient) {
  return coefficient * std::log(static_cast<double>(n)) / static_cast<double>(n);
}

std::size_t index_bound(std::size_t n, double c) {
  const double value = std::pow(static_cast<double>(n), c);
  return static_cast<std::size_t>(std::floor(value * (1.0 + 1e-12)));
}

double quotient_regime_probability(std::size_t n, double c) {
  return log_scaled_probability(n, 6.0 + 7.0 * c);
}

bool ExperimentResult::any_infeasible() const {
  return std::any_of(cells.begin(), cells.end(), [](const CellResult& c) { return c.infeasible > 0; });
}

std::uint64_t trial_seed(const ExperimentConfig& config, std::size_t cell, std::uint64_t trial) {
  return derive_seed(config.seed, {config.share_seeds ? 0 : cell + 1, trial});
}

// ---------------------------------------------------------------------------
// Runs

namespace {

struct Cell {
  double p;
  std::optional<double> alpha;
};

std::vector<Cell> grid(const ExperimentConfig& config) {
  std::vector<Cell> cells;
  for (const double p : config.p_list) cells.push_back({p, std::nullopt});
  for (const double a : config.alpha_list) cells.push_back({log_scaled_probability(config.n, a), a});
  return cells;
}

// Runs `trial(cell, seed) -> TrialOutcome` for every cell and trial.
template <typename Trial>
std::vector<CellResult> run_cells(const ExperimentConfig& config, const std::vector<Cell>& cells,
                                  Trial&& trial) {
  std::vector<CellResult> out;
  for (std::size_t ci = 0; ci < cells.size(); ++ci) {
    CellResult cell;
    cell.p = cells[ci].p;
    cell.alpha = cells[ci].alpha;
    cell.trials = config.trials;
    cell.outcomes.assign(config.trials, TrialOutcome::no);
    const auto start = std::chrono::steady_clock::now();
    parallel_chunks(config.trials, config.threads, [&](std::size_t begin, std::size_t end, std::size_t) {
      for (std::size_t t = begin; t < end; ++t) {
        cell.outcomes[t] = trial(cell.p, trial_seed(config, ci, t));
      }
    });
    cell.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    for (const TrialOutcome o : cell.outcomes) {
      if (o == TrialOutcome::yes) ++cell.successes;
      if (o == TrialOutcome::infeasible) ++cell.infeasible;
    }
    cell.estimate = static_cast<double>(cell.successes) / static_cast<double>(cell.trials);
    cell.standard_error =
        std::sqrt(cell.estimate * (1.0 - cell.estimate) / static_cast<double>(cell.trials));
    out.push_back(std::move(cell));
  }
  return out;
}

}  // namespace

ExperimentResult threshold_sweep(const ExperimentConfig& config, const GroupPtr& group) {
  config.validate();
  if (config.p_list.empty() && config.alpha_list.empty()) {
    throw std::invalid_argument("sweep needs p_list or alpha_list");
  }
  ExperimentResult result;
  result.kind = "sweep";
  result.config = config;
  result.group = group->name();
  result.cells = run_cells(config, grid(config), [&](double p, std::uint64_t seed) {
    const Complex2 y = sample_complex(config.n, p, seed);
    const CohomologyReport report = has_nontrivial_class(y, group, config.node_budget);
    if (!report.complete) return TrialOutcome::infeasible;
    return report.trivial ? TrialOutcome::no : TrialOutcome::yes;
  });
  return result;
}

ExperimentResult quotient_experiment(const ExperimentConfig& config) {
  config.validate();
  if (!config.c && !config.max_index) {
    throw std::invalid_argument("quotient experiment needs c or max_index");
  }
  const double log_n = std::log(static_cast<double>(config.n));
  const double c = config.c ? *config.c : std::log(static_cast<double>(*config.max_index)) / log_n;
  const std::size_t max_index = config.max_index ? *config.max_index : index_bound(config.n, c);
  if (max_index > FiniteGroup::kMaxOrder) {
    throw std::invalid_argument("max index " + std::to_string(max_index) + " exceeds catalog cap");
  }

  ExperimentConfig resolved = config;
  resolved.c = c;
  resolved.max_index = max_index;
  std::vector<Cell> cells = grid(config);
  if (cells.empty()) {
    const double p = quotient_regime_probability(config.n, c);
    if (p > 1.0) {
      throw std::invalid_argument("(6+7c) log n / n = " + std::to_string(p) + " exceeds 1");
    }
    cells.push_back({p, 6.0 + 7.0 * c});
  }

  const std::vector<GroupPtr> catalog =
      max_index >= 2 ? simple_group_catalog(max_index) : std::vector<GroupPtr>{};

  ExperimentResult result;
  result.kind = "quotient";
  result.config = resolved;
  result.max_index = max_index;
  for (const auto& g : catalog) result.catalog.push_back(g->name());
  result.cells = run_cells(config, cells, [&](double p, std::uint64_t seed) {
    const Complex2 y = sample_complex(config.n, p, seed);
    const QuotientReport report = has_small_quotient(y, catalog, config.node_budget);
    if (report.found) return TrialOutcome::yes;
    return report.complete ? TrialOutcome::no : TrialOutcome::infeasible;
  });
  return result;
}

// ---------------------------------------------------------------------------
// Closed forms

CocycleProbability estimate_cocycle_probability(const Cochain1& phi, double p,
                                                std::uint64_t trials, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  const std::vector<Triangle> support = coboundary_support(phi);
  std::vector<std::uint64_t> ranks;
  ranks.reserve(support.size());
  for (const Triangle& t : support) ranks.push_back(triple_rank(t));

  CocycleProbability out;
  out.norm = support.size();
  out.trials = trials;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const std::uint64_t trial = derive_seed(seed, {t});
    const bool survives = std::none_of(ranks.begin(), ranks.end(), [&](std::uint64_t rank) {
      return triple_included(trial, rank, p);
    });
    if (survives) ++out.successes;
  }
  out.empirical = trials == 0 ? 0.0 : static_cast<double>(out.successes) / static_cast<double>(trials);
  out.closed_form = std::pow(1.0 - p, static_cast<double>(out.norm));
  out.standard_error = trials == 0 ? 0.0
                                   : std::sqrt(out.closed_form * (1.0 - out.closed_form) /
                                               static_cast<double>(trials));
  return out;
}

namespace {

double log_sum_exp(const std::vector<double>& logs) {
  double top = -std::numeric_limits<double>::infinity();
  for (const double x : logs) top = std::max(top, x);
  if (std::isinf(top)) return 0.0;
  double acc = 0.0;
  for (const double x : logs) acc += std::exp(x - top);
  return std::exp(top) * acc;
}

}  // namespace

UnionBound union_bound_value(std::size_t n, double c, std::size_t k_max,
                             std::optional<std::size_t> group_order) {
  if (n < 2) throw std::invalid_argument("union bound needs n >= 2");
  if (!(c >= 0.0)) throw std::invalid_argument("union bound needs c >= 0");
  UnionBound out;
  out.exponent = 2.0 + c - (6.0 + 7.0 * c) / 3.0;
  out.p = quotient_regime_probability(n, c);
  const double log_n = std::log(static_cast<double>(n));

  std::vector<double> simplified;
  for (std::size_t k = 1; k <= k_max; ++k) simplified.push_back(out.exponent * static_cast<double>(k) * log_n);
  out.simplified_sum = log_sum_exp(simplified);

  if (group_order) {
    const double pairs = static_cast<double>(pair_count(n));
    const double log_survival = out.p >= 1.0 ? -std::numeric_limits<double>::infinity()
                                             : std::log1p(-out.p) * static_cast<double>(n) / 3.0;
    std::vector<double> chain;
    for (std::size_t k = 1; k <= k_max && static_cast<double>(k) <= pairs; ++k) {
      const double kd = static_cast<double>(k);
      const double log_binom = std::lgamma(pairs + 1.0) - std::lgamma(kd + 1.0) - std::lgamma(pairs - kd + 1.0);
      chain.push_back(log_binom + kd * std::log(static_cast<double>(*group_order)) + kd * log_survival);
    }
    out.chain_sum = log_sum_exp(chain);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Persistence

namespace {

const char* outcome_code(TrialOutcome o) {
  switch (o) {
    case TrialOutcome::yes:
      return "1";
    case TrialOutcome::no:
      return "0";
    case TrialOutcome::infeasible:
      return "x";
  }
  return "?";
}

}  // namespace

void write_json(std::ostream& out, const ExperimentResult& result, bool include_timing) {
  using nlohmann::ordered_json;
  const ExperimentConfig& cfg = result.config;
  ordered_json config;
  config["n"] = cfg.n;
  if (cfg.group) config["group"] = *cfg.group;
  if (cfg.max_index) config["max_index"] = *cfg.max_index;
  if (cfg.c) config["c"] = *cfg.c;
  if (!cfg.p_list.empty()) config["p_list"] = cfg.p_list;
  if (!cfg.alpha_list.empty()) config["alpha_list"] = cfg.alpha_list;
  config["trials"] = cfg.trials;
  config["seed"] = cfg.seed;
  config["share_seeds"] = cfg.share_seeds;
  config["node_budget"] = cfg.node_budget;

  ordered_json j;
  j["kind"] = result.kind;
  j["config"] = config;
  if (result.kind == "sweep") j["group"] = result.group;
  if (result.kind == "quotient") {
    j["max_index"] = result.max_index;
    j["catalog"] = result.catalog;
  }
  ordered_json cells = ordered_json::array();
  ordered_json timing = ordered_json::array();
  for (const CellResult& cell : result.cells) {
    ordered_json c;
    c["p"] = cell.p;
    if (cell.alpha) c["alpha"] = *cell.alpha;
    c["trials"] = cell.trials;
    c["successes"] = cell.successes;
    c["infeasible"] = cell.infeasible;
    c["estimate"] = cell.estimate;
    c["stderr"] = cell.standard_error;
    std::string outcomes;
    for (const TrialOutcome o : cell.outcomes) outcomes += outcome_code(o);
    c["outcomes"] = outcomes;
    cells.push_back(std::move(c));
    timing.push_back(cell.wall_ms);
  }
  j["cells"] = std::move(cells);
  if (include_timing) j["timing"] = {{"wall_ms", std::move(timing)}};
  out << j.dump(2) << '\n';
}

void write_csv(std::ostream& out, const ExperimentResult& result) {
  out << "p,trials,successes,estimate,stderr\n";
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(17);
  for (const CellResult& cell : result.cells) {
    out << cell.p << ',' << cell.trials << ',' << cell.successes << ',' << cell.estimate << ','
        << cell.standard_error << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

void write_result_files(const std::string& path, const ExperimentResult& result) {
  std::string stem = path;
  for (const std::string ext : {".json", ".csv"}) {
    if (stem.size() > ext.size() && stem.compare(stem.size() - ext.size(), ext.size(), ext) == 0) {
      stem.erase(stem.size() - ext.size());
      break;
    }
  }
  std::ofstream json(stem + ".json");
  std::ofstream csv(stem + ".csv");
  if (!json || !csv) throw std::runtime_error("cannot write results to " + stem + ".{json,csv}");
  write_json(json, result);
  write_csv(csv, result);
}

}  // namespace nacoh
