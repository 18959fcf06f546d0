#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "nacoh/cochain.hpp"
#include "nacoh/cocycle_search.hpp"
#include "nacoh/complex.hpp"
#include "nacoh/expansion.hpp"
#include "nacoh/experiments.hpp"
#include "nacoh/group.hpp"

namespace nacoh::cli {

namespace {

using nlohmann::ordered_json;

// Raised for bad flag values that CLI11 cannot see (file contents, specs).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Log {
 public:
  Log(std::ostream& err, bool verbose) : err_(err), verbose_(verbose) {}
  template <typename... Parts>
  void info(const Parts&... parts) const {
    if (!verbose_) return;
    err_ << "nacoh: ";
    (err_ << ... << parts);
    err_ << '\n';
  }

 private:
  std::ostream& err_;
  bool verbose_;
};

struct ComplexSource {
  std::string file;
  std::string sample;  // "n,p,seed"
};

Complex2 load_complex(const ComplexSource& src) {
  if (src.file.empty() && src.sample.empty()) throw UsageError("give --complex <file> or --sample n,p,seed");
  if (!src.file.empty()) {
    std::ifstream in(src.file);
    if (!in) throw UsageError("cannot open complex file " + src.file);
    return read_complex(in);
  }
  std::istringstream in(src.sample);
  std::size_t n = 0;
  double p = 0;
  std::uint64_t seed = 0;
  char c1 = 0, c2 = 0;
  std::string rest;
  if (!(in >> n >> c1 >> p >> c2 >> seed) || c1 != ',' || c2 != ',' || (in >> rest)) {
    throw UsageError("--sample expects n,p,seed, got '" + src.sample + "'");
  }
  if (n < 3 || !(p >= 0.0 && p <= 1.0)) throw UsageError("--sample needs n >= 3 and p in [0,1]");
  return sample_complex(n, p, seed);
}

void add_complex_source(CLI::App* cmd, ComplexSource& src) {
  auto* file = cmd->add_option("--complex", src.file, "Complex file (\"n <n>\" then \"i j k\" lines)");
  auto* sample = cmd->add_option("--sample", src.sample, "Sample Y(n,p) with the given seed: n,p,seed");
  file->excludes(sample);
}

GroupPtr parse_group(const std::string& spec) {
  try {
    return build_group(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

ordered_json stats_json(const SearchStats& s) {
  return {{"nodes", s.nodes}, {"propagations", s.propagations}};
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  body(out);
}

// ---------------------------------------------------------------------------

struct SampleArgs {
  std::size_t n = 0;
  double p = 0;
  std::string out;
};

int run_sample(const SampleArgs& a, std::uint64_t seed, std::ostream& out, const Log& log) {
  if (a.n < 3) throw UsageError("--n must be >= 3");
  const Complex2 y = sample_complex(a.n, a.p, seed);
  log.info("sampled ", y.triangles().size(), " of ", triple_count(a.n), " triangles");
  if (a.out.empty()) {
    write_complex(out, y);
  } else {
    write_file(a.out, [&](std::ostream& f) { write_complex(f, y); });
  }
  return kOk;
}

struct CheckArgs {
  ComplexSource source;
  std::string group;
  std::size_t max_index = 0;
  std::string witness_file;
  std::uint64_t node_budget = kDefaultNodeBudget;
};

int run_check(const CheckArgs& a, std::ostream& out, const Log& log) {
  const Complex2 x = load_complex(a.source);
  ordered_json j;
  j["n"] = x.n();
  j["triangles"] = x.triangles().size();
  std::optional<Cochain1> witness;
  bool complete = true;
  bool nontrivial = false;

  if (!a.group.empty()) {
    const GroupPtr g = parse_group(a.group);
    const CohomologyReport r = has_nontrivial_class(x, g, a.node_budget);
    complete = r.complete;
    nontrivial = r.complete && !r.trivial;
    witness = r.witness;
    j["group"] = r.group;
    j["complete"] = r.complete;
    if (r.complete) j["trivial"] = r.trivial; else j["trivial"] = nullptr;
    j["stats"] = stats_json(r.stats);
  } else {
    if (a.max_index > FiniteGroup::kMaxOrder) {
      throw UsageError("--max-index exceeds " + std::to_string(FiniteGroup::kMaxOrder));
    }
    const QuotientReport r = has_small_quotient(x, a.max_index, a.node_budget);
    complete = r.complete || r.found.has_value();
    nontrivial = r.found.has_value();
    j["max_index"] = a.max_index;
    j["complete"] = complete;
    j["groups_checked"] = r.groups_checked;
    if (r.found) {
      j["found"] = r.found->group;
      witness = r.found->witness;
    } else {
      j["found"] = nullptr;
    }
    j["stats"] = stats_json(r.stats);
  }
  if (witness) {
    ordered_json pairs = ordered_json::array();
    for (Vertex u = 1; u <= witness->n(); ++u)
      for (Vertex v = u + 1; v <= witness->n(); ++v)
        if (!witness->value(u, v).is_identity()) pairs.push_back({u, v, witness->value(u, v).index});
    j["witness"] = pairs;
    if (!a.witness_file.empty()) {
      write_file(a.witness_file, [&](std::ostream& f) { write_cochain(f, *witness); });
      log.info("witness written to ", a.witness_file);
    }
  }
  out << j.dump(2) << '\n';
  if (!complete) return kInfeasible;
  return nontrivial ? kNontrivial : kOk;
}

struct ExpansionArgs {
  std::size_t n = 0;
  std::string group;
  std::string mode = "exhaustive";
  std::uint64_t trials = 1000;
  std::uint64_t orbit_budget = kDefaultOrbitBudget;
};

int run_verify_expansion(const ExpansionArgs& a, std::uint64_t seed, std::size_t threads,
                         std::ostream& out, const Log& log) {
  const GroupPtr g = parse_group(a.group);
  ExpansionReport r;
  if (a.mode == "exhaustive") {
    try {
      r = verify_expansion_exhaustive(a.n, g, threads);
    } catch (const std::invalid_argument& e) {
      if (a.n < 3) throw UsageError(e.what());
      log.info(e.what());
      return kInfeasible;
    }
  } else {
    if (a.n < 3) throw UsageError("--n must be >= 3");
    r = verify_expansion_sampled(a.n, g, a.trials, seed, threads, a.orbit_budget);
  }
  write_json(out, r);
  if (r.violations > 0 || r.identity_failures > 0) return kFailure;
  return r.inconclusive > 0 ? kInfeasible : kOk;
}

struct ExperimentArgs {
  std::string config;
  std::string group;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> threads;
  std::string format = "json";
};

int run_experiment(bool sweep, const ExperimentArgs& a, std::ostream& out, const Log& log) {
  ExperimentConfig cfg;
  try {
    cfg = read_config_file(a.config);
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
  if (a.seed) cfg.seed = *a.seed;
  if (a.threads) cfg.threads = *a.threads;
  if (!a.group.empty()) cfg.group = a.group;
  if (!a.out.empty()) cfg.out = a.out;
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const auto start = std::chrono::steady_clock::now();
  ExperimentResult result;
  if (sweep) {
    if (!cfg.group) throw UsageError("sweep needs a group (config key 'group' or --group)");
    result = threshold_sweep(cfg, parse_group(*cfg.group));
  } else {
    result = quotient_experiment(cfg);
  }
  log.info(result.kind, ": ", result.cells.size(), " cells in ",
           std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), " s");

  if (!cfg.out.empty()) {
    write_result_files(cfg.out, result);
    log.info("results written to ", cfg.out);
  }
  // Wall-clock times vary between runs; keep them out of the primary stream.
  if (a.format == "csv") {
    write_csv(out, result);
  } else {
    write_json(out, result, false);
  }
  return result.any_infeasible() ? kInfeasible : kOk;
}

int run_catalog(std::size_t max_order, const std::string& format, std::ostream& out) {
  if (max_order < 2 || max_order > FiniteGroup::kMaxOrder) {
    throw UsageError("--max-order must lie in [2, " + std::to_string(FiniteGroup::kMaxOrder) + "]");
  }
  const auto entries = catalog_entries(max_order);
  if (format == "csv") {
    out << "name,order,abelian\n";
    for (const auto& e : entries) out << e.name << ',' << e.order << ',' << (e.abelian ? "true" : "false") << '\n';
    return kOk;
  }
  ordered_json j = ordered_json::array();
  for (const auto& e : entries) j.push_back({{"name", e.name}, {"order", e.order}, {"abelian", e.abelian}});
  out << j.dump(2) << '\n';
  return kOk;
}

struct CountArgs {
  ComplexSource source;
  std::string group;
  std::size_t limit = 1'000'000;
  std::uint64_t node_budget = kDefaultNodeBudget;
};

int run_count(const CountArgs& a, std::ostream& out, const Log& log) {
  const Complex2 x = load_complex(a.source);
  const GroupPtr g = parse_group(a.group);
  std::size_t count = 0;
  try {
    count = count_hom_orbits(x, g, a.limit, a.node_budget);
  } catch (const std::runtime_error& e) {
    log.info(e.what());
    return kInfeasible;
  }
  ordered_json j;
  j["n"] = x.n();
  j["triangles"] = x.triangles().size();
  j["group"] = g->name();
  j["classes"] = count;
  out << j.dump(2) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Random 2-complexes and nonabelian first cohomology", "nacoh"};
  app.require_subcommand(1);
  app.fallthrough();
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "Log progress to stderr");

  std::uint64_t seed = 0;
  std::size_t threads = 0;
  const auto add_seed = [&](CLI::App* cmd) { cmd->add_option("--seed", seed, "Random seed"); };
  const auto add_threads = [&](CLI::App* cmd) {
    cmd->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");
  };
  const auto add_format = [](CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  };

  SampleArgs sample_args;
  auto* sample = app.add_subcommand("sample", "Sample Y(n,p) and write it in complex file format");
  sample->add_option("--n", sample_args.n, "Number of vertices")->required();
  sample->add_option("--p", sample_args.p, "Triangle probability")->required()->check(CLI::Range(0.0, 1.0));
  sample->add_option("--out", sample_args.out, "Output file (default stdout)");
  add_seed(sample);

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Decide H^1(X;G) != {[1]} or look for a small quotient");
  add_complex_source(check, check_args.source);
  auto* group_opt = check->add_option("--group", check_args.group, "Coefficient group spec");
  auto* index_opt = check->add_option("--max-index", check_args.max_index, "Largest quotient order");
  group_opt->excludes(index_opt);
  check->add_option("--emit-witness", check_args.witness_file, "Write a witness cocycle here");
  check->add_option("--node-budget", check_args.node_budget, "Search node budget per group");

  ExpansionArgs exp_args;
  auto* verify = app.add_subcommand("verify-expansion", "Check ||d1 phi|| >= n ||[phi]|| / 3");
  verify->add_option("--n", exp_args.n, "Number of vertices")->required();
  verify->add_option("--group", exp_args.group, "Coefficient group spec")->required();
  verify->add_option("--mode", exp_args.mode, "exhaustive or sampled")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  verify->add_option("--trials", exp_args.trials, "Cochains to sample");
  verify->add_option("--orbit-budget", exp_args.orbit_budget, "Node budget per orbit weight");
  add_seed(verify);
  add_threads(verify);

  ExperimentArgs sweep_args;
  ExperimentArgs quot_args;
  auto* sweep = app.add_subcommand("sweep", "Threshold sweep for H^1(Y(n,p);G)");
  auto* quot = app.add_subcommand("quotient-exp", "Small-quotient experiment at p = (6+7c) log n / n");
  for (auto [cmd, a] : {std::pair{sweep, &sweep_args}, std::pair{quot, &quot_args}}) {
    cmd->add_option("--config", a->config, "Config file (key = value)")->required()->check(CLI::ExistingFile);
    cmd->add_option("--out", a->out, "Result stem; writes <stem>.json and <stem>.csv");
    cmd->add_option("--seed", a->seed, "Override the config seed");
    cmd->add_option("--threads", a->threads, "Worker threads (0 = hardware concurrency)");
    add_format(cmd, a->format);
  }
  sweep->add_option("--group", sweep_args.group, "Override the config group");

  std::size_t max_order = 0;
  std::string catalog_format = "json";
  auto* catalog = app.add_subcommand("catalog", "List simple groups up to an order");
  catalog->add_option("--max-order", max_order, "Largest order")->required();
  add_format(catalog, catalog_format);

  CountArgs count_args;
  auto* count = app.add_subcommand("cohomology-count", "Count |H^1(X;G)|");
  add_complex_source(count, count_args.source);
  count->add_option("--group", count_args.group, "Coefficient group spec")->required();
  count->add_option("--limit", count_args.limit, "Maximum cocycles to enumerate");
  count->add_option("--node-budget", count_args.node_budget, "Search node budget");

  std::vector<const char*> argv{"nacoh"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const Log log(err, verbose);
  try {
    if (*sample) return run_sample(sample_args, seed, out, log);
    if (*check) {
      if (check_args.group.empty() && index_opt->count() == 0) {
        throw UsageError("check needs --group or --max-index");
      }
      return run_check(check_args, out, log);
    }
    if (*verify) return run_verify_expansion(exp_args, seed, threads, out, log);
    if (*sweep) return run_experiment(true, sweep_args, out, log);
    if (*quot) return run_experiment(false, quot_args, out, log);
    if (*catalog) return run_catalog(max_order, catalog_format, out);
    if (*count) return run_count(count_args, out, log);
  } catch (const UsageError& e) {
    err << "nacoh: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "nacoh: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "nacoh: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace nacoh::cli
