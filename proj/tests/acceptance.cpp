// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "nacoh/cocycle_search.hpp"
#include "nacoh/expansion.hpp"
#include "nacoh/experiments.hpp"
#include "nacoh/rng.hpp"
#include "oracles.hpp"

using namespace nacoh;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

Cochain1 from_raw(const GroupPtr& g, std::size_t n, const std::vector<std::uint16_t>& raw) {
  std::vector<Element> values;
  for (const auto v : raw) values.push_back(Element{v});
  return Cochain1(g, n, values);
}

void expansion_exhaustive(Verdict& v) {
  const std::vector<std::tuple<std::size_t, const char*, std::uint64_t>> cases = {
      {4, "C2", 64}, {4, "C3", 729}, {5, "C2", 1024}, {6, "C2", 32768}};
  for (const auto& [n, spec, expected] : cases) {
    const auto start = Clock::now();
    const ExpansionReport r = verify_expansion_exhaustive(n, build_group(spec));
    const double secs = seconds_since(start);
    v.detail << ' ' << spec << "/n=" << n << ": " << r.cochains_checked << " cochains, "
             << r.violations << " violations, min ratio " << r.min_ratio().value_or(-1) << ", "
             << secs << " s;";
    v.require(r.cochains_checked == expected, "cochain count");
    v.require(r.violations == 0 && r.inconclusive == 0, "violations");
    v.require(secs < 10.0, "runtime");
    v.require(r.min_ratio() && *r.min_ratio() >= r.bound(), "ratio below n/3");
  }
  // Oracle for n=4, C2: full enumeration with no gauge fixing.
  const GroupPtr c2 = build_group("C2");
  double best = 1e300;
  oracle::for_each_tuple(6, 2, [&](const std::vector<std::uint16_t>& raw) {
    const Cochain1 phi = from_raw(c2, 4, raw);
    const std::size_t w = oracle::orbit_weight_all_gauges(phi);
    if (w > 0) best = std::min(best, double(oracle::coboundary_norm_direct(phi)) / double(w));
  });
  const ExpansionReport r = verify_expansion_exhaustive(4, c2);
  v.detail << " oracle min ratio (n=4,C2) " << best;
  v.require(best == 2.0 && r.min_ratio() == 2.0, "n=4 C2 min ratio is not 2");
}

void gauge_identity(Verdict& v) {
  std::uint64_t failures = 0, checks = 0;
  for (const char* spec : {"C2", "C5", "A5"}) {
    const GroupPtr g = build_group(spec);
    for (const std::size_t n : {4, 6, 8}) {
      for (std::uint64_t t = 0; t < 1000; ++t) {
        const Cochain1 phi = random_cochain1(g, n, derive_seed(2024, {n, t}));
        for (Vertex u = 1; u <= n; ++u) {
          ++checks;
          if (!check_gauge_identity(phi, u)) ++failures;
        }
      }
    }
  }
  v.detail << ' ' << checks << " (cochain, basepoint) checks, " << failures << " failures";
  v.require(failures == 0, "identity failures");
}

void bijection(Verdict& v) {
  std::vector<Complex2> complexes;
  for (std::uint64_t mask = 0; mask < 16; ++mask) complexes.push_back(oracle::complex_from_mask(4, mask));
  std::mt19937_64 rng(31337);
  for (int i = 0; i < 200; ++i) complexes.push_back(oracle::complex_from_mask(5, rng() & 1023));
  std::size_t discrepancies = 0;
  for (const char* spec : {"C2", "C3"}) {
    const GroupPtr g = build_group(spec);
    for (const Complex2& x : complexes) {
      const oracle::RelationSolutions truth = oracle::solve_relations(x, *g);
      const auto found = enumerate_cocycles(x, g, 1'000'000);
      if (found.cocycles.size() != truth.count || found.truncated || found.budget_exceeded) ++discrepancies;
      if (count_hom_orbits(x, g) != truth.conjugacy_orbits) ++discrepancies;
    }
  }
  v.detail << ' ' << complexes.size() << " complexes x {C2,C3}, " << discrepancies << " discrepancies";
  v.require(discrepancies == 0, "count mismatch");
}

void survival(Verdict& v) {
  const GroupPtr c2 = build_group("C2");
  Cochain1 phi(c2, 5);
  phi.set(1, 2, Element{1});
  v.require(coboundary_norm(phi) == 3, "||d1 phi|| != 3");
  for (const double p : {0.2, 0.5, 0.8}) {
    const auto start = Clock::now();
    const CocycleProbability r = estimate_cocycle_probability(phi, p, 10000, derive_seed(7, {std::uint64_t(p * 10)}));
    const double secs = seconds_since(start);
    const double expected = std::pow(1 - p, 3);
    const double z = (r.empirical - expected) / r.standard_error;
    v.detail << " p=" << p << ": " << r.empirical << " vs " << expected << " (z=" << z << ", " << secs << " s);";
    v.require(std::abs(z) <= 3.0, "outside 3 SE");
    v.require(secs < 5.0, "runtime");
  }
}

void threshold(Verdict& v) {
  ExperimentConfig cfg;
  cfg.n = 40;
  cfg.group = "C2";
  cfg.alpha_list = {0.5, 1.0, 1.5, 2.0, 2.5, 3.0};
  cfg.trials = 200;
  cfg.seed = 11;
  cfg.share_seeds = true;
  const auto start = Clock::now();
  const ExperimentResult r = threshold_sweep(cfg, build_group("C2"));
  const double secs = seconds_since(start);
  std::size_t monotone_breaks = 0;
  for (std::size_t t = 0; t < cfg.trials; ++t)
    for (std::size_t i = 1; i < r.cells.size(); ++i)
      if (r.cells[i].outcomes[t] == TrialOutcome::yes && r.cells[i - 1].outcomes[t] != TrialOutcome::yes)
        ++monotone_breaks;
  v.detail << " estimates";
  for (const auto& c : r.cells) v.detail << ' ' << c.estimate;
  v.detail << "; " << monotone_breaks << " monotonicity breaks; " << secs << " s";
  v.require(!r.any_infeasible(), "infeasible cells");
  v.require(monotone_breaks == 0, "per-seed indicator increased");
  v.require(r.cells.front().estimate >= 0.9, "alpha=0.5 estimate < 0.9");
  v.require(r.cells.back().estimate <= 0.1, "alpha=3.0 estimate > 0.1");
}

void quotient(Verdict& v) {
  ExperimentConfig cfg;
  cfg.n = 40;
  cfg.c = 0.3;
  cfg.trials = 50;
  cfg.seed = 5;
  const auto start = Clock::now();
  const ExperimentResult r = quotient_experiment(cfg);
  const double secs = seconds_since(start);
  v.detail << " N=" << r.max_index << ", p=" << r.cells[0].p << ", fraction " << r.cells[0].estimate << ", "
           << secs << " s";
  v.require(r.max_index == 3, "max index");
  v.require(!r.any_infeasible(), "infeasible trials");
  v.require(r.cells[0].estimate <= 0.05, "fraction > 0.05");
}

void union_bound(Verdict& v) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> dist(0.0, 5.0);
  double worst = 0;
  for (int i = 0; i < 1000; ++i) {
    const double c = dist(rng);
    const UnionBound b = union_bound_value(100, c, 5);
    worst = std::max(worst, std::abs(b.exponent + 4.0 * c / 3.0));
    // Each term n^{exponent k}: the sum is the geometric series.
    const double q = std::pow(100.0, b.exponent);
    const double series = q * (1 - std::pow(q, 5)) / (1 - q);
    worst = std::max(worst, std::abs(b.simplified_sum - series) / series);
  }
  std::size_t over = 0;
  for (std::size_t n = 2; n <= 660; ++n)
    if (catalog_entries(n).size() > 2 * n) ++over;
  v.detail << " max exponent/series error " << worst << "; catalog sizes over 2N: " << over;
  v.require(worst < 1e-9, "exponent");
  v.require(over == 0, "catalog bound");
}

void orbit_weights(Verdict& v) {
  std::size_t mismatches = 0, inexact = 0, checked = 0;
  const GroupPtr c2 = build_group("C2");
  oracle::for_each_tuple(6, 2, [&](const std::vector<std::uint16_t>& raw) {
    const Cochain1 phi = from_raw(c2, 4, raw);
    const OrbitWeight w = orbit_weight(phi);
    ++checked;
    if (!w.exact) ++inexact;
    if (w.weight != oracle::orbit_weight_all_gauges(phi)) ++mismatches;
  });
  const GroupPtr c3 = build_group("C3");
  for (std::uint64_t t = 0; t < 500; ++t) {
    const Cochain1 phi = random_cochain1(c3, 4, derive_seed(808, {t}));
    const OrbitWeight w = orbit_weight(phi);
    ++checked;
    if (!w.exact) ++inexact;
    if (w.weight != oracle::orbit_weight_all_gauges(phi)) ++mismatches;
  }
  v.detail << ' ' << checked << " cochains, " << mismatches << " mismatches, " << inexact << " inexact";
  v.require(mismatches == 0 && inexact == 0, "orbit weight mismatch");
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Verdict&)>>> criteria = {
      {"1 expansion inequality, exhaustive", expansion_exhaustive},
      {"2 gauge identity", gauge_identity},
      {"3 star-fixed cocycles vs relation solver", bijection},
      {"4 cocycle survival probability", survival},
      {"5 H^1(Y;C2) threshold sweep, n=40", threshold},
      {"6 small quotients at n=40, c=0.3", quotient},
      {"7 union bound arithmetic and catalog size", union_bound},
      {"8 orbit weight vs unrestricted gauge search", orbit_weights},
  };
  int failed = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      check(v);
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail << " [exception: " << e.what() << "]";
    }
    std::printf("%s [%s]%s\n", v.pass ? "PASS" : "FAIL", name, v.detail.str().c_str());
    std::fflush(stdout);
    if (!v.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
