#include "nacoh/expansion.hpp"

#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "nacoh/parallel.hpp"
#include "nacoh/rng.hpp"

namespace nacoh {

bool check_gauge_identity(const Cochain1& phi, Vertex u) {
  const Cochain1 gauged = act(vertex_gauge(phi, u), phi);
  for (Vertex v = 1; v <= phi.n(); ++v) {
    for (Vertex w = 1; w <= phi.n(); ++w) {
      if (v == u || w == u || v == w) continue;
      if (d1(phi, u, v, w) != gauged.at(v, w)) return false;
    }
  }
  return true;
}

DoubleCount double_count(const Cochain1& phi) {
  DoubleCount out;
  const std::size_t n = phi.n();
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = 1; v <= n; ++v) {
      for (Vertex w = 1; w <= n; ++w) {
        if (u == v || v == w || u == w) continue;
        if (!d1(phi, u, v, w).is_identity()) ++out.ordered_nontrivial;
      }
    }
  }
  out.norm = coboundary_norm(phi);
  for (Vertex u = 1; u <= n; ++u) out.gauge_sum += support_size(act(vertex_gauge(phi, u), phi));
  return out;
}

namespace {

struct Partial {
  std::uint64_t checked = 0, violations = 0, inconclusive = 0, identity_failures = 0;
  std::optional<std::size_t> norm, weight;
  std::optional<Cochain1> witness;

  // Keeps the smaller ratio; ties keep the earlier cochain.
  void offer(std::size_t d1_norm, std::size_t orbit, const Cochain1& phi) {
    if (!norm || d1_norm * *weight < *norm * orbit) {
      norm = d1_norm;
      weight = orbit;
      witness = phi;
    }
  }

  void merge(Partial&& other) {
    checked += other.checked;
    violations += other.violations;
    inconclusive += other.inconclusive;
    identity_failures += other.identity_failures;
    if (other.norm) offer(*other.norm, *other.weight, *other.witness);
  }
};

void examine(const Cochain1& phi, std::uint64_t budget, Partial& acc) {
  const std::size_t n = phi.n();
  const DoubleCount counts = double_count(phi);
  const OrbitWeight orbit = orbit_weight(phi, budget);
  ++acc.checked;
  if (counts.ordered_nontrivial != 6 * counts.norm || counts.gauge_sum != 3 * counts.norm ||
      counts.gauge_sum < n * orbit.lower_bound) {
    ++acc.identity_failures;
  }
  // ||d1 phi|| >= n w / 3  <=>  3 ||d1 phi|| >= n w
  if (orbit.exact) {
    if (3 * counts.norm < n * orbit.weight) ++acc.violations;
    if (orbit.weight > 0) acc.offer(counts.norm, orbit.weight, phi);
  } else if (3 * counts.norm < n * orbit.lower_bound) {
    ++acc.violations;
  } else if (3 * counts.norm < n * orbit.weight) {
    // The true weight is at most orbit.weight; only that direction certifies.
    ++acc.inconclusive;
  }
}

ExpansionReport finish(std::size_t n, const GroupPtr& group, ExpansionMode mode, Partial&& total) {
  ExpansionReport report;
  report.n = n;
  report.group = group->name();
  report.mode = mode;
  report.cochains_checked = total.checked;
  report.violations = total.violations;
  report.inconclusive = total.inconclusive;
  report.identity_failures = total.identity_failures;
  report.min_ratio_norm = total.norm;
  report.min_ratio_weight = total.weight;
  report.witness = std::move(total.witness);
  return report;
}

}  // namespace

ExpansionReport verify_expansion_exhaustive(std::size_t n, const GroupPtr& group,
                                            std::size_t threads) {
  if (n < 3) throw std::invalid_argument("expansion check needs n >= 3");
  const std::size_t pairs = pair_count(n);
  const std::size_t order = group->order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < pairs; ++i) {
    if (total > kExhaustiveCochainCap / order) {
      throw std::invalid_argument("exhaustive expansion check infeasible: |G|^C(n,2) > " +
                                  std::to_string(kExhaustiveCochainCap));
    }
    total *= order;
  }

  std::vector<Partial> partials(std::max<std::size_t>(1, resolve_threads(threads)));
  parallel_chunks(total, threads, [&](std::size_t begin, std::size_t end, std::size_t worker) {
    // Mixed-radix odometer over the pair values, starting at `begin`.
    std::vector<Element> digits(pairs, kIdentity);
    std::size_t code = begin;
    for (std::size_t i = 0; i < pairs; ++i) {
      digits[i] = Element{static_cast<std::uint16_t>(code % order)};
      code /= order;
    }
    Partial& acc = partials[worker];
    for (std::size_t index = begin; index < end; ++index) {
      examine(Cochain1(group, n, digits), kDefaultOrbitBudget, acc);
      for (std::size_t i = 0; i < pairs; ++i) {
        if (++digits[i].index < order) break;
        digits[i] = kIdentity;
      }
    }
  });
  Partial merged;
  for (auto& p : partials) merged.merge(std::move(p));
  return finish(n, group, ExpansionMode::exhaustive, std::move(merged));
}

ExpansionReport verify_expansion_sampled(std::size_t n, const GroupPtr& group,
                                         std::uint64_t trials, std::uint64_t seed,
                                         std::size_t threads, std::uint64_t orbit_budget) {
  if (n < 3) throw std::invalid_argument("expansion check needs n >= 3");
  std::vector<Partial> partials(std::max<std::size_t>(1, resolve_threads(threads)));
  parallel_chunks(trials, threads, [&](std::size_t begin, std::size_t end, std::size_t worker) {
    for (std::size_t t = begin; t < end; ++t) {
      examine(random_cochain1(group, n, derive_seed(seed, {t})), orbit_budget, partials[worker]);
    }
  });
  Partial merged;
  for (auto& p : partials) merged.merge(std::move(p));
  return finish(n, group, ExpansionMode::sampled, std::move(merged));
}

void write_json(std::ostream& out, const ExpansionReport& report) {
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["group"] = report.group;
  j["mode"] = report.mode == ExpansionMode::exhaustive ? "exhaustive" : "sampled";
  j["cochains_checked"] = report.cochains_checked;
  j["violations"] = report.violations;
  j["inconclusive"] = report.inconclusive;
  j["identity_failures"] = report.identity_failures;
  j["bound"] = report.bound();
  if (report.min_ratio_norm) {
    j["min_ratio"] = *report.min_ratio();
    j["min_ratio_norm"] = *report.min_ratio_norm;
    j["min_ratio_weight"] = *report.min_ratio_weight;
    nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
    const Cochain1& w = *report.witness;
    for (Vertex u = 1; u <= w.n(); ++u) {
      for (Vertex v = u + 1; v <= w.n(); ++v) {
        if (!w.value(u, v).is_identity()) pairs.push_back({u, v, w.value(u, v).index});
      }
    }
    j["witness"] = pairs;
  } else {
    j["min_ratio"] = nullptr;
  }
  out << j.dump(2) << '\n';
}

}  // namespace nacoh
