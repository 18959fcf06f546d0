#include "nacoh/cocycle_search.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace nacoh {

Presentation presentation(const Complex2& complex) {
  Presentation out;
  out.n = complex.n();
  for (Vertex i = 2; i <= complex.n(); ++i) {
    for (Vertex j = i + 1; j <= complex.n(); ++j) out.generators.emplace_back(i, j);
  }
  for (const Triangle& t : complex.triangles()) {
    if (t.a == 1) {
      out.forced_trivial.emplace_back(t.b, t.c);
    } else {
      out.triangle_relations.push_back(t);
    }
  }
  return out;
}

Cochain1 star_gauge_fix(const Cochain1& phi) { return act(vertex_gauge(phi, 1), phi); }

namespace {

// Backtracking over generator values with unit propagation on the triangle
// relations e_ij e_jk = e_ik. Variables are the generators in lexicographic
// order; branching follows the static order (incident relations descending,
// then lexicographic) and tries the identity first.
class CocycleEngine {
 public:
  CocycleEngine(const Presentation& pres, const FiniteGroup& group, std::uint64_t budget)
      : n_(pres.n), group_(group), budget_(budget) {
    var_of_pair_.assign(pair_count(n_), -1);
    for (std::size_t v = 0; v < pres.generators.size(); ++v) {
      const auto [i, j] = pres.generators[v];
      var_of_pair_[pair_index(n_, i, j)] = static_cast<std::int32_t>(v);
    }
    const std::size_t vars = pres.generators.size();
    values_.assign(vars, kUnassigned);
    relations_of_.assign(vars, {});
    for (const Triangle& t : pres.triangle_relations) {
      const std::array<std::uint32_t, 3> rel{var(t.a, t.b), var(t.b, t.c), var(t.a, t.c)};
      for (const auto x : rel) relations_of_[x].push_back(static_cast<std::uint32_t>(relations_.size()));
      relations_.push_back(rel);
    }
    for (const auto& [i, j] : pres.forced_trivial) forced_.push_back(var(i, j));

    order_.resize(vars);
    std::iota(order_.begin(), order_.end(), 0U);
    std::stable_sort(order_.begin(), order_.end(), [&](std::uint32_t x, std::uint32_t y) {
      return relations_of_[x].size() > relations_of_[y].size();
    });
  }

  // Calls `on_solution(values)` for each solution until it returns true.
  template <typename OnSolution>
  void run(OnSolution&& on_solution) {
    for (const auto x : forced_) {
      if (!assign(x, kIdentity)) return;
    }
    if (!propagate()) return;
    search(0, on_solution);
  }

  bool budget_exceeded() const { return budget_exceeded_; }
  const SearchStats& stats() const { return stats_; }

  Cochain1 to_cochain(const GroupPtr& group, std::span<const std::int32_t> values) const {
    std::vector<Element> oriented(pair_count(n_), kIdentity);
    for (std::size_t e = 0; e < oriented.size(); ++e) {
      if (var_of_pair_[e] >= 0) {
        oriented[e] = Element{static_cast<std::uint16_t>(values[var_of_pair_[e]])};
      }
    }
    return Cochain1(group, n_, std::move(oriented));
  }

 private:
  static constexpr std::int32_t kUnassigned = -1;

  std::uint32_t var(Vertex i, Vertex j) const {
    return static_cast<std::uint32_t>(var_of_pair_[pair_index(n_, i, j)]);
  }

  Element value(std::uint32_t x) const { return Element{static_cast<std::uint16_t>(values_[x])}; }

  bool assign(std::uint32_t x, Element e) {
    if (values_[x] != kUnassigned) return values_[x] == e.index;
    values_[x] = e.index;
    trail_.push_back(x);
    queue_.push_back(x);
    return true;
  }

  // Fixpoint over the queue; false on conflict.
  bool propagate() {
    while (queue_head_ < queue_.size()) {
      const std::uint32_t x = queue_[queue_head_++];
      for (const std::uint32_t r : relations_of_[x]) {
        const auto [ij, jk, ik] = relations_[r];
        const bool has_ij = values_[ij] != kUnassigned;
        const bool has_jk = values_[jk] != kUnassigned;
        const bool has_ik = values_[ik] != kUnassigned;
        bool ok = true;
        if (has_ij && has_jk) {
          const Element product = group_.multiply(value(ij), value(jk));
          if (has_ik) {
            ok = product == value(ik);
          } else {
            ++stats_.propagations;
            ok = assign(ik, product);
          }
        } else if (has_ij && has_ik) {
          ++stats_.propagations;
          ok = assign(jk, group_.multiply(group_.inverse(value(ij)), value(ik)));
        } else if (has_jk && has_ik) {
          ++stats_.propagations;
          ok = assign(ij, group_.multiply(value(ik), group_.inverse(value(jk))));
        }
        if (!ok) {
          queue_.clear();
          queue_head_ = 0;
          return false;
        }
      }
    }
    queue_.clear();
    queue_head_ = 0;
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      values_[trail_.back()] = kUnassigned;
      trail_.pop_back();
    }
  }

  // Returns true when the search must stop.
  template <typename OnSolution>
  bool search(std::size_t pos, OnSolution& on_solution) {
    while (pos < order_.size() && values_[order_[pos]] != kUnassigned) ++pos;
    if (pos == order_.size()) return on_solution(std::span<const std::int32_t>(values_));
    if (++stats_.nodes > budget_) {
      budget_exceeded_ = true;
      return true;
    }
    const std::uint32_t x = order_[pos];
    for (std::size_t h = 0; h < group_.order(); ++h) {
      const std::size_t mark = trail_.size();
      if (assign(x, Element{static_cast<std::uint16_t>(h)}) && propagate()) {
        if (search(pos + 1, on_solution)) {
          undo(mark);
          return true;
        }
      }
      undo(mark);
    }
    return false;
  }

  std::size_t n_;
  const FiniteGroup& group_;
  std::uint64_t budget_;
  std::vector<std::int32_t> var_of_pair_;
  std::vector<std::int32_t> values_;
  std::vector<std::array<std::uint32_t, 3>> relations_;
  std::vector<std::vector<std::uint32_t>> relations_of_;
  std::vector<std::uint32_t> forced_;
  std::vector<std::uint32_t> order_;
  std::vector<std::uint32_t> trail_;
  std::vector<std::uint32_t> queue_;
  std::size_t queue_head_ = 0;
  SearchStats stats_;
  bool budget_exceeded_ = false;
};

}  // namespace

CocycleEnumeration enumerate_cocycles(const Complex2& complex, const GroupPtr& group,
                                      std::size_t limit, std::uint64_t node_budget) {
  if (limit == 0) throw std::invalid_argument("enumeration limit must be positive");
  CocycleEngine engine(presentation(complex), *group, node_budget);
  CocycleEnumeration out;
  engine.run([&](std::span<const std::int32_t> values) {
    if (out.cocycles.size() == limit) {
      out.truncated = true;
      return true;
    }
    out.cocycles.push_back(engine.to_cochain(group, values));
    return false;
  });
  out.budget_exceeded = engine.budget_exceeded();
  out.stats = engine.stats();
  return out;
}

CohomologyReport has_nontrivial_class(const Complex2& complex, const GroupPtr& group,
                                      std::uint64_t node_budget) {
  CocycleEngine engine(presentation(complex), *group, node_budget);
  CohomologyReport report;
  report.group = group->name();
  engine.run([&](std::span<const std::int32_t> values) {
    const bool identity = std::all_of(values.begin(), values.end(), [](std::int32_t v) { return v == 0; });
    if (identity) return false;
    report.witness = engine.to_cochain(group, values);
    return true;
  });
  report.stats = engine.stats();
  if (report.witness) {
    report.trivial = false;
  } else if (engine.budget_exceeded()) {
    report.complete = false;
  } else {
    report.trivial = true;
  }
  return report;
}

std::size_t count_hom_orbits(const Complex2& complex, const GroupPtr& group, std::size_t limit,
                             std::uint64_t node_budget) {
  const CocycleEnumeration all = enumerate_cocycles(complex, group, limit, node_budget);
  if (all.truncated || all.budget_exceeded) {
    throw std::runtime_error("cocycle enumeration truncated; refusing to report an orbit count");
  }
  // Burnside: #orbits = sum over cocycles of |Stab| / |G|, where the
  // stabilizer under conjugation is the centralizer of all values.
  const FiniteGroup& g = *group;
  std::size_t stabilizer_total = 0;
  std::vector<bool> seen(g.order());
  for (const Cochain1& phi : all.cocycles) {
    std::vector<Element> values;
    std::fill(seen.begin(), seen.end(), false);
    for (const Element e : phi.oriented_values()) {
      if (!e.is_identity() && !seen[e.index]) {
        seen[e.index] = true;
        values.push_back(e);
      }
    }
    for (std::size_t h = 0; h < g.order(); ++h) {
      const Element x{static_cast<std::uint16_t>(h)};
      if (std::all_of(values.begin(), values.end(),
                      [&](Element v) { return g.multiply(x, v) == g.multiply(v, x); })) {
        ++stabilizer_total;
      }
    }
  }
  if (stabilizer_total % g.order() != 0) throw std::logic_error("Burnside count is not integral");
  return stabilizer_total / g.order();
}

QuotientReport has_small_quotient(const Complex2& complex, std::span<const GroupPtr> catalog,
                                  std::uint64_t node_budget) {
  QuotientReport out;
  for (const GroupPtr& group : catalog) {
    CohomologyReport report = has_nontrivial_class(complex, group, node_budget);
    out.groups_checked.push_back(group->name());
    out.stats.nodes += report.stats.nodes;
    out.stats.propagations += report.stats.propagations;
    if (!report.complete) {
      out.complete = false;
      continue;
    }
    if (!report.trivial) {
      out.found = std::move(report);
      out.complete = true;
      return out;
    }
  }
  return out;
}

QuotientReport has_small_quotient(const Complex2& complex, std::size_t max_index,
                                  std::uint64_t node_budget) {
  if (max_index > FiniteGroup::kMaxOrder) {
    throw std::out_of_range("max index exceeds catalog cap of " +
                            std::to_string(FiniteGroup::kMaxOrder));
  }
  if (max_index < 2) return {};
  QuotientReport out;
  // Built one at a time: the first hit is usually a small cyclic group.
  for (const CatalogEntry& entry : catalog_entries(max_index)) {
    const GroupPtr group = entry.build();
    QuotientReport step = has_small_quotient(complex, std::span<const GroupPtr>(&group, 1), node_budget);
    out.groups_checked.push_back(entry.name);
    out.stats.nodes += step.stats.nodes;
    out.stats.propagations += step.stats.propagations;
    out.complete = out.complete && step.complete;
    if (step.found) {
      out.found = std::move(step.found);
      out.complete = true;
      return out;
    }
  }
  return out;
}

}  // namespace nacoh
