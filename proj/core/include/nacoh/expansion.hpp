#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "nacoh/cochain.hpp"
#include "nacoh/group.hpp"

namespace nacoh {

// Checks of the 1-expansion bound ||d1 phi|| >= n ||[phi]|| / 3 for cochains
// on the full simplex. ||d1 phi|| here always counts triples of the whole
// simplex on [n], never the triangles of a subcomplex.

enum class ExpansionMode { exhaustive, sampled };

struct ExpansionReport {
  std::size_t n = 0;
  std::string group;
  ExpansionMode mode = ExpansionMode::exhaustive;
  std::uint64_t cochains_checked = 0;
  std::uint64_t violations = 0;
  // Sampled mode: orbit weight search cut short and its upper bound does not
  // certify the inequality.
  std::uint64_t inconclusive = 0;
  // Failures of the double-counting identities behind the bound:
  //   #{ordered triples with d1 != 1} == 6 ||d1 phi||
  //   sum_u ||phi_u . phi|| == 3 ||d1 phi||
  //   sum_u ||phi_u . phi|| >= n ||[phi]||
  std::uint64_t identity_failures = 0;
  // Smallest ||d1 phi|| / ||[phi]|| over phi with exact, positive weight.
  std::optional<std::size_t> min_ratio_norm;
  std::optional<std::size_t> min_ratio_weight;
  std::optional<Cochain1> witness;

  std::optional<double> min_ratio() const {
    if (!min_ratio_norm) return std::nullopt;
    return static_cast<double>(*min_ratio_norm) / static_cast<double>(*min_ratio_weight);
  }
  double bound() const { return static_cast<double>(n) / 3.0; }
};

inline constexpr std::uint64_t kExhaustiveCochainCap = 10'000'000;

// Every phi in C^1(simplex on [n]; G). Throws std::invalid_argument when
// |G|^C(n,2) exceeds kExhaustiveCochainCap.
ExpansionReport verify_expansion_exhaustive(std::size_t n, const GroupPtr& group,
                                            std::size_t threads = 0);

// `trials` uniformly random cochains, trial t seeded by derive_seed(seed, {t}).
ExpansionReport verify_expansion_sampled(std::size_t n, const GroupPtr& group,
                                         std::uint64_t trials, std::uint64_t seed,
                                         std::size_t threads = 0,
                                         std::uint64_t orbit_budget = kDefaultOrbitBudget);

// d1 phi(u,v,w) == (phi_u . phi)(v,w) for all distinct v, w other than u.
bool check_gauge_identity(const Cochain1& phi, Vertex u);

struct DoubleCount {
  std::size_t ordered_nontrivial = 0;  // ordered triples with d1 != 1
  std::size_t norm = 0;                // ||d1 phi||
  std::size_t gauge_sum = 0;           // sum_u ||phi_u . phi||
};

DoubleCount double_count(const Cochain1& phi);

void write_json(std::ostream& out, const ExpansionReport& report);

}  // namespace nacoh
