#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nacoh/cochain.hpp"
#include "nacoh/complex.hpp"
#include "nacoh/group.hpp"

namespace nacoh {

using VertexPair = std::pair<Vertex, Vertex>;

// Presentation of pi_1(X) based at vertex 1: one generator e_ij per pair
// 2 <= i < j <= n (e_ji = e_ij^{-1} implicitly), e_ij = 1 when (1,i,j) is a
// triangle, and e_ij e_jk e_ki = 1 for every triangle (i,j,k) avoiding 1.
struct Presentation {
  std::size_t n = 0;
  std::vector<VertexPair> generators;
  std::vector<VertexPair> forced_trivial;
  std::vector<Triangle> triangle_relations;
};

Presentation presentation(const Complex2& complex);

// psi . phi with psi(1) = 1 and psi(j) = phi(1,j): the orbit representative
// whose values on every pair {1,j} are the identity.
Cochain1 star_gauge_fix(const Cochain1& phi);

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t propagations = 0;
};

struct CocycleEnumeration {
  std::vector<Cochain1> cocycles;
  // More than `limit` solutions exist.
  bool truncated = false;
  // The node budget ran out before the tree was exhausted.
  bool budget_exceeded = false;
  SearchStats stats;
};

// All star-fixed cocycles of X with values in G, i.e. the points of
// Hom(pi_1(X), G). Stops after `limit` solutions.
CocycleEnumeration enumerate_cocycles(const Complex2& complex, const GroupPtr& group,
                                      std::size_t limit,
                                      std::uint64_t node_budget = kDefaultNodeBudget);

struct CohomologyReport {
  std::string group;
  // H^1(X;G) == {[1]}. Meaningful only when `complete`.
  bool trivial = false;
  // False when the node budget ran out before a decision was reached.
  bool complete = true;
  // A star-fixed non-identity cocycle; present iff complete && !trivial.
  std::optional<Cochain1> witness;
  SearchStats stats;
};

// Decides whether H^1(X;G) has a class other than [1].
//
// A star-fixed cocycle lies in [1] only if it is the identity cochain: if
// phi = psi . 1 = d0(psi) has phi(1,j) = psi(1) psi(j)^{-1} = 1 for all j,
// then psi is constant and d0(psi) = 1. So H^1 is trivial exactly when the
// identity is the only star-fixed cocycle, and any other solution found by
// the search is a witness.
CohomologyReport has_nontrivial_class(const Complex2& complex, const GroupPtr& group,
                                      std::uint64_t node_budget = kDefaultNodeBudget);

// |Hom(pi_1(X),G)/G| = |H^1(X;G)|: star-fixed cocycles counted up to
// simultaneous conjugation of all values. Two star-fixed cocycles are in the
// same gauge orbit only through a constant gauge, which is conjugation.
// Throws std::runtime_error if the enumeration is truncated.
std::size_t count_hom_orbits(const Complex2& complex, const GroupPtr& group,
                             std::size_t limit = 1'000'000,
                             std::uint64_t node_budget = kDefaultNodeBudget);

struct QuotientReport {
  // Catalog groups tried, in order, up to and including the first hit.
  std::vector<std::string> groups_checked;
  // First group with a nontrivial class, with its report.
  std::optional<CohomologyReport> found;
  // Some group's search ran out of budget and no hit was found.
  bool complete = true;
  SearchStats stats;
};

// pi_1(X) has a nontrivial normal subgroup of index <= N iff H^1(X;G) is
// nontrivial for some nontrivial simple G with |G| <= N. Walks the simple
// group catalog in increasing order and stops at the first hit. N < 2 gives
// an empty walk. Throws std::out_of_range if N exceeds the catalog cap.
QuotientReport has_small_quotient(const Complex2& complex, std::size_t max_index,
                                  std::uint64_t node_budget = kDefaultNodeBudget);

// Same walk over a caller-provided catalog (for reuse across many trials).
QuotientReport has_small_quotient(const Complex2& complex, std::span<const GroupPtr> catalog,
                                  std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace nacoh
