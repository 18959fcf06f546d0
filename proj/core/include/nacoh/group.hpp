#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nacoh {

// Index of an element inside one FiniteGroup. Index 0 is always the identity.
struct Element {
  std::uint16_t index = 0;

  constexpr bool is_identity() const noexcept { return index == 0; }
  friend constexpr auto operator<=>(Element, Element) = default;
};

inline constexpr Element kIdentity{0};

// A finite group held as a dense multiplication table. Immutable after
// construction, so one instance can be shared by any number of searches.
class FiniteGroup {
 public:
  static constexpr std::size_t kMaxOrder = 10080;

  // `table` is row-major order*order; `table[a*order+b]` is the index of ab.
  // Throws std::invalid_argument unless index 0 is a two-sided identity and
  // every row contains the identity (inverses exist).
  FiniteGroup(std::string name, std::size_t order, std::vector<Element> table);

  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return order_; }

  Element multiply(Element a, Element b) const noexcept {
    return table_[static_cast<std::size_t>(a.index) * order_ + b.index];
  }
  Element inverse(Element a) const noexcept { return inverse_[a.index]; }
  // g x g^{-1}
  Element conjugate(Element g, Element x) const noexcept {
    return multiply(multiply(g, x), inverse(g));
  }

  // Range-checked versions for untrusted indices.
  Element checked_multiply(Element a, Element b) const;
  Element checked_inverse(Element a) const;
  Element element(std::size_t index) const;

  bool is_abelian() const noexcept { return abelian_; }
  std::size_t element_order(Element a) const;

  // Exhaustive identity, inverse and associativity check (O(order^3)).
  bool satisfies_axioms() const;

  std::vector<std::vector<Element>> conjugacy_classes() const;

  // Size of the subgroup generated by `generators`.
  std::size_t generated_subgroup_order(std::span<const Element> generators) const;

  // Nontrivial and, for every non-identity element, its conjugates generate
  // the whole group.
  bool is_simple() const;

 private:
  std::string name_;
  std::size_t order_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  bool abelian_ = true;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// A permutation of {0, ..., degree-1} given by images.
using Permutation = std::vector<std::uint8_t>;

// Closes `generators` under composition and flattens the result into a
// multiplication table. Distinct non-identity generators get indices 1, 2, ...
// in the order given. Throws if the closure exceeds FiniteGroup::kMaxOrder.
GroupPtr permutation_group(std::string name, std::size_t degree,
                           std::span<const Permutation> generators);

// Parses a permutation in 1-based cycle notation, e.g. "(1 2 3)(4 5)".
Permutation parse_cycles(std::string_view cycles, std::size_t degree);

// Group spec grammar:
//   C<q>     cyclic of order q, 2 <= q <= 10080
//   A<m>     alternating, 3 <= m <= 7
//   PSL27    PSL(2,7) as a degree-7 permutation group
// plus the names of the nonabelian catalog members (PSL(2,8), PSL(3,3),
// PSU(3,3), M11, ...). Throws std::invalid_argument on anything else.
GroupPtr build_group(std::string_view spec);

struct CatalogEntry {
  std::string name;
  std::size_t order = 0;
  bool abelian = false;

  GroupPtr build() const { return build_group(name); }
};

// Every nontrivial simple group of order <= max_order, by increasing order:
// prime cyclic groups plus the hardcoded nonabelian list. The list's
// completeness is taken from the classification; it is not recomputed.
// Throws std::out_of_range unless 2 <= max_order <= kMaxOrder.
std::vector<CatalogEntry> catalog_entries(std::size_t max_order);

// Same members, materialized. Table memory grows like the sum of squared
// orders, so large caps are expensive; prefer catalog_entries() for listing.
std::vector<GroupPtr> simple_group_catalog(std::size_t max_order);

bool is_prime(std::size_t value);

}  // namespace nacoh
