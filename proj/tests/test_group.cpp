#include <doctest.h>

#include <map>
#include <set>
#include <stdexcept>

#include "nacoh/group.hpp"

using namespace nacoh;

namespace {

// Independent closure: BFS over permutations as plain vectors.
std::size_t closure_size(const std::vector<Permutation>& gens) {
  std::set<Permutation> seen;
  std::vector<Permutation> frontier;
  Permutation id(gens.front().size());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<std::uint8_t>(i);
  seen.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    const Permutation x = frontier.back();
    frontier.pop_back();
    for (const auto& g : gens) {
      Permutation y(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[g[i]];
      if (seen.insert(y).second) frontier.push_back(y);
    }
  }
  return seen.size();
}

bool associative_sampled(const FiniteGroup& g, std::size_t stride) {
  for (std::size_t a = 0; a < g.order(); a += stride)
    for (std::size_t b = 0; b < g.order(); b += stride)
      for (std::size_t c = 0; c < g.order(); c += stride) {
        const Element x{static_cast<std::uint16_t>(a)}, y{static_cast<std::uint16_t>(b)},
            z{static_cast<std::uint16_t>(c)};
        if (g.multiply(g.multiply(x, y), z) != g.multiply(x, g.multiply(y, z))) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("C2 is the XOR table") {
  const GroupPtr c2 = build_group("C2");
  CHECK(c2->order() == 2);
  for (std::uint16_t a = 0; a < 2; ++a)
    for (std::uint16_t b = 0; b < 2; ++b) CHECK(c2->multiply(Element{a}, Element{b}).index == (a ^ b));
  CHECK(c2->multiply(Element{1}, Element{1}) == kIdentity);
  CHECK(c2->is_abelian());
}

TEST_CASE("A5 has order 60, matching an independent closure of (1 2 3), (3 4 5)") {
  const std::vector<Permutation> gens{parse_cycles("(1 2 3)", 5), parse_cycles("(3 4 5)", 5)};
  CHECK(closure_size(gens) == 60);
  CHECK(build_group("A5")->order() == 60);
  CHECK(permutation_group("A5'", 5, gens)->order() == 60);
  CHECK_FALSE(build_group("A5")->is_abelian());
}

TEST_CASE("element order of a 5-cycle in A5 is 5") {
  const std::vector<Permutation> gens{parse_cycles("(1 2 3 4 5)", 5), parse_cycles("(1 2 3)", 5)};
  const GroupPtr a5 = permutation_group("A5", 5, gens);
  REQUIRE(a5->order() == 60);
  const Element five_cycle{1};
  Element power = five_cycle;
  std::size_t k = 1;
  while (!power.is_identity()) {
    power = a5->multiply(power, five_cycle);
    ++k;
  }
  CHECK(k == 5);
  CHECK(a5->element_order(five_cycle) == 5);
  CHECK(a5->element_order(Element{2}) == 3);
}

TEST_CASE("group spec grammar") {
  CHECK(build_group("C7")->order() == 7);
  CHECK(build_group("A3")->order() == 3);
  CHECK(build_group("A4")->order() == 12);
  CHECK(build_group("A6")->order() == 360);
  CHECK(build_group("PSL27")->order() == 168);
  CHECK_THROWS_AS(build_group("C1"), std::invalid_argument);
  CHECK_THROWS_AS(build_group("C0"), std::invalid_argument);
  CHECK_THROWS_AS(build_group("C"), std::invalid_argument);
  CHECK_THROWS_AS(build_group("Cx"), std::invalid_argument);
  CHECK_THROWS_AS(build_group("C5 "), std::invalid_argument);
  CHECK_THROWS_AS(build_group("A2"), std::invalid_argument);
  CHECK_THROWS_AS(build_group("A8"), std::invalid_argument);
  CHECK_THROWS_AS(build_group("S5"), std::invalid_argument);
  CHECK_THROWS_AS(build_group(""), std::invalid_argument);
  CHECK_THROWS_AS(build_group("C10081"), std::invalid_argument);
  CHECK(build_group("C10080")->order() == 10080);
}

TEST_CASE("range-checked access") {
  const GroupPtr c3 = build_group("C3");
  CHECK_THROWS_AS(c3->element(3), std::out_of_range);
  CHECK_THROWS_AS(c3->checked_multiply(Element{1}, Element{3}), std::out_of_range);
  CHECK_THROWS_AS(c3->checked_inverse(Element{9}), std::out_of_range);
  CHECK(c3->checked_inverse(Element{1}) == Element{2});
}

TEST_CASE("inverse law holds in every catalog group up to 660") {
  for (const GroupPtr& g : simple_group_catalog(660)) {
    for (std::size_t a = 0; a < g->order(); ++a) {
      const Element x{static_cast<std::uint16_t>(a)};
      REQUIRE(g->multiply(x, g->inverse(x)).is_identity());
      REQUIRE(g->multiply(g->inverse(x), x).is_identity());
    }
  }
}

TEST_CASE("table axioms hold exhaustively for the catalog") {
  // O(order^3); exhaustive for all members up to 168 and every nonabelian
  // member up to 660, sampled for the large prime cyclic groups.
  for (const GroupPtr& g : simple_group_catalog(660)) {
    CAPTURE(g->name());
    if (g->order() <= 168 || !g->is_abelian()) {
      CHECK(g->satisfies_axioms());
    } else {
      CHECK(associative_sampled(*g, 7));
    }
  }
}

TEST_CASE("catalog contents") {
  SUBCASE("N = 59: the 17 prime cyclic groups") {
    const auto entries = catalog_entries(59);
    CHECK(entries.size() == 17);
    for (const auto& e : entries) {
      CHECK(e.abelian);
      CHECK(is_prime(e.order));
    }
  }
  SUBCASE("N = 60 adds A5") {
    const auto entries = catalog_entries(60);
    REQUIRE(entries.size() == 18);
    std::size_t nonabelian = 0;
    for (const auto& e : entries) {
      if (!e.abelian) {
        ++nonabelian;
        CHECK(e.order == 60);
        CHECK(e.name == "A5");
      }
    }
    CHECK(nonabelian == 1);
  }
  SUBCASE("N = 2 is exactly C2") {
    const auto groups = simple_group_catalog(2);
    REQUIRE(groups.size() == 1);
    CHECK(groups[0]->name() == "C2");
  }
  SUBCASE("ordered by order") {
    const auto entries = catalog_entries(FiniteGroup::kMaxOrder);
    for (std::size_t i = 1; i < entries.size(); ++i) CHECK(entries[i - 1].order <= entries[i].order);
  }
  SUBCASE("bounds") {
    CHECK_THROWS_AS(catalog_entries(1), std::out_of_range);
    CHECK_THROWS_AS(catalog_entries(FiniteGroup::kMaxOrder + 1), std::out_of_range);
  }
}

TEST_CASE("at most two simple groups per order, so |catalog(N)| <= 2N") {
  const auto all = catalog_entries(FiniteGroup::kMaxOrder);
  std::map<std::size_t, int> per_order;
  for (const auto& e : all) ++per_order[e.order];
  for (const auto& [order, count] : per_order) CHECK(count <= 2);
  for (std::size_t n = 2; n <= 660; ++n) CHECK(catalog_entries(n).size() <= 2 * n);
}

TEST_CASE("simplicity check") {
  for (const GroupPtr& g : simple_group_catalog(660)) {
    CAPTURE(g->name());
    CHECK(g->is_simple());
  }
  // Negative controls.
  CHECK_FALSE(build_group("C4")->is_simple());
  CHECK_FALSE(build_group("C6")->is_simple());
  CHECK_FALSE(build_group("A4")->is_simple());
  const std::vector<Permutation> s3{parse_cycles("(1 2 3)", 3), parse_cycles("(1 2)", 3)};
  const GroupPtr sym3 = permutation_group("S3", 3, s3);
  CHECK(sym3->order() == 6);
  CHECK_FALSE(sym3->is_simple());
}

TEST_CASE("large nonabelian catalog members realize the right orders and are simple") {
  for (const auto& entry : catalog_entries(FiniteGroup::kMaxOrder)) {
    if (entry.abelian || entry.order <= 660) continue;
    CAPTURE(entry.name);
    const GroupPtr g = entry.build();
    CHECK(g->order() == entry.order);
    CHECK(g->is_simple());
  }
}

TEST_CASE("conjugacy classes of A5") {
  const auto classes = build_group("A5")->conjugacy_classes();
  std::multiset<std::size_t> sizes;
  for (const auto& c : classes) sizes.insert(c.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 12, 12, 15, 20});
}
