#include <doctest.h>

#include <set>
#include <sstream>
#include <stdexcept>

#include "nacoh/cochain.hpp"
#include "nacoh/rng.hpp"
#include "oracles.hpp"

using namespace nacoh;

namespace {

Cochain1 single_edge(const GroupPtr& g, std::size_t n, Vertex u, Vertex v, Element value = Element{1}) {
  Cochain1 phi(g, n);
  phi.set(u, v, value);
  return phi;
}

Cochain0 indicator(const GroupPtr& g, std::size_t n, const std::set<Vertex>& s) {
  Cochain0 psi(g, n);
  for (const Vertex v : s) psi.set(v, Element{1});
  return psi;
}

}  // namespace

TEST_CASE("antisymmetry is structural") {
  const GroupPtr a5 = build_group("A5");
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Cochain1 phi = random_cochain1(a5, 6, seed);
    phi.set(5, 2, Element{17});
    CHECK(phi.at(5, 2) == Element{17});
    for (Vertex u = 1; u <= 6; ++u)
      for (Vertex v = 1; v <= 6; ++v)
        if (u != v) CHECK(phi.at(u, v) == a5->inverse(phi.at(v, u)));
  }
  Cochain1 phi(a5, 4);
  CHECK_THROWS_AS(phi.at(1, 1), std::out_of_range);
  CHECK_THROWS_AS(phi.at(0, 2), std::out_of_range);
  CHECK_THROWS_AS(phi.set(1, 5, Element{1}), std::out_of_range);
  CHECK_THROWS_AS(phi.set(1, 2, Element{60}), std::out_of_range);
}

TEST_CASE("d0") {
  const GroupPtr c2 = build_group("C2");
  SUBCASE("constant gauge gives the identity cochain") {
    Cochain0 psi(build_group("A5"), 5);
    for (Vertex v = 1; v <= 5; ++v) psi.set(v, Element{7});
    CHECK(support_size(d0(psi)) == 0);
  }
  SUBCASE("over C2 the support of d0(1_S) is the edge cut of S") {
    const std::size_t n = 6;
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      std::set<Vertex> s;
      for (Vertex v = 1; v <= n; ++v)
        if ((mask >> (v - 1)) & 1U) s.insert(v);
      const Cochain1 phi = d0(indicator(c2, n, s));
      for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v) CHECK(phi.at(u, v).is_identity() == (s.count(u) == s.count(v)));
      CHECK(support_size(phi) == s.size() * (n - s.size()));
    }
  }
  SUBCASE("star cut") { CHECK(support_size(d0(indicator(c2, 4, {2}))) == 3); }
}

TEST_CASE("d1 of a coboundary is the identity, for catalog groups up to 360") {
  for (const GroupPtr& g : simple_group_catalog(360)) {
    const Cochain1 phi = d0(random_cochain0(g, 6, g->order()));
    for (Vertex u = 1; u <= 6; ++u)
      for (Vertex v = 1; v <= 6; ++v)
        for (Vertex w = 1; w <= 6; ++w)
          if (u != v && v != w && u != w) REQUIRE(d1(phi, u, v, w).is_identity());
  }
}

TEST_CASE("d1 examples and orientation behaviour") {
  const GroupPtr c2 = build_group("C2");
  CHECK(d1(Cochain1(c2, 4), 1, 2, 3).is_identity());
  const Cochain1 phi = single_edge(c2, 4, 2, 3);
  CHECK_FALSE(d1(phi, 2, 3, 4).is_identity());
  CHECK(d1(phi, 1, 2, 4).is_identity());
  CHECK_THROWS_AS(d1(phi, 1, 1, 2), std::invalid_argument);

  const GroupPtr a5 = build_group("A5");
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Cochain1 psi = random_cochain1(a5, 5, seed);
    for (Vertex u = 1; u <= 5; ++u)
      for (Vertex v = 1; v <= 5; ++v)
        for (Vertex w = 1; w <= 5; ++w) {
          if (u == v || v == w || u == w) continue;
          const Element x = d1(psi, u, v, w);
          // rotation conjugates by phi(u,v)^{-1}; transposition inverts
          CHECK(d1(psi, v, w, u) == a5->conjugate(a5->inverse(psi.at(u, v)), x));
          CHECK(d1(psi, u, w, v) == a5->inverse(x));
        }
  }
}

TEST_CASE("coboundary support") {
  const GroupPtr c2 = build_group("C2");
  CHECK(coboundary_support(d0(indicator(c2, 5, {1, 3}))).empty());
  const auto b = coboundary_support(single_edge(c2, 4, 2, 3));
  CHECK(b == std::vector<Triangle>{{1, 2, 3}, {2, 3, 4}});
  CHECK(coboundary_norm(single_edge(c2, 5, 2, 3)) == 3);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Cochain1 phi = random_cochain1(build_group("A5"), 7, seed);
    CHECK(coboundary_norm(phi) == oracle::coboundary_norm_direct(phi));
    CHECK(coboundary_support(phi).size() == coboundary_norm(phi));
  }
}

TEST_CASE("gauge action") {
  const GroupPtr a5 = build_group("A5");
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Cochain1 phi = random_cochain1(a5, 6, seed);
    const Cochain0 psi1 = random_cochain0(a5, 6, derive_seed(seed, {1}));
    const Cochain0 psi2 = random_cochain0(a5, 6, derive_seed(seed, {2}));
    CHECK(act(Cochain0(a5, 6), phi) == phi);
    CHECK(act(pointwise_product(psi1, psi2), phi) == act(psi1, act(psi2, phi)));
    CHECK(act(psi1, Cochain1(a5, 6)) == d0(psi1));

    // d1(psi.phi)(u,v,w) = psi(u) d1(phi)(u,v,w) psi(u)^{-1}, so B is invariant
    const Cochain1 gauged = act(psi1, phi);
    CHECK(coboundary_support(gauged) == coboundary_support(phi));
    CHECK(d1(gauged, 2, 4, 5) == a5->conjugate(psi1[2], d1(phi, 2, 4, 5)));

    const Complex2 x = sample_complex(6, 0.4, seed);
    CHECK(is_cocycle(phi, x) == is_cocycle(gauged, x));
    const Cochain1 cocycle = d0(psi2);
    CHECK(is_cocycle(act(psi1, cocycle), Complex2::full(6)));
  }
  CHECK_THROWS_AS(act(Cochain0(a5, 5), Cochain1(a5, 6)), std::invalid_argument);
  CHECK_THROWS_AS(act(Cochain0(build_group("C2"), 6), Cochain1(a5, 6)), std::invalid_argument);
}

TEST_CASE("support size") {
  const GroupPtr c2 = build_group("C2");
  CHECK(support_size(Cochain1(c2, 5)) == 0);
  CHECK(support_size(single_edge(c2, 5, 1, 4)) == 1);
  CHECK(support_size(d0(indicator(c2, 4, {2}))) == 3);
}

TEST_CASE("orbit weight examples") {
  const GroupPtr c2 = build_group("C2");
  const OrbitWeight cob = orbit_weight(d0(indicator(c2, 5, {2, 4})));
  CHECK(cob.weight == 0);
  CHECK(cob.exact);

  const OrbitWeight edge = orbit_weight(single_edge(c2, 4, 2, 3));
  CHECK(edge.weight == 1);
  CHECK(edge.exact);

  Cochain1 all(c2, 4);
  for (Vertex u = 1; u <= 4; ++u)
    for (Vertex v = u + 1; v <= 4; ++v) all.set(u, v, Element{1});
  const OrbitWeight w = orbit_weight(all);
  CHECK(w.weight == 2);
  CHECK(w.exact);
  CHECK(w.lower_bound == 2);
}

TEST_CASE("orbit weight matches unfixed exhaustive minimization for n <= 4, |G| <= 3") {
  for (const char* spec : {"C2", "C3"}) {
    const GroupPtr g = build_group(spec);
    for (std::size_t n = 3; n <= 4; ++n) {
      oracle::for_each_tuple(pair_count(n), g->order(), [&](const std::vector<std::uint16_t>& raw) {
        std::vector<Element> values;
        for (const auto r : raw) values.push_back(Element{r});
        const Cochain1 phi(g, n, values);
        const OrbitWeight got = orbit_weight(phi);
        REQUIRE(got.exact);
        REQUIRE(got.weight == oracle::orbit_weight_all_gauges(phi));
      });
    }
  }
}

TEST_CASE("branch-and-bound agrees with the oracle when it finishes") {
  for (const char* spec : {"C5", "A4"}) {
    const GroupPtr g = build_group(spec);
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
      const Cochain1 phi = random_cochain1(g, 5, seed);
      const std::size_t truth = oracle::orbit_weight_all_gauges(phi);
      // Budget below |G|^(n-1) selects branch-and-bound.
      const OrbitWeight got = orbit_weight(phi, 400);
      CHECK(got.lower_bound <= truth);
      CHECK(got.weight >= truth);
      if (got.exact) CHECK(got.weight == truth);
      const OrbitWeight generous = orbit_weight(phi, 1'000'000);
      CHECK(generous.weight == truth);
    }
  }
}

TEST_CASE("branch-and-bound reports truncation") {
  const GroupPtr a5 = build_group("A5");
  const Cochain1 phi = random_cochain1(a5, 9, 5);
  const OrbitWeight cut = orbit_weight(phi, 10);
  CHECK_FALSE(cut.exact);
  CHECK(cut.lower_bound <= cut.weight);
  CHECK(cut.lower_bound == orbit_weight_packing_bound(phi));
  CHECK(cut.weight <= pair_count(9) - 8);
}

TEST_CASE("is_cocycle") {
  const GroupPtr c2 = build_group("C2");
  const Cochain1 edge = single_edge(c2, 4, 2, 3);
  CHECK(is_cocycle(edge, Complex2::empty(4)));
  CHECK(is_cocycle(d0(indicator(c2, 4, {1, 2})), Complex2::full(4)));
  CHECK_FALSE(is_cocycle(edge, Complex2(4, {{2, 3, 4}})));
  CHECK(is_cocycle(edge, Complex2(4, {{1, 2, 4}})));
  CHECK_THROWS_AS(is_cocycle(edge, Complex2::empty(5)), std::invalid_argument);
}

TEST_CASE("vertex gauge") {
  const GroupPtr c2 = build_group("C2");
  CHECK(vertex_gauge(Cochain1(c2, 5), 3) == Cochain0(c2, 5));
  const Cochain0 psi = vertex_gauge(single_edge(c2, 4, 2, 3), 2);
  for (Vertex v = 1; v <= 4; ++v) CHECK(psi[v].is_identity() == (v != 3));
  CHECK_THROWS_AS(vertex_gauge(Cochain1(c2, 4), 5), std::out_of_range);

  for (const char* spec : {"C2", "A5"}) {
    const GroupPtr g = build_group(spec);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Cochain1 phi = random_cochain1(g, 6, seed);
      for (Vertex u = 1; u <= 6; ++u) {
        const Cochain1 gauged = act(vertex_gauge(phi, u), phi);
        for (Vertex v = 1; v <= 6; ++v)
          for (Vertex w = 1; w <= 6; ++w)
            if (u != v && v != w && u != w) CHECK(gauged.at(v, w) == d1(phi, u, v, w));
      }
    }
  }
}

TEST_CASE("cochain file format") {
  const GroupPtr a5 = build_group("A5");
  const Cochain1 phi = random_cochain1(a5, 5, 9);
  std::ostringstream out;
  write_cochain(out, phi);
  std::istringstream in(out.str());
  const Cochain1 back = read_cochain(in);
  CHECK(back.n() == 5);
  CHECK(back.group().name() == "A5");
  CHECK(std::vector<Element>(back.oriented_values().begin(), back.oriented_values().end()) ==
        std::vector<Element>(phi.oriented_values().begin(), phi.oriented_values().end()));

  std::istringstream reversed("n 4 group C3\n# reversed orientation\n3 2 1\n");
  const Cochain1 r = read_cochain(reversed);
  CHECK(r.at(2, 3) == Element{2});
  CHECK(support_size(r) == 1);

  std::ostringstream identity;
  write_cochain(identity, Cochain1(build_group("C2"), 3));
  CHECK(identity.str() == "n 3 group C2\n");

  for (const char* bad : {"", "n 4\n", "n 4 group Q8\n", "n 4 group C2\n1 2\n", "n 4 group C2\n1 5 1\n",
                          "n 4 group C2\n1 2 2\n", "n 4 group C2\n1 1 1\n", "n 4 group C2\n1 2 1 0\n"}) {
    CAPTURE(bad);
    std::istringstream in_bad(bad);
    CHECK_THROWS_AS(read_cochain(in_bad), std::runtime_error);
  }
}
