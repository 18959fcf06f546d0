#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "nacoh/complex.hpp"
#include "nacoh/group.hpp"

namespace nacoh {

// G-valued function on the vertices [n].
class Cochain0 {
 public:
  Cochain0(GroupPtr group, std::size_t n);
  // values[v-1] is the value at vertex v.
  Cochain0(GroupPtr group, std::vector<Element> values);

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  std::size_t n() const noexcept { return values_.size(); }

  Element operator[](Vertex v) const noexcept { return values_[v - 1]; }
  Element at(Vertex v) const;
  void set(Vertex v, Element value);

  std::span<const Element> values() const noexcept { return values_; }

  friend bool operator==(const Cochain0& x, const Cochain0& y) {
    return x.group_ == y.group_ && x.values_ == y.values_;
  }

 private:
  GroupPtr group_;
  std::vector<Element> values_;
};

// Antisymmetric G-valued function on ordered pairs of distinct vertices.
// Only the value on (min, max) is stored; reading (max, min) returns its
// inverse, so phi(u,v) == phi(v,u)^{-1} cannot be violated.
class Cochain1 {
 public:
  // All-identity cochain.
  Cochain1(GroupPtr group, std::size_t n);
  // `oriented[pair_index(n,u,v)]` is the value on (u,v) with u < v.
  Cochain1(GroupPtr group, std::size_t n, std::vector<Element> oriented);

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  std::size_t n() const noexcept { return n_; }

  // Unchecked read for hot loops: u, v in [1, n], u != v.
  Element value(Vertex u, Vertex v) const noexcept {
    const Element stored = values_[pair_index(n_, u, v)];
    return u < v ? stored : group_->inverse(stored);
  }
  // Range-checked read. Throws std::out_of_range.
  Element at(Vertex u, Vertex v) const;
  // Sets phi(u,v) = value, and therefore phi(v,u) = value^{-1}.
  void set(Vertex u, Vertex v, Element value);

  std::span<const Element> oriented_values() const noexcept { return values_; }

  friend bool operator==(const Cochain1& x, const Cochain1& y) {
    return x.group_ == y.group_ && x.n_ == y.n_ && x.values_ == y.values_;
  }

 private:
  void check_vertices(Vertex u, Vertex v) const;

  GroupPtr group_;
  std::size_t n_;
  std::vector<Element> values_;
};

// Pointwise product (psi1 psi2)(v) = psi1(v) psi2(v).
Cochain0 pointwise_product(const Cochain0& left, const Cochain0& right);

// d0 psi(u,v) = psi(u) psi(v)^{-1}
Cochain1 d0(const Cochain0& psi);

// d1 phi(u,v,w) = phi(u,v) phi(v,w) phi(w,u). Cyclic rotations of (u,v,w)
// give conjugate values and a transposition gives the inverse, so whether
// the result is the identity does not depend on orientation.
// Throws std::invalid_argument on repeated vertices.
Element d1(const Cochain1& phi, Vertex u, Vertex v, Vertex w);

// B(phi): increasing triples of the full simplex on [n] where d1 != 1.
std::vector<Triangle> coboundary_support(const Cochain1& phi);
// |B(phi)| without materializing the set.
std::size_t coboundary_norm(const Cochain1& phi);

// (psi . phi)(u,v) = psi(u) phi(u,v) psi(v)^{-1}.
// Throws std::invalid_argument if groups or sizes differ.
Cochain1 act(const Cochain0& psi, const Cochain1& phi);

// Number of unordered pairs with a non-identity value.
std::size_t support_size(const Cochain1& phi);

inline constexpr std::uint64_t kDefaultOrbitBudget = 10'000'000;

struct OrbitWeight {
  // Smallest support found; equals the orbit weight when `exact`, otherwise
  // an upper bound.
  std::size_t weight = 0;
  bool exact = true;
  // Certified lower bound; equals `weight` when `exact`.
  std::size_t lower_bound = 0;
  std::uint64_t nodes = 0;
};

// Minimum of support_size(psi . phi) over all gauges psi, with psi(1) fixed
// to the identity. Fixing psi(1) loses nothing: replacing psi by g*psi
// conjugates every value of psi.phi by g, which keeps the support.
//
// Plain enumeration when |G|^(n-1) <= budget, branch-and-bound over vertex
// assignments otherwise. The search is cut after `budget` node visits, in
// which case the result is flagged inexact.
OrbitWeight orbit_weight(const Cochain1& phi, std::uint64_t budget = kDefaultOrbitBudget);

// Lower bound on the orbit weight from a greedy packing of edge-disjoint
// triangles with d1 != 1. Each such triangle keeps a non-identity edge under
// every gauge because d1 of a gauged cochain is a conjugate of d1.
std::size_t orbit_weight_packing_bound(const Cochain1& phi);

// d1 phi is the identity on every triangle of X.
// Throws std::invalid_argument if phi.n() != X.n().
bool is_cocycle(const Cochain1& phi, const Complex2& complex);

// phi_u: identity at u, phi(u,v) at every other v.
Cochain0 vertex_gauge(const Cochain1& phi, Vertex u);

// Uniformly random cochains for sampling-based checks.
Cochain0 random_cochain0(const GroupPtr& group, std::size_t n, std::uint64_t seed);
Cochain1 random_cochain1(const GroupPtr& group, std::size_t n, std::uint64_t seed);

// Text format: "n <n> group <spec>" then "u v <element-index>" for every
// non-identity pair; unlisted pairs are the identity. Lines with u > v are
// accepted and stored as the inverse on (v,u).
Cochain1 read_cochain(std::istream& in);
void write_cochain(std::ostream& out, const Cochain1& phi);

}  // namespace nacoh
