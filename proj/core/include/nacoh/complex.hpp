#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace nacoh {

// Vertices are 1-based, matching the vertex set [n].
using Vertex = std::uint32_t;

// A 2-simplex with strictly increasing vertices.
struct Triangle {
  Vertex a = 0, b = 0, c = 0;
  friend constexpr auto operator<=>(const Triangle&, const Triangle&) = default;
};

constexpr std::size_t pair_count(std::size_t n) noexcept { return n * (n - 1) / 2; }

constexpr std::size_t triple_count(std::size_t n) noexcept {
  return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
}

// Dense index of the unordered pair {u,v}, u != v, in [0, pair_count(n)),
// ordered lexicographically by (min, max).
constexpr std::size_t pair_index(std::size_t n, Vertex u, Vertex v) noexcept {
  if (u > v) {
    const Vertex t = u;
    u = v;
    v = t;
  }
  const std::size_t i = u - 1;
  return i * n - i * (i + 1) / 2 + (v - u - 1);
}

// Colexicographic rank of an increasing triple; independent of n.
constexpr std::uint64_t triple_rank(const Triangle& t) noexcept {
  const std::uint64_t a = t.a - 1, b = t.b - 1, c = t.c - 1;
  return a + b * (b - 1) / 2 + c * (c - 1) * (c - 2) / 6;
}

struct FaceCounts {
  std::size_t f0 = 0, f1 = 0, f2 = 0;
  friend bool operator==(const FaceCounts&, const FaceCounts&) = default;
};

// A complex containing the complete graph on [n] plus a set of triangles.
class Complex2 {
 public:
  // Throws std::invalid_argument for n < 3, a triple that is not strictly
  // increasing inside [1, n], or duplicate triples.
  Complex2(std::size_t n, std::vector<Triangle> triangles);

  static Complex2 full(std::size_t n);
  static Complex2 empty(std::size_t n) { return Complex2(n, {}); }

  std::size_t n() const noexcept { return n_; }
  std::span<const Triangle> triangles() const noexcept { return triangles_; }
  FaceCounts face_counts() const noexcept { return {n_, pair_count(n_), triangles_.size()}; }

  // Third vertices w with sorted {u,v,w} a triangle, ascending.
  // Throws std::out_of_range for bad vertices or u == v.
  std::span<const Vertex> triangles_of_edge(Vertex u, Vertex v) const;

  bool contains(const Triangle& t) const;

  friend bool operator==(const Complex2& x, const Complex2& y) {
    return x.n_ == y.n_ && x.triangles_ == y.triangles_;
  }

 private:
  std::size_t n_;
  std::vector<Triangle> triangles_;
  // CSR adjacency pair_index -> third vertices.
  std::vector<std::size_t> edge_offsets_;
  std::vector<Vertex> edge_thirds_;
};

// Sorts three distinct vertices into a Triangle.
Triangle make_triangle(Vertex u, Vertex v, Vertex w);

// Whether the triple of colex rank `rank` is present in the sample with the
// given seed. Raising p never turns a present triple absent.
bool triple_included(std::uint64_t seed, std::uint64_t rank, double p) noexcept;

// Y(n,p): each triple independently with probability p.
// Throws std::invalid_argument for n < 3 or p outside [0, 1].
Complex2 sample_complex(std::size_t n, double p, std::uint64_t seed);

// Text format: "n <n>" then one "i j k" line per triangle; '#' comments and
// blank lines are ignored. Throws std::runtime_error on malformed input.
Complex2 read_complex(std::istream& in);
void write_complex(std::ostream& out, const Complex2& complex);

}  // namespace nacoh
