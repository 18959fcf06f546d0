#include "nacoh/complex.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "nacoh/rng.hpp"

namespace nacoh {

Complex2::Complex2(std::size_t n, std::vector<Triangle> triangles)
    : n_(n), triangles_(std::move(triangles)) {
  if (n_ < 3) throw std::invalid_argument("complex needs n >= 3, got " + std::to_string(n_));
  for (const auto& t : triangles_) {
    if (!(1 <= t.a && t.a < t.b && t.b < t.c && t.c <= n_)) {
      throw std::invalid_argument("triangle (" + std::to_string(t.a) + "," + std::to_string(t.b) +
                                  "," + std::to_string(t.c) + ") is not increasing in [1," +
                                  std::to_string(n_) + "]");
    }
  }
  std::sort(triangles_.begin(), triangles_.end());
  if (std::adjacent_find(triangles_.begin(), triangles_.end()) != triangles_.end()) {
    throw std::invalid_argument("duplicate triangle");
  }

  edge_offsets_.assign(pair_count(n_) + 1, 0);
  for (const auto& t : triangles_) {
    ++edge_offsets_[pair_index(n_, t.a, t.b) + 1];
    ++edge_offsets_[pair_index(n_, t.a, t.c) + 1];
    ++edge_offsets_[pair_index(n_, t.b, t.c) + 1];
  }
  for (std::size_t e = 0; e < pair_count(n_); ++e) edge_offsets_[e + 1] += edge_offsets_[e];
  edge_thirds_.resize(edge_offsets_.back());
  std::vector<std::size_t> cursor(edge_offsets_.begin(), edge_offsets_.end() - 1);
  // Sorted triangles yield each edge's third vertices in ascending order.
  for (const auto& t : triangles_) {
    edge_thirds_[cursor[pair_index(n_, t.b, t.c)]++] = t.a;
  }
  for (const auto& t : triangles_) {
    edge_thirds_[cursor[pair_index(n_, t.a, t.c)]++] = t.b;
  }
  for (const auto& t : triangles_) {
    edge_thirds_[cursor[pair_index(n_, t.a, t.b)]++] = t.c;
  }
  for (std::size_t e = 0; e < pair_count(n_); ++e) {
    std::sort(edge_thirds_.begin() + static_cast<std::ptrdiff_t>(edge_offsets_[e]),
              edge_thirds_.begin() + static_cast<std::ptrdiff_t>(edge_offsets_[e + 1]));
  }
}

Complex2 Complex2::full(std::size_t n) {
  std::vector<Triangle> all;
  all.reserve(triple_count(n));
  for (Vertex a = 1; a <= n; ++a) {
    for (Vertex b = a + 1; b <= n; ++b) {
      for (Vertex c = b + 1; c <= n; ++c) all.push_back({a, b, c});
    }
  }
  return Complex2(n, std::move(all));
}

std::span<const Vertex> Complex2::triangles_of_edge(Vertex u, Vertex v) const {
  if (u < 1 || v < 1 || u > n_ || v > n_ || u == v) {
    throw std::out_of_range("bad edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  }
  const std::size_t e = pair_index(n_, u, v);
  return std::span<const Vertex>(edge_thirds_).subspan(edge_offsets_[e],
                                                       edge_offsets_[e + 1] - edge_offsets_[e]);
}

bool Complex2::contains(const Triangle& t) const {
  return std::binary_search(triangles_.begin(), triangles_.end(), t);
}

Triangle make_triangle(Vertex u, Vertex v, Vertex w) {
  if (u == v || v == w || u == w) throw std::invalid_argument("triangle needs distinct vertices");
  if (u > v) std::swap(u, v);
  if (v > w) std::swap(v, w);
  if (u > v) std::swap(u, v);
  return {u, v, w};
}

bool triple_included(std::uint64_t seed, std::uint64_t rank, double p) noexcept {
  return to_unit_interval(derive_seed(seed, {rank})) < p;
}

Complex2 sample_complex(std::size_t n, double p, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("sample_complex needs n >= 3");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  std::vector<Triangle> chosen;
  for (Vertex a = 1; a <= n; ++a) {
    for (Vertex b = a + 1; b <= n; ++b) {
      for (Vertex c = b + 1; c <= n; ++c) {
        const Triangle t{a, b, c};
        if (triple_included(seed, triple_rank(t), p)) chosen.push_back(t);
      }
    }
  }
  return Complex2(n, std::move(chosen));
}

Complex2 read_complex(std::istream& in) {
  std::string line;
  std::size_t n = 0;
  bool have_header = false;
  std::vector<Triangle> triangles;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    const auto fail = [&](const std::string& what) {
      return std::runtime_error("complex file line " + std::to_string(line_no) + ": " + what);
    };
    if (!have_header) {
      if (first != "n" || !(fields >> n)) throw fail("expected header 'n <n>'");
      have_header = true;
    } else {
      long long a = 0, b = 0, c = 0;
      try {
        a = std::stoll(first);
      } catch (const std::exception&) {
        throw fail("expected 'i j k'");
      }
      if (!(fields >> b >> c)) throw fail("expected 'i j k'");
      if (a < 1 || b < 1 || c < 1) throw fail("vertex must be positive");
      triangles.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b), static_cast<Vertex>(c)});
    }
    std::string extra;
    if (fields >> extra) throw fail("trailing tokens");
  }
  if (!have_header) throw std::runtime_error("complex file has no 'n <n>' header");
  try {
    return Complex2(n, std::move(triangles));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("complex file: ") + e.what());
  }
}

void write_complex(std::ostream& out, const Complex2& complex) {
  out << "n " << complex.n() << '\n';
  for (const auto& t : complex.triangles()) out << t.a << ' ' << t.b << ' ' << t.c << '\n';
}

}  // namespace nacoh
