#include "nacoh/cochain.hpp"

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

namespace nacoh {

// ---------------------------------------------------------------------------
// Cochain0

Cochain0::Cochain0(GroupPtr group, std::size_t n)
    : group_(std::move(group)), values_(n, kIdentity) {
  if (!group_) throw std::invalid_argument("cochain needs a group");
}

Cochain0::Cochain0(GroupPtr group, std::vector<Element> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (!group_) throw std::invalid_argument("cochain needs a group");
  for (const Element e : values_) group_->element(e.index);
}

Element Cochain0::at(Vertex v) const {
  if (v < 1 || v > values_.size()) throw std::out_of_range("vertex out of range");
  return values_[v - 1];
}

void Cochain0::set(Vertex v, Element value) {
  if (v < 1 || v > values_.size()) throw std::out_of_range("vertex out of range");
  values_[v - 1] = group_->element(value.index);
}

// ---------------------------------------------------------------------------
// Cochain1

Cochain1::Cochain1(GroupPtr group, std::size_t n)
    : group_(std::move(group)), n_(n), values_(pair_count(n), kIdentity) {
  if (!group_) throw std::invalid_argument("cochain needs a group");
  if (n_ < 2) throw std::invalid_argument("cochain needs n >= 2");
}

Cochain1::Cochain1(GroupPtr group, std::size_t n, std::vector<Element> oriented)
    : group_(std::move(group)), n_(n), values_(std::move(oriented)) {
  if (!group_) throw std::invalid_argument("cochain needs a group");
  if (n_ < 2) throw std::invalid_argument("cochain needs n >= 2");
  if (values_.size() != pair_count(n_)) throw std::invalid_argument("wrong number of pair values");
  for (const Element e : values_) group_->element(e.index);
}

void Cochain1::check_vertices(Vertex u, Vertex v) const {
  if (u < 1 || v < 1 || u > n_ || v > n_ || u == v) {
    throw std::out_of_range("bad pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
}

Element Cochain1::at(Vertex u, Vertex v) const {
  check_vertices(u, v);
  return value(u, v);
}

void Cochain1::set(Vertex u, Vertex v, Element value) {
  check_vertices(u, v);
  const Element checked = group_->element(value.index);
  values_[pair_index(n_, u, v)] = u < v ? checked : group_->inverse(checked);
}

// ---------------------------------------------------------------------------
// Operators

namespace {

void require_compatible(const Cochain0& psi, const Cochain1& phi) {
  if (psi.group_ptr() != phi.group_ptr() && psi.group().name() != phi.group().name()) {
    throw std::invalid_argument("cochains over different groups");
  }
  if (psi.n() != phi.n()) throw std::invalid_argument("cochains on different vertex sets");
}

}  // namespace

Cochain0 pointwise_product(const Cochain0& left, const Cochain0& right) {
  if (left.n() != right.n()) throw std::invalid_argument("cochains on different vertex sets");
  const FiniteGroup& g = left.group();
  std::vector<Element> out(left.n());
  for (Vertex v = 1; v <= left.n(); ++v) out[v - 1] = g.multiply(left[v], right[v]);
  return Cochain0(left.group_ptr(), std::move(out));
}

Cochain1 d0(const Cochain0& psi) {
  const FiniteGroup& g = psi.group();
  const std::size_t n = psi.n();
  std::vector<Element> out(pair_count(n));
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      out[pair_index(n, u, v)] = g.multiply(psi[u], g.inverse(psi[v]));
    }
  }
  return Cochain1(psi.group_ptr(), n, std::move(out));
}

Element d1(const Cochain1& phi, Vertex u, Vertex v, Vertex w) {
  if (u == v || v == w || u == w) throw std::invalid_argument("d1 needs distinct vertices");
  const FiniteGroup& g = phi.group();
  return g.multiply(g.multiply(phi.at(u, v), phi.at(v, w)), phi.at(w, u));
}

namespace {

template <typename Visit>
void for_each_nontrivial_triple(const Cochain1& phi, Visit&& visit) {
  const FiniteGroup& g = phi.group();
  const std::size_t n = phi.n();
  for (Vertex a = 1; a <= n; ++a) {
    for (Vertex b = a + 1; b <= n; ++b) {
      const Element ab = phi.value(a, b);
      for (Vertex c = b + 1; c <= n; ++c) {
        // phi(a,b) phi(b,c) == phi(a,c)  <=>  d1(a,b,c) == 1
        if (g.multiply(ab, phi.value(b, c)) != phi.value(a, c)) visit(Triangle{a, b, c});
      }
    }
  }
}

}  // namespace

std::vector<Triangle> coboundary_support(const Cochain1& phi) {
  std::vector<Triangle> out;
  for_each_nontrivial_triple(phi, [&](const Triangle& t) { out.push_back(t); });
  return out;
}

std::size_t coboundary_norm(const Cochain1& phi) {
  std::size_t count = 0;
  for_each_nontrivial_triple(phi, [&](const Triangle&) { ++count; });
  return count;
}

Cochain1 act(const Cochain0& psi, const Cochain1& phi) {
  require_compatible(psi, phi);
  const FiniteGroup& g = phi.group();
  const std::size_t n = phi.n();
  std::vector<Element> out(pair_count(n));
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      out[pair_index(n, u, v)] =
          g.multiply(g.multiply(psi[u], phi.value(u, v)), g.inverse(psi[v]));
    }
  }
  return Cochain1(phi.group_ptr(), n, std::move(out));
}

std::size_t support_size(const Cochain1& phi) {
  const auto values = phi.oriented_values();
  return static_cast<std::size_t>(
      std::count_if(values.begin(), values.end(), [](Element e) { return !e.is_identity(); }));
}

bool is_cocycle(const Cochain1& phi, const Complex2& complex) {
  if (phi.n() != complex.n()) throw std::invalid_argument("cochain and complex sizes differ");
  const FiniteGroup& g = phi.group();
  return std::all_of(complex.triangles().begin(), complex.triangles().end(), [&](const Triangle& t) {
    return g.multiply(phi.value(t.a, t.b), phi.value(t.b, t.c)) == phi.value(t.a, t.c);
  });
}

Cochain0 vertex_gauge(const Cochain1& phi, Vertex u) {
  if (u < 1 || u > phi.n()) throw std::out_of_range("vertex out of range");
  Cochain0 psi(phi.group_ptr(), phi.n());
  for (Vertex v = 1; v <= phi.n(); ++v) {
    if (v != u) psi.set(v, phi.value(u, v));
  }
  return psi;
}

// ---------------------------------------------------------------------------
// Orbit weight

namespace {

// Depth-first search over gauges psi with psi(1) = 1, assigning vertices in
// increasing order. For every unassigned vertex w it tracks how many assigned
// u would make the pair (u,w) trivial for each candidate psi(w), i.e. the
// multiplicity of psi(u) phi(u,w). Pairs with both endpoints assigned give the
// running cost; for each unassigned w at least (#assigned - best multiplicity)
// of its pairs to assigned vertices stay non-trivial, which is added as the
// lower bound.
class GaugeSearch {
 public:
  GaugeSearch(const Cochain1& phi, bool prune, std::uint64_t budget)
      : phi_(phi),
        group_(phi.group()),
        n_(phi.n()),
        order_(group_.order()),
        prune_(prune),
        budget_(budget),
        psi_(n_ + 1, kIdentity),
        counts_((n_ + 1) * order_, 0),
        max_count_(n_ + 1, 0) {}

  void run(std::size_t initial_best) {
    best_ = initial_best;
    push(1, kIdentity);
    search(2, 0);
  }

  std::size_t best() const { return best_; }
  bool truncated() const { return truncated_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint32_t& count(Vertex w, Element h) { return counts_[w * order_ + h.index]; }

  void push(Vertex v, Element value) {
    psi_[v] = value;
    for (Vertex w = v + 1; w <= n_; ++w) {
      const Element needed = group_.multiply(value, phi_.value(v, w));
      saved_max_.push_back(max_count_[w]);
      max_count_[w] = std::max(max_count_[w], ++count(w, needed));
    }
  }

  void pop(Vertex v) {
    for (Vertex w = n_; w > v; --w) {
      const Element needed = group_.multiply(psi_[v], phi_.value(v, w));
      --count(w, needed);
      max_count_[w] = saved_max_.back();
      saved_max_.pop_back();
    }
  }

  std::size_t future_bound(Vertex first_unassigned, std::size_t assigned) const {
    std::size_t total = 0;
    for (Vertex w = first_unassigned; w <= n_; ++w) total += assigned - max_count_[w];
    return total;
  }

  void search(Vertex v, std::size_t cost) {
    if (v > n_) {
      best_ = std::min(best_, cost);
      return;
    }
    const std::size_t assigned = v - 1;
    std::vector<Element> candidates(order_);
    for (std::size_t h = 0; h < order_; ++h) candidates[h] = Element{static_cast<std::uint16_t>(h)};
    if (prune_) {
      std::stable_sort(candidates.begin(), candidates.end(), [&](Element x, Element y) {
        return counts_[v * order_ + x.index] > counts_[v * order_ + y.index];
      });
    }
    const std::size_t before = prune_ ? future_bound(v + 1, assigned) : 0;
    for (const Element g : candidates) {
      const std::size_t added = assigned - counts_[v * order_ + g.index];
      if (prune_ && cost + added + before >= best_) break;
      if (prune_ && ++nodes_ > budget_) {
        truncated_ = true;
        return;
      }
      if (!prune_) ++nodes_;
      push(v, g);
      if (!prune_ || cost + added + future_bound(v + 1, assigned + 1) < best_) {
        search(v + 1, cost + added);
      }
      pop(v);
      if (truncated_) return;
    }
  }

  const Cochain1& phi_;
  const FiniteGroup& group_;
  std::size_t n_, order_;
  bool prune_;
  std::uint64_t budget_;
  std::vector<Element> psi_;
  std::vector<std::uint32_t> counts_;
  std::vector<std::uint32_t> max_count_;
  std::vector<std::uint32_t> saved_max_;
  std::size_t best_ = 0;
  std::uint64_t nodes_ = 0;
  bool truncated_ = false;
};

bool gauge_space_within(std::size_t order, std::size_t free_vertices, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < free_vertices; ++i) {
    if (total > budget / order) return false;
    total *= order;
  }
  return total <= budget;
}

}  // namespace

std::size_t orbit_weight_packing_bound(const Cochain1& phi) {
  const std::size_t n = phi.n();
  std::vector<bool> used(pair_count(n), false);
  std::size_t packed = 0;
  for (const Triangle& t : coboundary_support(phi)) {
    const std::size_t ab = pair_index(n, t.a, t.b);
    const std::size_t bc = pair_index(n, t.b, t.c);
    const std::size_t ac = pair_index(n, t.a, t.c);
    if (used[ab] || used[bc] || used[ac]) continue;
    used[ab] = used[bc] = used[ac] = true;
    ++packed;
  }
  return packed;
}

OrbitWeight orbit_weight(const Cochain1& phi, std::uint64_t budget) {
  const std::size_t upper =
      std::min(support_size(phi), support_size(act(vertex_gauge(phi, 1), phi)));
  if (upper == 0) return {0, true, 0, 0};

  const bool exhaustive = gauge_space_within(phi.group().order(), phi.n() - 1, budget);
  GaugeSearch search(phi, !exhaustive, budget);
  search.run(upper);
  OrbitWeight result;
  result.weight = search.best();
  result.exact = !search.truncated();
  result.nodes = search.nodes();
  result.lower_bound = result.exact ? result.weight : orbit_weight_packing_bound(phi);
  return result;
}

// ---------------------------------------------------------------------------
// Random cochains

Cochain0 random_cochain0(const GroupPtr& group, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, group->order() - 1);
  std::vector<Element> values(n);
  for (auto& v : values) v = Element{static_cast<std::uint16_t>(pick(rng))};
  return Cochain0(group, std::move(values));
}

Cochain1 random_cochain1(const GroupPtr& group, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, group->order() - 1);
  std::vector<Element> values(pair_count(n));
  for (auto& v : values) v = Element{static_cast<std::uint16_t>(pick(rng))};
  return Cochain1(group, n, std::move(values));
}

// ---------------------------------------------------------------------------
// File format

Cochain1 read_cochain(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<Cochain1> phi;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    const auto fail = [&](const std::string& what) {
      return std::runtime_error("cochain file line " + std::to_string(line_no) + ": " + what);
    };
    if (!phi) {
      std::size_t n = 0;
      std::string group_word, spec;
      if (first != "n" || !(fields >> n >> group_word >> spec) || group_word != "group") {
        throw fail("expected header 'n <n> group <spec>'");
      }
      try {
        phi.emplace(build_group(spec), n);
      } catch (const std::exception& e) {
        throw fail(e.what());
      }
    } else {
      long long u = 0, v = 0, index = 0;
      try {
        u = std::stoll(first);
      } catch (const std::exception&) {
        throw fail("expected 'u v <element-index>'");
      }
      if (!(fields >> v >> index)) throw fail("expected 'u v <element-index>'");
      if (u < 1 || v < 1 || index < 0) throw fail("negative or zero field");
      try {
        phi->set(static_cast<Vertex>(u), static_cast<Vertex>(v),
                 phi->group().element(static_cast<std::size_t>(index)));
      } catch (const std::exception& e) {
        throw fail(e.what());
      }
    }
    std::string extra;
    if (fields >> extra) throw fail("trailing tokens");
  }
  if (!phi) throw std::runtime_error("cochain file has no header");
  return std::move(*phi);
}

void write_cochain(std::ostream& out, const Cochain1& phi) {
  out << "n " << phi.n() << " group " << phi.group().name() << '\n';
  for (Vertex u = 1; u <= phi.n(); ++u) {
    for (Vertex v = u + 1; v <= phi.n(); ++v) {
      const Element e = phi.value(u, v);
      if (!e.is_identity()) out << u << ' ' << v << ' ' << e.index << '\n';
    }
  }
}

}  // namespace nacoh
