#include "nacoh/group.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "finite_field.hpp"

namespace nacoh {

FiniteGroup::FiniteGroup(std::string name, std::size_t order, std::vector<Element> table)
    : name_(std::move(name)), order_(order), table_(std::move(table)) {
  if (order_ == 0 || order_ > kMaxOrder) {
    throw std::invalid_argument("group order out of range: " + std::to_string(order_));
  }
  if (table_.size() != order_ * order_) {
    throw std::invalid_argument("multiplication table has wrong size");
  }
  inverse_.assign(order_, kIdentity);
  for (std::size_t a = 0; a < order_; ++a) {
    const Element ea{static_cast<std::uint16_t>(a)};
    if (multiply(kIdentity, ea) != ea || multiply(ea, kIdentity) != ea) {
      throw std::invalid_argument("index 0 is not the identity");
    }
    bool found = false;
    for (std::size_t b = 0; b < order_; ++b) {
      const Element value = table_[a * order_ + b];
      if (value.index >= order_) throw std::invalid_argument("table entry out of range");
      if (value.is_identity() && !found) {
        inverse_[a] = Element{static_cast<std::uint16_t>(b)};
        found = true;
      }
      if (abelian_ && table_[b * order_ + a] != value) abelian_ = false;
    }
    if (!found) throw std::invalid_argument("element without inverse");
  }
}

Element FiniteGroup::element(std::size_t index) const {
  if (index >= order_) {
    throw std::out_of_range("element index " + std::to_string(index) + " not in " + name_);
  }
  return Element{static_cast<std::uint16_t>(index)};
}

Element FiniteGroup::checked_multiply(Element a, Element b) const {
  return multiply(element(a.index), element(b.index));
}

Element FiniteGroup::checked_inverse(Element a) const { return inverse(element(a.index)); }

std::size_t FiniteGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element power = a; !power.is_identity(); power = multiply(power, a)) ++k;
  return k;
}

bool FiniteGroup::satisfies_axioms() const {
  for (std::size_t a = 0; a < order_; ++a) {
    const Element ea{static_cast<std::uint16_t>(a)};
    if (multiply(kIdentity, ea) != ea || multiply(ea, kIdentity) != ea) return false;
    if (!multiply(ea, inverse(ea)).is_identity()) return false;
    for (std::size_t b = 0; b < order_; ++b) {
      const Element ab = table_[a * order_ + b];
      for (std::size_t c = 0; c < order_; ++c) {
        const Element ec{static_cast<std::uint16_t>(c)};
        const Element eb{static_cast<std::uint16_t>(b)};
        if (multiply(ab, ec) != multiply(ea, multiply(eb, ec))) return false;
      }
    }
  }
  return true;
}

std::vector<std::vector<Element>> FiniteGroup::conjugacy_classes() const {
  std::vector<std::vector<Element>> classes;
  std::vector<bool> seen(order_, false);
  for (std::size_t x = 0; x < order_; ++x) {
    if (seen[x]) continue;
    std::vector<Element> cls;
    for (std::size_t g = 0; g < order_; ++g) {
      const Element y = conjugate(Element{static_cast<std::uint16_t>(g)},
                                  Element{static_cast<std::uint16_t>(x)});
      if (!seen[y.index]) {
        seen[y.index] = true;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::size_t FiniteGroup::generated_subgroup_order(std::span<const Element> generators) const {
  std::vector<bool> member(order_, false);
  std::vector<Element> members{kIdentity};
  member[0] = true;
  std::vector<Element> gens;
  for (const Element s : generators) {
    if (member[s.index]) continue;
    gens.push_back(s);
    // Re-close under the enlarged generating set. Every element of the new
    // subgroup is a product of old members and generators, so a BFS seeded
    // with the current members reaches all of it.
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (const Element g : gens) {
        const Element y = multiply(members[i], g);
        if (!member[y.index]) {
          member[y.index] = true;
          members.push_back(y);
        }
      }
    }
    if (members.size() == order_) break;
  }
  return members.size();
}

bool FiniteGroup::is_simple() const {
  if (order_ < 2) return false;
  for (const auto& cls : conjugacy_classes()) {
    if (cls.front().is_identity()) continue;
    if (generated_subgroup_order(cls) != order_) return false;
  }
  return true;
}

bool is_prime(std::size_t value) {
  if (value < 2) return false;
  for (std::size_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Permutation groups

namespace {

std::string perm_key(const Permutation& perm) { return {perm.begin(), perm.end()}; }

Permutation compose(const Permutation& a, const Permutation& b) {
  // (ab)(x) = a(b(x))
  Permutation out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = a[b[x]];
  return out;
}

GroupPtr cyclic_group(std::size_t q) {
  std::vector<Element> table(q * q);
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      table[a * q + b] = Element{static_cast<std::uint16_t>((a + b) % q)};
    }
  }
  return std::make_shared<const FiniteGroup>("C" + std::to_string(q), q, std::move(table));
}

GroupPtr alternating_group(std::size_t m) {
  std::vector<Permutation> gens;
  for (std::size_t k = 3; k <= m; ++k) {
    gens.push_back(parse_cycles("(1 2 " + std::to_string(k) + ")", m));
  }
  return permutation_group("A" + std::to_string(m), m, gens);
}

using Matrix = std::vector<int>;  // row-major d*d over a FiniteField

// Projective action of matrices on the points of a set of normalized vectors.
class ProjectiveAction {
 public:
  ProjectiveAction(const detail::FiniteField& field, std::size_t dim,
                   std::function<bool(const std::vector<int>&)> keep)
      : field_(field), dim_(dim) {
    std::vector<int> v(dim_, 0);
    const std::size_t q = field_.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < dim_; ++i) total *= q;
    for (std::size_t code = 1; code < total; ++code) {
      std::size_t c = code;
      for (std::size_t i = 0; i < dim_; ++i) {
        v[i] = static_cast<int>(c % q);
        c /= q;
      }
      if (normalize(v) != v || !keep(v)) continue;
      index_.emplace(key(v), points_.size());
      points_.push_back(v);
    }
  }

  std::size_t degree() const { return points_.size(); }

  Permutation permutation(const Matrix& m) const {
    Permutation perm(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) {
      std::vector<int> image(dim_, 0);
      for (std::size_t r = 0; r < dim_; ++r) {
        int acc = 0;
        for (std::size_t c = 0; c < dim_; ++c) {
          acc = field_.add(acc, field_.mul(m[r * dim_ + c], points_[i][c]));
        }
        image[r] = acc;
      }
      const auto it = index_.find(key(normalize(image)));
      if (it == index_.end()) throw std::logic_error("matrix does not preserve the point set");
      perm[i] = static_cast<std::uint8_t>(it->second);
    }
    return perm;
  }

 private:
  std::vector<int> normalize(std::vector<int> v) const {
    for (const int x : v) {
      if (x == 0) continue;
      const int scale = field_.inv(x);
      for (int& y : v) y = field_.mul(y, scale);
      break;
    }
    return v;
  }
  static std::string key(const std::vector<int>& v) { return {v.begin(), v.end()}; }

  const detail::FiniteField& field_;
  std::size_t dim_;
  std::vector<std::vector<int>> points_;
  std::unordered_map<std::string, std::size_t> index_;
};

Matrix identity_matrix(std::size_t dim) {
  Matrix m(dim * dim, 0);
  for (std::size_t i = 0; i < dim; ++i) m[i * dim + i] = 1;
  return m;
}

// Elementary transvections I + a*E_rc for a in an additive basis generate SL(d,q).
std::vector<Matrix> transvections(const detail::FiniteField& field, std::size_t dim) {
  std::vector<Matrix> out;
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      if (r == c) continue;
      for (const int a : field.additive_basis()) {
        Matrix m = identity_matrix(dim);
        m[r * dim + c] = a;
        out.push_back(std::move(m));
      }
    }
  }
  return out;
}

GroupPtr projective_special_linear(std::string name, std::size_t dim, std::size_t p,
                                   std::size_t k) {
  const detail::FiniteField field(p, k);
  const ProjectiveAction action(field, dim, [](const std::vector<int>&) { return true; });
  std::vector<Permutation> gens;
  for (const Matrix& m : transvections(field, dim)) gens.push_back(action.permutation(m));
  return permutation_group(std::move(name), action.degree(), gens);
}

// PSU(3,3) = SU(3,3) acting on the 28 isotropic points of the Hermitian form
// x1*y3^3 + x2*y2^3 + x3*y1^3 over GF(9). Generated by the upper and lower
// unitriangular matrices that preserve the form.
GroupPtr projective_special_unitary_3_3() {
  const detail::FiniteField field(3, 2);
  const auto bar = [&](int a) { return field.pow(a, 3); };
  const auto form = [&](const std::vector<int>& x, const std::vector<int>& y) {
    int acc = 0;
    for (std::size_t i = 0; i < 3; ++i) acc = field.add(acc, field.mul(x[i], bar(y[2 - i])));
    return acc;
  };
  const ProjectiveAction action(field, 3, [&](const std::vector<int>& v) { return form(v, v) == 0; });

  const auto preserves = [&](const Matrix& m) {
    std::array<std::vector<int>, 3> cols;
    for (std::size_t c = 0; c < 3; ++c) {
      cols[c] = {m[0 * 3 + c], m[1 * 3 + c], m[2 * 3 + c]};
    }
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        if (form(cols[i], cols[j]) != (i + j == 2 ? 1 : 0)) return false;
      }
    }
    return true;
  };

  std::vector<Permutation> gens;
  const std::size_t q = field.size();
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = 0; b < q; ++b) {
      for (std::size_t c = 0; c < q; ++c) {
        Matrix upper = identity_matrix(3);
        upper[0 * 3 + 1] = static_cast<int>(a);
        upper[0 * 3 + 2] = static_cast<int>(b);
        upper[1 * 3 + 2] = static_cast<int>(c);
        Matrix lower = identity_matrix(3);
        lower[1 * 3 + 0] = static_cast<int>(a);
        lower[2 * 3 + 0] = static_cast<int>(b);
        lower[2 * 3 + 1] = static_cast<int>(c);
        if (preserves(upper)) gens.push_back(action.permutation(upper));
        if (preserves(lower)) gens.push_back(action.permutation(lower));
      }
    }
  }
  return permutation_group("PSU(3,3)", action.degree(), gens);
}

GroupPtr mathieu_11() {
  const std::vector<Permutation> gens{parse_cycles("(1 2 3 4 5 6 7 8 9 10 11)", 11),
                                      parse_cycles("(3 7 11 8)(4 10 5 6)", 11)};
  return permutation_group("M11", 11, gens);
}

// PSL(2,7) as the collineation group of the Fano plane with lines
// {i, i+1, i+3} mod 7, found by filtering all of S7.
GroupPtr fano_collineations() {
  std::array<std::array<std::uint8_t, 3>, 7> lines{};
  std::vector<bool> is_line(1 << 7, false);
  for (std::uint8_t i = 0; i < 7; ++i) {
    lines[i] = {i, static_cast<std::uint8_t>((i + 1) % 7), static_cast<std::uint8_t>((i + 3) % 7)};
    is_line[(1 << lines[i][0]) | (1 << lines[i][1]) | (1 << lines[i][2])] = true;
  }
  Permutation perm{0, 1, 2, 3, 4, 5, 6};
  std::vector<Permutation> collineations;
  do {
    const bool ok = std::all_of(lines.begin(), lines.end(), [&](const auto& line) {
      return is_line[(1 << perm[line[0]]) | (1 << perm[line[1]]) | (1 << perm[line[2]])];
    });
    if (ok) collineations.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return permutation_group("PSL27", 7, collineations);
}

struct NonabelianEntry {
  std::size_t order;
  const char* name;
  std::function<GroupPtr()> make;
};

const std::vector<NonabelianEntry>& nonabelian_simple_groups() {
  static const std::vector<NonabelianEntry> entries{
      {60, "A5", [] { return alternating_group(5); }},
      {168, "PSL27",
       [] { return fano_collineations(); }},
      {360, "A6", [] { return alternating_group(6); }},
      {504, "PSL(2,8)", [] { return projective_special_linear("PSL(2,8)", 2, 2, 3); }},
      {660, "PSL(2,11)", [] { return projective_special_linear("PSL(2,11)", 2, 11, 1); }},
      {1092, "PSL(2,13)", [] { return projective_special_linear("PSL(2,13)", 2, 13, 1); }},
      {2448, "PSL(2,17)", [] { return projective_special_linear("PSL(2,17)", 2, 17, 1); }},
      {2520, "A7", [] { return alternating_group(7); }},
      {3420, "PSL(2,19)", [] { return projective_special_linear("PSL(2,19)", 2, 19, 1); }},
      {4080, "PSL(2,16)", [] { return projective_special_linear("PSL(2,16)", 2, 2, 4); }},
      {5616, "PSL(3,3)", [] { return projective_special_linear("PSL(3,3)", 3, 3, 1); }},
      {6048, "PSU(3,3)", [] { return projective_special_unitary_3_3(); }},
      {6072, "PSL(2,23)", [] { return projective_special_linear("PSL(2,23)", 2, 23, 1); }},
      {7800, "PSL(2,25)", [] { return projective_special_linear("PSL(2,25)", 2, 5, 2); }},
      {7920, "M11", [] { return mathieu_11(); }},
      {9828, "PSL(2,27)", [] { return projective_special_linear("PSL(2,27)", 2, 3, 3); }},
  };
  return entries;
}

std::size_t parse_size(std::string_view text, std::string_view spec) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw std::invalid_argument("malformed group spec: '" + std::string(spec) + "'");
  }
  return value;
}

}  // namespace

Permutation parse_cycles(std::string_view cycles, std::size_t degree) {
  Permutation perm(degree);
  for (std::size_t i = 0; i < degree; ++i) perm[i] = static_cast<std::uint8_t>(i);
  std::vector<std::size_t> cycle;
  std::string number;
  const auto flush_number = [&] {
    if (number.empty()) return;
    const std::size_t point = std::stoul(number);
    if (point < 1 || point > degree) throw std::invalid_argument("cycle point out of range");
    cycle.push_back(point - 1);
    number.clear();
  };
  for (const char ch : cycles) {
    if (ch >= '0' && ch <= '9') {
      number.push_back(ch);
    } else if (ch == ' ' || ch == ',') {
      flush_number();
    } else if (ch == '(') {
      cycle.clear();
    } else if (ch == ')') {
      flush_number();
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        perm[cycle[i]] = static_cast<std::uint8_t>(cycle[(i + 1) % cycle.size()]);
      }
      cycle.clear();
    } else {
      throw std::invalid_argument("bad character in cycle notation");
    }
  }
  return perm;
}

GroupPtr permutation_group(std::string name, std::size_t degree,
                           std::span<const Permutation> generators) {
  if (degree == 0 || degree > 255) throw std::invalid_argument("unsupported permutation degree");
  Permutation identity(degree);
  for (std::size_t i = 0; i < degree; ++i) identity[i] = static_cast<std::uint8_t>(i);

  // BFS over the right Cayley graph. parent[x] * gens[via[x]] == x, so the
  // table can be filled row by row without hashing: a*x = (a*parent[x])*s.
  std::vector<Permutation> elements{identity};
  std::vector<std::size_t> parent{0}, via{0};
  std::unordered_map<std::string, std::size_t> index{{perm_key(identity), 0}};
  std::vector<Permutation> gens;
  for (const auto& g : generators) {
    if (g.size() != degree) throw std::invalid_argument("generator has wrong degree");
    if (g != identity) gens.push_back(g);
  }
  std::vector<std::vector<std::size_t>> right(gens.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Permutation y = compose(elements[i], gens[s]);
      auto [it, inserted] = index.emplace(perm_key(y), elements.size());
      if (inserted) {
        if (elements.size() >= FiniteGroup::kMaxOrder) {
          throw std::invalid_argument("group order exceeds cap of " +
                                      std::to_string(FiniteGroup::kMaxOrder));
        }
        elements.push_back(std::move(y));
        parent.push_back(i);
        via.push_back(s);
      }
      right[s].push_back(it->second);
    }
  }

  const std::size_t order = elements.size();
  std::vector<Element> table(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    table[a * order] = Element{static_cast<std::uint16_t>(a)};
    for (std::size_t x = 1; x < order; ++x) {
      const std::size_t prefix = table[a * order + parent[x]].index;
      table[a * order + x] = Element{static_cast<std::uint16_t>(right[via[x]][prefix])};
    }
  }
  return std::make_shared<const FiniteGroup>(std::move(name), order, std::move(table));
}

GroupPtr build_group(std::string_view spec) {
  for (const auto& entry : nonabelian_simple_groups()) {
    if (spec == entry.name) return entry.make();
  }
  if (spec.size() >= 2 && spec.front() == 'C') {
    const std::size_t q = parse_size(spec.substr(1), spec);
    if (q < 2) throw std::invalid_argument("cyclic group must be nontrivial: '" + std::string(spec) + "'");
    if (q > FiniteGroup::kMaxOrder) {
      throw std::invalid_argument("group order exceeds cap of " +
                                  std::to_string(FiniteGroup::kMaxOrder));
    }
    return cyclic_group(q);
  }
  if (spec.size() >= 2 && spec.front() == 'A') {
    const std::size_t m = parse_size(spec.substr(1), spec);
    if (m < 3 || m > 7) throw std::invalid_argument("alternating degree must be 3..7");
    return alternating_group(m);
  }
  throw std::invalid_argument("malformed group spec: '" + std::string(spec) + "'");
}

std::vector<CatalogEntry> catalog_entries(std::size_t max_order) {
  if (max_order < 2 || max_order > FiniteGroup::kMaxOrder) {
    throw std::out_of_range("catalog bound must be in [2, " +
                            std::to_string(FiniteGroup::kMaxOrder) + "]");
  }
  std::vector<CatalogEntry> out;
  auto nonabelian = nonabelian_simple_groups().begin();
  const auto end = nonabelian_simple_groups().end();
  for (std::size_t order = 2; order <= max_order; ++order) {
    if (is_prime(order)) out.push_back({"C" + std::to_string(order), order, true});
    for (; nonabelian != end && nonabelian->order == order; ++nonabelian) {
      out.push_back({nonabelian->name, order, false});
    }
  }
  return out;
}

std::vector<GroupPtr> simple_group_catalog(std::size_t max_order) {
  std::vector<GroupPtr> out;
  for (const auto& entry : catalog_entries(max_order)) out.push_back(entry.build());
  return out;
}

}  // namespace nacoh
