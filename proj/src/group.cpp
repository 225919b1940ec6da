#include "pnr/group.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "pnr/error.hpp"

namespace pnr {

namespace {

std::size_t idx(Element x) { return static_cast<std::size_t>(x); }

CayleyTable table_from(int n, auto op) {
  CayleyTable t(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) t(a, b) = static_cast<Element>(op(a, b));
  return t;
}

// D_{2m}: index i + m*j for r^i s^j, with s r = r^{-1} s.
FiniteGroup dihedral_group(int m) {
  return FiniteGroup("D" + std::to_string(2 * m), table_from(2 * m, [m](Element a, Element b) {
                       int i = a % m, j = a / m, k = b % m, l = b / m;
                       int r = ((j == 0 ? i + k : i - k) % m + m) % m;
                       return r + m * ((j + l) % 2);
                     }));
}

// Dicyclic group of order 4m: index i + 2m*j for a^i x^j, x^2 = a^m, x a x^-1 = a^-1.
FiniteGroup dicyclic_group(int m, std::string name) {
  const int n2 = 2 * m;
  return FiniteGroup(std::move(name), table_from(4 * m, [m, n2](Element a, Element b) {
                       int i = a % n2, j = a / n2, k = b % n2, l = b / n2;
                       if (j == 0) return (i + k) % n2 + n2 * l;
                       int e = ((i - k) % n2 + n2) % n2;
                       if (l == 0) return e + n2;
                       return (e + m) % n2;
                     }));
}

// Permutation group generated by `gens` on `points` letters; sum means "left then right".
FiniteGroup permutation_group(std::string name, int points, const std::vector<Permutation>& gens) {
  Permutation id(static_cast<std::size_t>(points));
  std::iota(id.begin(), id.end(), 0);
  std::set<Permutation> seen{id};
  std::deque<Permutation> queue{id};
  while (!queue.empty()) {
    Permutation p = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Permutation q(p.size());
      for (std::size_t x = 0; x < p.size(); ++x) q[x] = g[idx(p[x])];
      if (seen.insert(q).second) queue.push_back(q);
    }
  }
  std::vector<Permutation> elems(seen.begin(), seen.end());
  std::map<Permutation, Element> pos;
  for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<Element>(i);
  const int n = static_cast<int>(elems.size());
  return FiniteGroup(std::move(name), table_from(n, [&](Element a, Element b) {
                       const auto& p = elems[idx(a)];
                       const auto& q = elems[idx(b)];
                       Permutation r(p.size());
                       for (std::size_t x = 0; x < p.size(); ++x) r[x] = q[idx(p[x])];
                       return pos.at(r);
                     }));
}

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// "C4", "C2xC2xC3" -> factor orders; nullopt if not of that shape.
std::optional<std::vector<int>> parse_cyclic_product(std::string_view name) {
  std::vector<int> factors;
  std::size_t start = 0;
  while (start <= name.size()) {
    std::size_t end = name.find('x', start);
    if (end == std::string_view::npos) end = name.size();
    std::string_view part = name.substr(start, end - start);
    if (part.size() < 2 || part[0] != 'C') return std::nullopt;
    auto v = parse_int(part.substr(1));
    if (!v || *v < 1) return std::nullopt;
    factors.push_back(*v);
    start = end + 1;
  }
  if (factors.empty()) return std::nullopt;
  return factors;
}

const std::map<int, std::vector<std::string>>& catalog() {
  static const std::map<int, std::vector<std::string>> names = {
      {1, {"C1"}},
      {2, {"C2"}},
      {3, {"C3"}},
      {4, {"C4", "C2xC2"}},
      {5, {"C5"}},
      {6, {"C6", "S3"}},
      {7, {"C7"}},
      {8, {"C8", "C2xC4", "C2xC2xC2", "D8", "Q8"}},
      {9, {"C9", "C3xC3"}},
      {10, {"C10", "D10"}},
      {11, {"C11"}},
      {12, {"C12", "C2xC6", "A4", "D12", "Dic12"}},
      {13, {"C13"}},
      {14, {"C14", "D14"}},
      {15, {"C15"}},
  };
  return names;
}

}  // namespace

std::optional<std::string> group_axiom_violation(const CayleyTable& add) {
  const int n = add.size();
  if (n < 1) return "empty table";
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (add(a, b) < 0 || add(a, b) >= n) return "table entry out of range";
  for (Element a = 0; a < n; ++a)
    if (add(0, a) != a || add(a, 0) != a) {
      std::ostringstream os;
      os << "0 is not an identity at " << a;
      return os.str();
    }
  for (Element a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (Element b = 0; b < n && !has_inverse; ++b) has_inverse = add(a, b) == 0 && add(b, a) == 0;
    if (!has_inverse) {
      std::ostringstream os;
      os << "no inverse for " << a;
      return os.str();
    }
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      for (Element c = 0; c < n; ++c)
        if (add(add(a, b), c) != add(a, add(b, c))) {
          std::ostringstream os;
          os << "associativity fails at (" << a << ',' << b << ',' << c << ')';
          return os.str();
        }
  return std::nullopt;
}

FiniteGroup::FiniteGroup(std::string name, CayleyTable add) : name_(std::move(name)), add_(std::move(add)) {
  if (auto v = group_axiom_violation(add_)) throw ValidationError("group " + name_ + ": " + *v);
  const int n = add_.size();
  neg_.assign(idx(n), 0);
  orders_.assign(idx(n), 0);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b)
      if (add_(a, b) == 0) neg_[idx(a)] = b;
    int k = 1;
    for (Element x = a; x != 0; x = add_(x, a)) ++k;
    orders_[idx(a)] = k;
    for (Element b = 0; b < n; ++b) abelian_ = abelian_ && add_(a, b) == add_(b, a);
  }

  // Greedy generating set: repeatedly take the largest-order element outside
  // the current subgroup.
  std::vector<Element> by_order(idx(n));
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Element a, Element b) { return orders_[idx(a)] > orders_[idx(b)]; });
  ElementSet span{0};
  while (static_cast<int>(span.size()) < n) {
    for (Element a : by_order) {
      if (!std::binary_search(span.begin(), span.end(), a)) {
        generators_.push_back(a);
        break;
      }
    }
    span = subgroup_generated(*this, generators_);
  }
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw ArgumentError("cyclic group order must be positive");
  return FiniteGroup("C" + std::to_string(n), table_from(n, [n](Element a, Element b) { return (a + b) % n; }));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int m = h.order();
  return FiniteGroup(g.name() + "x" + h.name(), table_from(g.order() * m, [&](Element a, Element b) {
                       return g.add(a / m, b / m) * m + h.add(a % m, b % m);
                     }));
}

FiniteGroup catalog_group(int order, std::string_view name) {
  auto miss = [&] {
    return CatalogMiss("no group named '" + std::string(name) + "' of order " + std::to_string(order) +
                       " in the catalog");
  };
  if (auto factors = parse_cyclic_product(name)) {
    int prod = 1;
    for (int f : *factors) prod *= f;
    if (prod != order) throw miss();
    // Only the cyclic group is a legal name above order 15 (for the C_{p^2} family).
    if (order > 15 && factors->size() != 1) throw miss();
    FiniteGroup g = cyclic_group(factors->front());
    for (std::size_t i = 1; i < factors->size(); ++i) g = direct_product(g, cyclic_group((*factors)[i]));
    return g;
  }
  if (order == 6 && name == "S3") {
    FiniteGroup g = dihedral_group(3);
    return FiniteGroup("S3", g.table());
  }
  if (order == 8 && name == "D8") return dihedral_group(4);
  if (order == 10 && name == "D10") return dihedral_group(5);
  if (order == 12 && name == "D12") return dihedral_group(6);
  if (order == 14 && name == "D14") return dihedral_group(7);
  if (order == 8 && name == "Q8") return dicyclic_group(2, "Q8");
  if (order == 12 && name == "Dic12") return dicyclic_group(3, "Dic12");
  if (order == 12 && name == "A4") return permutation_group("A4", 4, {{1, 2, 0, 3}, {1, 0, 3, 2}});
  throw miss();
}

FiniteGroup catalog_group(std::string_view name) {
  if (auto factors = parse_cyclic_product(name)) {
    int prod = 1;
    for (int f : *factors) prod *= f;
    return catalog_group(prod, name);
  }
  for (const auto& [order, names] : catalog())
    if (std::find(names.begin(), names.end(), name) != names.end()) return catalog_group(order, name);
  throw CatalogMiss("no group named '" + std::string(name) + "' in the catalog");
}

std::vector<std::string> catalog_names(int order) {
  auto it = catalog().find(order);
  if (it == catalog().end()) throw CatalogMiss("catalog covers orders 1..15, not " + std::to_string(order));
  return it->second;
}

bool is_automorphism(const FiniteGroup& g, const Permutation& map) {
  const int n = g.order();
  if (static_cast<int>(map.size()) != n || map[0] != 0) return false;
  std::vector<char> hit(idx(n), 0);
  for (Element x : map) {
    if (x < 0 || x >= n || hit[idx(x)]) return false;
    hit[idx(x)] = 1;
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (map[idx(g.add(a, b))] != g.add(map[idx(a)], map[idx(b)])) return false;
  return true;
}

namespace detail {

std::optional<Permutation> extend_homomorphism(const FiniteGroup& g, const FiniteGroup& h,
                                               std::span<const Element> images) {
  const auto& gens = g.generators();
  const int n = g.order();
  Permutation map(idx(n), -1);
  map[0] = 0;
  std::deque<Element> queue{0};
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Element y = g.add(x, gens[i]);
      Element img = h.add(map[idx(x)], images[i]);
      if (map[idx(y)] < 0) {
        map[idx(y)] = img;
        queue.push_back(y);
      } else if (map[idx(y)] != img) {
        return std::nullopt;
      }
    }
  }
  std::vector<char> hit(idx(n), 0);
  for (Element y : map) {
    if (y < 0 || hit[idx(y)]) return std::nullopt;
    hit[idx(y)] = 1;
  }
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (map[idx(g.add(a, b))] != h.add(map[idx(a)], map[idx(b)])) return std::nullopt;
  return map;
}

}  // namespace detail

std::vector<Permutation> group_isomorphisms(const FiniteGroup& g, const FiniteGroup& h) {
  return group_isomorphisms(g, h, [](Element, Element) { return true; });
}

AutomorphismGroup AutomorphismGroup::generated_by(int degree, std::span<const Permutation> generators) {
  AutomorphismGroup out;
  out.degree_ = degree;
  Permutation id(idx(degree));
  std::iota(id.begin(), id.end(), 0);
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != degree) throw ArgumentError("generator has wrong degree");
    std::vector<char> hit(idx(degree), 0);
    for (Element x : g) {
      if (x < 0 || x >= degree || hit[idx(x)]) throw ArgumentError("generator is not a permutation");
      hit[idx(x)] = 1;
    }
  }
  std::set<Permutation> seen{id};
  std::deque<Permutation> queue{id};
  while (!queue.empty()) {
    Permutation p = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      Permutation q(p.size());
      for (std::size_t x = 0; x < p.size(); ++x) q[x] = g[idx(p[x])];
      if (seen.insert(q).second) queue.push_back(std::move(q));
    }
  }
  out.elements_.assign(seen.begin(), seen.end());
  const std::size_t m = out.elements_.size();
  std::map<Permutation, int> pos;
  for (std::size_t i = 0; i < m; ++i) pos[out.elements_[i]] = static_cast<int>(i);
  out.identity_ = pos.at(id);
  out.compose_.assign(m * m, 0);
  out.inverse_.assign(m, 0);
  Permutation r(idx(degree));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t x = 0; x < idx(degree); ++x) r[x] = out.elements_[j][idx(out.elements_[i][x])];
      int k = pos.at(r);
      out.compose_[i * m + j] = k;
      if (k == out.identity_) out.inverse_[i] = static_cast<int>(j);
    }
  }
  return out;
}

std::optional<int> AutomorphismGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return std::nullopt;
  return static_cast<int>(it - elements_.begin());
}

AutomorphismGroup automorphism_group(const FiniteGroup& g) {
  auto all = group_isomorphisms(g, g);
  return AutomorphismGroup::generated_by(g.order(), all);
}

bool is_fixed_point_free(const AutomorphismGroup& phi, const FiniteGroup& g) {
  for (int i = 0; i < phi.size(); ++i) {
    if (i == phi.identity_index()) continue;
    for (Element x = 1; x < g.order(); ++x)
      if (phi.apply(x, i) == x) return false;
  }
  return true;
}

bool minus_id_plus_phi_bijective(const Permutation& phi, const FiniteGroup& g) {
  std::vector<char> hit(idx(g.order()), 0);
  for (Element x = 0; x < g.order(); ++x) {
    Element y = g.add(g.neg(x), phi[idx(x)]);
    if (hit[idx(y)]) return false;
    hit[idx(y)] = 1;
  }
  return true;
}

std::vector<Orbit> orbits(const AutomorphismGroup& phi, const FiniteGroup& g) {
  std::vector<Orbit> out;
  std::vector<char> seen(idx(g.order()), 0);
  for (Element x = 0; x < g.order(); ++x) {
    if (seen[idx(x)]) continue;
    Orbit o{x, {}};
    for (int i = 0; i < phi.size(); ++i) o.members.push_back(phi.apply(x, i));
    std::sort(o.members.begin(), o.members.end());
    o.members.erase(std::unique(o.members.begin(), o.members.end()), o.members.end());
    for (Element y : o.members) seen[idx(y)] = 1;
    out.push_back(std::move(o));
  }
  return out;
}

AutomorphismGroup centre_of(const AutomorphismGroup& phi) {
  std::vector<Permutation> central;
  for (int i = 0; i < phi.size(); ++i) {
    bool commutes = true;
    for (int j = 0; j < phi.size() && commutes; ++j) commutes = phi.compose(i, j) == phi.compose(j, i);
    if (commutes) central.push_back(phi[i]);
  }
  return AutomorphismGroup::generated_by(phi.degree(), central);
}

ElementSet subgroup_generated(const FiniteGroup& g, std::span<const Element> gens) {
  std::vector<char> in(idx(g.order()), 0);
  in[0] = 1;
  std::deque<Element> queue{0};
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (Element s : gens) {
      Element y = g.add(x, s);
      if (!in[idx(y)]) {
        in[idx(y)] = 1;
        queue.push_back(y);
      }
    }
  }
  ElementSet out;
  for (Element x = 0; x < g.order(); ++x)
    if (in[idx(x)]) out.push_back(x);
  return out;
}

bool is_subgroup(const FiniteGroup& g, std::span<const Element> set) {
  std::vector<char> in(idx(g.order()), 0);
  for (Element x : set) {
    if (x < 0 || x >= g.order()) return false;
    in[idx(x)] = 1;
  }
  if (!in[0]) return false;
  for (Element a : set)
    for (Element b : set)
      if (!in[idx(g.sub(a, b))]) return false;
  return true;
}

bool is_normal_subgroup(const FiniteGroup& g, std::span<const Element> set) {
  if (!is_subgroup(g, set)) return false;
  std::vector<char> in(idx(g.order()), 0);
  for (Element x : set) in[idx(x)] = 1;
  for (Element n = 0; n < g.order(); ++n)
    for (Element k : set)
      if (!in[idx(g.sub(g.add(n, k), n))]) return false;
  return true;
}

std::vector<ElementSet> all_subgroups(const FiniteGroup& g) {
  std::set<ElementSet> found;
  std::deque<ElementSet> queue;
  for (Element x = 0; x < g.order(); ++x) {
    const Element gen[] = {x};
    ElementSet s = subgroup_generated(g, gen);
    if (found.insert(s).second) queue.push_back(s);
  }
  // Joins of known subgroups with cyclic ones reach every subgroup.
  while (!queue.empty()) {
    ElementSet s = queue.front();
    queue.pop_front();
    for (Element x = 0; x < g.order(); ++x) {
      if (std::binary_search(s.begin(), s.end(), x)) continue;
      std::vector<Element> gens = s;
      gens.push_back(x);
      ElementSet t = subgroup_generated(g, gens);
      if (found.insert(t).second) queue.push_back(std::move(t));
    }
  }
  std::vector<ElementSet> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace pnr
