#pragma once

// Finite groups as Cayley tables, their automorphisms and orbit structure.
//
// Elements are the indices 0..n-1 with 0 the identity. Group operation is
// written additively throughout, since every group here is the additive
// group of a nearring. Automorphisms act from the right: the image of x
// under phi is phi[x], and the product phi*psi means "phi first".

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pnr {

using Element = std::int32_t;
using Permutation = std::vector<Element>;
/// Sorted list of distinct elements.
using ElementSet = std::vector<Element>;

class CayleyTable {
 public:
  CayleyTable() = default;
  explicit CayleyTable(int n, Element fill = 0)
      : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill) {}

  int size() const { return n_; }

  Element operator()(Element a, Element b) const { return data_[index(a, b)]; }
  Element& operator()(Element a, Element b) { return data_[index(a, b)]; }

  std::span<const Element> row(Element a) const {
    return {data_.data() + static_cast<std::size_t>(a) * n_, static_cast<std::size_t>(n_)};
  }

  bool operator==(const CayleyTable&) const = default;

 private:
  std::size_t index(Element a, Element b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b);
  }

  int n_ = 0;
  std::vector<Element> data_;
};

/// First violated group axiom of an addition table, or nullopt. Checks closure,
/// identity 0, inverses and associativity by exhaustion.
std::optional<std::string> group_axiom_violation(const CayleyTable& add);

class FiniteGroup {
 public:
  /// Validates the table with group_axiom_violation; throws ValidationError.
  FiniteGroup(std::string name, CayleyTable add);

  int order() const { return add_.size(); }
  const std::string& name() const { return name_; }
  const CayleyTable& table() const { return add_; }

  Element add(Element a, Element b) const { return add_(a, b); }
  Element neg(Element a) const { return neg_[static_cast<std::size_t>(a)]; }
  /// a - b, i.e. a + (-b).
  Element sub(Element a, Element b) const { return add_(a, neg(b)); }

  int element_order(Element a) const { return orders_[static_cast<std::size_t>(a)]; }
  bool is_abelian() const { return abelian_; }

  /// Small generating set, chosen greedily by decreasing element order.
  const std::vector<Element>& generators() const { return generators_; }

 private:
  std::string name_;
  CayleyTable add_;
  std::vector<Element> neg_;
  std::vector<int> orders_;
  std::vector<Element> generators_;
  bool abelian_ = true;
};

FiniteGroup cyclic_group(int n);

/// Product with index (a, b) -> a * |H| + b, so the first factor is most significant.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// Groups of order 1..15, one entry per isomorphism class. Names follow the
/// usual conventions: C<n>, C<a>xC<b>, S3, D<2n>, Q8, Dic12, A4. Any product of
/// cyclic groups written C<a>xC<b>x... is also accepted when its order matches.
FiniteGroup catalog_group(int order, std::string_view name);

/// Canonical names of every isomorphism class of the given order (1..15).
std::vector<std::string> catalog_names(int order);

/// Lookup by name alone; the order is inferred.
FiniteGroup catalog_group(std::string_view name);

bool is_automorphism(const FiniteGroup& g, const Permutation& map);

/// Closed set of automorphisms, kept sorted lexicographically by map.
class AutomorphismGroup {
 public:
  /// Closure of the given permutations under composition. Each must be a
  /// bijection of 0..degree-1; additivity is the caller's concern.
  static AutomorphismGroup generated_by(int degree, std::span<const Permutation> generators);

  int size() const { return static_cast<int>(elements_.size()); }
  int degree() const { return degree_; }
  const Permutation& operator[](int i) const { return elements_[static_cast<std::size_t>(i)]; }
  const std::vector<Permutation>& elements() const { return elements_; }

  int identity_index() const { return identity_; }
  /// Index of "i then j".
  int compose(int i, int j) const { return compose_[static_cast<std::size_t>(i) * elements_.size() + static_cast<std::size_t>(j)]; }
  int inverse(int i) const { return inverse_[static_cast<std::size_t>(i)]; }
  std::optional<int> index_of(const Permutation& p) const;

  Element apply(Element x, int i) const { return elements_[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)]; }

  bool operator==(const AutomorphismGroup& o) const { return elements_ == o.elements_; }

 private:
  int degree_ = 0;
  int identity_ = 0;
  std::vector<Permutation> elements_;
  std::vector<int> compose_;
  std::vector<int> inverse_;
};

AutomorphismGroup automorphism_group(const FiniteGroup& g);

/// Every non-identity element fixes only 0.
bool is_fixed_point_free(const AutomorphismGroup& phi, const FiniteGroup& g);

/// x -> -x + x phi is a bijection of g.
bool minus_id_plus_phi_bijective(const Permutation& phi, const FiniteGroup& g);

struct Orbit {
  Element representative = 0;
  ElementSet members;

  bool operator==(const Orbit&) const = default;
};

/// All orbits including {0}, sorted by least member; representative = least member.
std::vector<Orbit> orbits(const AutomorphismGroup& phi, const FiniteGroup& g);

AutomorphismGroup centre_of(const AutomorphismGroup& phi);

/// Subgroup generated by the given elements.
ElementSet subgroup_generated(const FiniteGroup& g, std::span<const Element> gens);

bool is_subgroup(const FiniteGroup& g, std::span<const Element> set);
bool is_normal_subgroup(const FiniteGroup& g, std::span<const Element> set);

/// Every subgroup of g, sorted by (size, members).
std::vector<ElementSet> all_subgroups(const FiniteGroup& g);

/// Calls visit(map) for every additive isomorphism g -> h whose generator
/// images pass `admissible(x, y)`, in a fixed order, until visit returns true.
/// Returns whether some visit returned true.
template <typename Pred, typename Visit>
bool for_each_group_isomorphism(const FiniteGroup& g, const FiniteGroup& h, Pred admissible, Visit visit);

/// Additive isomorphisms g -> h mapping every x to some y with admissible(x, y).
template <typename Pred>
std::vector<Permutation> group_isomorphisms(const FiniteGroup& g, const FiniteGroup& h, Pred admissible);

std::vector<Permutation> group_isomorphisms(const FiniteGroup& g, const FiniteGroup& h);

namespace detail {
// Extends generator images to a map on all of g; nullopt when the images do
// not define a bijective homomorphism into h.
std::optional<Permutation> extend_homomorphism(const FiniteGroup& g, const FiniteGroup& h,
                                               std::span<const Element> images);
}  // namespace detail

template <typename Pred, typename Visit>
bool for_each_group_isomorphism(const FiniteGroup& g, const FiniteGroup& h, Pred admissible, Visit visit) {
  if (g.order() != h.order()) return false;
  const auto& gens = g.generators();
  std::vector<std::vector<Element>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Element y = 0; y < h.order(); ++y)
      if (h.element_order(y) == g.element_order(gens[i]) && admissible(gens[i], y)) candidates[i].push_back(y);

  std::vector<Element> images(gens.size());
  auto recurse = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == gens.size()) {
      auto m = detail::extend_homomorphism(g, h, images);
      return m && visit(*m);
    }
    for (Element y : candidates[depth]) {
      images[depth] = y;
      if (self(self, depth + 1)) return true;
    }
    return false;
  };
  return recurse(recurse, 0);
}

template <typename Pred>
std::vector<Permutation> group_isomorphisms(const FiniteGroup& g, const FiniteGroup& h, Pred admissible) {
  std::vector<Permutation> out;
  for_each_group_isomorphism(g, h, admissible, [&](const Permutation& m) {
    for (Element x = 0; x < g.order(); ++x)
      if (!admissible(x, m[static_cast<std::size_t>(x)])) return false;
    out.push_back(m);
    return false;
  });
  return out;
}

}  // namespace pnr
