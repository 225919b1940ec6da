#pragma once

// Finite nearvector spaces in component form: V = F^n with scalar action
//
//     (x_1, ..., x_n) . alpha = (x_1 psi_1(alpha), ..., x_n psi_n(alpha))
//
// where each psi_i is a multiplicative automorphism of F fixing 0. Vectors are
// indexed in base |F| with the first coordinate most significant.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pnr/analysis.hpp"
#include "pnr/ferrero.hpp"
#include "pnr/nearfield.hpp"

namespace pnr {

/// How a twist psi is given: identity, x -> x^k, or an explicit permutation of F.
struct Twist {
  enum class Kind { identity, power, explicit_map } kind = Kind::identity;
  int exponent = 1;
  Permutation map;

  static Twist identity() { return {}; }
  static Twist power(int k) { return {Kind::power, k, {}}; }
  static Twist explicit_map(Permutation p) { return {Kind::explicit_map, 1, std::move(p)}; }

  /// "id", "pow:<k>" or "map:<i0>,<i1>,...".
  static Twist parse(std::string_view text);
  std::string to_string() const;
};

class NearvectorSpace {
 public:
  NearvectorSpace(Nearfield field, std::vector<Permutation> twists);

  const Nearfield& field() const { return field_; }
  int dimension() const { return static_cast<int>(twists_.size()); }
  int size() const { return size_; }
  const Permutation& twist(int i) const { return twists_[static_cast<std::size_t>(i)]; }
  const FiniteGroup& additive() const { return group_; }

  std::vector<Element> coordinates(Element v) const;
  Element vector(std::span<const Element> coords) const;
  Element scale(Element v, Element alpha) const;

 private:
  Nearfield field_;
  std::vector<Permutation> twists_;
  FiniteGroup group_;
  int size_ = 1;
};

/// Validates each twist (bijective, fixes 0, multiplicative on nonzero
/// elements) and the resulting scalar action (additive, fixed point free).
/// Throws ValidationError naming a witness pair.
NearvectorSpace make_nearvector_space(const Nearfield& f, std::span<const Twist> twists);

/// Vectors x with: for all alpha, beta there is gamma with x alpha + x beta = x gamma.
ElementSet quasi_kernel(const NearvectorSpace& v);

struct RegularDecomposition {
  /// Blocks of component indices (0-based), each sorted, ordered by least index.
  std::vector<std::vector<int>> parts;
};

/// Components i, j share a block iff psi_j = psi_i followed by a nearfield automorphism.
RegularDecomposition regular_decomposition(const NearvectorSpace& v);

/// Phi = the scalar action of the nonzero scalars.
AutomorphismGroup scalar_action_group(const NearvectorSpace& v);

/// a * b = a . (b_coordinate). `zero_reps` picks one representative for every
/// orbit inside the kernel of the projection; empty means "least element of
/// each". Throws ArgumentError for a selection outside the kernel or that
/// misses/double-covers a kernel orbit.
PlanarNearring derived_planar_nearring(const NearvectorSpace& v, int coordinate,
                                       std::span<const Element> zero_reps = {});

/// Orbits of the scalar action lying inside the kernel of the projection.
std::vector<Orbit> kernel_orbits(const NearvectorSpace& v, int coordinate);

struct ConjectureBlock {
  std::vector<int> components;
  /// D intersected with the vectors supported on this block.
  ElementSet intersection;
  /// Vectors supported on the block with every coordinate in kern(F).
  ElementSet kern_power;
  /// Vectors supported on the block with coordinate i in the twisted kern of psi_i.
  ElementSet twisted_kern_power;
  bool matches_kern_power = false;
  bool matches_twisted_kern_power = false;
};

struct ConjectureReport {
  ElementSet distributive;
  RegularDecomposition decomposition;
  ElementSet kern;
  std::vector<ConjectureBlock> blocks;
  /// D equals the direct sum of its block intersections.
  bool splits = false;
  bool plain_reading_holds = false;
  bool twisted_reading_holds = false;
};

/// Elements x of F with x psi(a+b) = x psi(a) + x psi(b) for all a, b.
ElementSet twisted_kern(const Nearfield& f, const Permutation& psi);

ConjectureReport check_conjecture(const NearvectorSpace& v, int coordinate, std::span<const Element> zero_reps = {});

}  // namespace pnr
