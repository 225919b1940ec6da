#pragma once

// Block designs from planar nearrings, and the additively-closed-orbits check.

#include <optional>
#include <string>
#include <vector>

#include "pnr/ferrero.hpp"
#include "pnr/nearfield.hpp"

namespace pnr {

/// Distinct sets a Phi* = a Phi + {0} for nonzero a, sorted. Needs provenance.
std::vector<ElementSet> basic_blocks(const PlanarNearring& n);

struct Imbalance {
  Element x = 0, y = 0;
  int count = 0;
  /// Count of the first pair (0, 1), which the witness disagrees with.
  int reference = 0;
};

struct BlockDesign {
  int v = 0;
  std::vector<ElementSet> basic;
  /// Distinct translates B + b, sorted.
  std::vector<ElementSet> blocks;
  /// Translates generated before removing duplicates.
  int translates_generated = 0;
  /// pair_count[x * v + y] for x != y; symmetric, zero diagonal.
  std::vector<int> pair_count;

  int b() const { return static_cast<int>(blocks.size()); }
  /// Common block size, or 0 if sizes differ.
  int k = 0;
  /// Common replication number, or 0 if it varies.
  int r = 0;
  std::optional<int> lambda;
  std::optional<Imbalance> imbalance;
  bool degenerate = false;
  bool repeated_blocks = false;

  bool balanced() const { return lambda.has_value(); }
  int pairs(Element x, Element y) const { return pair_count[static_cast<std::size_t>(x * v + y)]; }
};

BlockDesign block_design(const PlanarNearring& n);

/// Header "v b k", then "lambda <l>" or "unbalanced <x> <y> <count>", then one
/// block per line.
std::string export_design(const BlockDesign& d);

struct VectorSpaceWitness {
  /// Generator of the scalar field: the orbit a Phi* with a in R \ M.
  Element a = 0;
  /// Scalar field elements, 0 first, then a Phi in index order.
  std::vector<Element> scalars;
  Nearfield field;
  int dimension = 0;
  std::vector<Element> basis;
  /// Empty when every vector-space axiom holds under v . (a phi) = v phi.
  std::string axiom_failure;
};

struct OrbitClosureReport {
  bool all_closed = false;
  /// First orbit a Phi* (in representative order) not closed under +, with x + y outside it.
  std::optional<ElementSet> open_orbit;
  Element x = 0, y = 0;
  bool abelian = false;
  std::optional<VectorSpaceWitness> vector_space;
  /// Why no vector-space witness was attempted, if none.
  std::string note;
};

OrbitClosureReport orbits_additively_closed(const PlanarNearring& n);

}  // namespace pnr
