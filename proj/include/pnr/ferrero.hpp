#pragma once

// Planar nearrings from Ferrero pairs.
//
// Given a fixed-point-free automorphism group Phi of (N,+), a set R of orbit
// representatives and a subset M of R, every nonzero a factors uniquely as
// a = r_a phi_a, and
//
//     a * b = 0           if b = 0 or r_b in M
//     a * b = a phi_b     otherwise.

#include <optional>
#include <string>
#include <vector>

#include "pnr/group.hpp"
#include "pnr/nearfield.hpp"

namespace pnr {

class FerreroPair {
 public:
  /// Throws ConstructionError unless phi acts fixed point freely on group with
  /// -id + phi bijective for every non-identity phi.
  FerreroPair(FiniteGroup group, AutomorphismGroup phi);

  const FiniteGroup& group() const { return group_; }
  const AutomorphismGroup& phi() const { return phi_; }

 private:
  FiniteGroup group_;
  AutomorphismGroup phi_;
};

/// R (one element per nonzero orbit, in caller order) and M (subset of R).
struct RepChoice {
  std::vector<Element> reps;
  std::vector<Element> zero_reps;

  bool operator==(const RepChoice&) const = default;
};

/// a = rep . phi[phi_index]
struct Factor {
  Element rep = 0;
  int phi_index = 0;

  bool operator==(const Factor&) const = default;
};

/// The Ferrero data a nearring was built from (or recovered from its tables).
struct Provenance {
  AutomorphismGroup phi;
  RepChoice choice;
  /// One entry per element; entry 0 is unused.
  std::vector<Factor> factor;
  /// Orbits sorted by least member, {0} first.
  std::vector<Orbit> orbits;
  /// Index into `orbits` for every element.
  std::vector<int> orbit_of;
  /// Per element: lies in M Phi.
  std::vector<char> zero_multiplier;
};

class PlanarNearring {
 public:
  /// Tables only. Provenance is recovered when the tables come from a Ferrero
  /// pair; otherwise has_provenance() is false. No planarity is asserted.
  PlanarNearring(FiniteGroup additive, CayleyTable mul);
  PlanarNearring(FiniteGroup additive, CayleyTable mul, Provenance meta);

  int order() const { return additive_.order(); }
  const FiniteGroup& additive() const { return additive_; }
  const CayleyTable& mul_table() const { return mul_; }

  Element add(Element a, Element b) const { return additive_.add(a, b); }
  Element sub(Element a, Element b) const { return additive_.sub(a, b); }
  Element neg(Element a) const { return additive_.neg(a); }
  Element mul(Element a, Element b) const { return mul_(a, b); }

  bool has_provenance() const { return meta_.has_value(); }
  /// Throws ArgumentError when absent.
  const Provenance& provenance() const;

 private:
  FiniteGroup additive_;
  CayleyTable mul_;
  std::optional<Provenance> meta_;
};

/// Throws ConstructionError for a RepChoice that misses or double-covers an orbit,
/// or whose M is not a subset of R.
PlanarNearring construct(const FerreroPair& fp, const RepChoice& rc);

/// Ferrero data read back from a multiplication table: Phi is the set of maps
/// x -> x*b for non-zero-multipliers b, representatives are the right
/// identities, and zero-multiplier orbits are represented by their least
/// element. Nullopt when the tables are not of Ferrero form.
std::optional<Provenance> recover_provenance(const FiniteGroup& additive, const CayleyTable& mul);

/// Unique (r_a, phi_a) with a = r_a phi_a. Throws ArgumentError for a = 0.
Factor factorize(const PlanarNearring& n, Element a);

struct MultiplierClasses {
  std::vector<ElementSet> classes;
  std::vector<int> class_of;
};

/// Partition by equality of multiplication-table columns, classes ordered by least member.
MultiplierClasses multiplier_classes(const PlanarNearring& n);

enum class PlanarityMode {
  /// Exhaustive up to order 32, Ferrero preconditions beyond.
  automatic,
  exhaustive,
};

struct PlanarityWitness {
  Element a, b, c;
  int solutions;
};

struct PlanarityResult {
  bool planar = false;
  bool by_construction = false;
  int classes = 0;
  std::optional<PlanarityWitness> witness;
  std::string reason;
};

/// Largest order checked exhaustively in automatic mode.
inline constexpr int kExhaustivePlanarityLimit = 32;

PlanarityResult is_planar(const PlanarNearring& n, PlanarityMode mode = PlanarityMode::automatic);

/// All e with x*e = x for every x.
ElementSet right_identities(const PlanarNearring& n);

/// First violated nearring axiom (right distributivity, associativity, zero symmetry).
std::optional<std::string> nearring_axiom_violation(const PlanarNearring& n);

/// A nearfield viewed as a planar nearring (Phi = multiplicative group).
PlanarNearring as_nearring(const Nearfield& f);

/// Phi as generated by the given permutations, checked to be automorphisms of g.
AutomorphismGroup automorphisms_generated_by(const FiniteGroup& g, std::span<const Permutation> gens);

/// Permutation x -> -x.  Only an automorphism for abelian groups.
Permutation negation_map(const FiniteGroup& g);

}  // namespace pnr
