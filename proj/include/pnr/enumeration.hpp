#pragma once

// Isomorphism-reduced enumeration of planar nearrings over the group catalog.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pnr/ferrero.hpp"

namespace pnr {

/// Isomorphism-invariant signature: order, |D|, |zero multipliers|, number of
/// multiplier classes, then the sorted multiset of per-element profiles.
struct Fingerprint {
  std::vector<std::int64_t> data;

  /// 16 hex digits (FNV-1a over `data`).
  std::string digest() const;

  auto operator<=>(const Fingerprint&) const = default;
  bool operator==(const Fingerprint&) const = default;
};

Fingerprint fingerprint(const PlanarNearring& n);

/// A bijection preserving + and *, or nullopt. Searches additive isomorphisms
/// with per-element profile pruning.
std::optional<Permutation> nearrings_isomorphic(const PlanarNearring& a, const PlanarNearring& b);

/// Every fixed-point-free subgroup of Aut(g), including the trivial one, one
/// per conjugacy class in Aut(g), ordered by (size, canonical element set).
std::vector<AutomorphismGroup> fpf_automorphism_groups(const FiniteGroup& g);

enum class EnumerationFilter { all, nontrivial_distributive };

std::string to_string(EnumerationFilter f);
EnumerationFilter parse_filter(std::string_view text);

struct IsoClass {
  PlanarNearring canonical;
  Fingerprint fingerprint;
  /// Constructions (group, Phi, R, M) that landed in this class.
  int members_found = 0;
  std::string group_name;
  int phi_order = 0;
  int distributive_size = 0;
  int gc_case = 0;
};

/// For each catalog group of order 2..max_order, each conjugacy class of fpf
/// Phi, every R and every M subset of R: construct, keep the planar ones that
/// pass the filter, and reduce up to nearring isomorphism. Deterministic for any
/// number of worker threads.
std::vector<IsoClass> enumerate_planar_nearrings(int max_order, EnumerationFilter filter, int jobs = 1);

/// The planar nearring on C_{p^2} with Phi the order-(p-1) unit subgroup, the
/// orbit p Z_{p^2} of zero multipliers (representative p) and the remaining
/// representatives forming the coset (p-1) + p Z_{p^2}. p in {3,5,7,11}.
PlanarNearring zp2_family(int p);

}  // namespace pnr
