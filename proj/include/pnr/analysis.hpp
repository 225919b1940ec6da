#pragma once

// Distributive elements, zero multipliers, ideals, the generalized centre and
// the structural checks tying them together. Everything is computed by
// exhaustion over the tables; the Ferrero data (orbits, Phi, factorization)
// is only used to state predictions, never to compute the sets themselves.

#include <optional>
#include <string>
#include <vector>

#include "pnr/ferrero.hpp"
#include "pnr/nearfield.hpp"

namespace pnr {

/// D(N) = {d : d(a+b) = da + db for all a, b}.
ElementSet distributive_elements(const PlanarNearring& n);

/// {0} together with every b whose multiplication column is zero.
ElementSet zero_multipliers(const PlanarNearring& n);

enum class IdealKind { not_subgroup, not_normal, not_ideal, right_only, left_only, two_sided };

std::string to_string(IdealKind k);

struct IdealReport {
  IdealKind kind = IdealKind::not_subgroup;
  /// Human-readable counterexample for the first failing condition.
  std::string witness;
};

IdealReport is_ideal(const PlanarNearring& n, std::span<const Element> set);

struct GCReport {
  ElementSet gc;
  /// 1: D(N) meets only zero-multiplier orbits; 2: several orbits, one not a
  /// zero multiplier; 3: exactly one orbit, not a zero multiplier; 4: D(N) = {0}.
  int case_tag = 4;
  /// Case 3 only: (a Z(Phi)*, a Phi*) with a the orbit's representative.
  std::optional<std::pair<ElementSet, ElementSet>> bounds;
  /// Exact equality predicted for this case and additive group, if any.
  std::optional<ElementSet> predicted;
};

/// Brute-forced GC(N) with its case tag. Throws TheoremViolation when the
/// brute-forced set contradicts the prediction for its case.
GCReport generalized_centre(const PlanarNearring& n);

/// Unchecked variant used by the lemma suite, which reports disagreement itself.
GCReport generalized_centre_unchecked(const PlanarNearring& n);
std::optional<std::string> gc_prediction_failure(const PlanarNearring& n, const GCReport& r);

struct SemidirectDecomposition {
  /// Zero multipliers.
  ElementSet kernel;
  /// d Phi* for a distributive non-zero-multiplier d, ordered by index.
  ElementSet complement;
  /// complement with its induced operations, re-indexed 0..|F|-1 in the order of `complement`.
  Nearfield field;
  /// action[f][k]: image of kernel[k] under phi_{complement[f]} (f >= 1), as a kernel index.
  std::vector<std::vector<int>> action;
  /// iso[k * |F| + f] = kernel[k] + complement[f]; a bijection onto N.
  std::vector<Element> iso;
};

struct SemidirectResult {
  std::optional<SemidirectDecomposition> decomposition;
  std::string reason;
};

/// N = K + F with (a,b)*(c,d) = (a phi_d, b phi_d) for d != 0 and 0 otherwise;
/// absent (with reason) when D(N) holds only zero multipliers. Throws
/// TheoremViolation if a candidate exists but the formula fails.
SemidirectResult semidirect_decomposition(const PlanarNearring& n);

enum class LemmaStatus { pass, fail, not_applicable };
std::string to_string(LemmaStatus s);

struct LemmaResult {
  std::string key;
  std::string title;
  LemmaStatus status = LemmaStatus::not_applicable;
  /// Failure witness, or the failed hypothesis for not_applicable.
  std::string detail;
};

struct LemmaReport {
  std::vector<LemmaResult> items;

  bool any_failure() const;
  const LemmaResult& at(std::string_view key) const;
};

/// Every structural result checked on n. Keys:
///   a   d Phi* additively closed for every distributive d
///   b   {phi : r_d phi in D(N)} is a subgroup containing Z(Phi)
///   c   d Phi* with the restricted product is a nearfield (d not a zero multiplier)
///   c0  d Phi* with d phi1 o d phi2 = d(phi1 phi2) is a nearfield (d a zero multiplier)
///   d   phi_{m+a} = phi_{a+m} = phi_a
///   e   zero multipliers form a two-sided ideal
///   f   at most one primary summand carries nonzero products
///   g   brute-forced GC(N) agrees with its case
///   h   semidirect decomposition and its multiplication formula
LemmaReport verify_lemma_suite(const PlanarNearring& n);

/// Sub-nearring on `members` (which must contain 0 and be closed under + and *),
/// re-indexed in the order given. Throws ValidationError if not a nearfield.
Nearfield induced_nearfield(const PlanarNearring& n, std::span<const Element> members, std::string name);

/// Orbit d Phi* with product d phi1 o d phi2 = d (phi1 phi2).
Nearfield orbit_nearfield(const PlanarNearring& n, Element d, std::string name);

/// Direct-sum decomposition of (N,+) into its Sylow subgroups, primes ascending.
/// Nullopt if the Sylow subsets do not form an internal direct sum.
std::optional<std::vector<std::pair<int, ElementSet>>> primary_decomposition(const FiniteGroup& g);

/// A subgroup H with H meet K = {0} and H + K = N, if one exists (exhaustive).
std::optional<ElementSet> find_complement(const FiniteGroup& g, std::span<const Element> k);

}  // namespace pnr
