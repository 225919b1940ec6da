#pragma once

// Finite fields and the proper nearfield of order 9.
//
// Element encoding for prime-power fields: the polynomial c0 + c1 x + ... is
// stored at index c0 + c1 p + c2 p^2 + ..., so the additive group of the
// order-9 field has the same table as catalog group C3xC3.

#include <optional>
#include <string>
#include <vector>

#include "pnr/group.hpp"

namespace pnr {

class Nearfield {
 public:
  /// Validates every nearfield axiom by exhaustion; throws ValidationError.
  Nearfield(std::string name, CayleyTable add, CayleyTable mul);

  int order() const { return add_.size(); }
  const std::string& name() const { return name_; }
  Element one() const { return one_; }

  Element add(Element a, Element b) const { return add_(a, b); }
  Element mul(Element a, Element b) const { return mul_(a, b); }
  Element neg(Element a) const { return group_.neg(a); }
  Element inverse(Element a) const { return inverse_[static_cast<std::size_t>(a)]; }

  const CayleyTable& add_table() const { return add_; }
  const CayleyTable& mul_table() const { return mul_; }
  const FiniteGroup& additive_group() const { return group_; }

  /// Left distributivity holds everywhere (i.e. this is a field).
  bool is_field() const;

 private:
  std::string name_;
  CayleyTable add_;
  CayleyTable mul_;
  FiniteGroup group_;
  Element one_ = 1;
  std::vector<Element> inverse_;
};

/// First violated nearfield axiom, or nullopt.
std::optional<std::string> nearfield_axiom_violation(const CayleyTable& add, const CayleyTable& mul);

/// Finite field of prime-power order q <= 16 (q in {2,3,4,5,7,8,9,11,13,16}).
/// Reduction polynomials: q=4 x^2+x+1, q=8 x^3+x+1, q=9 x^2+1, q=16 x^4+x+1.
Nearfield make_field(int q);

/// Dickson nearfield of order 9 on the additive group of make_field(9):
/// a o b = a b if b is a nonzero square, a^3 b otherwise.
Nearfield make_dickson_nearfield_9();

/// Elements d with d(a+b) = da + db for all a, b.
ElementSet kern(const Nearfield& f);

/// {0} together with the nonzero elements commuting with everything.
ElementSet multiplicative_centre(const Nearfield& f);

/// Bijections preserving both + and *, found by filtering additive automorphisms.
std::vector<Permutation> nearfield_automorphisms(const Nearfield& f);

/// Multiplicative order of a nonzero element.
int multiplicative_order(const Nearfield& f, Element a);

/// A triple (d, a, b) with d(a+b) != da + db, if one exists.
struct DistributivityWitness {
  Element d, a, b;
};
std::optional<DistributivityWitness> left_distributivity_failure(const Nearfield& f);

}  // namespace pnr
