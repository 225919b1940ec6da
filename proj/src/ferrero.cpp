#include "pnr/ferrero.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "pnr/error.hpp"

namespace pnr {

namespace {

std::size_t idx(Element x) { return static_cast<std::size_t>(x); }

std::string list_string(std::span<const Element> xs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << '}';
  return os.str();
}

}  // namespace

FerreroPair::FerreroPair(FiniteGroup group, AutomorphismGroup phi) : group_(std::move(group)), phi_(std::move(phi)) {
  if (phi_.degree() != group_.order()) throw ConstructionError("automorphism group acts on the wrong number of points");
  for (const auto& p : phi_.elements())
    if (!is_automorphism(group_, p)) throw ConstructionError("Phi contains a non-automorphism of " + group_.name());
  if (!is_fixed_point_free(phi_, group_)) throw ConstructionError("Phi is not fixed point free on " + group_.name());
  for (int i = 0; i < phi_.size(); ++i)
    if (i != phi_.identity_index() && !minus_id_plus_phi_bijective(phi_[i], group_))
      throw ConstructionError("-id + phi is not bijective for some phi in Phi");
}

PlanarNearring::PlanarNearring(FiniteGroup additive, CayleyTable mul)
    : additive_(std::move(additive)), mul_(std::move(mul)) {
  if (mul_.size() != additive_.order()) throw ValidationError("multiplication table has the wrong size");
  meta_ = recover_provenance(additive_, mul_);
}

PlanarNearring::PlanarNearring(FiniteGroup additive, CayleyTable mul, Provenance meta)
    : additive_(std::move(additive)), mul_(std::move(mul)), meta_(std::move(meta)) {
  if (mul_.size() != additive_.order()) throw ValidationError("multiplication table has the wrong size");
}

const Provenance& PlanarNearring::provenance() const {
  if (!meta_) throw ArgumentError("nearring has no Ferrero provenance");
  return *meta_;
}

PlanarNearring construct(const FerreroPair& fp, const RepChoice& rc) {
  const FiniteGroup& g = fp.group();
  const AutomorphismGroup& phi = fp.phi();
  const int n = g.order();

  Provenance meta{phi, rc, {}, orbits(phi, g), std::vector<int>(idx(n), 0), std::vector<char>(idx(n), 0)};
  for (std::size_t o = 0; o < meta.orbits.size(); ++o)
    for (Element x : meta.orbits[o].members) meta.orbit_of[idx(x)] = static_cast<int>(o);

  std::vector<int> hits(meta.orbits.size(), 0);
  for (Element r : rc.reps) {
    if (r <= 0 || r >= n) throw ConstructionError("representative " + std::to_string(r) + " is not a nonzero element");
    if (++hits[idx(meta.orbit_of[idx(r)])] > 1)
      throw ConstructionError("representatives " + list_string(rc.reps) + " cover the orbit of " + std::to_string(r) +
                              " twice");
  }
  for (std::size_t o = 1; o < meta.orbits.size(); ++o)
    if (hits[o] == 0)
      throw ConstructionError("representatives " + list_string(rc.reps) + " miss the orbit " +
                              list_string(meta.orbits[o].members));
  std::vector<Element> seen_zero;
  for (Element m : rc.zero_reps) {
    if (std::find(rc.reps.begin(), rc.reps.end(), m) == rc.reps.end())
      throw ConstructionError("zero-multiplier representative " + std::to_string(m) + " is not in R");
    if (std::find(seen_zero.begin(), seen_zero.end(), m) != seen_zero.end())
      throw ConstructionError("zero-multiplier representative " + std::to_string(m) + " listed twice");
    seen_zero.push_back(m);
    for (Element x : meta.orbits[idx(meta.orbit_of[idx(m)])].members) meta.zero_multiplier[idx(x)] = 1;
  }

  meta.factor.assign(idx(n), Factor{});
  for (Element r : rc.reps)
    for (int i = 0; i < phi.size(); ++i) meta.factor[idx(phi.apply(r, i))] = Factor{r, i};

  CayleyTable mul(n);
  for (Element a = 1; a < n; ++a)
    for (Element b = 1; b < n; ++b)
      mul(a, b) = meta.zero_multiplier[idx(b)] ? 0 : phi.apply(a, meta.factor[idx(b)].phi_index);
  return PlanarNearring(g, std::move(mul), std::move(meta));
}

std::optional<Provenance> recover_provenance(const FiniteGroup& additive, const CayleyTable& mul) {
  const int n = additive.order();
  if (mul.size() != n) return std::nullopt;
  for (Element x = 0; x < n; ++x)
    if (mul(x, 0) != 0 || mul(0, x) != 0) return std::nullopt;

  std::vector<char> zero_col(idx(n), 0);
  std::vector<Permutation> columns;
  std::map<Permutation, bool> distinct;
  for (Element b = 1; b < n; ++b) {
    Permutation col(idx(n));
    bool all_zero = true;
    for (Element x = 0; x < n; ++x) {
      col[idx(x)] = mul(x, b);
      all_zero = all_zero && col[idx(x)] == 0;
    }
    zero_col[idx(b)] = all_zero;
    if (!all_zero) {
      if (!is_automorphism(additive, col)) return std::nullopt;
      if (distinct.emplace(col, true).second) columns.push_back(std::move(col));
    }
  }
  if (columns.empty()) return std::nullopt;
  AutomorphismGroup phi = AutomorphismGroup::generated_by(n, columns);
  if (phi.size() != static_cast<int>(columns.size())) return std::nullopt;

  std::optional<FerreroPair> fp;
  try {
    fp.emplace(additive, phi);
  } catch (const ConstructionError&) {
    return std::nullopt;
  }

  RepChoice rc;
  for (const Orbit& o : orbits(phi, additive)) {
    if (o.representative == 0) continue;
    const bool zm = zero_col[idx(o.members.front())];
    for (Element x : o.members)
      if (static_cast<bool>(zero_col[idx(x)]) != zm) return std::nullopt;
    if (zm) {
      rc.reps.push_back(o.representative);
      rc.zero_reps.push_back(o.representative);
      continue;
    }
    std::optional<Element> identity;
    for (Element x : o.members) {
      bool is_id = true;
      for (Element y = 0; y < n && is_id; ++y) is_id = mul(y, x) == y;
      if (is_id) {
        if (identity) return std::nullopt;
        identity = x;
      }
    }
    if (!identity) return std::nullopt;
    rc.reps.push_back(*identity);
  }

  PlanarNearring rebuilt = construct(*fp, rc);
  if (!(rebuilt.mul_table() == mul)) return std::nullopt;
  return rebuilt.provenance();
}

Factor factorize(const PlanarNearring& n, Element a) {
  if (a == 0) throw ArgumentError("0 has no factorization");
  if (a < 0 || a >= n.order()) throw ArgumentError("element out of range");
  return n.provenance().factor[idx(a)];
}

MultiplierClasses multiplier_classes(const PlanarNearring& n) {
  MultiplierClasses out;
  const int size = n.order();
  out.class_of.assign(idx(size), -1);
  for (Element a = 0; a < size; ++a) {
    if (out.class_of[idx(a)] >= 0) continue;
    const int c = static_cast<int>(out.classes.size());
    out.classes.push_back({});
    for (Element b = a; b < size; ++b) {
      if (out.class_of[idx(b)] >= 0) continue;
      bool same = true;
      for (Element x = 0; x < size && same; ++x) same = n.mul(x, a) == n.mul(x, b);
      if (same) {
        out.class_of[idx(b)] = c;
        out.classes.back().push_back(b);
      }
    }
  }
  return out;
}

PlanarityResult is_planar(const PlanarNearring& n, PlanarityMode mode) {
  PlanarityResult res;
  const MultiplierClasses mc = multiplier_classes(n);
  res.classes = static_cast<int>(mc.classes.size());
  if (res.classes < 3) {
    res.reason = "only " + std::to_string(res.classes) + " equivalent-multiplier classes";
    return res;
  }

  if (mode == PlanarityMode::automatic && n.order() > kExhaustivePlanarityLimit) {
    if (!n.has_provenance())
      throw IndeterminateError("planarity of an order-" + std::to_string(n.order()) +
                               " nearring without Ferrero data needs the exhaustive check");
    try {
      FerreroPair fp(n.additive(), n.provenance().phi);
    } catch (const ConstructionError& e) {
      res.reason = e.what();
      return res;
    }
    res.planar = true;
    res.by_construction = true;
    res.reason = "planar by construction";
    return res;
  }

  // x*a = x*b + c has exactly one solution for every c iff x -> -(x*b) + x*a is bijective.
  const int size = n.order();
  std::vector<int> count(idx(size));
  for (const auto& ca : mc.classes)
    for (const auto& cb : mc.classes) {
      if (&ca == &cb) continue;
      const Element a = ca.front(), b = cb.front();
      std::fill(count.begin(), count.end(), 0);
      for (Element x = 0; x < size; ++x) ++count[idx(n.add(n.neg(n.mul(x, b)), n.mul(x, a)))];
      for (Element c = 0; c < size; ++c)
        if (count[idx(c)] != 1) {
          res.witness = PlanarityWitness{a, b, c, count[idx(c)]};
          res.reason = "x*" + std::to_string(a) + " = x*" + std::to_string(b) + " + " + std::to_string(c) + " has " +
                       std::to_string(count[idx(c)]) + " solutions";
          return res;
        }
    }
  res.planar = true;
  res.reason = "unique solutions verified exhaustively";
  return res;
}

ElementSet right_identities(const PlanarNearring& n) {
  ElementSet out;
  for (Element e = 0; e < n.order(); ++e) {
    bool id = true;
    for (Element x = 0; x < n.order() && id; ++x) id = n.mul(x, e) == x;
    if (id) out.push_back(e);
  }
  return out;
}

std::optional<std::string> nearring_axiom_violation(const PlanarNearring& n) {
  const int size = n.order();
  for (Element a = 0; a < size; ++a)
    if (n.mul(a, 0) != 0 || n.mul(0, a) != 0) return "not zero symmetric at " + std::to_string(a);
  for (Element a = 0; a < size; ++a)
    for (Element b = 0; b < size; ++b)
      for (Element c = 0; c < size; ++c) {
        if (n.mul(n.add(a, b), c) != n.add(n.mul(a, c), n.mul(b, c))) {
          std::ostringstream os;
          os << "right distributivity fails at (" << a << ',' << b << ',' << c << ')';
          return os.str();
        }
        if (n.mul(n.mul(a, b), c) != n.mul(a, n.mul(b, c))) {
          std::ostringstream os;
          os << "associativity fails at (" << a << ',' << b << ',' << c << ')';
          return os.str();
        }
      }
  return std::nullopt;
}

PlanarNearring as_nearring(const Nearfield& f) { return PlanarNearring(f.additive_group(), f.mul_table()); }

AutomorphismGroup automorphisms_generated_by(const FiniteGroup& g, std::span<const Permutation> gens) {
  for (const auto& p : gens)
    if (!is_automorphism(g, p)) throw ValidationError("generator is not an automorphism of " + g.name());
  return AutomorphismGroup::generated_by(g.order(), gens);
}

Permutation negation_map(const FiniteGroup& g) {
  Permutation p(idx(g.order()));
  for (Element x = 0; x < g.order(); ++x) p[idx(x)] = g.neg(x);
  return p;
}

}  // namespace pnr
