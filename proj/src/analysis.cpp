#include "pnr/analysis.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "pnr/error.hpp"

namespace pnr {

namespace {

std::size_t idx(Element x) { return static_cast<std::size_t>(x); }

std::string set_string(std::span<const Element> xs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  os << '}';
  return os.str();
}

std::vector<char> membership(int n, std::span<const Element> set) {
  std::vector<char> in(idx(n), 0);
  for (Element x : set) in[idx(x)] = 1;
  return in;
}

bool contains(std::span<const Element> sorted, Element x) { return std::binary_search(sorted.begin(), sorted.end(), x); }

ElementSet orbit_star(const Provenance& p, Element a) {
  ElementSet out = p.orbits[idx(p.orbit_of[idx(a)])].members;
  if (out.front() != 0) out.insert(out.begin(), 0);
  return out;
}

bool is_zero_multiplier(const PlanarNearring& n, Element b) {
  if (b == 0) return false;
  for (Element x = 0; x < n.order(); ++x)
    if (n.mul(x, b) != 0) return false;
  return true;
}

bool nonzero_products(const PlanarNearring& n, std::span<const Element> set) {
  for (Element x : set)
    for (Element y : set)
      if (n.mul(x, y) != 0) return true;
  return false;
}

}  // namespace

ElementSet distributive_elements(const PlanarNearring& n) {
  ElementSet out;
  const int size = n.order();
  for (Element d = 0; d < size; ++d) {
    bool ok = true;
    for (Element a = 0; a < size && ok; ++a)
      for (Element b = 0; b < size && ok; ++b) ok = n.mul(d, n.add(a, b)) == n.add(n.mul(d, a), n.mul(d, b));
    if (ok) out.push_back(d);
  }
  return out;
}

ElementSet zero_multipliers(const PlanarNearring& n) {
  ElementSet out{0};
  for (Element b = 1; b < n.order(); ++b)
    if (is_zero_multiplier(n, b)) out.push_back(b);
  return out;
}

std::string to_string(IdealKind k) {
  switch (k) {
    case IdealKind::not_subgroup: return "not-subgroup";
    case IdealKind::not_normal: return "not-normal";
    case IdealKind::not_ideal: return "not-ideal";
    case IdealKind::right_only: return "right-only";
    case IdealKind::left_only: return "left-only";
    case IdealKind::two_sided: return "two-sided";
  }
  return "?";
}

IdealReport is_ideal(const PlanarNearring& n, std::span<const Element> set) {
  const int size = n.order();
  for (Element x : set)
    if (x < 0 || x >= size) throw ArgumentError("element out of range");
  const auto in = membership(size, set);
  IdealReport r;
  if (!in[0]) {
    r.witness = "0 not in set";
    return r;
  }
  for (Element a : set)
    for (Element b : set)
      if (!in[idx(n.sub(a, b))]) {
        r.witness = std::to_string(a) + " - " + std::to_string(b) + " = " + std::to_string(n.sub(a, b)) + " not in set";
        return r;
      }
  for (Element x = 0; x < size; ++x)
    for (Element k : set) {
      Element c = n.sub(n.add(x, k), x);
      if (!in[idx(c)]) {
        r.kind = IdealKind::not_normal;
        r.witness = "conjugate of " + std::to_string(k) + " by " + std::to_string(x) + " leaves the set";
        return r;
      }
    }
  std::string right_fail, left_fail;
  for (Element i : set) {
    for (Element x = 0; x < size && right_fail.empty(); ++x)
      if (!in[idx(n.mul(i, x))])
        right_fail = std::to_string(i) + "*" + std::to_string(x) + " = " + std::to_string(n.mul(i, x)) + " not in set";
  }
  for (Element x = 0; x < size && left_fail.empty(); ++x)
    for (Element m = 0; m < size && left_fail.empty(); ++m)
      for (Element i : set) {
        Element c = n.sub(n.mul(x, m), n.mul(x, n.add(m, i)));
        if (!in[idx(c)]) {
          left_fail = std::to_string(x) + "*" + std::to_string(m) + " - " + std::to_string(x) + "*(" + std::to_string(m) +
                      "+" + std::to_string(i) + ") not in set";
          break;
        }
      }
  if (right_fail.empty() && left_fail.empty()) {
    r.kind = IdealKind::two_sided;
  } else if (right_fail.empty()) {
    r.kind = IdealKind::right_only;
    r.witness = left_fail;
  } else if (left_fail.empty()) {
    r.kind = IdealKind::left_only;
    r.witness = right_fail;
  } else {
    r.kind = IdealKind::not_ideal;
    r.witness = right_fail + "; " + left_fail;
  }
  return r;
}

GCReport generalized_centre_unchecked(const PlanarNearring& n) {
  const Provenance& p = n.provenance();
  const ElementSet d = distributive_elements(n);
  GCReport r;
  for (Element x = 0; x < n.order(); ++x) {
    bool central = true;
    for (Element y : d)
      if (n.mul(x, y) != n.mul(y, x)) {
        central = false;
        break;
      }
    if (central) r.gc.push_back(x);
  }

  std::set<int> hit;
  bool hits_nonzero_multiplier = false;
  for (Element x : d) {
    if (x == 0) continue;
    hit.insert(p.orbit_of[idx(x)]);
    hits_nonzero_multiplier = hits_nonzero_multiplier || !p.zero_multiplier[idx(x)];
  }

  if (d.size() == 1) {
    r.case_tag = 4;
    ElementSet all(idx(n.order()));
    for (Element x = 0; x < n.order(); ++x) all[idx(x)] = x;
    r.predicted = all;
  } else if (!hits_nonzero_multiplier) {
    r.case_tag = 1;
    r.predicted = zero_multipliers(n);
  } else if (hit.size() > 1) {
    r.case_tag = 2;
    r.predicted = ElementSet{0};
  } else {
    r.case_tag = 3;
    const Element a = p.factor[idx(d[1])].rep;
    const AutomorphismGroup z = centre_of(p.phi);
    ElementSet lower{0};
    for (const auto& zeta : z.elements()) lower.push_back(zeta[idx(a)]);
    std::sort(lower.begin(), lower.end());
    lower.erase(std::unique(lower.begin(), lower.end()), lower.end());
    ElementSet upper = orbit_star(p, a);
    r.bounds = std::make_pair(lower, upper);
    // Finite nearrings: equality with the upper bound whether or not (N,+) is abelian.
    r.predicted = upper;
  }
  return r;
}

std::optional<std::string> gc_prediction_failure(const PlanarNearring& n, const GCReport& r) {
  if (r.bounds) {
    const auto& [lower, upper] = *r.bounds;
    if (!std::includes(r.gc.begin(), r.gc.end(), lower.begin(), lower.end()))
      return "case 3: a Z(Phi)* = " + set_string(lower) + " not contained in GC(N) = " + set_string(r.gc);
    if (!std::includes(upper.begin(), upper.end(), r.gc.begin(), r.gc.end()))
      return "case 3: GC(N) = " + set_string(r.gc) + " not contained in a Phi* = " + set_string(upper);
    if (!n.additive().is_abelian()) {
      const ElementSet d = distributive_elements(n);
      if (d != upper) return "case 3, nonabelian: D(N) = " + set_string(d) + " differs from a Phi* = " + set_string(upper);
    }
  }
  if (r.predicted && *r.predicted != r.gc)
    return "case " + std::to_string(r.case_tag) + ": GC(N) = " + set_string(r.gc) + ", predicted " +
           set_string(*r.predicted);
  return std::nullopt;
}

GCReport generalized_centre(const PlanarNearring& n) {
  GCReport r = generalized_centre_unchecked(n);
  if (auto f = gc_prediction_failure(n, r)) throw TheoremViolation(*f);
  return r;
}

Nearfield induced_nearfield(const PlanarNearring& n, std::span<const Element> members, std::string name) {
  const int k = static_cast<int>(members.size());
  if (k == 0 || members[0] != 0) throw ValidationError("induced structure must list 0 first");
  std::map<Element, Element> local;
  for (int i = 0; i < k; ++i) local[members[idx(i)]] = i;
  CayleyTable add(k), mul(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      auto s = local.find(n.add(members[idx(i)], members[idx(j)]));
      auto m = local.find(n.mul(members[idx(i)], members[idx(j)]));
      if (s == local.end()) throw ValidationError(set_string(members) + " is not additively closed");
      if (m == local.end()) throw ValidationError(set_string(members) + " is not multiplicatively closed");
      add(i, j) = s->second;
      mul(i, j) = m->second;
    }
  return Nearfield(std::move(name), std::move(add), std::move(mul));
}

Nearfield orbit_nearfield(const PlanarNearring& n, Element d, std::string name) {
  const Provenance& p = n.provenance();
  if (d == 0) throw ArgumentError("orbit nearfield needs a nonzero element");
  const ElementSet members = orbit_star(p, d);
  std::map<Element, Element> local;
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<Element>(i);
  std::map<Element, int> phi_of;
  for (int i = 0; i < p.phi.size(); ++i) phi_of[p.phi.apply(d, i)] = i;
  const int k = static_cast<int>(members.size());
  CayleyTable add(k), mul(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const Element x = members[idx(i)], y = members[idx(j)];
      auto s = local.find(n.add(x, y));
      if (s == local.end()) throw ValidationError(set_string(members) + " is not additively closed");
      add(i, j) = s->second;
      mul(i, j) = (x == 0 || y == 0) ? 0 : local.at(p.phi.apply(d, p.phi.compose(phi_of.at(x), phi_of.at(y))));
    }
  return Nearfield(std::move(name), std::move(add), std::move(mul));
}

SemidirectResult semidirect_decomposition(const PlanarNearring& n) {
  const Provenance& p = n.provenance();
  const ElementSet dist = distributive_elements(n);
  SemidirectResult res;
  std::optional<Element> d;
  for (Element x : dist)
    if (x != 0 && !p.zero_multiplier[idx(x)]) {
      d = x;
      break;
    }
  if (!d) {
    res.reason = dist.size() == 1 ? "D(N) is trivial" : "every distributive element is a zero multiplier";
    return res;
  }

  const ElementSet kernel = zero_multipliers(n);
  const ElementSet complement = orbit_star(p, *d);
  const int size = n.order();
  const int kn = static_cast<int>(kernel.size()), fn = static_cast<int>(complement.size());
  if (kn * fn != size) throw TheoremViolation("|K| |F| = " + std::to_string(kn * fn) + " != |N|");

  Nearfield field = [&] {
    try {
      return induced_nearfield(n, complement, "F");
    } catch (const ValidationError& e) {
      throw TheoremViolation(std::string("orbit of a distributive element is not a nearfield: ") + e.what());
    }
  }();

  std::vector<Element> iso(idx(size));
  std::vector<char> hit(idx(size), 0);
  for (int k = 0; k < kn; ++k)
    for (int f = 0; f < fn; ++f) {
      Element x = n.add(kernel[idx(k)], complement[idx(f)]);
      if (hit[idx(x)]) throw TheoremViolation("K + F is not a bijection onto N");
      hit[idx(x)] = 1;
      iso[idx(k * fn + f)] = x;
    }

  std::map<Element, int> kernel_index;
  for (int k = 0; k < kn; ++k) kernel_index[kernel[idx(k)]] = k;
  std::vector<std::vector<int>> action(idx(fn));
  for (int f = 1; f < fn; ++f) {
    const int phi = p.factor[idx(complement[idx(f)])].phi_index;
    for (int k = 0; k < kn; ++k) {
      auto it = kernel_index.find(p.phi.apply(kernel[idx(k)], phi));
      if (it == kernel_index.end()) throw TheoremViolation("Phi does not preserve the zero multipliers");
      action[idx(f)].push_back(it->second);
    }
  }

  // (a,b)*(c,d) = 0 if d = 0, else (a phi_d, b phi_d).
  for (int k1 = 0; k1 < kn; ++k1)
    for (int f1 = 0; f1 < fn; ++f1)
      for (int k2 = 0; k2 < kn; ++k2)
        for (int f2 = 0; f2 < fn; ++f2) {
          const Element x = iso[idx(k1 * fn + f1)], y = iso[idx(k2 * fn + f2)];
          Element expected = 0;
          if (f2 != 0) {
            const int phi = p.factor[idx(complement[idx(f2)])].phi_index;
            expected = n.add(p.phi.apply(kernel[idx(k1)], phi), p.phi.apply(complement[idx(f1)], phi));
          }
          if (n.mul(x, y) != expected) {
            std::ostringstream os;
            os << "semidirect product formula fails: " << x << '*' << y << " = " << n.mul(x, y) << ", formula gives "
               << expected;
            throw TheoremViolation(os.str());
          }
        }

  res.decomposition = SemidirectDecomposition{kernel, complement, std::move(field), std::move(action), std::move(iso)};
  res.reason = "split by d = " + std::to_string(*d);
  return res;
}

std::optional<std::vector<std::pair<int, ElementSet>>> primary_decomposition(const FiniteGroup& g) {
  std::vector<std::pair<int, ElementSet>> parts;
  int rest = g.order();
  for (int p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    ElementSet sylow;
    for (Element x = 0; x < g.order(); ++x) {
      int o = g.element_order(x);
      while (o % p == 0) o /= p;
      if (o == 1) sylow.push_back(x);
    }
    if (!is_normal_subgroup(g, sylow)) return std::nullopt;
    parts.emplace_back(p, std::move(sylow));
  }
  if (parts.empty()) parts.emplace_back(1, ElementSet{0});
  // Internal direct sum: the iterated sums hit every element exactly once.
  std::vector<Element> sums{0};
  for (const auto& [p, s] : parts) {
    std::vector<Element> next;
    for (Element a : sums)
      for (Element b : s) next.push_back(g.add(a, b));
    sums = std::move(next);
  }
  std::sort(sums.begin(), sums.end());
  if (static_cast<int>(sums.size()) != g.order() || std::adjacent_find(sums.begin(), sums.end()) != sums.end())
    return std::nullopt;
  return parts;
}

std::optional<ElementSet> find_complement(const FiniteGroup& g, std::span<const Element> k) {
  if (k.empty() || g.order() % static_cast<int>(k.size()) != 0) return std::nullopt;
  const std::size_t want = static_cast<std::size_t>(g.order()) / k.size();
  for (const ElementSet& h : all_subgroups(g)) {
    if (h.size() != want) continue;
    bool trivial_meet = true;
    for (Element x : h)
      if (x != 0 && std::find(k.begin(), k.end(), x) != k.end()) trivial_meet = false;
    if (trivial_meet) return h;
  }
  return std::nullopt;
}

std::string to_string(LemmaStatus s) {
  switch (s) {
    case LemmaStatus::pass: return "pass";
    case LemmaStatus::fail: return "FAIL";
    case LemmaStatus::not_applicable: return "n/a";
  }
  return "?";
}

bool LemmaReport::any_failure() const {
  return std::any_of(items.begin(), items.end(), [](const LemmaResult& r) { return r.status == LemmaStatus::fail; });
}

const LemmaResult& LemmaReport::at(std::string_view key) const {
  for (const auto& r : items)
    if (r.key == key) return r;
  throw ArgumentError("no lemma item " + std::string(key));
}

LemmaReport verify_lemma_suite(const PlanarNearring& n) {
  const Provenance& p = n.provenance();
  const int size = n.order();
  const ElementSet dist = distributive_elements(n);
  const ElementSet zm = zero_multipliers(n);
  const bool nontrivial = dist.size() > 1;
  std::vector<Element> nonzm_dist, zm_dist;
  for (Element d : dist) {
    if (d == 0) continue;
    (contains(zm, d) ? zm_dist : nonzm_dist).push_back(d);
  }

  LemmaReport rep;
  auto add = [&](std::string key, std::string title) -> LemmaResult& {
    rep.items.push_back(LemmaResult{std::move(key), std::move(title), LemmaStatus::pass, ""});
    return rep.items.back();
  };
  auto na = [](LemmaResult& r, std::string why) {
    r.status = LemmaStatus::not_applicable;
    r.detail = std::move(why);
  };
  auto fail = [](LemmaResult& r, std::string why) {
    if (r.status == LemmaStatus::fail) return;
    r.status = LemmaStatus::fail;
    r.detail = std::move(why);
  };

  {
    auto& r = add("a", "distributive orbits are additively closed");
    if (!nontrivial) na(r, "D(N) is trivial");
    for (Element d : dist) {
      if (d == 0) continue;
      const ElementSet o = orbit_star(p, d);
      for (Element x : o)
        for (Element y : o)
          if (!contains(o, n.add(x, y)))
            fail(r, "d = " + std::to_string(d) + ": " + std::to_string(x) + " + " + std::to_string(y) + " not in " +
                        set_string(o));
    }
  }

  {
    auto& r = add("b", "{phi : r_d phi in D(N)} is a subgroup containing Z(Phi)");
    if (nonzm_dist.empty()) na(r, "no distributive non-zero-multiplier");
    const AutomorphismGroup z = centre_of(p.phi);
    for (Element d : nonzm_dist) {
      const Element rd = p.factor[idx(d)].rep;
      std::vector<char> in(idx(p.phi.size()), 0);
      for (int i = 0; i < p.phi.size(); ++i) in[idx(i)] = contains(dist, p.phi.apply(rd, i));
      if (!in[idx(p.phi.identity_index())]) fail(r, "identity missing for d = " + std::to_string(d));
      for (int i = 0; i < p.phi.size(); ++i)
        for (int j = 0; j < p.phi.size(); ++j)
          if (in[idx(i)] && in[idx(j)] && !in[idx(p.phi.compose(i, j))])
            fail(r, "not closed under composition for d = " + std::to_string(d));
      for (const auto& zeta : z.elements())
        if (!in[idx(*p.phi.index_of(zeta))])
          fail(r, "central element of Phi missing for d = " + std::to_string(d));
    }
  }

  {
    auto& r = add("c", "orbit of a distributive non-zero-multiplier is a nearfield");
    if (nonzm_dist.empty()) na(r, "no distributive non-zero-multiplier");
    for (Element d : nonzm_dist) {
      try {
        induced_nearfield(n, orbit_star(p, d), "orbit");
      } catch (const ValidationError& e) {
        fail(r, "d = " + std::to_string(d) + ": " + e.what());
      }
    }
  }

  {
    auto& r = add("c0", "orbit of a distributive zero multiplier carries an induced nearfield");
    if (zm_dist.empty()) na(r, "no distributive zero multiplier");
    for (Element d : zm_dist) {
      try {
        orbit_nearfield(n, d, "orbit");
      } catch (const ValidationError& e) {
        fail(r, "d = " + std::to_string(d) + ": " + e.what());
      }
    }
  }

  {
    auto& r = add("d", "phi_{m+a} = phi_{a+m} = phi_a");
    if (!nontrivial) na(r, "D(N) is trivial");
    for (Element m : zm) {
      if (!nontrivial) break;
      for (Element a = 1; a < size; ++a) {
        if (contains(zm, a)) continue;
        for (Element s : {n.add(m, a), n.add(a, m)}) {
          if (contains(zm, s)) {
            fail(r, std::to_string(m) + " + " + std::to_string(a) + " is a zero multiplier");
            continue;
          }
          if (p.factor[idx(s)].phi_index != p.factor[idx(a)].phi_index)
            fail(r, "m = " + std::to_string(m) + ", a = " + std::to_string(a));
        }
      }
    }
  }

  {
    auto& r = add("e", "zero multipliers form a two-sided ideal");
    if (!nontrivial) {
      na(r, "D(N) is trivial");
    } else {
      IdealReport ir = is_ideal(n, zm);
      if (ir.kind != IdealKind::two_sided) fail(r, to_string(ir.kind) + ": " + ir.witness);
    }
  }

  {
    auto& r = add("f", "at most one primary summand carries nonzero products");
    if (nonzm_dist.empty()) {
      na(r, "no distributive non-zero-multiplier");
    } else if (auto parts = primary_decomposition(n.additive()); !parts) {
      fail(r, "(N,+) is not the direct sum of its Sylow subgroups");
    } else {
      std::vector<int> active;
      for (const auto& [prime, s] : *parts)
        if (nonzero_products(n, s)) active.push_back(prime);
      if (active.size() > 1) fail(r, "several summands carry nonzero products");
      for (const auto& [prime, s] : *parts) {
        if (!active.empty() && prime == active.front()) continue;
        if (!active.empty() && !std::includes(zm.begin(), zm.end(), s.begin(), s.end()))
          fail(r, std::to_string(prime) + "-summand is not made of zero multipliers");
      }
    }
  }

  {
    auto& r = add("g", "generalized centre agrees with its case");
    GCReport gc = generalized_centre_unchecked(n);
    r.detail = "case " + std::to_string(gc.case_tag);
    if (auto f = gc_prediction_failure(n, gc)) fail(r, *f);
  }

  {
    auto& r = add("h", "semidirect decomposition with the product formula");
    if (nonzm_dist.empty()) {
      na(r, "no distributive non-zero-multiplier");
    } else {
      try {
        SemidirectResult s = semidirect_decomposition(n);
        if (!s.decomposition) fail(r, s.reason);
      } catch (const TheoremViolation& e) {
        fail(r, e.what());
      }
    }
  }
  return rep;
}

}  // namespace pnr
