#include "pnr/nearvector.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "pnr/error.hpp"

namespace pnr {

namespace {

std::size_t idx(Element x) { return static_cast<std::size_t>(x); }

Permutation twist_map(const Nearfield& f, const Twist& t) {
  const int q = f.order();
  Permutation p(idx(q));
  switch (t.kind) {
    case Twist::Kind::identity:
      for (Element x = 0; x < q; ++x) p[idx(x)] = x;
      return p;
    case Twist::Kind::power:
      if (t.exponent < 1) throw ValidationError("twist exponent must be positive");
      for (Element x = 0; x < q; ++x) {
        Element y = x;
        for (int k = 1; k < t.exponent; ++k) y = f.mul(y, x);
        p[idx(x)] = y;
      }
      return p;
    case Twist::Kind::explicit_map:
      if (static_cast<int>(t.map.size()) != q) throw ValidationError("twist map has the wrong length");
      return t.map;
  }
  return p;
}

Permutation invert(const Permutation& p) {
  Permutation inv(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) inv[idx(p[x])] = static_cast<Element>(x);
  return inv;
}

}  // namespace

Twist Twist::parse(std::string_view text) {
  if (text == "id" || text == "identity") return identity();
  auto number = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw ArgumentError("bad twist '" + std::string(text) + "'");
    return v;
  };
  if (text.starts_with("pow:")) return power(number(text.substr(4)));
  if (text.starts_with("map:")) {
    Permutation p;
    std::string_view rest = text.substr(4);
    while (!rest.empty()) {
      auto comma = rest.find(',');
      p.push_back(number(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    return explicit_map(std::move(p));
  }
  throw ArgumentError("bad twist '" + std::string(text) + "' (use id, pow:<k> or map:<list>)");
}

std::string Twist::to_string() const {
  switch (kind) {
    case Kind::identity: return "id";
    case Kind::power: return "pow:" + std::to_string(exponent);
    case Kind::explicit_map: {
      std::ostringstream os;
      os << "map:";
      for (std::size_t i = 0; i < map.size(); ++i) os << (i ? "," : "") << map[i];
      return os.str();
    }
  }
  return "?";
}

NearvectorSpace::NearvectorSpace(Nearfield field, std::vector<Permutation> twists)
    : field_(std::move(field)), twists_(std::move(twists)), group_(cyclic_group(1)) {
  if (twists_.empty()) throw ValidationError("a nearvector space needs at least one component");
  group_ = field_.additive_group();
  for (std::size_t i = 1; i < twists_.size(); ++i) group_ = direct_product(group_, field_.additive_group());
  size_ = group_.order();
}

std::vector<Element> NearvectorSpace::coordinates(Element v) const {
  const int q = field_.order();
  std::vector<Element> c(twists_.size());
  for (std::size_t i = twists_.size(); i-- > 0;) {
    c[i] = v % q;
    v /= q;
  }
  return c;
}

Element NearvectorSpace::vector(std::span<const Element> coords) const {
  Element v = 0;
  for (Element x : coords) v = v * field_.order() + x;
  return v;
}

Element NearvectorSpace::scale(Element v, Element alpha) const {
  auto c = coordinates(v);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = field_.mul(c[i], twists_[i][idx(alpha)]);
  return vector(c);
}

NearvectorSpace make_nearvector_space(const Nearfield& f, std::span<const Twist> twists) {
  const int q = f.order();
  std::vector<Permutation> maps;
  for (std::size_t i = 0; i < twists.size(); ++i) {
    Permutation p = twist_map(f, twists[i]);
    const std::string which = "twist " + std::to_string(i + 1) + " (" + twists[i].to_string() + ")";
    std::vector<char> hit(idx(q), 0);
    for (Element y : p) {
      if (y < 0 || y >= q || hit[idx(y)]) throw ValidationError(which + " is not a bijection");
      hit[idx(y)] = 1;
    }
    if (p[0] != 0) throw ValidationError(which + " does not fix 0");
    for (Element a = 1; a < q; ++a)
      for (Element b = 1; b < q; ++b)
        if (p[idx(f.mul(a, b))] != f.mul(p[idx(a)], p[idx(b)]))
          throw ValidationError(which + " is not multiplicative at (" + std::to_string(a) + "," + std::to_string(b) +
                                ")");
    maps.push_back(std::move(p));
  }
  NearvectorSpace v(f, std::move(maps));
  for (Element alpha = 1; alpha < q; ++alpha) {
    Permutation act(idx(v.size()));
    for (Element x = 0; x < v.size(); ++x) act[idx(x)] = v.scale(x, alpha);
    if (!is_automorphism(v.additive(), act))
      throw ValidationError("scalar " + std::to_string(alpha) + " does not act by an additive automorphism");
    if (alpha != f.one())
      for (Element x = 1; x < v.size(); ++x)
        if (act[idx(x)] == x)
          throw ValidationError("scalar " + std::to_string(alpha) + " fixes the vector " + std::to_string(x));
  }
  return v;
}

ElementSet quasi_kernel(const NearvectorSpace& v) {
  const int q = v.field().order();
  const FiniteGroup& g = v.additive();
  ElementSet out;
  std::vector<char> reachable(idx(v.size()));
  for (Element x = 0; x < v.size(); ++x) {
    std::vector<Element> scaled(idx(q));
    std::fill(reachable.begin(), reachable.end(), 0);
    for (Element a = 0; a < q; ++a) {
      scaled[idx(a)] = v.scale(x, a);
      reachable[idx(scaled[idx(a)])] = 1;
    }
    bool in = true;
    for (Element a = 0; a < q && in; ++a)
      for (Element b = 0; b < q && in; ++b) in = reachable[idx(g.add(scaled[idx(a)], scaled[idx(b)]))];
    if (in) out.push_back(x);
  }
  return out;
}

RegularDecomposition regular_decomposition(const NearvectorSpace& v) {
  const auto autos = nearfield_automorphisms(v.field());
  const int q = v.field().order();
  auto equivalent = [&](int i, int j) {
    for (const auto& sigma : autos) {
      bool same = true;
      for (Element a = 0; a < q && same; ++a) same = v.twist(j)[idx(a)] == sigma[idx(v.twist(i)[idx(a)])];
      if (same) return true;
    }
    return false;
  };
  RegularDecomposition out;
  std::vector<int> block(static_cast<std::size_t>(v.dimension()), -1);
  for (int i = 0; i < v.dimension(); ++i) {
    if (block[static_cast<std::size_t>(i)] >= 0) continue;
    block[static_cast<std::size_t>(i)] = static_cast<int>(out.parts.size());
    out.parts.push_back({i});
    for (int j = i + 1; j < v.dimension(); ++j)
      if (block[static_cast<std::size_t>(j)] < 0 && equivalent(i, j)) {
        block[static_cast<std::size_t>(j)] = block[static_cast<std::size_t>(i)];
        out.parts.back().push_back(j);
      }
  }
  return out;
}

AutomorphismGroup scalar_action_group(const NearvectorSpace& v) {
  std::vector<Permutation> acts;
  for (Element alpha = 1; alpha < v.field().order(); ++alpha) {
    Permutation act(idx(v.size()));
    for (Element x = 0; x < v.size(); ++x) act[idx(x)] = v.scale(x, alpha);
    acts.push_back(std::move(act));
  }
  return AutomorphismGroup::generated_by(v.size(), acts);
}

std::vector<Orbit> kernel_orbits(const NearvectorSpace& v, int coordinate) {
  if (coordinate < 0 || coordinate >= v.dimension()) throw ArgumentError("coordinate out of range");
  std::vector<Orbit> out;
  for (const Orbit& o : orbits(scalar_action_group(v), v.additive())) {
    if (o.representative == 0) continue;
    if (v.coordinates(o.members.front())[idx(coordinate)] == 0) out.push_back(o);
  }
  return out;
}

PlanarNearring derived_planar_nearring(const NearvectorSpace& v, int coordinate, std::span<const Element> zero_reps) {
  if (coordinate < 0 || coordinate >= v.dimension()) throw ArgumentError("coordinate out of range");
  if (v.field().order() < 3) throw ArgumentError("derived nearrings need a nearfield of order at least 3");
  const AutomorphismGroup phi = scalar_action_group(v);
  const FerreroPair fp(v.additive(), phi);
  const auto all = orbits(phi, v.additive());

  std::vector<int> orbit_of(idx(v.size()), 0);
  for (std::size_t o = 0; o < all.size(); ++o)
    for (Element x : all[o].members) orbit_of[idx(x)] = static_cast<int>(o);
  auto coord = [&](Element x) { return v.coordinates(x)[idx(coordinate)]; };

  std::vector<Element> chosen(all.size(), -1);
  for (Element m : zero_reps) {
    if (m <= 0 || m >= v.size()) throw ArgumentError("zero-multiplier representative out of range");
    if (coord(m) != 0)
      throw ArgumentError("zero-multiplier representative " + std::to_string(m) + " lies outside the projection kernel");
    auto& slot = chosen[idx(orbit_of[idx(m)])];
    if (slot >= 0) throw ArgumentError("two zero-multiplier representatives share an orbit");
    slot = m;
  }

  RepChoice rc;
  for (std::size_t o = 1; o < all.size(); ++o) {
    const Orbit& orb = all[o];
    if (coord(orb.members.front()) == 0) {
      if (chosen[o] < 0 && !zero_reps.empty()) throw ArgumentError("zero-multiplier selection misses a kernel orbit");
      Element r = chosen[o] >= 0 ? chosen[o] : orb.representative;
      rc.reps.push_back(r);
      rc.zero_reps.push_back(r);
    } else {
      // The unique member with projection 1 is a right identity.
      auto it = std::find_if(orb.members.begin(), orb.members.end(),
                             [&](Element x) { return coord(x) == v.field().one(); });
      rc.reps.push_back(*it);
    }
  }
  PlanarNearring n = construct(fp, rc);

  // Same table from the formula a * b = a . psi_c^{-1}(b_c).
  const Permutation back = invert(v.twist(coordinate));
  for (Element a = 0; a < v.size(); ++a)
    for (Element b = 0; b < v.size(); ++b)
      if (n.mul(a, b) != v.scale(a, back[idx(coord(b))]))
        throw ValidationError("derived product disagrees with the scalar-action formula");
  return n;
}

ElementSet twisted_kern(const Nearfield& f, const Permutation& psi) {
  ElementSet out;
  const int q = f.order();
  for (Element x = 0; x < q; ++x) {
    bool ok = true;
    for (Element s = 0; s < q && ok; ++s)
      for (Element t = 0; t < q && ok; ++t)
        ok = f.mul(x, psi[idx(f.add(s, t))]) == f.add(f.mul(x, psi[idx(s)]), f.mul(x, psi[idx(t)]));
    if (ok) out.push_back(x);
  }
  return out;
}

ConjectureReport check_conjecture(const NearvectorSpace& v, int coordinate, std::span<const Element> zero_reps) {
  const PlanarNearring n = derived_planar_nearring(v, coordinate, zero_reps);
  ConjectureReport rep;
  rep.distributive = distributive_elements(n);
  rep.decomposition = regular_decomposition(v);
  rep.kern = kern(v.field());

  // Component i's distributivity condition is relative to psi_i psi_c^{-1}.
  const Permutation back = invert(v.twist(coordinate));
  std::vector<ElementSet> twisted;
  for (int i = 0; i < v.dimension(); ++i) {
    Permutation rel(back.size());
    for (std::size_t a = 0; a < back.size(); ++a) rel[a] = v.twist(i)[idx(back[a])];
    twisted.push_back(twisted_kern(v.field(), rel));
  }

  rep.plain_reading_holds = true;
  rep.twisted_reading_holds = true;
  for (const auto& part : rep.decomposition.parts) {
    ConjectureBlock b;
    b.components = part;
    for (Element x = 0; x < v.size(); ++x) {
      auto c = v.coordinates(x);
      bool supported = true, in_kern = true, in_twisted = true;
      for (int i = 0; i < v.dimension(); ++i) {
        const bool inside = std::find(part.begin(), part.end(), i) != part.end();
        if (!inside && c[idx(i)] != 0) supported = false;
        in_kern = in_kern && std::binary_search(rep.kern.begin(), rep.kern.end(), c[idx(i)]);
        in_twisted = in_twisted && std::binary_search(twisted[idx(i)].begin(), twisted[idx(i)].end(), c[idx(i)]);
      }
      if (!supported) continue;
      if (std::binary_search(rep.distributive.begin(), rep.distributive.end(), x)) b.intersection.push_back(x);
      if (in_kern) b.kern_power.push_back(x);
      if (in_twisted) b.twisted_kern_power.push_back(x);
    }
    b.matches_kern_power = b.intersection == b.kern_power;
    b.matches_twisted_kern_power = b.intersection == b.twisted_kern_power;
    rep.plain_reading_holds = rep.plain_reading_holds && b.matches_kern_power;
    rep.twisted_reading_holds = rep.twisted_reading_holds && b.matches_twisted_kern_power;
    rep.blocks.push_back(std::move(b));
  }

  std::vector<Element> sums{0};
  for (const auto& b : rep.blocks) {
    std::vector<Element> next;
    for (Element s : sums)
      for (Element x : b.intersection) next.push_back(v.additive().add(s, x));
    sums = std::move(next);
  }
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  rep.splits = sums == rep.distributive;
  rep.plain_reading_holds = rep.plain_reading_holds && rep.splits;
  rep.twisted_reading_holds = rep.twisted_reading_holds && rep.splits;
  return rep;
}

}  // namespace pnr
