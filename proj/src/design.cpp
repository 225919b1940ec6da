#include "pnr/design.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "pnr/analysis.hpp"
#include "pnr/error.hpp"

namespace pnr {

namespace {

std::size_t idx(Element x) { return static_cast<std::size_t>(x); }

ElementSet orbit_with_zero(const Provenance& p, Element a) {
  ElementSet s = p.orbits[idx(p.orbit_of[idx(a)])].members;
  s.push_back(0);
  std::sort(s.begin(), s.end());
  return s;
}

std::string join(std::span<const Element> xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

// Every vector of g reachable as a sum of scalar multiples of `basis`.
ElementSet span_of(const PlanarNearring& n, const AutomorphismGroup& phi, std::span<const Element> basis) {
  std::set<Element> span{0};
  for (Element v : basis) {
    std::set<Element> next;
    for (Element s : span) {
      next.insert(s);
      for (int i = 0; i < phi.size(); ++i) next.insert(n.add(s, phi.apply(v, i)));
    }
    span = std::move(next);
  }
  return {span.begin(), span.end()};
}

std::string check_vector_space(const PlanarNearring& n, const std::vector<Element>& scalars,
                               const std::vector<int>& phi_of_scalar, const Nearfield& f) {
  const AutomorphismGroup& phi = n.provenance().phi;
  const int q = static_cast<int>(scalars.size());
  auto act = [&](Element v, int s) { return s == 0 ? Element{0} : phi.apply(v, phi_of_scalar[idx(s)]); };
  auto str = [](Element v, int s) { return "v=" + std::to_string(v) + " s=" + std::to_string(s); };
  for (Element v = 0; v < n.order(); ++v) {
    if (act(v, f.one()) != v) return "v . 1 != v at " + str(v, f.one());
    for (int s = 0; s < q; ++s)
      for (int t = 0; t < q; ++t) {
        if (act(v, f.add(s, t)) != n.add(act(v, s), act(v, t)))
          return "v.(s+t) != v.s + v.t at " + str(v, s) + " t=" + std::to_string(t);
        if (act(v, f.mul(s, t)) != act(act(v, s), t))
          return "v.(st) != (v.s).t at " + str(v, s) + " t=" + std::to_string(t);
      }
    for (Element w = 0; w < n.order(); ++w)
      for (int s = 1; s < q; ++s)
        if (act(n.add(v, w), s) != n.add(act(v, s), act(w, s)))
          return "(v+w).s != v.s + w.s at " + str(v, s) + " w=" + std::to_string(w);
  }
  return {};
}

}  // namespace

std::vector<ElementSet> basic_blocks(const PlanarNearring& n) {
  const Provenance& p = n.provenance();
  std::set<ElementSet> blocks;
  for (Element a = 1; a < n.order(); ++a) blocks.insert(orbit_with_zero(p, a));
  return {blocks.begin(), blocks.end()};
}

BlockDesign block_design(const PlanarNearring& n) {
  BlockDesign d;
  d.v = n.order();
  d.basic = basic_blocks(n);
  std::set<ElementSet> distinct;
  for (const auto& block : d.basic)
    for (Element b = 0; b < d.v; ++b) {
      ElementSet t;
      for (Element x : block) t.push_back(n.add(x, b));
      std::sort(t.begin(), t.end());
      distinct.insert(std::move(t));
      ++d.translates_generated;
    }
  d.blocks.assign(distinct.begin(), distinct.end());
  d.repeated_blocks = d.translates_generated != d.b();

  const std::size_t v = idx(d.v);
  d.pair_count.assign(v * v, 0);
  std::vector<int> replication(v, 0);
  std::set<std::size_t> sizes;
  for (const auto& block : d.blocks) {
    sizes.insert(block.size());
    for (std::size_t i = 0; i < block.size(); ++i) {
      ++replication[idx(block[i])];
      for (std::size_t j = i + 1; j < block.size(); ++j) {
        ++d.pair_count[idx(block[i]) * v + idx(block[j])];
        ++d.pair_count[idx(block[j]) * v + idx(block[i])];
      }
    }
  }
  if (sizes.size() == 1) d.k = static_cast<int>(*sizes.begin());
  if (std::all_of(replication.begin(), replication.end(), [&](int c) { return c == replication[0]; }))
    d.r = replication.empty() ? 0 : replication[0];
  d.degenerate = d.k == d.v || d.b() == 0;

  if (d.v >= 2) {
    const int reference = d.pairs(0, 1);
    for (Element x = 0; x < d.v && !d.imbalance; ++x)
      for (Element y = x + 1; y < d.v; ++y)
        if (d.pairs(x, y) != reference) {
          d.imbalance = Imbalance{x, y, d.pairs(x, y), reference};
          break;
        }
    if (!d.imbalance && d.k != 0) d.lambda = reference;
  }
  return d;
}

std::string export_design(const BlockDesign& d) {
  std::ostringstream out;
  out << d.v << ' ' << d.b() << ' ' << d.k << '\n';
  if (d.lambda)
    out << "lambda " << *d.lambda << '\n';
  else if (d.imbalance)
    out << "unbalanced " << d.imbalance->x << ' ' << d.imbalance->y << ' ' << d.imbalance->count << '\n';
  else
    out << "unbalanced\n";
  for (const auto& block : d.blocks) out << join(block, ' ') << '\n';
  return out.str();
}

OrbitClosureReport orbits_additively_closed(const PlanarNearring& n) {
  const Provenance& p = n.provenance();
  OrbitClosureReport r;
  r.abelian = n.additive().is_abelian();
  r.all_closed = true;
  for (Element rep : p.choice.reps) {
    const ElementSet s = orbit_with_zero(p, rep);
    for (Element x : s) {
      for (Element y : s)
        if (!std::binary_search(s.begin(), s.end(), n.add(x, y))) {
          r.all_closed = false;
          r.open_orbit = s;
          r.x = x;
          r.y = y;
          break;
        }
      if (!r.all_closed) break;
    }
    if (!r.all_closed) break;
  }
  if (!r.all_closed) {
    r.note = "some orbit is not additively closed";
    return r;
  }
  if (!r.abelian) {
    r.note = "additive group is not abelian";
    return r;
  }
  if (p.choice.reps.size() < 2) {
    r.note = "only one nonzero orbit";
    return r;
  }
  Element a = -1;
  for (Element rep : p.choice.reps)
    if (!p.zero_multiplier[idx(rep)]) {
      a = rep;
      break;
    }
  if (a < 0) {
    r.note = "every orbit is a zero multiplier orbit";
    return r;
  }

  std::vector<Element> scalars = orbit_with_zero(p, a);
  std::map<Element, int> phi_index;
  for (int i = 0; i < p.phi.size(); ++i) phi_index[p.phi.apply(a, i)] = i;
  std::vector<int> phi_of_scalar(scalars.size(), -1);
  for (std::size_t s = 1; s < scalars.size(); ++s) phi_of_scalar[s] = phi_index.at(scalars[s]);

  Nearfield f = induced_nearfield(n, scalars, "F");
  std::vector<Element> basis;
  ElementSet span{0};
  for (Element v = 1; v < n.order() && static_cast<int>(span.size()) < n.order(); ++v)
    if (!std::binary_search(span.begin(), span.end(), v)) {
      basis.push_back(v);
      span = span_of(n, p.phi, basis);
    }
  std::string failure = f.is_field() ? check_vector_space(n, scalars, phi_of_scalar, f)
                                     : "scalar orbit is a nearfield but not a field";
  int dimension = static_cast<int>(basis.size());
  long long size = 1;
  for (int i = 0; i < dimension; ++i) size *= f.order();
  if (failure.empty() && size != n.order()) failure = "|N| != |F|^dim";
  r.vector_space = VectorSpaceWitness{a, std::move(scalars), std::move(f), dimension, std::move(basis), failure};
  return r;
}

}  // namespace pnr
