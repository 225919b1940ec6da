#include "pnr/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <map>
#include <set>
#include <thread>

#include "pnr/analysis.hpp"
#include "pnr/error.hpp"

namespace pnr {

namespace {

std::size_t idx(Element x) { return static_cast<std::size_t>(x); }

using Profile = std::vector<std::int64_t>;

std::vector<Profile> element_profiles(const PlanarNearring& n, const ElementSet& dist, const ElementSet& zm) {
  const int size = n.order();
  const MultiplierClasses mc = multiplier_classes(n);
  std::vector<Profile> out(idx(size));
  for (Element x = 0; x < size; ++x) {
    Profile& p = out[idx(x)];
    std::vector<std::int64_t> row, col;
    std::int64_t fixes_right = 0, fixes_left = 0, kills = 0;
    for (Element y = 0; y < size; ++y) {
      row.push_back(n.additive().element_order(n.mul(x, y)));
      col.push_back(n.additive().element_order(n.mul(y, x)));
      fixes_right += n.mul(x, y) == x;
      fixes_left += n.mul(y, x) == y;
      kills += n.mul(x, y) == 0;
    }
    std::sort(row.begin(), row.end());
    std::sort(col.begin(), col.end());
    p = {n.additive().element_order(x),
         std::binary_search(dist.begin(), dist.end(), x) ? 1 : 0,
         std::binary_search(zm.begin(), zm.end(), x) ? 1 : 0,
         n.mul(x, x) == x ? 1 : 0,
         fixes_right,
         fixes_left,
         kills,
         static_cast<std::int64_t>(mc.classes[idx(mc.class_of[idx(x)])].size())};
    p.insert(p.end(), row.begin(), row.end());
    p.insert(p.end(), col.begin(), col.end());
  }
  return out;
}

Fingerprint fingerprint_from(const PlanarNearring& n, const ElementSet& dist, const ElementSet& zm,
                             const std::vector<Profile>& profiles) {
  Fingerprint f;
  f.data = {n.order(), static_cast<std::int64_t>(dist.size()), static_cast<std::int64_t>(zm.size()),
            static_cast<std::int64_t>(multiplier_classes(n).classes.size()), n.additive().is_abelian() ? 1 : 0};
  std::vector<Profile> sorted = profiles;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& p : sorted) {
    f.data.push_back(-1);
    f.data.insert(f.data.end(), p.begin(), p.end());
  }
  return f;
}

std::optional<Permutation> isomorphism_with_profiles(const PlanarNearring& a, const PlanarNearring& b,
                                                     const std::vector<Profile>& pa, const std::vector<Profile>& pb) {
  std::optional<Permutation> found;
  for_each_group_isomorphism(
      a.additive(), b.additive(), [&](Element x, Element y) { return pa[idx(x)] == pb[idx(y)]; },
      [&](const Permutation& s) {
        for (Element x = 0; x < a.order(); ++x)
          for (Element y = 0; y < a.order(); ++y)
            if (s[idx(a.mul(x, y))] != b.mul(s[idx(x)], s[idx(y)])) return false;
        found = s;
        return true;
      });
  return found;
}

std::vector<int> closure(const AutomorphismGroup& aut, std::vector<int> gens) {
  std::vector<char> in(static_cast<std::size_t>(aut.size()), 0);
  std::vector<int> out{aut.identity_index()};
  in[static_cast<std::size_t>(aut.identity_index())] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (int g : gens) {
      int c = aut.compose(out[i], g);
      if (!in[static_cast<std::size_t>(c)]) {
        in[static_cast<std::size_t>(c)] = 1;
        out.push_back(c);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

struct Candidate {
  PlanarNearring nearring;
  Fingerprint fingerprint;
  std::vector<Profile> profiles;
  int members = 0;
  std::string group;
  int phi_order = 0;
  int distributive_size = 0;
};

// Adds c to classes unless it is isomorphic to one already there.
void merge_candidate(std::vector<Candidate>& classes, std::multimap<Fingerprint, std::size_t>& buckets, Candidate c) {
  auto [lo, hi] = buckets.equal_range(c.fingerprint);
  for (auto it = lo; it != hi; ++it) {
    Candidate& existing = classes[it->second];
    if (isomorphism_with_profiles(c.nearring, existing.nearring, c.profiles, existing.profiles)) {
      existing.members += c.members;
      return;
    }
  }
  buckets.emplace(c.fingerprint, classes.size());
  classes.push_back(std::move(c));
}

std::vector<Candidate> enumerate_partition(const FiniteGroup& g, const AutomorphismGroup& phi,
                                           EnumerationFilter filter) {
  const FerreroPair fp(g, phi);
  std::vector<Orbit> nonzero;
  for (auto& o : orbits(phi, g))
    if (o.representative != 0) nonzero.push_back(std::move(o));
  const std::size_t k = nonzero.size();

  std::vector<Candidate> classes;
  std::multimap<Fingerprint, std::size_t> buckets;
  std::set<std::vector<Element>> seen_tables;
  std::vector<std::size_t> digit(k, 0);
  while (true) {
    RepChoice rc;
    for (std::size_t i = 0; i < k; ++i) rc.reps.push_back(nonzero[i].members[digit[i]]);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
      rc.zero_reps.clear();
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1) rc.zero_reps.push_back(rc.reps[i]);
      PlanarNearring n = construct(fp, rc);
      if (!is_planar(n, PlanarityMode::exhaustive).planar) continue;
      ElementSet dist = distributive_elements(n);
      if (filter == EnumerationFilter::nontrivial_distributive && dist.size() <= 1) continue;

      std::vector<Element> flat;
      for (Element a = 0; a < n.order(); ++a) {
        auto row = n.mul_table().row(a);
        flat.insert(flat.end(), row.begin(), row.end());
      }
      if (!seen_tables.insert(std::move(flat)).second) {
        // Identical table: same class as an earlier construction.
        for (auto& c : classes)
          if (c.nearring.mul_table() == n.mul_table()) {
            ++c.members;
            break;
          }
        continue;
      }
      ElementSet zm = zero_multipliers(n);
      auto profiles = element_profiles(n, dist, zm);
      Fingerprint f = fingerprint_from(n, dist, zm, profiles);
      merge_candidate(classes, buckets,
                      Candidate{std::move(n), std::move(f), std::move(profiles), 1, g.name(), phi.size(),
                                static_cast<int>(dist.size())});
    }
    std::size_t i = 0;
    while (i < k && ++digit[i] == nonzero[i].members.size()) digit[i++] = 0;
    if (i == k) break;
  }
  return classes;
}

}  // namespace

std::string Fingerprint::digest() const {
  std::uint64_t h = 1469598103934665603ull;
  for (std::int64_t v : data) {
    auto u = static_cast<std::uint64_t>(v);
    for (int b = 0; b < 8; ++b) {
      h ^= (u >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Fingerprint fingerprint(const PlanarNearring& n) {
  const ElementSet dist = distributive_elements(n);
  const ElementSet zm = zero_multipliers(n);
  return fingerprint_from(n, dist, zm, element_profiles(n, dist, zm));
}

std::optional<Permutation> nearrings_isomorphic(const PlanarNearring& a, const PlanarNearring& b) {
  if (a.order() != b.order()) return std::nullopt;
  const ElementSet da = distributive_elements(a), db = distributive_elements(b);
  const ElementSet za = zero_multipliers(a), zb = zero_multipliers(b);
  const auto pa = element_profiles(a, da, za);
  const auto pb = element_profiles(b, db, zb);
  if (fingerprint_from(a, da, za, pa) != fingerprint_from(b, db, zb, pb)) return std::nullopt;
  return isomorphism_with_profiles(a, b, pa, pb);
}

std::vector<AutomorphismGroup> fpf_automorphism_groups(const FiniteGroup& g) {
  const AutomorphismGroup aut = automorphism_group(g);
  const int m = aut.size();
  std::vector<char> fpf(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    if (i == aut.identity_index()) continue;
    bool free = true;
    for (Element x = 1; x < g.order() && free; ++x) free = aut.apply(x, i) != x;
    fpf[static_cast<std::size_t>(i)] = free;
  }

  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue{{aut.identity_index()}};
  seen.insert(queue.front());
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (int e = 0; e < m; ++e) {
      if (!fpf[static_cast<std::size_t>(e)]) continue;
      const auto& s = queue[q];
      if (std::binary_search(s.begin(), s.end(), e)) continue;
      std::vector<int> gens = s;
      gens.push_back(e);
      std::vector<int> t = closure(aut, gens);
      bool ok = std::all_of(t.begin(), t.end(),
                            [&](int x) { return x == aut.identity_index() || fpf[static_cast<std::size_t>(x)]; });
      if (ok && seen.insert(t).second) queue.push_back(std::move(t));
    }
  }

  std::map<std::pair<std::size_t, std::vector<int>>, bool> reps;
  for (const auto& s : queue) {
    std::vector<int> best;
    for (int c = 0; c < m; ++c) {
      std::vector<int> conj;
      for (int x : s) conj.push_back(aut.compose(aut.compose(aut.inverse(c), x), c));
      std::sort(conj.begin(), conj.end());
      if (best.empty() || conj < best) best = std::move(conj);
    }
    reps.emplace(std::make_pair(best.size(), best), true);
  }

  std::vector<AutomorphismGroup> out;
  for (const auto& [key, unused] : reps) {
    std::vector<Permutation> perms;
    for (int x : key.second) perms.push_back(aut[x]);
    out.push_back(AutomorphismGroup::generated_by(g.order(), perms));
  }
  return out;
}

std::string to_string(EnumerationFilter f) {
  return f == EnumerationFilter::all ? "all" : "nontrivial-distributive";
}

EnumerationFilter parse_filter(std::string_view text) {
  if (text == "all") return EnumerationFilter::all;
  if (text == "nontrivial-distributive") return EnumerationFilter::nontrivial_distributive;
  throw ArgumentError("unknown filter '" + std::string(text) + "' (all | nontrivial-distributive)");
}

std::vector<IsoClass> enumerate_planar_nearrings(int max_order, EnumerationFilter filter, int jobs) {
  struct Partition {
    std::size_t group_index;
    AutomorphismGroup phi;
  };
  std::vector<FiniteGroup> groups;
  for (int order = 2; order <= std::min(max_order, 15); ++order)
    for (const auto& name : catalog_names(order)) groups.push_back(catalog_group(order, name));

  std::vector<Partition> parts;
  for (std::size_t gi = 0; gi < groups.size(); ++gi)
    for (auto& phi : fpf_automorphism_groups(groups[gi])) parts.push_back(Partition{gi, std::move(phi)});

  std::vector<std::vector<Candidate>> results(parts.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < parts.size();)
      results[i] = enumerate_partition(groups[parts[i].group_index], parts[i].phi, filter);
  };
  const int threads = std::max(1, jobs);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // Sequential merge in partition order, per additive group.
  std::vector<Candidate> merged;
  std::size_t current_group = static_cast<std::size_t>(-1);
  std::vector<Candidate> group_classes;
  std::multimap<Fingerprint, std::size_t> buckets;
  auto flush = [&] {
    for (auto& c : group_classes) merged.push_back(std::move(c));
    group_classes.clear();
    buckets.clear();
  };
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].group_index != current_group) {
      flush();
      current_group = parts[i].group_index;
    }
    for (auto& c : results[i]) merge_candidate(group_classes, buckets, std::move(c));
  }
  flush();

  std::stable_sort(merged.begin(), merged.end(), [](const Candidate& a, const Candidate& b) {
    if (a.nearring.order() != b.nearring.order()) return a.nearring.order() < b.nearring.order();
    return a.fingerprint < b.fingerprint;
  });

  std::vector<IsoClass> out;
  for (auto& c : merged) {
    const int gc_case = generalized_centre_unchecked(c.nearring).case_tag;
    out.push_back(IsoClass{std::move(c.nearring), std::move(c.fingerprint), c.members, std::move(c.group), c.phi_order,
                           c.distributive_size, gc_case});
  }
  return out;
}

PlanarNearring zp2_family(int p) {
  if (p != 3 && p != 5 && p != 7 && p != 11) throw ArgumentError("zp2_family needs p in {3,5,7,11}");
  const int n = p * p;
  const FiniteGroup g = catalog_group(n, "C" + std::to_string(n));
  std::vector<Permutation> gens;
  for (int u = 1; u < n; ++u) {
    if (u % p == 0) continue;
    long long x = 1;
    for (int k = 0; k < p - 1; ++k) x = x * u % n;
    if (x != 1) continue;
    Permutation m(idx(n));
    for (Element a = 0; a < n; ++a) m[idx(a)] = static_cast<Element>(static_cast<long long>(a) * u % n);
    gens.push_back(std::move(m));
  }
  const FerreroPair fp(g, AutomorphismGroup::generated_by(n, gens));
  RepChoice rc;
  for (int k = 0; k < p; ++k) rc.reps.push_back(p - 1 + p * k);
  rc.reps.push_back(p);
  std::sort(rc.reps.begin(), rc.reps.end());
  rc.zero_reps = {p};
  return construct(fp, rc);
}

}  // namespace pnr
