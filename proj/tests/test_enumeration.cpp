#include <doctest.h>

#include <map>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "pnr/analysis.hpp"
#include "pnr/enumeration.hpp"
#include "pnr/error.hpp"

using namespace pnr;

namespace {

using Perm = std::vector<int>;

Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) c[x] = b[a[x]];
  return c;
}

Perm inverse(const Perm& a) {
  Perm c(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) c[a[x]] = static_cast<int>(x);
  return c;
}

std::set<Perm> close(std::set<Perm> s) {
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& a : std::vector<Perm>(s.begin(), s.end()))
      for (const auto& b : std::vector<Perm>(s.begin(), s.end()))
        if (s.insert(compose(a, b)).second) grew = true;
  }
  return s;
}

bool fpf(const std::set<Perm>& s) {
  for (const auto& p : s) {
    bool identity = true;
    for (std::size_t x = 0; x < p.size(); ++x) identity = identity && p[x] == static_cast<int>(x);
    if (identity) continue;
    for (std::size_t x = 1; x < p.size(); ++x)
      if (p[x] == static_cast<int>(x)) return false;
  }
  return true;
}

// Sizes of fpf subgroups generated by at most two automorphisms, one per
// conjugacy class in Aut(g).
std::multiset<int> brute_fpf_classes(const FiniteGroup& g) {
  const auto aut = oracle::automorphisms(oracle::from(g.table()));
  std::set<std::set<Perm>> subgroups;
  for (const auto& a : aut)
    for (const auto& b : aut) {
      auto s = close({a, b});
      if (fpf(s)) subgroups.insert(s);
    }
  std::set<std::set<Perm>> canonical;
  for (const auto& s : subgroups) {
    std::set<Perm> best;
    bool first = true;
    for (const auto& c : aut) {
      std::set<Perm> conj;
      for (const auto& p : s) conj.insert(compose(compose(inverse(c), p), c));
      if (first || conj < best) best = conj;
      first = false;
    }
    canonical.insert(best);
  }
  std::multiset<int> sizes;
  for (const auto& s : canonical) sizes.insert(static_cast<int>(s.size()));
  return sizes;
}

std::multiset<int> library_fpf_classes(const FiniteGroup& g) {
  std::multiset<int> sizes;
  for (const auto& phi : fpf_automorphism_groups(g)) {
    CHECK(is_fixed_point_free(phi, g));
    sizes.insert(phi.size());
  }
  return sizes;
}

// Copy of n with every element x renamed to sigma[x] (sigma fixes 0).
PlanarNearring relabel(const PlanarNearring& n, const Permutation& sigma) {
  const int size = n.order();
  CayleyTable add(size), mul(size);
  for (Element a = 0; a < size; ++a)
    for (Element b = 0; b < size; ++b) {
      add(sigma[a], sigma[b]) = sigma[n.add(a, b)];
      mul(sigma[a], sigma[b]) = sigma[n.mul(a, b)];
    }
  return PlanarNearring(FiniteGroup("relabelled", add), mul);
}

}  // namespace

TEST_CASE("fpf automorphism groups up to conjugacy") {
  CHECK(library_fpf_classes(catalog_group("C9")) == std::multiset<int>{1, 2});
  CHECK(library_fpf_classes(catalog_group("C3xC3")) == std::multiset<int>{1, 2, 4, 8, 8});
  CHECK(library_fpf_classes(catalog_group("C2xC2")) == std::multiset<int>{1, 3});
  for (const char* name : {"C5", "C7", "C9", "C2xC2", "C3xC3", "C8", "Q8", "S3"}) {
    CAPTURE(name);
    const FiniteGroup g = catalog_group(name);
    CHECK(library_fpf_classes(g) == brute_fpf_classes(g));
  }
}

TEST_CASE("the two fpf groups of order 8 on C3xC3 are cyclic and quaternion") {
  std::vector<int> involutions;
  for (const auto& phi : fpf_automorphism_groups(catalog_group("C3xC3"))) {
    if (phi.size() != 8) continue;
    int k = 0;
    for (int i = 0; i < phi.size(); ++i) k += i != phi.identity_index() && phi.compose(i, i) == phi.identity_index();
    involutions.push_back(k);
  }
  std::sort(involutions.begin(), involutions.end());
  CHECK(involutions == std::vector<int>{1, 1});
  int orders_of_8 = 0;
  for (const auto& phi : fpf_automorphism_groups(catalog_group("C3xC3"))) {
    if (phi.size() != 8) continue;
    bool has8 = false;
    for (int i = 0; i < phi.size(); ++i) {
      int k = 1;
      for (int j = i; j != phi.identity_index(); j = phi.compose(j, i)) ++k;
      has8 = has8 || k == 8;
    }
    orders_of_8 += has8;
  }
  CHECK(orders_of_8 == 1);
}

TEST_CASE("small enumerations") {
  CHECK(enumerate_planar_nearrings(2, EnumerationFilter::all).empty());
  const auto three = enumerate_planar_nearrings(3, EnumerationFilter::all);
  REQUIRE(three.size() == 1);
  CHECK(three[0].canonical.order() == 3);
  CHECK(three[0].members_found == 2);
  CHECK(enumerate_planar_nearrings(3, EnumerationFilter::nontrivial_distributive).size() == 1);
}

TEST_CASE("filter names") {
  CHECK(parse_filter("all") == EnumerationFilter::all);
  CHECK(parse_filter("nontrivial-distributive") == EnumerationFilter::nontrivial_distributive);
  CHECK(to_string(EnumerationFilter::nontrivial_distributive) == "nontrivial-distributive");
  CHECK_THROWS_AS(parse_filter("some"), ArgumentError);
}

TEST_CASE("isomorphism search") {
  const PlanarNearring z9 = fixtures::z9_example();
  const auto self = nearrings_isomorphic(z9, z9);
  REQUIRE(self);
  CHECK(nearrings_isomorphic(as_nearring(make_field(9)), as_nearring(make_dickson_nearfield_9())) == std::nullopt);

  const FiniteGroup c3 = catalog_group("C3");
  const FerreroPair fp(c3, automorphisms_generated_by(c3, std::vector<Permutation>{negation_map(c3)}));
  const PlanarNearring r1 = construct(fp, RepChoice{{1}, {}});
  const PlanarNearring r2 = construct(fp, RepChoice{{2}, {}});
  CHECK(r1.mul_table() != r2.mul_table());
  const auto iso = nearrings_isomorphic(r1, r2);
  REQUIRE(iso);
  for (Element a = 0; a < 3; ++a)
    for (Element b = 0; b < 3; ++b) {
      CHECK((*iso)[r1.add(a, b)] == r2.add((*iso)[a], (*iso)[b]));
      CHECK((*iso)[r1.mul(a, b)] == r2.mul((*iso)[a], (*iso)[b]));
    }
  CHECK_FALSE(nearrings_isomorphic(fixtures::z9_example(), fixtures::planar_ring_9()));
}

TEST_CASE("fingerprints are invariant under relabelling") {
  std::mt19937 rng(20261016);
  for (const PlanarNearring& n : {fixtures::z9_example(), fixtures::order15_example(), fixtures::planar_ring_9(),
                                  as_nearring(make_dickson_nearfield_9())}) {
    for (int trial = 0; trial < 4; ++trial) {
      Permutation sigma(static_cast<std::size_t>(n.order()));
      std::iota(sigma.begin(), sigma.end(), 0);
      std::shuffle(sigma.begin() + 1, sigma.end(), rng);
      const PlanarNearring m = relabel(n, sigma);
      CHECK(fingerprint(m) == fingerprint(n));
      CHECK(fingerprint(m).digest() == fingerprint(n).digest());
      const auto iso = nearrings_isomorphic(n, m);
      REQUIRE(iso);
      for (Element a = 0; a < n.order(); ++a)
        for (Element b = 0; b < n.order(); ++b) CHECK((*iso)[n.mul(a, b)] == m.mul((*iso)[a], (*iso)[b]));
    }
  }
}

TEST_CASE("digest format") {
  const std::string d = fingerprint(fixtures::z9_example()).digest();
  CHECK(d.size() == 16);
  CHECK(d.find_first_not_of("0123456789abcdef") == std::string::npos);
}

TEST_CASE("enumeration is independent of the worker count") {
  const auto one = enumerate_planar_nearrings(9, EnumerationFilter::all, 1);
  const auto three = enumerate_planar_nearrings(9, EnumerationFilter::all, 3);
  REQUIRE(one.size() == three.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].fingerprint == three[i].fingerprint);
    CHECK(one[i].canonical.mul_table() == three[i].canonical.mul_table());
    CHECK(one[i].members_found == three[i].members_found);
  }
}

TEST_CASE("enumerated classes are pairwise non-isomorphic and planar") {
  const auto classes = enumerate_planar_nearrings(9, EnumerationFilter::all);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i].canonical;
    CHECK(oracle::planar(oracle::from(c.additive().table()), oracle::from(c.mul_table())));
    for (std::size_t j = i + 1; j < classes.size(); ++j)
      if (classes[j].canonical.order() == c.order()) CHECK_FALSE(nearrings_isomorphic(c, classes[j].canonical));
  }
}
