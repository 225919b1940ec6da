// Structural invariants checked over every planar nearring of order <= 15.

#include <doctest.h>

#include "oracle.hpp"
#include "pnr/analysis.hpp"
#include "pnr/design.hpp"
#include "pnr/enumeration.hpp"

using namespace pnr;

namespace {

const std::vector<IsoClass>& all_classes() {
  static const auto classes = enumerate_planar_nearrings(15, EnumerationFilter::all);
  return classes;
}

bool contains(const ElementSet& s, Element x) { return std::binary_search(s.begin(), s.end(), x); }

}  // namespace

TEST_CASE("every class satisfies the nearring axioms and is planar") {
  REQUIRE_FALSE(all_classes().empty());
  for (const auto& c : all_classes()) {
    const PlanarNearring& n = c.canonical;
    CAPTURE(c.fingerprint.digest());
    CHECK_FALSE(nearring_axiom_violation(n));
    CHECK(is_planar(n, PlanarityMode::exhaustive).planar);
    CHECK(oracle::planar(oracle::from(n.additive().table()), oracle::from(n.mul_table())));
  }
}

TEST_CASE("lemma suite has no failures on any class") {
  for (const auto& c : all_classes()) {
    const LemmaReport r = verify_lemma_suite(c.canonical);
    CAPTURE(c.fingerprint.digest());
    for (const auto& item : r.items) {
      CAPTURE(item.key);
      CAPTURE(item.detail);
      CHECK(item.status != LemmaStatus::fail);
    }
  }
}

TEST_CASE("zero products exactly on zero multipliers") {
  for (const auto& c : all_classes()) {
    const PlanarNearring& n = c.canonical;
    const Provenance& p = n.provenance();
    for (Element a = 0; a < n.order(); ++a)
      for (Element b = 0; b < n.order(); ++b) {
        const bool in_m = b != 0 && std::count(p.choice.zero_reps.begin(), p.choice.zero_reps.end(),
                                                 factorize(n, b).rep) > 0;
        CHECK((n.mul(a, b) == 0) == (a == 0 || b == 0 || in_m));
      }
  }
}

TEST_CASE("factorization is a bijection onto R x Phi") {
  for (const auto& c : all_classes()) {
    const PlanarNearring& n = c.canonical;
    const Provenance& p = n.provenance();
    std::set<std::pair<Element, int>> seen;
    for (Element a = 1; a < n.order(); ++a) {
      const Factor f = factorize(n, a);
      CHECK(p.phi.apply(f.rep, f.phi_index) == a);
      CHECK(std::count(p.choice.reps.begin(), p.choice.reps.end(), f.rep) == 1);
      seen.insert({f.rep, f.phi_index});
    }
    CHECK(seen.size() == p.choice.reps.size() * static_cast<std::size_t>(p.phi.size()));
  }
}

TEST_CASE("distributive elements and the generalized centre") {
  for (const auto& c : all_classes()) {
    const PlanarNearring& n = c.canonical;
    const ElementSet d = distributive_elements(n);
    const auto brute = oracle::distributive(oracle::from(n.additive().table()), oracle::from(n.mul_table()));
    CHECK(d == ElementSet(brute.begin(), brute.end()));
    CHECK(contains(d, 0));
    CHECK(static_cast<int>(d.size()) == c.distributive_size);
    const GCReport gc = generalized_centre_unchecked(n);
    CHECK_FALSE(gc_prediction_failure(n, gc));
    CHECK(gc.case_tag == c.gc_case);
    if (gc.case_tag == 3) {
      REQUIRE(gc.bounds);
      for (Element x : gc.bounds->first) CHECK(contains(gc.gc, x));
      for (Element x : gc.gc) CHECK(contains(gc.bounds->second, x));
      if (n.additive().is_abelian()) CHECK(gc.gc == gc.bounds->second);
    }
  }
}

TEST_CASE("distributive orbits give additively closed basic blocks") {
  for (const auto& c : all_classes()) {
    const PlanarNearring& n = c.canonical;
    const Provenance& p = n.provenance();
    for (const auto& block : basic_blocks(n)) {
      CHECK(block.front() == 0);
      CHECK(block.size() == static_cast<std::size_t>(p.phi.size()) + 1);
    }
    const ElementSet zm = zero_multipliers(n);
    for (Element d : distributive_elements(n)) {
      if (d == 0 || contains(zm, d)) continue;
      ElementSet orbit{0};
      for (int i = 0; i < p.phi.size(); ++i) orbit.push_back(p.phi.apply(d, i));
      std::sort(orbit.begin(), orbit.end());
      for (Element x : orbit)
        for (Element y : orbit) CHECK(contains(orbit, n.add(x, y)));
    }
  }
}

TEST_CASE("every Ferrero construction with nontrivial Phi is planar") {
  for (int order = 3; order <= 9; ++order)
    for (const auto& name : catalog_names(order)) {
      const FiniteGroup g = catalog_group(order, name);
      for (const auto& phi : fpf_automorphism_groups(g)) {
        if (phi.size() == 1) continue;
        const FerreroPair fp(g, phi);
        std::vector<Orbit> nonzero;
        for (auto& o : orbits(phi, g))
          if (o.representative != 0) nonzero.push_back(o);
        // Largest orbit member as representative; every M leaving an orbit outside.
        RepChoice rc;
        for (const auto& o : nonzero) rc.reps.push_back(o.members.back());
        for (unsigned mask = 0; mask + 1 < (1u << nonzero.size()); ++mask) {
          rc.zero_reps.clear();
          for (std::size_t i = 0; i < nonzero.size(); ++i)
            if (mask >> i & 1) rc.zero_reps.push_back(rc.reps[i]);
          const PlanarNearring n = construct(fp, rc);
          CAPTURE(name);
          CHECK(is_planar(n, PlanarityMode::exhaustive).planar);
        }
      }
    }
}

TEST_CASE("filtered enumeration is the nontrivial-D part of the full one") {
  std::multiset<std::string> expected;
  for (const auto& c : all_classes())
    if (c.distributive_size > 1) expected.insert(c.fingerprint.digest());
  std::multiset<std::string> got;
  for (const auto& c : enumerate_planar_nearrings(15, EnumerationFilter::nontrivial_distributive))
    got.insert(c.fingerprint.digest());
  CHECK(got == expected);
}
