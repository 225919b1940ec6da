#include <doctest.h>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "pnr/error.hpp"
#include "pnr/ferrero.hpp"

using namespace pnr;

namespace {

// Z9 example by hand: b = 0 mod 3 kills, b = 2 mod 3 is a right identity,
// b = 1 mod 3 negates.
int z9_product(int a, int b) {
  if (b % 3 == 0) return 0;
  return b % 3 == 2 ? a : (9 - a) % 9;
}

FerreroPair neg_pair(const char* group) {
  const FiniteGroup g = catalog_group(group);
  return FerreroPair(g, automorphisms_generated_by(g, std::vector<Permutation>{negation_map(g)}));
}

}  // namespace

TEST_CASE("Z9 example table") {
  const PlanarNearring n = fixtures::z9_example();
  for (Element a = 0; a < 9; ++a)
    for (Element b = 0; b < 9; ++b) CHECK(n.mul(a, b) == z9_product(a, b));
  CHECK(n.mul(1, 3) == 0);
  CHECK(n.mul(4, 7) == 5);
  CHECK(n.mul(2, 8) == 2);
  CHECK_FALSE(nearring_axiom_violation(n));
}

TEST_CASE("Z9 example factorization") {
  const PlanarNearring n = fixtures::z9_example();
  const AutomorphismGroup& phi = n.provenance().phi;
  const int neg = *phi.index_of(negation_map(n.additive()));
  CHECK(factorize(n, 7) == Factor{2, neg});
  CHECK(factorize(n, 3) == Factor{3, phi.identity_index()});
  CHECK(factorize(n, 1) == Factor{8, neg});
  CHECK_THROWS_AS(factorize(n, 0), ArgumentError);
  for (Element a = 1; a < 9; ++a) {
    const Factor f = factorize(n, a);
    CHECK(phi.apply(f.rep, f.phi_index) == a);
    int hits = 0;
    for (Element r : n.provenance().choice.reps)
      for (int i = 0; i < phi.size(); ++i) hits += phi.apply(r, i) == a;
    CHECK(hits == 1);
  }
}

TEST_CASE("Z9 example classes, identities and planarity") {
  const PlanarNearring n = fixtures::z9_example();
  const MultiplierClasses mc = multiplier_classes(n);
  const std::vector<ElementSet> expected{{0, 3, 6}, {1, 4, 7}, {2, 5, 8}};
  CHECK(mc.classes == expected);
  for (Element a = 0; a < 9; ++a)
    for (Element b = 0; b < 9; ++b) {
      bool same = true;
      for (int x = 0; x < 9; ++x) same = same && z9_product(x, a) == z9_product(x, b);
      CHECK((mc.class_of[a] == mc.class_of[b]) == same);
    }
  CHECK(right_identities(n) == ElementSet{2, 5, 8});
  const auto r = is_planar(n, PlanarityMode::exhaustive);
  CHECK(r.planar);
  CHECK(r.classes == 3);
  CHECK(oracle::planar(oracle::from(n.additive().table()), oracle::from(n.mul_table())));
}

TEST_CASE("field of order 3 has three singleton classes") {
  const PlanarNearring n = construct(neg_pair("C3"), RepChoice{{1}, {}});
  CHECK(multiplier_classes(n).classes.size() == 3);
  CHECK(right_identities(n) == ElementSet{1});
  CHECK(is_planar(n).planar);
}

TEST_CASE("non-planar constructions") {
  const FiniteGroup c3 = catalog_group("C3");
  const PlanarNearring zero(c3, CayleyTable(3, 0));
  const auto r = is_planar(zero, PlanarityMode::exhaustive);
  CHECK_FALSE(r.planar);
  CHECK(r.classes == 1);

  const FiniteGroup c2 = catalog_group("C2");
  const Permutation id{0, 1};
  const PlanarNearring two = construct(FerreroPair(c2, AutomorphismGroup::generated_by(2, std::vector<Permutation>{id})),
                                       RepChoice{{1}, {}});
  const auto t = is_planar(two, PlanarityMode::exhaustive);
  CHECK_FALSE(t.planar);
  CHECK(t.classes == 2);
  CHECK_FALSE(oracle::planar(oracle::from(two.additive().table()), oracle::from(two.mul_table())));
}

TEST_CASE("planarity witness on a non-planar table") {
  // Trivial Phi: every nonzero b is a right identity, leaving two classes.
  const FiniteGroup g = catalog_group("C3");
  const Permutation id{0, 1, 2};
  const PlanarNearring n =
      construct(FerreroPair(g, AutomorphismGroup::generated_by(3, std::vector<Permutation>{id})), RepChoice{{1, 2}, {}});
  const auto r = is_planar(n, PlanarityMode::exhaustive);
  CHECK_FALSE(r.planar);
  CHECK(r.classes == 2);
  CHECK(r.planar == oracle::planar(oracle::from(g.table()), oracle::from(n.mul_table())));
}

TEST_CASE("order-15 example right identities") {
  const PlanarNearring n = fixtures::order15_example();
  // Representatives outside M with nonzero products: 5,6,7,8,9 = (1, b).
  CHECK(right_identities(n) == ElementSet{5, 6, 7, 8, 9});
  CHECK(is_planar(n, PlanarityMode::exhaustive).planar);
}

TEST_CASE("construction rejects bad representative choices") {
  const FerreroPair fp = neg_pair("C9");
  CHECK_THROWS_AS(construct(fp, RepChoice{{2, 3, 5}, {}}), ConstructionError);
  CHECK_THROWS_AS(construct(fp, RepChoice{{2, 7, 3, 5, 8}, {}}), ConstructionError);
  CHECK_THROWS_AS(construct(fp, RepChoice{{2, 3, 5, 8}, {4}}), ConstructionError);
  CHECK_THROWS_AS(construct(fp, RepChoice{{0, 2, 3, 5, 8}, {}}), ConstructionError);
}

TEST_CASE("Ferrero pair validation") {
  const FiniteGroup g = catalog_group("C9");
  Permutation times4(9);
  for (int x = 0; x < 9; ++x) times4[x] = x * 4 % 9;
  CHECK_THROWS_AS(FerreroPair(g, AutomorphismGroup::generated_by(9, std::vector<Permutation>{times4})),
                  ConstructionError);
  const Permutation swap{0, 2, 1, 3, 4, 5, 6, 7, 8};
  CHECK_THROWS_AS(automorphisms_generated_by(g, std::vector<Permutation>{swap}), ValidationError);
}

TEST_CASE("provenance is recovered from bare tables") {
  const PlanarNearring built = fixtures::z9_example();
  const PlanarNearring bare(built.additive(), built.mul_table());
  REQUIRE(bare.has_provenance());
  CHECK(bare.provenance().phi == built.provenance().phi);
  CHECK(bare.provenance().choice.zero_reps.size() == 1);
  const FiniteGroup c3 = catalog_group("C3");
  const PlanarNearring zero(c3, CayleyTable(3, 0));
  CHECK_FALSE(zero.has_provenance());
  CHECK_THROWS_AS(zero.provenance(), ArgumentError);
}

TEST_CASE("automatic planarity above the exhaustive limit") {
  const FiniteGroup g = catalog_group(49, "C49");
  const PlanarNearring n = construct(FerreroPair(g, automorphisms_generated_by(g, std::vector<Permutation>{negation_map(g)})),
                                     [&] {
                                       RepChoice rc;
                                       for (Element a = 1; a <= 24; ++a) rc.reps.push_back(a);
                                       return rc;
                                     }());
  const auto r = is_planar(n);
  CHECK(r.planar);
  CHECK(r.by_construction);
  CayleyTable broken = n.mul_table();
  broken(1, 1) = 2;
  const PlanarNearring bare(g, broken);
  REQUIRE_FALSE(bare.has_provenance());
  CHECK_THROWS_AS(is_planar(bare), IndeterminateError);
  CHECK_FALSE(is_planar(bare, PlanarityMode::exhaustive).planar);
}

TEST_CASE("nearfields as nearrings") {
  const PlanarNearring f7 = as_nearring(make_field(7));
  for (Element a = 0; a < 7; ++a)
    for (Element b = 0; b < 7; ++b) CHECK(f7.mul(a, b) == a * b % 7);
  CHECK(right_identities(f7) == ElementSet{1});
  CHECK(is_planar(as_nearring(make_dickson_nearfield_9()), PlanarityMode::exhaustive).planar);
}
