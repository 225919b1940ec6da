#include <doctest.h>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "pnr/analysis.hpp"
#include "pnr/enumeration.hpp"
#include "pnr/error.hpp"

using namespace pnr;

namespace {

// Order-15 example by hand on Z3 x Z5 (index 5a + b): y with first coordinate 0
// kills, first coordinate 1 is a right identity, first coordinate 2 negates.
oracle::Table order15_mul() {
  oracle::Table t(15, std::vector<int>(15));
  for (int x = 0; x < 15; ++x)
    for (int y = 0; y < 15; ++y) {
      const int c = y / 5;
      const int neg = ((3 - x / 5) % 3) * 5 + (5 - x % 5) % 5;
      t[x][y] = c == 0 ? 0 : c == 1 ? x : neg;
    }
  return t;
}

std::vector<int> brute_gc(const oracle::Table& mul, const std::vector<int>& d) {
  std::vector<int> out;
  for (int x = 0; x < static_cast<int>(mul.size()); ++x) {
    bool ok = true;
    for (int y : d) ok = ok && mul[x][y] == mul[y][x];
    if (ok) out.push_back(x);
  }
  return out;
}

bool brute_two_sided(const oracle::Table& add, const oracle::Table& mul, const std::set<int>& s) {
  const int n = static_cast<int>(add.size());
  if (oracle::closure(add, s) != s) return false;
  for (int i : s)
    for (int x = 0; x < n; ++x) {
      if (!s.count(mul[i][x])) return false;
      for (int m = 0; m < n; ++m) {
        const int diff = add[mul[x][m]][oracle::negate(add, mul[x][add[m][i]])];
        if (!s.count(diff)) return false;
      }
    }
  return true;
}

}  // namespace

TEST_CASE("Z9 example: distributive elements and zero multipliers") {
  const PlanarNearring n = fixtures::z9_example();
  const auto add = oracle::from(n.additive().table());
  const auto mul = oracle::from(n.mul_table());
  CHECK(distributive_elements(n) == ElementSet{0, 3, 6});
  CHECK(zero_multipliers(n) == ElementSet{0, 3, 6});
  CHECK(oracle::distributive(add, mul) == std::vector<int>{0, 3, 6});
  CHECK(oracle::zero_multipliers(mul) == std::vector<int>{0, 3, 6});
}

TEST_CASE("Z9 example: ideals") {
  const PlanarNearring n = fixtures::z9_example();
  const Element zm[] = {0, 3, 6};
  CHECK(is_ideal(n, zm).kind == IdealKind::two_sided);
  CHECK(brute_two_sided(oracle::from(n.additive().table()), oracle::from(n.mul_table()), {0, 3, 6}));
  const Element bad[] = {0, 1};
  const IdealReport r = is_ideal(n, bad);
  CHECK(r.kind == IdealKind::not_subgroup);
  CHECK_FALSE(r.witness.empty());
}

TEST_CASE("Z9 example: generalized centre") {
  const PlanarNearring n = fixtures::z9_example();
  const GCReport gc = generalized_centre(n);
  CHECK(gc.case_tag == 1);
  CHECK(gc.gc == ElementSet{0, 3, 6});
  CHECK(brute_gc(oracle::from(n.mul_table()), {0, 3, 6}) == std::vector<int>{0, 3, 6});
  CHECK_FALSE(gc.bounds);
}

TEST_CASE("Z9 example: no semidirect decomposition and lemma statuses") {
  const PlanarNearring n = fixtures::z9_example();
  const SemidirectResult sd = semidirect_decomposition(n);
  CHECK_FALSE(sd.decomposition);
  CHECK_FALSE(sd.reason.empty());
  const LemmaReport r = verify_lemma_suite(n);
  CHECK_FALSE(r.any_failure());
  for (const char* k : {"a", "d", "e", "g"}) CHECK(r.at(k).status == LemmaStatus::pass);
  for (const char* k : {"b", "c", "f", "h"}) {
    CAPTURE(k);
    CHECK(r.at(k).status == LemmaStatus::not_applicable);
    CHECK_FALSE(r.at(k).detail.empty());
  }
  CHECK(r.at("c0").status == LemmaStatus::pass);
}

TEST_CASE("order-15 example") {
  const PlanarNearring n = fixtures::order15_example();
  const auto add = oracle::from(n.additive().table());
  const auto mul = oracle::from(n.mul_table());
  CHECK(mul == order15_mul());
  CHECK(add == oracle::product(3, 5));

  // C3 x {0} and {0} x C5.
  CHECK(distributive_elements(n) == ElementSet{0, 5, 10});
  CHECK(oracle::distributive(add, mul) == std::vector<int>{0, 5, 10});
  CHECK(zero_multipliers(n) == ElementSet{0, 1, 2, 3, 4});
  const Element zm[] = {0, 1, 2, 3, 4};
  CHECK(is_ideal(n, zm).kind == IdealKind::two_sided);
  CHECK(brute_two_sided(add, mul, {0, 1, 2, 3, 4}));

  const GCReport gc = generalized_centre(n);
  CHECK(gc.case_tag == 3);
  CHECK(gc.gc == ElementSet{0, 5, 10});
  CHECK(brute_gc(mul, {0, 5, 10}) == std::vector<int>{0, 5, 10});
  REQUIRE(gc.bounds);
  CHECK(gc.bounds->second == ElementSet{0, 5, 10});
}

TEST_CASE("order-15 example: semidirect decomposition") {
  const PlanarNearring n = fixtures::order15_example();
  const SemidirectResult sd = semidirect_decomposition(n);
  REQUIRE(sd.decomposition);
  const auto& s = *sd.decomposition;
  CHECK(s.kernel == ElementSet{0, 1, 2, 3, 4});
  CHECK(s.complement == ElementSet{0, 5, 10});
  CHECK(s.field.order() == 3);
  CHECK(s.field.is_field());
  std::set<Element> image(s.iso.begin(), s.iso.end());
  CHECK(image.size() == 15);
  // Independent check of the displayed product formula on the iso coordinates.
  for (std::size_t x = 0; x < 15; ++x)
    for (std::size_t y = 0; y < 15; ++y) {
      const std::size_t a = x / 3, b = x % 3, d = y % 3;
      Element expected = 0;
      if (d != 0) {
        const int sign = s.complement[d] == 5 ? 1 : -1;
        const Element ka = sign == 1 ? s.kernel[a] : static_cast<Element>((5 - s.kernel[a]) % 5);
        const Element fb = sign == 1 ? s.complement[b] : static_cast<Element>((15 - s.complement[b]) % 15);
        expected = n.add(ka, fb);
      }
      CHECK(n.mul(s.iso[x], s.iso[y]) == expected);
    }
  const LemmaReport r = verify_lemma_suite(n);
  CHECK_FALSE(r.any_failure());
  for (const char* k : {"a", "b", "c", "d", "e", "f", "g", "h"}) {
    CAPTURE(k);
    CHECK(r.at(k).status == LemmaStatus::pass);
  }
}

TEST_CASE("fields") {
  for (int q : {3, 4, 5, 7, 8, 9}) {
    const PlanarNearring f = as_nearring(make_field(q));
    CAPTURE(q);
    CHECK(distributive_elements(f).size() == static_cast<std::size_t>(q));
    CHECK(zero_multipliers(f) == ElementSet{0});
    const GCReport gc = generalized_centre(f);
    CHECK(gc.gc.size() == static_cast<std::size_t>(q));
    CHECK(gc.case_tag == 3);
    const SemidirectResult sd = semidirect_decomposition(f);
    REQUIRE(sd.decomposition);
    CHECK(sd.decomposition->kernel == ElementSet{0});
    CHECK(sd.decomposition->complement.size() == static_cast<std::size_t>(q));
    CHECK_FALSE(verify_lemma_suite(f).any_failure());
  }
}

TEST_CASE("Dickson nearfield: D is the kern, GC is everything") {
  const PlanarNearring d = as_nearring(make_dickson_nearfield_9());
  CHECK(distributive_elements(d) == kern(make_dickson_nearfield_9()));
  const GCReport gc = generalized_centre(d);
  CHECK(gc.case_tag == 3);
  CHECK(gc.gc.size() == 9);
  CHECK(brute_gc(oracle::from(d.mul_table()), oracle::distributive(oracle::from(d.additive().table()),
                                                                    oracle::from(d.mul_table())))
            .size() == 9);
  CHECK_FALSE(verify_lemma_suite(d).any_failure());
}

TEST_CASE("planar ring of order 9: case 2") {
  const PlanarNearring n = fixtures::planar_ring_9();
  CHECK(distributive_elements(n).size() == 9);
  CHECK(zero_multipliers(n) == ElementSet{0, 1, 2});
  const GCReport gc = generalized_centre(n);
  CHECK(gc.case_tag == 2);
  CHECK(gc.gc == ElementSet{0});
  CHECK(brute_gc(oracle::from(n.mul_table()), {0, 1, 2, 3, 4, 5, 6, 7, 8}) == std::vector<int>{0});
  CHECK_FALSE(verify_lemma_suite(n).any_failure());
}

TEST_CASE("case 4: trivial D(N)") {
  // C7 with Phi = {1, 2, 4} and M empty.
  const FiniteGroup g = catalog_group("C7");
  const Permutation times2{0, 2, 4, 6, 1, 3, 5};
  const PlanarNearring n =
      construct(FerreroPair(g, automorphisms_generated_by(g, std::vector<Permutation>{times2})), RepChoice{{1, 3}, {}});
  const auto brute = oracle::distributive(oracle::from(g.table()), oracle::from(n.mul_table()));
  CHECK(distributive_elements(n) == ElementSet(brute.begin(), brute.end()));
  REQUIRE(brute.size() == 1);
  const GCReport gc = generalized_centre(n);
  CHECK(gc.case_tag == 4);
  CHECK(gc.gc.size() == 7);
  CHECK_FALSE(verify_lemma_suite(n).any_failure());
}

TEST_CASE("primary decomposition and complements") {
  const FiniteGroup g = catalog_group("C3xC5");
  const auto pd = primary_decomposition(g);
  REQUIRE(pd);
  REQUIRE(pd->size() == 2);
  CHECK((*pd)[0].first == 3);
  CHECK((*pd)[0].second == ElementSet{0, 5, 10});
  CHECK((*pd)[1].second == ElementSet{0, 1, 2, 3, 4});
  const Element k[] = {0, 1, 2, 3, 4};
  CHECK(find_complement(g, k) == ElementSet{0, 5, 10});
  const Element k9[] = {0, 3, 6};
  CHECK_FALSE(find_complement(catalog_group("C9"), k9));
}

TEST_CASE("Z_{p^2} family") {
  for (int p : {3, 5, 7, 11}) {
    CAPTURE(p);
    const PlanarNearring n = zp2_family(p);
    const int q = p * p;
    auto power = [&](long long v, int k) {
      long long t = 1;
      while (k--) t = t * v % q;
      return t;
    };
    // b = r u with r = -1 mod p and u^(p-1) = 1 mod p^2; then a * b = a u.
    auto unit_of = [&](int b) {
      for (int u = 1; u < q; ++u)
        if (u % p && power(u, p - 1) == 1 && b * power(u, p * (p - 1) - 1) % q % p == p - 1) return u;
      return 0;
    };
    ElementSet expected;
    for (int x = 0; x < q; x += p) expected.push_back(x);
    for (Element b = 0; b < q; ++b) {
      const int u = b % p ? unit_of(b) : 0;
      for (Element a = 0; a < q; ++a) CHECK(n.mul(a, b) == static_cast<Element>(a * u % q));
    }
    CHECK(distributive_elements(n) == expected);
    CHECK(zero_multipliers(n) == expected);
    CHECK_FALSE(find_complement(n.additive(), expected));
  }
}

TEST_CASE("Z_{p^2} family for p = 3 is the Z9 example") {
  CHECK(nearrings_isomorphic(zp2_family(3), fixtures::z9_example()));
  CHECK_THROWS_AS(zp2_family(13), ArgumentError);
}
