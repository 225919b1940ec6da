#pragma once

#include "pnr/ferrero.hpp"

namespace fixtures {

// C9, Phi = {1, -1}, R = {2,3,5,8}, M = {3}.
inline pnr::PlanarNearring z9_example() {
  const pnr::FiniteGroup g = pnr::catalog_group("C9");
  const pnr::Permutation neg = pnr::negation_map(g);
  pnr::FerreroPair fp(g, pnr::automorphisms_generated_by(g, std::vector<pnr::Permutation>{neg}));
  return pnr::construct(fp, pnr::RepChoice{{2, 3, 5, 8}, {3}});
}

// C3 x C5 (index 5a + b), Phi = {1, -1}, the orbits inside {0} x C5 are zero multipliers.
inline pnr::PlanarNearring order15_example() {
  const pnr::FiniteGroup g = pnr::catalog_group("C3xC5");
  pnr::FerreroPair fp(g, pnr::automorphisms_generated_by(g, std::vector<pnr::Permutation>{pnr::negation_map(g)}));
  return pnr::construct(fp, pnr::RepChoice{{1, 2, 5, 6, 7, 8, 9}, {1, 2}});
}

// C3 x C3, Phi = {1, -1}, a * b = a f(b) with f(x, y) = x: a planar ring.
inline pnr::PlanarNearring planar_ring_9() {
  const pnr::FiniteGroup g = pnr::catalog_group("C3xC3");
  pnr::FerreroPair fp(g, pnr::automorphisms_generated_by(g, std::vector<pnr::Permutation>{pnr::negation_map(g)}));
  return pnr::construct(fp, pnr::RepChoice{{1, 3, 4, 5}, {1}});
}

}  // namespace fixtures
