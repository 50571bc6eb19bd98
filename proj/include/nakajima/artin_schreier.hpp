#pragma once

#include <cstdint>
#include <vector>

#include "nakajima/tower.hpp"

namespace nakajima {

struct AsReduction {
  int m = 0;        // reduced pole order at the place (0 or prime to p)
  RatFunc witness;  // phi - (w^p - w) has pole order exactly m there
};

// Local Artin-Schreier reduction of phi at P.
AsReduction as_reduce(const RatFunc& phi, const Place& P);

// Genus of y^p - y = phi over F_q(x):
//   2g - 2 = -2p + sum_P deg(P) (p - 1)(m_P + 1).
long long as_step_genus(const RatFunc& phi, int p);

// Genus of the compositum of y_i^p - y_i = phi_i over F_q(x) (an elementary
// abelian extension of degree p^m): the sum of the genera of its (p^m-1)/(p-1)
// subextensions of degree p, one per line of F_p-coefficients.
long long abelian_tower_genus(const std::vector<RatFunc>& phis, int p);

struct WpResult {
  bool found = false;
  std::uint64_t candidates = 0;  // size of the searched coefficient space
  TowerPtr tower;                // tower holding the witness (base-changed if needed)
  TowerElem witness;             // w with w^p - w = u when found
};

// Exhaustive search for w = sum a_j b_j, a_j in F_{p^coeff_ext}, with
// w^p - w = u. coeff_ext <= 0 means p. Limited to 10^8 candidates.
WpResult wp_image_test(const TowerElem& u, const std::vector<TowerElem>& basis, int coeff_ext = 0);

}  // namespace nakajima
