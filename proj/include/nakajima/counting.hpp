#pragma once

#include <optional>
#include <string>

#include "nakajima/pgroup.hpp"
#include "nakajima/ramify.hpp"

namespace nakajima {

struct GroupProfile {
  int p = 0;
  int n = 0;  // |G| = p^n
  int d = 0;  // minimal number of generators
  std::optional<BigInt> alpha;  // |Aut(G)| when known
};

// Profile of a p-group; alpha is brute-forced when |G| <= 81.
GroupProfile profile_of(const FiniteGroup& G);

// Exact |Aut(G)|; OrderTooLarge above 81 elements.
BigInt aut_order_bruteforce(const FiniteGroup& G);

// Number of unramified extensions with group G of a curve of p-rank gamma:
// p^(gamma(n-d)) (p^gamma - 1)(p^gamma - p)...(p^gamma - p^(d-1)) / alpha,
// and 0 when d > gamma.
BigInt frbound_count(const GroupProfile& g, int gamma);

// p^(d(n-d)) prod_{j<d} (p^d - p^j)
BigInt bh_bound(int p, int n, int d);
// p^(d(n-d) + d(d-1)/2)
BigInt sylow_bh_bound(int p, int n, int d);

bool not_div_p_check(const BigInt& count, int p);

enum class Family { BaseCurve, ArtinMumford };
std::string family_name(Family f);
Family parse_family(const std::string& s);

BigInt family_genus(int p, int N, Family f);
// The unramified cover realizing the family member over its base curve
// (genus p-1, resp. (p-1)^2, both ordinary).
CoverData family_cover(int p, int N, Family f);

// |GL(n, p)|
BigInt gl_order(int n, int p);

}  // namespace nakajima
