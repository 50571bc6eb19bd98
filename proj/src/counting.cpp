#include "nakajima/counting.hpp"

namespace nakajima {

namespace {

BigInt ipow(int base, long long e) {
  BigInt r = 1;
  for (long long i = 0; i < e; ++i) r *= base;
  return r;
}

// prod_{j<d} (p^m - p^j)
BigInt flag_product(int p, int m, int d) {
  BigInt r = 1;
  const BigInt pm = ipow(p, m);
  for (int j = 0; j < d; ++j) r *= pm - ipow(p, j);
  return r;
}

}  // namespace

GroupProfile profile_of(const FiniteGroup& G) {
  GroupProfile g;
  g.p = prime_of(G);
  if (g.p == 0) fail(Errc::InvalidInput, "not a p-group");
  for (int m = G.order(); m > 1; m /= g.p) ++g.n;
  g.d = static_cast<int>(minimal_generating_set(G).size());
  if (G.order() <= 81) g.alpha = aut_order_bruteforce(G);
  return g;
}

BigInt aut_order_bruteforce(const FiniteGroup& G) {
  if (G.order() > 81) fail(Errc::OrderTooLarge, "brute-force automorphism count needs |G| <= 81");
  return BigInt(count_automorphisms(G));
}

BigInt frbound_count(const GroupProfile& g, int gamma) {
  if (g.p < 2 || g.d < 1 || g.d > g.n) fail(Errc::BadParameter, "profile needs 1 <= d <= n");
  if (gamma < 0) fail(Errc::BadParameter, "gamma must be non-negative");
  if (g.d > gamma) return 0;
  if (!g.alpha || *g.alpha < 1) fail(Errc::BadParameter, "|Aut(G)| unknown");
  const BigInt num = ipow(g.p, static_cast<long long>(gamma) * (g.n - g.d)) * flag_product(g.p, gamma, g.d);
  if (num % *g.alpha != 0) fail(Errc::NonIntegralCount, num.str() + " / " + g.alpha->str());
  return num / *g.alpha;
}

BigInt bh_bound(int p, int n, int d) {
  if (d < 1 || d > n) fail(Errc::BadParameter, "need 1 <= d <= n");
  return ipow(p, static_cast<long long>(d) * (n - d)) * flag_product(p, d, d);
}

BigInt sylow_bh_bound(int p, int n, int d) {
  if (d < 1 || d > n) fail(Errc::BadParameter, "need 1 <= d <= n");
  return ipow(p, static_cast<long long>(d) * (n - d) + d * (d - 1) / 2);
}

bool not_div_p_check(const BigInt& count, int p) {
  if (count < 1) fail(Errc::BadParameter, "count must be positive");
  return count % p != 0;
}

std::string family_name(Family f) { return f == Family::BaseCurve ? "base-curve" : "artin-mumford"; }

Family parse_family(const std::string& s) {
  if (s == "base-curve") return Family::BaseCurve;
  if (s == "artin-mumford") return Family::ArtinMumford;
  fail(Errc::BadParameter, "unknown family '" + s + "'");
}

BigInt family_genus(int p, int N, Family f) {
  if (N < 1) fail(Errc::BadParameter, "N must be positive");
  const long long e = f == Family::BaseCurve ? static_cast<long long>(p - 1) * N
                                             : static_cast<long long>(N) * (p - 1) * (p - 1) + 1;
  return ipow(p, e) * (p - 2) + 1;
}

CoverData family_cover(int p, int N, Family f) {
  if (N < 1) fail(Errc::BadParameter, "N must be positive");
  CoverData c;
  c.p = p;
  if (f == Family::BaseCurve) {
    c.order = ipow(p, static_cast<long long>(p - 1) * N);
    c.gbar = c.gammabar = p - 1;
  } else {
    c.order = ipow(p, static_cast<long long>(N) * (p - 1) * (p - 1));
    c.gbar = c.gammabar = (p - 1) * (p - 1);
  }
  return c;
}

BigInt gl_order(int n, int p) { return flag_product(p, n, n); }

}  // namespace nakajima
