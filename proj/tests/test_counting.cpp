#include <limits>
#include <numeric>
#include <set>

#include "doctest.h"
#include "nakajima/counting.hpp"
#include "nakajima/error.hpp"

using namespace nakajima;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::InvalidInput;
}

// Rows are base-3 integers; the span of the given rows as a membership table.
std::vector<bool> span3(const std::vector<int>& rows, int dim) {
  int size = 1;
  for (int i = 0; i < dim; ++i) size *= 3;
  std::vector<bool> in(size, false);
  in[0] = true;
  std::vector<int> cur{0};
  for (int r : rows) {
    std::vector<int> next;
    for (int v : cur)
      for (int k = 0; k < 3; ++k) {
        int w = 0, a = v, b = r, place = 1;
        for (int i = 0; i < dim; ++i) {
          w += ((a % 3 + k * (b % 3)) % 3) * place;
          a /= 3;
          b /= 3;
          place *= 3;
        }
        if (!in[w]) {
          in[w] = true;
          next.push_back(w);
        }
      }
    cur.insert(cur.end(), next.begin(), next.end());
  }
  return in;
}

// Number of invertible dim x dim matrices over F_3, row by row.
long long count_gl3(int dim) {
  int size = 1;
  for (int i = 0; i < dim; ++i) size *= 3;
  long long count = 0;
  std::vector<int> rows;
  auto rec = [&](auto&& self) -> void {
    const auto in = span3(rows, dim);
    if (static_cast<int>(rows.size()) == dim - 1) {
      for (int v = 0; v < size; ++v) count += !in[v];
      return;
    }
    for (int v = 0; v < size; ++v)
      if (!in[v]) {
        rows.push_back(v);
        self(self);
        rows.pop_back();
      }
  };
  rec(rec);
  return count;
}

}  // namespace

TEST_CASE("automorphism orders by brute force") {
  CHECK(aut_order_bruteforce(abelian_group({3, 3})) == count_gl3(2));
  CHECK(count_gl3(2) == 48);
  int phi9 = 0;
  for (int k = 1; k < 9; ++k) phi9 += std::gcd(k, 9) == 1;
  CHECK(aut_order_bruteforce(cyclic_group(9)) == phi9);
  CHECK(aut_order_bruteforce(ut3(3)) == 432);
  CHECK(aut_order_bruteforce(ut3(3)) == bh_bound(3, 3, 2));
  CHECK(code_of([] { aut_order_bruteforce(cyclic_group(243)); }) == Errc::OrderTooLarge);
}

TEST_CASE("Burnside-Hall bounds") {
  CHECK(bh_bound(3, 4, 4) == 24261120);
  CHECK(bh_bound(3, 4, 4) == count_gl3(4));
  CHECK(bh_bound(3, 3, 2) == 432);
  CHECK(bh_bound(3, 2, 1) == 6);
  CHECK(gl_order(4, 3) == bh_bound(3, 4, 4));
  CHECK(sylow_bh_bound(3, 4, 4) == 729);
  CHECK(sylow_bh_bound(3, 3, 2) == 27);
  // the Sylow form divides the full bound
  for (int p : {3, 5})
    for (int n = 1; n <= 6; ++n)
      for (int d = 1; d <= n; ++d) CHECK(bh_bound(p, n, d) % sylow_bh_bound(p, n, d) == 0);
  // p = 5 values overflow 64 bits
  CHECK(bh_bound(5, 12, 6) > BigInt(std::numeric_limits<std::uint64_t>::max()));
  CHECK(code_of([] { bh_bound(3, 2, 3); }) == Errc::BadParameter);
}

TEST_CASE("unramified extension counts") {
  const auto c33 = profile_of(abelian_group({3, 3}));
  CHECK(c33.n == 2);
  CHECK(c33.d == 2);
  CHECK(*c33.alpha == 48);
  CHECK(frbound_count(c33, 2) == 1);

  // C3: the index-3 subgroups of (Z/3)^2 are its lines
  const auto c3 = profile_of(cyclic_group(3));
  int lines = 0;
  {
    const auto V = abelian_group({3, 3});
    std::set<std::vector<int>> subs;
    for (int e = 1; e < V.order(); ++e) subs.insert(generate(V, {e}));
    lines = static_cast<int>(subs.size());
  }
  CHECK(frbound_count(c3, 2) == lines);
  CHECK(lines == 4);

  const auto ut = profile_of(ut3(3));
  CHECK(frbound_count(ut, 2) == 1);
  for (const BigInt& c : {BigInt(1), BigInt(4)}) CHECK(not_div_p_check(c, 3));
  CHECK(!not_div_p_check(9, 3));

  CHECK(frbound_count(profile_of(abelian_group({3, 3, 3})), 2) == 0);
  GroupProfile bad{3, 2, 2, BigInt(7)};
  CHECK(code_of([&] { frbound_count(bad, 2); }) == Errc::NonIntegralCount);
  GroupProfile unknown{3, 2, 2, std::nullopt};
  CHECK(code_of([&] { frbound_count(unknown, 2); }) == Errc::BadParameter);
}

TEST_CASE("property: catalog groups up to order 81") {
  std::vector<FiniteGroup> groups = {cyclic_group(3),          cyclic_group(9),         abelian_group({3, 3}),
                                     cyclic_group(27),         abelian_group({9, 3}),   abelian_group({3, 3, 3}),
                                     ut3(3),                   split_extension({9}, {{4}}, 3),
                                     abelian_group({9, 9}),    abelian_group({27, 3}),  wreath_cp_cp(3),
                                     build_presentation(s81_9_presentation()), build_presentation(s81_8_presentation())};
  for (const auto& G : groups) {
    const auto g = profile_of(G);
    CAPTURE(g.n);
    CAPTURE(g.d);
    CHECK(bh_bound(g.p, g.n, g.d) % *g.alpha == 0);
    for (int gamma = 1; gamma <= 4; ++gamma) {
      const BigInt c = frbound_count(g, gamma);
      if (g.d <= gamma) CHECK(c >= 1);
      else CHECK(c == 0);
      // p divides the count exactly when the p-part of alpha falls short
      // of the Sylow bound
      if (g.d == gamma) {
        BigInt pp = 1, a = *g.alpha;
        while (a % g.p == 0) {
          a /= g.p;
          pp *= g.p;
        }
        CHECK(not_div_p_check(c, g.p) == (pp == sylow_bh_bound(g.p, g.n, g.d)));
      }
    }
  }
  // profiles with d = gamma = 2 whose count is prime to p
  for (const auto& G : {abelian_group({3, 3}), ut3(3), abelian_group({9, 9})})
    CHECK(not_div_p_check(frbound_count(profile_of(G), 2), 3));
  // and one whose count is not
  CHECK(frbound_count(profile_of(abelian_group({27, 3})), 2) == 12);
}

TEST_CASE("family genera") {
  CHECK(family_genus(3, 1, Family::BaseCurve) == 10);
  CHECK(family_genus(3, 2, Family::BaseCurve) == 82);
  CHECK(family_genus(3, 1, Family::ArtinMumford) == 244);
  for (int p : {3, 5})
    for (int N : {1, 2})
      for (Family f : {Family::BaseCurve, Family::ArtinMumford}) {
        const auto c = family_cover(p, N, f);
        const BigInt g = family_genus(p, N, f);
        CHECK(ds_prank(c) == g);
        CHECK(hurwitz_genus(c) == g);
        if (f == Family::BaseCurve) {
          BigInt q = 1;
          for (int i = 0; i < (p - 1) * N; ++i) q *= p;
          CHECK(g - 1 == q * (p - 2));
        }
      }
  CHECK(parse_family("artin-mumford") == Family::ArtinMumford);
  CHECK(code_of([] { parse_family("x"); }) == Errc::BadParameter);
}
