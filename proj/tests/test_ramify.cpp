#include <random>

#include "doctest.h"
#include "nakajima/artin_schreier.hpp"
#include "nakajima/error.hpp"
#include "nakajima/pgroup.hpp"
#include "nakajima/ramify.hpp"

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

OrbitDatum orbit(long long len, std::vector<long long> chain) {
  OrbitDatum o;
  o.length = len;
  for (long long c : chain) o.chain.emplace_back(c);
  return o;
}

CoverData cover(int p, long long order, long long gbar, long long gammabar, std::vector<OrbitDatum> orbits) {
  CoverData c;
  c.p = p;
  c.order = order;
  c.gbar = gbar;
  c.gammabar = gammabar;
  c.orbits = std::move(orbits);
  return c;
}

// The cover of an extremal curve: two short orbits of length |S|/p, rational
// quotient, chains [p, p, 1].
CoverData nakajima_cover(int p, long long order) {
  return cover(p, order, 0, 0, {orbit(order / p, {p, p, 1}), orbit(order / p, {p, p, 1})});
}

}  // namespace

TEST_CASE("different exponents") {
  CHECK(different_exponent(orbit(1, {3, 3, 1})) == 4);
  CHECK(different_exponent(orbit(9, {1})) == 0);
  CHECK(different_exponent(orbit(1, {9, 9, 1})) == 16);
}

TEST_CASE("Hurwitz and Deuring-Shafarevich examples") {
  const auto am = cover(3, 9, 0, 0, {orbit(3, {3, 3, 1}), orbit(3, {3, 3, 1})});
  CHECK(hurwitz_genus(am) == 4);
  CHECK(ds_prank(am) == 4);
  CHECK(hurwitz_genus(nakajima_cover(3, 27)) == 10);
  CHECK(ds_prank(cover(3, 81, 0, 0, {orbit(27, {3, 3, 1}), orbit(27, {3, 3, 1})})) == 28);
  for (long long n : {3, 9, 27, 125}) CHECK(hurwitz_genus(cover(3, n, 2, 2, {})) == n + 1);
  CHECK(ds_prank(cover(3, 27, 1, 1, {})) == 1);

  CHECK(code_of([] { hurwitz_genus(cover(3, 3, 0, 0, {orbit(1, {2, 1})})); }) == Errc::NonIntegralGenus);
  CHECK(code_of([] { ds_prank(cover(3, 9, 0, 0, {})); }) == Errc::NonsensePRank);
  CHECK(code_of([] { cover(3, 9, 0, 0, {orbit(3, {3, 1})}).validate(); }) == Errc::InvalidInput);
  CHECK(code_of([] { cover(3, 9, 0, 0, {orbit(2, {3, 3, 1})}).validate(); }) == Errc::InvalidInput);
  CHECK(code_of([] { cover(3, 12, 0, 0, {}).validate(); }) == Errc::InvalidInput);
  CHECK(code_of([] { cover(3, 9, 1, 2, {}).validate(); }) == Errc::InvalidInput);
}

TEST_CASE("Hurwitz agrees with the one-step Artin-Schreier genus") {
  // y^p - y = phi over an algebraically closed field: every pole of degree d
  // splits into d totally ramified points with chain [p] * (m + 1).
  std::mt19937 rng(11);
  for (int p : {3, 5, 7}) {
    auto F = Field::make(p, 1);
    std::uniform_int_distribution<int> coef(0, p - 1), deg(1, 7);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Field::Code> num(deg(rng) + 1), den(deg(rng) % 3 + 1);
      for (auto& c : num) c = static_cast<Field::Code>(coef(rng));
      for (auto& c : den) c = static_cast<Field::Code>(coef(rng));
      num.back() = 1;
      den.back() = 1;
      RatFunc phi(Poly(*F, num), Poly(*F, den));
      if (phi.is_zero()) continue;
      CoverData c = cover(p, p, 0, 0, {});
      for (const Place& P : poles(phi)) {
        const int m = as_reduce(phi, P).m;
        if (m == 0) continue;
        std::vector<long long> chain(m + 1, p);
        chain.push_back(1);
        for (int k = 0; k < P.degree(); ++k) c.orbits.push_back(orbit(1, chain));
      }
      if (c.orbits.empty()) continue;
      CHECK(hurwitz_genus(c) == as_step_genus(phi, p));
    }
  }
}

TEST_CASE("bounds") {
  auto b = bounds(3, 10, 10);
  REQUIRE(b.nakajima);
  CHECK(*b.nakajima == 27);
  CHECK(*b.nakajima_genus_form == 27);
  CHECK(b.hyp_threshold == Rational(81, 5));
  CHECK(b.stichtenoth == 15);
  CHECK(to_string(b.hyp_threshold) == "81/5");
  CHECK(*bounds(3, 4, 4).nakajima == 9);
  CHECK(*bounds(3, 5, 1).nakajima == 4);
  CHECK(!bounds(3, 5, 0).nakajima);
  CHECK(*bounds(5, 76, 76).nakajima == 125);
  CHECK(*bounds(5, 10, 4).nakajima == 5);
  CHECK(*bounds(5, 10, 4).nakajima_genus_form == 15);
  CHECK(code_of([] { bounds(3, 1, 1); }) == Errc::GenusTooSmall);
  CHECK(code_of([] { bounds(3, 4, 5); }) == Errc::BadParameter);
}

TEST_CASE("extremality grid") {
  const std::vector<long long> gs3 = {2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 20, 27, 28, 29, 81, 82, 243, 244};
  const std::vector<long long> gs5 = {2, 3, 4, 5, 6, 10, 15, 17, 20, 25, 26, 50, 75, 76, 77, 100, 125, 375, 377, 1875};
  std::vector<std::tuple<int, long long, long long>> hits;
  int n = 0;
  for (long long s = 9; s <= 729; s *= 3)
    for (long long g : gs3) {
      ++n;
      if (extremal_check(3, s, g)) hits.emplace_back(3, s, g);
    }
  for (long long s = 25; s <= 15625; s *= 5)
    for (long long g : gs5) {
      ++n;
      if (extremal_check(5, s, g)) hits.emplace_back(5, s, g);
    }
  CHECK(n == 200);
  const std::vector<std::tuple<int, long long, long long>> want = {
      {3, 9, 4}, {3, 27, 10}, {3, 81, 28}, {3, 243, 82}, {3, 729, 244}, {5, 125, 76}};
  CHECK(hits == want);
  CHECK(!extremal_check(3, 27, 11));
}

TEST_CASE("classification") {
  CHECK(classify_princ(3, 3, 2, 2, true) == PrincCase::II);
  CHECK(classify_princ(3, 27, 10, 10, false) == PrincCase::III);
  CHECK(classify_princ(3, 27, 30, 30, false) == PrincCase::HypothesisFails);
  CHECK(classify_princ(3, 27, 10, 0, true) == PrincCase::I);
  CHECK(classify_princ(3, 27, 10, 5, false) == PrincCase::Contradiction);
  CHECK(classify_princ(3, 3, 2, 2, false) == PrincCase::Contradiction);
  CHECK(case_name(PrincCase::HypothesisFails) == "hypothesis-fails");
  for (long long s : {9, 27, 81, 243, 729}) {
    const auto c = nakajima_cover(3, s);
    CHECK(classify_princ(3, s, hurwitz_genus(c), ds_prank(c), false) == PrincCase::III);
  }
}

TEST_CASE("property: cover formulas") {
  std::mt19937 rng(5);
  for (int p : {3, 5}) {
    for (int trial = 0; trial < 200; ++trial) {
      const int e = 1 + static_cast<int>(rng() % 5);
      long long order = 1;
      for (int i = 0; i < e; ++i) order *= p;
      const long long gbar = 1 + rng() % 5, gammabar = rng() % (gbar + 1);
      CoverData c = cover(p, order, gbar, gammabar, {});
      // no short orbits: both formulas are multiplicative
      if (gammabar >= 1) {
        CHECK(hurwitz_genus(c) - 1 == BigInt(order) * (gbar - 1));
        CHECK(ds_prank(c) - 1 == BigInt(order) * (gammabar - 1));
      }
      // adding short orbits never lowers the genus
      BigInt last = hurwitz_genus(c);
      for (int k = 0; k < 3; ++k) {
        const int j = 1 + static_cast<int>(rng() % e);  // |S_P| = p^j
        long long stab = 1;
        for (int i = 0; i < j; ++i) stab *= p;
        std::vector<long long> chain{stab, stab};
        for (long long s = stab / p; s >= 1 && rng() % 2; s /= p) chain.push_back(s);
        if (chain.back() != 1) chain.push_back(1);
        c.orbits.push_back(orbit(order / stab, chain));
        BigInt g;
        try {
          g = hurwitz_genus(c);
        } catch (const Error&) {
          c.orbits.pop_back();
          continue;
        }
        CHECK(g >= last);
        last = g;
      }
    }
    // extremal covers are ordinary and extremal
    for (long long s = p * p; s <= 15625; s *= p) {
      const auto c = nakajima_cover(p, s);
      CHECK(hurwitz_genus(c) == ds_prank(c));
      CHECK(extremal_check(p, s, hurwitz_genus(c)));
    }
  }
}

TEST_CASE("quotients of the X_c cover") {
  for (int p : {3, 5}) {
    const FiniteGroup G = ut3(p);
    const int a = G.generators()[0], b = G.generators()[1];
    const int z = G.commutator(a, b);
    // points of the two short orbits: cosets of <a> and of <b>
    const auto act1 = coset_action(G, generate(G, {a}));
    const auto act2 = coset_action(G, generate(G, {b}));
    std::vector<Perm> action;
    for (int e = 0; e < G.order(); ++e) {
      Perm pi = act1[e];
      for (int x : act2[e]) pi.push_back(x + static_cast<int>(act1[e].size()));
      action.push_back(std::move(pi));
    }
    const auto c = nakajima_cover(p, G.order());
    std::vector<QuotientDecl> qs = {{"M1", {a, z}}, {"M2", {b, z}}};
    for (int k = 1; k < p; ++k) qs.push_back({"M" + std::to_string(k + 2), {G.mul(a, G.pow(b, k)), z}});
    const auto r = cover_consistency(c, BigInt((p - 2) * p * p + 1), BigInt((p - 2) * p * p + 1), &G, &action, qs);
    CHECK(r.ok());
    REQUIRE(r.quotients.size() == static_cast<std::size_t>(p + 1));
    for (std::size_t i = 0; i < r.quotients.size(); ++i) {
      const auto& q = r.quotients[i];
      CHECK(q.ok);
      if (i < 2) {
        CHECK(!q.semiregular);
        CHECK(q.gbar == 0);
        CHECK(q.gammabar == 0);
        CHECK(q.data.orbits.size() == static_cast<std::size_t>(p));
      } else {
        CHECK(q.semiregular);
        CHECK(q.gbar == p - 1);
        CHECK(q.gammabar == p - 1);
      }
    }
    // a wrong expectation is listed, not thrown
    const auto bad = cover_consistency(c, BigInt(11), std::nullopt);
    CHECK(!bad.ok());
    CHECK(bad.mismatches.size() == 1);
  }
  CHECK(unramified_quotient_genus(10, 3) == 4);
  CHECK(code_of([] { unramified_quotient_genus(10, 4); }) == Errc::NonIntegralGenus);
}
