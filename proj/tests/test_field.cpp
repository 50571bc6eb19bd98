#include <random>

#include "doctest.h"
#include "nakajima/error.hpp"
#include "nakajima/fq.hpp"
#include "nakajima/poly.hpp"
#include "nakajima/ratfunc.hpp"

using namespace nakajima;

namespace {

// Brute-force irreducibility over F_q for small degrees: no monic divisor
// of degree 1..deg/2, found by enumerating every candidate.
bool irreducible_by_trial(const Poly& f) {
  const Field& F = f.field();
  const int n = f.degree();
  if (n <= 0) return false;
  const auto q = F.order();
  for (int d = 1; d <= n / 2; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<Field::Code> c(d + 1);
      std::uint64_t v = idx;
      for (int i = 0; i < d; ++i) {
        c[i] = static_cast<Field::Code>(v % q);
        v /= q;
      }
      c[d] = 1;
      if ((f % Poly(F, c)).is_zero()) return false;
    }
  }
  return true;
}

int moebius(int n) {
  int r = 1;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    n /= d;
    if (n % d == 0) return 0;
    r = -r;
  }
  return n > 1 ? -r : r;
}

Poly random_poly(const Field& F, std::mt19937_64& rng, int deg) {
  std::vector<Field::Code> c(deg + 1);
  for (auto& x : c) x = static_cast<Field::Code>(rng() % F.order());
  if (c.back() == 0) c.back() = 1;
  return Poly(F, c);
}

}  // namespace

TEST_CASE("field construction rejects bad parameters") {
  CHECK_THROWS_AS(Field::make(2, 1), Error);
  try {
    Field::make(2, 3);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EvenCharacteristic);
  }
  try {
    Field::make(9, 1);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonPrime);
  }
  try {
    Field::make(3, 9);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DegreeOutOfRange);
  }
  CHECK_THROWS_AS(Field::make(3, 0), Error);
}

TEST_CASE("moduli are the least irreducibles") {
  CHECK(Field::make(3, 2)->modulus() == std::vector<int>{1, 0, 1});
  CHECK(Field::make(3, 3)->modulus() == std::vector<int>{1, 2, 0, 1});
  // Oracle: scan candidates in the same order and stop at the first
  // polynomial that survives trial division.
  for (auto [p, k] : {std::pair{3, 2}, {3, 3}, {5, 2}, {5, 3}, {7, 2}, {3, 4}}) {
    auto P = Field::make(p, 1);
    std::uint64_t count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    std::vector<int> expect;
    for (std::uint64_t idx = 0; idx < count && expect.empty(); ++idx) {
      std::vector<int> hi(k);  // hi[0] = c_{k-1}
      std::uint64_t v = idx;
      for (int i = k - 1; i >= 0; --i) {
        hi[i] = static_cast<int>(v % p);
        v /= p;
      }
      std::vector<Field::Code> c(k + 1);
      for (int i = 0; i < k; ++i) c[k - 1 - i] = hi[i];
      c[k] = 1;
      if (irreducible_by_trial(Poly(*P, c))) expect.assign(c.begin(), c.end());
    }
    CHECK(Field::make(p, k)->modulus() == expect);
  }
}

TEST_CASE("field axioms hold on random samples") {
  std::mt19937_64 rng(7);
  for (auto [p, k] : {std::pair{3, 1}, {3, 2}, {3, 4}, {5, 3}, {7, 2}, {3, 8}}) {
    auto F = Field::make(p, k);
    const auto q = F->order();
    for (int it = 0; it < 300; ++it) {
      Field::Code a = rng() % q, b = rng() % q, c = rng() % q;
      CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
      CHECK(F->mul(F->mul(a, b), c) == F->mul(a, F->mul(b, c)));
      CHECK(F->add(a, F->neg(a)) == 0);
      if (a != 0) CHECK(F->mul(a, F->inv(a)) == 1);
      CHECK(F->frobenius(F->add(a, b)) == F->add(F->frobenius(a), F->frobenius(b)));
      CHECK(F->pth_root(F->frobenius(a)) == a);
      CHECK(F->pow(a, q) == a);
    }
    // primitive element has order exactly q - 1
    const auto g = F->primitive_element();
    std::uint64_t ord = 1;
    for (Field::Code x = g; x != 1; x = F->mul(x, g)) ++ord;
    CHECK(ord == q - 1);
    CHECK(F->subfield(1).size() == static_cast<std::size_t>(p));
  }
  auto F9 = Field::make(3, 2);
  CHECK(F9->from_int(-1) == 2);
  CHECK_THROWS_AS(F9->inv(0), Error);
}

TEST_CASE("irreducible counts match the necklace formula") {
  for (auto [p, k] : {std::pair{3, 1}, {5, 1}, {3, 2}}) {
    auto F = Field::make(p, k);
    const auto q = static_cast<long long>(F->order());
    for (int n = 1; n <= (q > 5 ? 3 : 5); ++n) {
      long long expect = 0;
      for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        long long t = 1;
        for (int i = 0; i < n / d; ++i) t *= q;
        expect += moebius(d) * t;
      }
      expect /= n;
      long long count = 0, count_trial = 0;
      long long total = 1;
      for (int i = 0; i < n; ++i) total *= q;
      for (long long idx = 0; idx < total; ++idx) {
        std::vector<Field::Code> c(n + 1);
        long long v = idx;
        for (int i = 0; i < n; ++i) {
          c[i] = static_cast<Field::Code>(v % q);
          v /= q;
        }
        c[n] = 1;
        Poly f(*F, c);
        count += is_irreducible(f);
        if (n <= 4) count_trial += irreducible_by_trial(f);
      }
      CHECK(count == expect);
      if (n <= 4) CHECK(count_trial == expect);
    }
  }
}

TEST_CASE("factorization reproduces its input") {
  std::mt19937_64 rng(11);
  for (auto [p, k] : {std::pair{3, 1}, {5, 1}, {3, 2}, {7, 1}}) {
    auto F = Field::make(p, k);
    for (int it = 0; it < 40; ++it) {
      Poly f = random_poly(*F, rng, 1 + static_cast<int>(rng() % 9));
      // include repeated factors and p-th powers
      if (it % 3 == 0) f = f * f.pow(static_cast<std::uint64_t>(p));
      auto fs = factor(f);
      Poly prod = Poly::constant(*F, f.lead());
      for (const auto& [g, m] : fs) {
        CHECK(g.lead() == 1);
        if (g.degree() <= 4) CHECK(irreducible_by_trial(g));
        prod = prod * g.pow(static_cast<std::uint64_t>(m));
      }
      CHECK(prod == f);
    }
  }
}

TEST_CASE("gcd, inverses and division") {
  std::mt19937_64 rng(3);
  auto F = Field::make(5, 2);
  for (int it = 0; it < 100; ++it) {
    Poly a = random_poly(*F, rng, static_cast<int>(rng() % 7));
    Poly b = random_poly(*F, rng, 1 + static_cast<int>(rng() % 6));
    auto [qq, r] = a.divmod(b);
    CHECK(qq * b + r == a);
    CHECK(r.degree() < b.degree());
    auto e = ext_gcd(a, b);
    CHECK(e.s * a + e.t * b == e.g);
    CHECK((a % e.g).is_zero());
    CHECK((b % e.g).is_zero());
  }
  auto P = Field::make(3, 1);
  Poly m = Poly::from_ints(*P, {1, 0, 1});  // x^2 + 1
  Poly a = Poly::from_ints(*P, {1, 1});
  CHECK(((a * inv_mod(a, m)) % m).is_one());
  CHECK_THROWS_AS(inv_mod(m, m), Error);
  CHECK_THROWS_AS(a.divmod(Poly(*P)), Error);
}

TEST_CASE("valuations and places") {
  auto F = Field::make(3, 1);
  Poly x = Poly::x(*F);
  Poly xm1 = Poly::from_ints(*F, {-1, 1});
  Place P1 = Place::finite(xm1);
  Place inf = Place::infinite(*F);
  RatFunc f(xm1.pow(3), x.pow(2));
  CHECK(valuation(f, P1).value() == 3);
  CHECK(valuation(f, Place::finite(x)).value() == -2);
  CHECK(valuation(f, inf).value() == -1);
  CHECK(valuation(RatFunc(*F), P1).is_infinite());
  CHECK_THROWS_AS(valuation(RatFunc(*F), P1).value(), Error);
  CHECK_THROWS_AS(Place::finite(Poly::from_ints(*F, {1, 0, 1}).pow(2)), Error);
  // sum of degree-weighted valuations of a nonzero function is zero
  std::mt19937_64 rng(5);
  for (auto [p, k] : {std::pair{3, 1}, {5, 1}, {3, 2}}) {
    auto G = Field::make(p, k);
    for (int it = 0; it < 40; ++it) {
      RatFunc g(random_poly(*G, rng, static_cast<int>(rng() % 6)), random_poly(*G, rng, static_cast<int>(rng() % 6)));
      RatFunc h(random_poly(*G, rng, static_cast<int>(rng() % 5)), random_poly(*G, rng, static_cast<int>(rng() % 5)));
      long long total = 0;
      for (const auto& P : support(g)) total += static_cast<long long>(P.degree()) * valuation(g, P).value();
      CHECK(total == 0);
      for (const auto& P : support(g * h)) {
        CHECK(valuation(g * h, P).value() == valuation(g, P).value() + valuation(h, P).value());
      }
    }
  }
}

TEST_CASE("leading local coefficients") {
  auto F = Field::make(3, 1);
  // 2x^2 + x at infinity: leading term 2 (1/x)^{-2}
  RatFunc f(Poly::from_ints(*F, {0, 1, 2}));
  CHECK(leading_local_coefficient(f, Place::infinite(*F)) == Poly::constant(*F, 2));
  // 1/(x^2 - 1) at x = 1: 1/((x-1)(x+1)) ~ (1/2) / (x-1) = 2 / (x-1)
  RatFunc g(Poly::constant(*F, 1), Poly::from_ints(*F, {-1, 0, 1}));
  CHECK(leading_local_coefficient(g, Place::finite(Poly::from_ints(*F, {-1, 1}))) == Poly::constant(*F, 2));
  // degree two place: x / (x^2 + 1)^2 has residue-class leading coefficient x
  Poly pi = Poly::from_ints(*F, {1, 0, 1});
  RatFunc h(Poly::x(*F), pi.pow(2));
  CHECK(leading_local_coefficient(h, Place::finite(pi)) == Poly::x(*F));
}

TEST_CASE("partial fractions recombine") {
  auto F = Field::make(3, 1);
  RatFunc g(Poly::constant(*F, 1), Poly::from_ints(*F, {-1, 0, 1}));
  auto pf = partial_fractions(g);
  REQUIRE(pf.parts.size() == 2);
  CHECK(pf.polynomial.is_zero());
  CHECK(recombine(pf) == g);
  std::mt19937_64 rng(9);
  for (auto [p, k] : {std::pair{3, 1}, {5, 1}, {3, 2}, {7, 1}}) {
    auto G = Field::make(p, k);
    for (int it = 0; it < 40; ++it) {
      RatFunc f(random_poly(*G, rng, static_cast<int>(rng() % 8)), random_poly(*G, rng, static_cast<int>(rng() % 7)));
      auto d = partial_fractions(f);
      CHECK(recombine(d) == f);
      for (const auto& part : d.parts) {
        CHECK(!part.place.is_infinite());
        CHECK(part.part.num().degree() < part.part.den().degree());
        CHECK(poles(part.part) == std::vector<Place>{part.place});
      }
    }
  }
}

TEST_CASE("small worked examples") {
  auto F3 = Field::make(3, 1);
  CHECK(F3->inv(2) == 2);
  auto F27 = Field::make(3, 3);
  for (Field::Code a = 0; a < 27; ++a) CHECK(F27->frobenius(F27->frobenius(F27->frobenius(a))) == a);

  const RatFunc x = RatFunc::x(*F3);
  CHECK(x.inv() == RatFunc(Poly::constant(*F3, 1), Poly::x(*F3)));
  CHECK((x + x.inv()) + (-x.inv()) == x);
  CHECK(valuation(x, Place::infinite(*F3)).value() == -1);
  CHECK(valuation(x.inv(), Place::finite(Poly::x(*F3))).value() == -1);
  const RatFunc f(Poly::constant(*F3, 1), Poly::from_ints(*F3, {0, -1, 0, 1}));  // 1/(x^3 - x)
  for (long long r : {0, 1, 2})
    CHECK(valuation(f, Place::finite(Poly::from_ints(*F3, {-r, 1}))).value() == -1);
  CHECK(valuation(f, Place::infinite(*F3)).value() == 3);

  auto pf = partial_fractions(x + x.inv());
  CHECK(pf.polynomial == Poly::x(*F3));
  REQUIRE(pf.parts.size() == 1);
  CHECK(pf.parts[0].place == Place::finite(Poly::x(*F3)));
  CHECK(pf.parts[0].part == x.inv());
  // 1/(x^2 - 1) = 2/(x - 1) + 1/(x + 1)
  auto pg = partial_fractions(RatFunc(Poly::constant(*F3, 1), Poly::from_ints(*F3, {-1, 0, 1})));
  REQUIRE(pg.parts.size() == 2);
  for (const auto& part : pg.parts) {
    if (part.place == Place::finite(Poly::from_ints(*F3, {-1, 1})))
      CHECK(part.part == RatFunc(Poly::constant(*F3, 2), Poly::from_ints(*F3, {-1, 1})));
    else
      CHECK(part.part == RatFunc(Poly::constant(*F3, 1), Poly::from_ints(*F3, {1, 1})));
  }
  auto pq = partial_fractions(x * x);
  CHECK(pq.parts.empty());
  CHECK(pq.polynomial == Poly::from_ints(*F3, {0, 0, 1}));
}
