#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nakajima/fq.hpp"

namespace nakajima {

// Dense univariate polynomial over F_q. Coefficients are stored low to high
// without trailing zeros, so the zero polynomial has an empty vector and
// degree -1. The field is referenced, not owned.
class Poly {
 public:
  using Code = Field::Code;

  Poly() = default;
  explicit Poly(const Field& f) : f_(&f) {}
  Poly(const Field& f, std::vector<Code> coeffs);

  static Poly constant(const Field& f, Code c);
  static Poly x(const Field& f) { return monomial(f, 1, 1); }
  static Poly monomial(const Field& f, Code c, int deg);
  static Poly from_ints(const Field& f, std::initializer_list<long long> low_to_high);

  const Field& field() const { return *f_; }
  const Field* field_ptr() const noexcept { return f_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  Code lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
  Code coeff(int i) const noexcept {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0;
  }
  const std::vector<Code>& coeffs() const noexcept { return c_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scale(Code c) const;
  Poly shift(int n) const;  // multiply by x^n

  // Exact quotient and remainder; throws DivisionByZero for a zero divisor.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }

  Poly monic() const;
  Code eval(Code x) const;
  Poly derivative() const;
  Poly compose(const Poly& inner) const;
  Poly pow(std::uint64_t e) const;

  bool operator==(const Poly& o) const noexcept { return c_ == o.c_; }
  bool operator!=(const Poly& o) const noexcept { return c_ != o.c_; }
  // Deterministic total order: degree first, then coefficients from the top.
  bool operator<(const Poly& o) const noexcept;

  std::string to_string(const std::string& var = "x") const;
  std::size_t hash() const noexcept;

 private:
  void trim();

  const Field* f_ = nullptr;
  std::vector<Code> c_;
};

// Monic gcd (zero if both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);

struct ExtGcd {
  Poly g, s, t;  // s*a + t*b = g, g monic
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);

// a^{-1} mod m; throws NotInvertible when gcd(a, m) != 1.
Poly inv_mod(const Poly& a, const Poly& m);
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m);

// Replaces each coefficient by its p-th root and x^{p i} by x^i; requires
// the polynomial to be a p-th power (all exponents divisible by p).
Poly pth_root(const Poly& f);

struct Factor {
  Poly poly;  // monic irreducible
  int mult;
};

// Complete factorization into monic irreducibles (squarefree, distinct
// degree, then Cantor-Zassenhaus with a fixed seed), sorted by Poly::operator<.
std::vector<Factor> factor(const Poly& f);
bool is_irreducible(const Poly& f);

}  // namespace nakajima
