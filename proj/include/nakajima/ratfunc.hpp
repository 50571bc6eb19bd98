#pragma once

#include <string>
#include <vector>

#include "nakajima/poly.hpp"

namespace nakajima {

// Element of F_q(x) kept in canonical form: gcd(num, den) = 1, den monic.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(const Field& f) : num_(f), den_(Poly::constant(f, 1)) {}
  explicit RatFunc(Poly num);
  RatFunc(Poly num, Poly den);

  static RatFunc x(const Field& f) { return RatFunc(Poly::x(f)); }
  static RatFunc constant(const Field& f, Field::Code c) { return RatFunc(Poly::constant(f, c)); }

  const Field& field() const { return den_.field(); }
  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_one(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const { return *this * o.inv(); }
  RatFunc inv() const;
  RatFunc pow(int e) const;

  bool operator==(const RatFunc& o) const noexcept { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const noexcept { return !(*this == o); }

  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();

  Poly num_;
  Poly den_;
};

// v_P(0) is +infinity; it is never an int, so callers must branch on it.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  explicit Valuation(int v) : finite_(true), v_(v) {}

  bool is_infinite() const noexcept { return !finite_; }
  int value() const;

  bool operator==(const Valuation& o) const noexcept { return finite_ == o.finite_ && (!finite_ || v_ == o.v_); }

 private:
  Valuation() = default;
  bool finite_ = false;
  int v_ = 0;
};

class Place {
 public:
  static Place infinite(const Field& f);
  // Validates that the polynomial is monic irreducible.
  static Place finite(const Poly& monic_irreducible);

  bool is_infinite() const noexcept { return infinite_; }
  const Poly& poly() const noexcept { return poly_; }
  int degree() const noexcept { return infinite_ ? 1 : poly_.degree(); }

  bool operator==(const Place& o) const noexcept { return infinite_ == o.infinite_ && (infinite_ || poly_ == o.poly_); }
  bool operator<(const Place& o) const noexcept;
  std::string to_string(const std::string& var = "x") const;

 private:
  Place() = default;
  bool infinite_ = true;
  Poly poly_;
};

int valuation(const Poly& f, const Place& P);  // f != 0
Valuation valuation(const RatFunc& f, const Place& P);

// Leading coefficient of f in the expansion at P with respect to the
// uniformizer (pi for a finite place, 1/x at infinity), as a residue class
// polynomial of degree < deg P. Requires f != 0.
Poly leading_local_coefficient(const RatFunc& f, const Place& P);

// All places where f has a zero or a pole, sorted.
std::vector<Place> support(const RatFunc& f);
std::vector<Place> poles(const RatFunc& f);

struct PrincipalPart {
  Place place;
  RatFunc part;  // A / pi^e with deg A < e * deg pi
};

struct PartialFractions {
  Poly polynomial;
  std::vector<PrincipalPart> parts;
};

PartialFractions partial_fractions(const RatFunc& f);
RatFunc recombine(const PartialFractions& pf);

}  // namespace nakajima
