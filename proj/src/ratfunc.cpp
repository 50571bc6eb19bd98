#include "nakajima/ratfunc.hpp"

#include <algorithm>

#include "nakajima/error.hpp"

namespace nakajima {

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.field(), 1)) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(Errc::DivisionByZero, "rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  const Field& f = den_.field();
  if (num_.is_zero()) {
    den_ = Poly::constant(f, 1);
    return;
  }
  Poly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  if (den_.lead() != 1) {
    const auto li = f.inv(den_.lead());
    num_ = num_.scale(li);
    den_ = den_.scale(li);
  }
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  Poly g = gcd(den_, o.den_);
  Poly a = o.den_ / g, b = den_ / g;
  return RatFunc(num_ * a + o.num_ * b, den_ * a);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (num_.is_zero() || o.num_.is_zero()) return RatFunc(den_.field());
  // cross-cancel first to keep degrees small
  Poly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
  return RatFunc((num_ / g1) * (o.num_ / g2), (den_ / g2) * (o.den_ / g1));
}

RatFunc RatFunc::inv() const {
  if (num_.is_zero()) fail(Errc::DivisionByZero, "inverse of the zero rational function");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
  if (e < 0) return inv().pow(-e);
  return RatFunc(num_.pow(static_cast<std::uint64_t>(e)), den_.pow(static_cast<std::uint64_t>(e)));
}

std::string RatFunc::to_string(const std::string& var) const {
  if (den_.is_one()) return num_.to_string(var);
  auto wrap = [&](const Poly& p) {
    std::string s = p.to_string(var);
    return (p.coeffs().size() > 1 && s.find(' ') != std::string::npos) ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

int Valuation::value() const {
  if (!finite_) fail(Errc::ZeroInput, "valuation of zero is +infinity");
  return v_;
}

Place Place::infinite(const Field& f) {
  Place P;
  P.infinite_ = true;
  P.poly_ = Poly(f);
  return P;
}

Place Place::finite(const Poly& monic_irreducible) {
  if (monic_irreducible.degree() < 1 || monic_irreducible.lead() != 1 || !is_irreducible(monic_irreducible))
    fail(Errc::InvalidInput, "place polynomial must be monic irreducible: " + monic_irreducible.to_string());
  Place P;
  P.infinite_ = false;
  P.poly_ = monic_irreducible;
  return P;
}

bool Place::operator<(const Place& o) const noexcept {
  if (infinite_ != o.infinite_) return !infinite_;  // finite places first
  return !infinite_ && poly_ < o.poly_;
}

std::string Place::to_string(const std::string& var) const {
  return infinite_ ? std::string("inf") : "(" + poly_.to_string(var) + ")";
}

int valuation(const Poly& f, const Place& P) {
  if (f.is_zero()) fail(Errc::ZeroInput, "valuation of zero polynomial");
  if (P.is_infinite()) return -f.degree();
  int v = 0;
  Poly g = f;
  for (;;) {
    auto [q, r] = g.divmod(P.poly());
    if (!r.is_zero()) break;
    g = std::move(q);
    ++v;
  }
  return v;
}

Valuation valuation(const RatFunc& f, const Place& P) {
  if (f.is_zero()) return Valuation::infinity();
  return Valuation(valuation(f.num(), P) - valuation(f.den(), P));
}

namespace {

Poly strip(const Poly& f, const Poly& pi) {
  Poly g = f;
  for (;;) {
    auto [q, r] = g.divmod(pi);
    if (!r.is_zero()) return g;
    g = std::move(q);
  }
}

}  // namespace

Poly leading_local_coefficient(const RatFunc& f, const Place& P) {
  if (f.is_zero()) fail(Errc::ZeroInput, "leading coefficient of zero");
  const Field& F = f.field();
  if (P.is_infinite()) return Poly::constant(F, F.div(f.num().lead(), f.den().lead()));
  const Poly& pi = P.poly();
  Poly n = strip(f.num(), pi) % pi;
  Poly d = strip(f.den(), pi) % pi;
  return (n * inv_mod(d, pi)) % pi;
}

std::vector<Place> support(const RatFunc& f) {
  if (f.is_zero()) fail(Errc::ZeroInput, "support of zero");
  std::vector<Place> out;
  for (const Poly* p : {&f.num(), &f.den()})
    if (p->degree() > 0)
      for (auto& fac : factor(*p)) out.push_back(Place::finite(fac.poly));
  if (f.num().degree() != f.den().degree()) out.push_back(Place::infinite(f.field()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Place> poles(const RatFunc& f) {
  std::vector<Place> out;
  for (auto& P : support(f))
    if (valuation(f, P).value() < 0) out.push_back(P);
  return out;
}

PartialFractions partial_fractions(const RatFunc& f) {
  const Field& F = f.field();
  if (f.is_zero()) return {Poly(F), {}};
  auto [quot, rem] = f.num().divmod(f.den());
  PartialFractions out{quot, {}};
  if (rem.is_zero()) return out;
  for (auto& fac : factor(f.den())) {
    Poly m = fac.poly.pow(static_cast<std::uint64_t>(fac.mult));
    Poly cof = f.den() / m;
    Poly a = (rem * inv_mod(cof % m, m)) % m;
    if (!a.is_zero()) out.parts.push_back({Place::finite(fac.poly), RatFunc(a, m)});
  }
  return out;
}

RatFunc recombine(const PartialFractions& pf) {
  RatFunc r(pf.polynomial);
  for (auto& pp : pf.parts) r = r + pp.part;
  return r;
}

}  // namespace nakajima
