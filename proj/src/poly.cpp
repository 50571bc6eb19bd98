#include "nakajima/poly.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "nakajima/error.hpp"

namespace nakajima {

Poly::Poly(const Field& f, std::vector<Code> coeffs) : f_(&f), c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Field& f, Code c) { return Poly(f, std::vector<Code>{c}); }

Poly Poly::monomial(const Field& f, Code c, int deg) {
  if (c == 0) return Poly(f);
  std::vector<Code> v(static_cast<std::size_t>(deg) + 1, 0);
  v[deg] = c;
  return Poly(f, std::move(v));
}

Poly Poly::from_ints(const Field& f, std::initializer_list<long long> low_to_high) {
  std::vector<Code> v;
  for (long long c : low_to_high) v.push_back(f.from_int(c));
  return Poly(f, std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
  const Field& f = f_ ? *f_ : *o.f_;
  std::vector<Code> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    Code a = i < c_.size() ? c_[i] : 0;
    Code b = i < o.c_.size() ? o.c_[i] : 0;
    r[i] = f.add(a, b);
  }
  return Poly(f, std::move(r));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = f_->neg(c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  const Field& f = f_ ? *f_ : *o.f_;
  std::vector<Code> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    Code a = i < c_.size() ? c_[i] : 0;
    Code b = i < o.c_.size() ? o.c_[i] : 0;
    r[i] = f.sub(a, b);
  }
  return Poly(f, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  const Field* fp = f_ ? f_ : o.f_;
  if (c_.empty() || o.c_.empty()) return Poly(*fp);
  const Field& f = *fp;
  const std::size_t n = c_.size() + o.c_.size() - 1;
  if (f.is_prime_field() && f.p() < (1 << 15)) {
    // products fit in 30 bits; reduce lazily
    std::vector<std::uint64_t> acc(n, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      const std::uint64_t a = c_[i];
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) acc[i + j] += a * o.c_[j];
    }
    std::vector<Code> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = static_cast<Code>(acc[i] % static_cast<std::uint64_t>(f.p()));
    return Poly(f, std::move(r));
  }
  std::vector<Code> r(n, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(c_[i], o.c_[j]));
  }
  return Poly(f, std::move(r));
}

Poly Poly::scale(Code c) const {
  if (c == 0) return Poly(*f_);
  Poly r = *this;
  for (auto& x : r.c_) x = f_->mul(x, c);
  return r;
}

Poly Poly::shift(int n) const {
  if (c_.empty() || n == 0) return *this;
  Poly r(*f_);
  r.c_.assign(static_cast<std::size_t>(n), 0);
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
  const Field& f = *d.f_;
  if (degree() < d.degree()) return {Poly(f), *this};
  std::vector<Code> r = c_;
  std::vector<Code> q(c_.size() - d.c_.size() + 1, 0);
  const Code lead_inv = f.inv(d.lead());
  const int dd = d.degree();
  for (int i = degree(); i >= dd; --i) {
    const Code c = f.mul(r[i], lead_inv);
    if (c == 0) continue;
    q[i - dd] = c;
    for (int j = 0; j <= dd; ++j) r[i - dd + j] = f.sub(r[i - dd + j], f.mul(c, d.c_[j]));
  }
  r.resize(static_cast<std::size_t>(dd));
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly Poly::monic() const {
  if (c_.empty() || c_.back() == 1) return *this;
  return scale(f_->inv(c_.back()));
}

Poly::Code Poly::eval(Code x) const {
  Code r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = f_->add(f_->mul(r, x), *it);
  return r;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(*f_);
  std::vector<Code> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = f_->mul(c_[i], f_->from_int(static_cast<long long>(i)));
  return Poly(*f_, std::move(r));
}

Poly Poly::compose(const Poly& inner) const {
  Poly r(*f_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * inner + constant(*f_, *it);
  return r;
}

Poly Poly::pow(std::uint64_t e) const {
  Poly r = constant(*f_, 1);
  Poly b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

bool Poly::operator<(const Poly& o) const noexcept {
  if (c_.size() != o.c_.size()) return c_.size() < o.c_.size();
  return std::lexicographical_compare(c_.rbegin(), c_.rend(), o.c_.rbegin(), o.c_.rend());
}

std::string Poly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const Code c = c_[i];
    if (c == 0) continue;
    std::string cs = f_->to_string(c);
    const bool compound = cs.find('+') != std::string::npos;
    if (!s.empty()) s += " + ";
    if (i == 0) {
      s += compound ? "(" + cs + ")" : cs;
      continue;
    }
    if (c != 1) s += (compound ? "(" + cs + ")" : cs) + "*";
    s += var;
    if (i > 1) s += "^" + std::to_string(i);
  }
  return s;
}

std::size_t Poly::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull ^ c_.size();
  for (Code c : c_) h = (h ^ c) * 0x100000001b3ull;
  return h;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.is_zero() ? x : x.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() ? a : b;
  return (a / gcd(a, b) * b).monic();
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
  const Field& f = a.field_ptr() ? a.field() : b.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f, 1), s1(f);
  Poly t0(f), t1 = Poly::constant(f, 1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const auto li = f.inv(r0.lead());
  return {r0.scale(li), s0.scale(li), t0.scale(li)};
}

Poly inv_mod(const Poly& a, const Poly& m) {
  ExtGcd e = ext_gcd(a % m, m);
  if (!e.g.is_one()) fail(Errc::NotInvertible, "polynomial not invertible modulo " + m.to_string());
  return e.s % m;
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m) {
  Poly r = Poly::constant(m.field(), 1) % m;
  Poly b = base % m;
  while (e > 0) {
    if (e & 1) r = (r * b) % m;
    e >>= 1;
    if (e) b = (b * b) % m;
  }
  return r;
}

Poly pth_root(const Poly& f) {
  const Field& F = f.field();
  const int p = F.p();
  std::vector<Field::Code> r;
  for (int i = 0; i <= f.degree(); ++i) {
    if (i % p != 0) {
      if (f.coeff(i) != 0) fail(Errc::InvalidInput, "polynomial is not a p-th power");
      continue;
    }
    r.push_back(F.pth_root(f.coeff(i)));
  }
  return Poly(F, std::move(r));
}

namespace {

void squarefree(const Poly& f, int base_mult, std::vector<std::pair<Poly, int>>& out) {
  if (f.degree() < 1) return;
  const int p = f.field().p();
  Poly c = gcd(f, f.derivative());
  Poly w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i * base_mult);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) squarefree(pth_root(c.monic()), base_mult * p, out);
}

Poly x_minus(const Poly& h, const Field& F) { return h - Poly::x(F); }

void equal_degree(const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (g.degree() == d) {
    out.push_back(g.monic());
    return;
  }
  const Field& F = g.field();
  const std::uint64_t q = F.order();
  std::uniform_int_distribution<std::uint64_t> coin(0, q - 1);
  for (;;) {
    std::vector<Field::Code> rc(static_cast<std::size_t>(g.degree()));
    for (auto& c : rc) c = static_cast<Field::Code>(coin(rng));
    Poly a(F, std::move(rc));
    if (a.degree() < 1) continue;
    // a^{(q^d - 1)/2} = (a * a^q * ... * a^{q^{d-1}})^{(q-1)/2}
    Poly t = a % g, fr = a % g;
    for (int i = 1; i < d; ++i) {
      fr = powmod(fr, q, g);
      t = (t * fr) % g;
    }
    Poly b = powmod(t, (q - 1) / 2, g);
    Poly h = gcd(b - Poly::constant(F, 1), g);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(h, d, rng, out);
      equal_degree(g / h, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Factor> factor(const Poly& f) {
  if (f.is_zero()) fail(Errc::ZeroInput, "cannot factor the zero polynomial");
  const Field& F = f.field();
  std::vector<std::pair<Poly, int>> sqf;
  squarefree(f.monic(), 1, sqf);
  std::mt19937_64 rng(0x5eed5eedULL);
  std::vector<Factor> out;
  for (auto& [g0, mult] : sqf) {
    Poly g = g0;
    Poly h = Poly::x(F) % g;
    const Poly xg = h;
    for (int d = 1; g.degree() >= 2 * d; ++d) {
      h = powmod(h, F.order(), g);
      Poly part = gcd(x_minus(h, F), g);
      if (part.degree() > 0) {
        std::vector<Poly> pieces;
        equal_degree(part, d, rng, pieces);
        for (auto& pc : pieces) out.push_back({pc, mult});
        g = g / part;
        h = h % g;
      }
    }
    if (g.degree() > 0) out.push_back({g.monic(), mult});
  }
  // merge equal factors (possible across squarefree layers) and sort
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return a.poly < b.poly; });
  std::vector<Factor> merged;
  for (auto& fac : out) {
    if (!merged.empty() && merged.back().poly == fac.poly)
      merged.back().mult += fac.mult;
    else
      merged.push_back(fac);
  }
  return merged;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  auto fs = factor(f);
  return fs.size() == 1 && fs[0].mult == 1;
}

}  // namespace nakajima
