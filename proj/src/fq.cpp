#include "nakajima/fq.hpp"

#include <algorithm>

#include "nakajima/error.hpp"

namespace nakajima {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> out;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

// Dense polynomials over F_p, coefficients low to high, used only for the
// modulus search (the Poly class needs a finished Field).
using IntPoly = std::vector<int>;

void trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int inv_mod(int a, int p) {
  int r = 1;
  for (int e = p - 2, b = a; e > 0; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

IntPoly mod_poly(IntPoly a, const IntPoly& f, int p) {
  trim(a);
  const int df = static_cast<int>(f.size()) - 1;
  const int lead_inv = inv_mod(f.back(), p);
  while (static_cast<int>(a.size()) - 1 >= df) {
    const int shift = static_cast<int>(a.size()) - 1 - df;
    const int c = a.back() * lead_inv % p;
    for (int i = 0; i <= df; ++i) a[shift + i] = ((a[shift + i] - c * f[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

IntPoly mulmod(const IntPoly& a, const IntPoly& b, const IntPoly& f, int p) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return mod_poly(std::move(r), f, p);
}

IntPoly powmod(IntPoly base, long long e, const IntPoly& f, int p) {
  IntPoly r{1};
  base = mod_poly(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) r = mulmod(r, base, f, p);
    base = mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

IntPoly gcd_poly(IntPoly a, IntPoly b, int p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    IntPoly r = mod_poly(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^(p^j) mod f
IntPoly frob_power_of_x(int j, const IntPoly& f, int p) {
  IntPoly r = mod_poly(IntPoly{0, 1}, f, p);
  for (int i = 0; i < j; ++i) r = powmod(r, p, f, p);
  return r;
}

IntPoly sub_x(IntPoly a, int p) {
  if (a.size() < 2) a.resize(2, 0);
  a[1] = (a[1] - 1 + p) % p;
  trim(a);
  return a;
}

// Rabin's irreducibility test.
bool irreducible(const IntPoly& f, int p) {
  const int k = static_cast<int>(f.size()) - 1;
  if (k == 1) return true;
  if (!sub_x(frob_power_of_x(k, f, p), p).empty()) return false;
  for (long long r : prime_factors(k)) {
    IntPoly g = gcd_poly(f, sub_x(frob_power_of_x(k / static_cast<int>(r), f, p), p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

constexpr std::uint64_t kTableLimit = 1u << 20;

}  // namespace

FieldPtr Field::make(int p, int k) {
  if (p == 2) fail(Errc::EvenCharacteristic, "characteristic 2 is excluded (p >= 3 required)");
  if (!is_prime(p)) fail(Errc::NonPrime, std::to_string(p) + " is not prime");
  if (k < 1 || k > 8) fail(Errc::DegreeOutOfRange, "extension degree must lie in [1, 8], got " + std::to_string(k));
  long long count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (long long n = 0; n < count; ++n) {
    IntPoly f(static_cast<std::size_t>(k) + 1, 0);
    long long m = n;
    for (int i = 0; i < k; ++i) {
      f[i] = static_cast<int>(m % p);
      m /= p;
    }
    f[k] = 1;
    if (irreducible(f, p)) return FieldPtr(new Field(p, k, std::move(f)));
  }
  fail(Errc::DegreeOutOfRange, "no irreducible polynomial found");
}

Field::Field(int p, int k, std::vector<int> modulus) : p_(p), k_(k), modulus_(std::move(modulus)) {
  q_ = 1;
  for (int i = 0; i < k_; ++i) q_ *= static_cast<std::uint64_t>(p_);
  // primitive element: order exactly q - 1
  const auto factors = prime_factors(static_cast<long long>(q_ - 1));
  for (Code g = 1; g < q_; ++g) {
    bool ok = true;
    for (long long r : factors) {
      if (pow(g, (q_ - 1) / static_cast<std::uint64_t>(r)) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      primitive_ = g;
      break;
    }
  }
  if (k_ > 1 && q_ <= kTableLimit) {
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    Code x = 1;
    for (std::uint64_t i = 0; i + 1 < q_; ++i) {
      exp_[i] = x;
      log_[x] = static_cast<std::uint32_t>(i);
      x = slow_mul(x, primitive_);
    }
  }
}

Field::Code Field::add(Code a, Code b) const {
  if (k_ == 1) {
    Code s = a + b;
    return s >= static_cast<Code>(p_) ? s - p_ : s;
  }
  Code r = 0, place = 1;
  for (int i = 0; i < k_; ++i) {
    Code da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    r += ((da + db) % p_) * place;
    place *= p_;
  }
  return r;
}

Field::Code Field::neg(Code a) const {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  Code r = 0, place = 1;
  for (int i = 0; i < k_; ++i) {
    Code d = a % p_;
    a /= p_;
    r += ((p_ - d) % p_) * place;
    place *= p_;
  }
  return r;
}

Field::Code Field::sub(Code a, Code b) const { return add(a, neg(b)); }

Field::Code Field::slow_mul(Code a, Code b) const {
  if (a == 0 || b == 0) return 0;
  IntPoly da(k_), db(k_);
  for (int i = 0; i < k_; ++i) {
    da[i] = static_cast<int>(a % p_);
    a /= p_;
    db[i] = static_cast<int>(b % p_);
    b /= p_;
  }
  IntPoly r = mulmod(da, db, modulus_, p_);
  Code out = 0;
  for (int i = static_cast<int>(r.size()) - 1; i >= 0; --i) out = out * p_ + r[i];
  return out;
}

Field::Code Field::mul(Code a, Code b) const {
  if (k_ == 1) return static_cast<Code>((static_cast<std::uint64_t>(a) * b) % p_);
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) {
    std::uint64_t e = static_cast<std::uint64_t>(log_[a]) + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
  }
  return slow_mul(a, b);
}

Field::Code Field::pow(Code a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (!exp_.empty()) {
    const std::uint64_t ord = q_ - 1;
    const std::uint64_t l = (static_cast<std::uint64_t>(log_[a]) * (e % ord)) % ord;
    return exp_[l];
  }
  Code r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Field::Code Field::inv(Code a) const {
  if (a == 0) fail(Errc::DivisionByZero, "inverse of zero in F_" + std::to_string(q_));
  if (!exp_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return pow(a, q_ - 2);
}

Field::Code Field::pth_root(Code a) const {
  // Frobenius has order k on F_q, so its inverse is Frobenius^(k-1).
  for (int i = 0; i + 1 < k_; ++i) a = frobenius(a);
  return a;
}

Field::Code Field::from_int(long long v) const {
  v %= p_;
  if (v < 0) v += p_;
  return static_cast<Code>(v);
}

std::vector<int> Field::digits(Code a) const {
  std::vector<int> d(k_);
  for (int i = 0; i < k_; ++i) {
    d[i] = static_cast<int>(a % p_);
    a /= p_;
  }
  return d;
}

Field::Code Field::from_digits(std::span<const int> d) const {
  Code r = 0;
  for (int i = static_cast<int>(std::min<std::size_t>(d.size(), k_)) - 1; i >= 0; --i)
    r = r * p_ + static_cast<Code>(((d[i] % p_) + p_) % p_);
  return r;
}

std::vector<Field::Code> Field::subfield(int e) const {
  if (e < 1 || k_ % e != 0)
    fail(Errc::InvalidInput, "F_p^" + std::to_string(e) + " is not a subfield of F_p^" + std::to_string(k_));
  std::uint64_t pe = 1;
  for (int i = 0; i < e; ++i) pe *= p_;
  std::vector<Code> out;
  for (Code a = 0; a < q_; ++a)
    if (pow(a, pe) == a) out.push_back(a);
  return out;
}

std::string Field::to_string(Code a) const {
  if (k_ == 1) return std::to_string(a);
  auto d = digits(a);
  std::string s;
  for (int i = k_ - 1; i >= 0; --i) {
    if (d[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0 || d[i] != 1) s += std::to_string(d[i]);
    if (i > 0) {
      if (d[i] != 1) s += "*";
      s += "T";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

void FqElem::check(const FqElem& o) const {
  if (!f_->same_as(*o.f_)) fail(Errc::FieldMismatch, "operands live in different fields");
}

FqElem FqElem::operator+(const FqElem& o) const {
  check(o);
  return {*f_, f_->add(c_, o.c_)};
}

FqElem FqElem::operator-(const FqElem& o) const {
  check(o);
  return {*f_, f_->sub(c_, o.c_)};
}

FqElem FqElem::operator*(const FqElem& o) const {
  check(o);
  return {*f_, f_->mul(c_, o.c_)};
}

FqElem FqElem::inv() const { return {*f_, f_->inv(c_)}; }

}  // namespace nakajima
