#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace nakajima {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// F_q with q = p^k, p an odd prime. Elements are encoded as integers
// ("codes"): the coefficient of T^i of the reduced representative is the
// i-th base-p digit. The prime field therefore embeds as codes 0..p-1.
class Field {
 public:
  using Code = std::uint32_t;

  // Deterministic construction: the modulus is the least monic irreducible
  // polynomial of degree k, comparing the coefficient tuples
  // (c_{k-1}, ..., c_0) lexicographically.
  static FieldPtr make(int p, int k);

  int p() const noexcept { return p_; }
  int k() const noexcept { return k_; }
  std::uint64_t order() const noexcept { return q_; }
  bool is_prime_field() const noexcept { return k_ == 1; }

  // Coefficients low to high, length k + 1, monic.
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  Code add(Code a, Code b) const;
  Code sub(Code a, Code b) const;
  Code neg(Code a) const;
  Code mul(Code a, Code b) const;
  Code inv(Code a) const;
  Code div(Code a, Code b) const { return mul(a, inv(b)); }
  Code pow(Code a, std::uint64_t e) const;
  Code frobenius(Code a) const { return pow(a, static_cast<std::uint64_t>(p_)); }
  Code pth_root(Code a) const;

  Code from_int(long long v) const;
  std::vector<int> digits(Code a) const;
  Code from_digits(std::span<const int> d) const;

  // A generator of the multiplicative group.
  Code primitive_element() const noexcept { return primitive_; }

  // Elements of the subfield F_{p^e}; requires e | k.
  std::vector<Code> subfield(int e) const;

  std::string to_string(Code a) const;

  bool same_as(const Field& other) const noexcept {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
  }

 private:
  Field(int p, int k, std::vector<int> modulus);

  Code slow_mul(Code a, Code b) const;

  int p_;
  int k_;
  std::uint64_t q_;
  std::vector<int> modulus_;
  Code primitive_ = 1;
  std::vector<Code> exp_;            // exp_[i] = g^i, i < q - 1 (tables only when small)
  std::vector<std::uint32_t> log_;   // log_[code], undefined for 0
};

// Thin value wrapper used where a self-describing element is convenient.
class FqElem {
 public:
  FqElem() = default;
  FqElem(const Field& f, Field::Code c) : f_(&f), c_(c) {}

  static FqElem from_int(const Field& f, long long v) { return {f, f.from_int(v)}; }

  const Field& field() const { return *f_; }
  Field::Code code() const noexcept { return c_; }
  std::vector<int> coeffs() const { return f_->digits(c_); }
  bool is_zero() const noexcept { return c_ == 0; }

  FqElem operator+(const FqElem& o) const;
  FqElem operator-(const FqElem& o) const;
  FqElem operator-() const { return {*f_, f_->neg(c_)}; }
  FqElem operator*(const FqElem& o) const;
  FqElem inv() const;
  FqElem pow(std::uint64_t e) const { return {*f_, f_->pow(c_, e)}; }
  FqElem frobenius() const { return {*f_, f_->frobenius(c_)}; }
  FqElem pth_root() const { return {*f_, f_->pth_root(c_)}; }

  bool operator==(const FqElem& o) const noexcept { return c_ == o.c_ && f_->same_as(*o.f_); }

 private:
  void check(const FqElem& o) const;

  const Field* f_ = nullptr;
  Field::Code c_ = 0;
};

bool is_prime(long long n);
std::vector<long long> prime_factors(long long n);

}  // namespace nakajima
