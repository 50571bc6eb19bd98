#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nakajima/ratfunc.hpp"

namespace nakajima {

class TowerField;
using TowerPtr = std::shared_ptr<const TowerField>;

// Element of an Artin-Schreier tower F_q(x)(t_1, ..., t_m) in normal form:
//
//   (sum_e N_e(x) t^e) / D(x),   0 <= e_i < p,
//
// with D monic and gcd(D, all N_e) = 1. The normal form is unique, so
// equality is structural. Exponent vectors are packed base p with t_1 as
// the least significant digit.
class TowerElem {
 public:
  using Key = std::uint32_t;

  TowerElem() = default;

  static TowerElem zero(const TowerField& T);
  static TowerElem one(const TowerField& T) { return constant(T, 1); }
  static TowerElem constant(const TowerField& T, Field::Code c);
  static TowerElem from_int(const TowerField& T, long long v);
  static TowerElem base(const TowerField& T, const RatFunc& f);
  static TowerElem base_var(const TowerField& T);
  static TowerElem gen(const TowerField& T, int i);

  const TowerField& tower() const { return *t_; }
  const TowerField* tower_ptr() const noexcept { return t_; }
  const std::map<Key, Poly>& terms() const noexcept { return terms_; }
  const Poly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_one() const noexcept;
  bool is_base() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  RatFunc base_value() const;  // requires is_base()
  // Highest generator index that occurs, -1 for elements of F_q(x).
  int top_generator() const noexcept;

  TowerElem operator+(const TowerElem& o) const;
  TowerElem operator-(const TowerElem& o) const;
  TowerElem operator-() const;
  TowerElem operator*(const TowerElem& o) const;
  TowerElem& operator+=(const TowerElem& o) { return *this = *this + o; }
  TowerElem& operator-=(const TowerElem& o) { return *this = *this - o; }
  TowerElem& operator*=(const TowerElem& o) { return *this = *this * o; }
  TowerElem scale(Field::Code c) const;
  TowerElem pow(std::uint64_t e) const;
  TowerElem inv() const;
  TowerElem operator/(const TowerElem& o) const { return *this * o.inv(); }

  // Coefficient of t_i^j, viewing the element as a polynomial in t_i over
  // the subtower on t_1..t_{i-1}; requires top_generator() <= i.
  TowerElem coefficient(int i, int j) const;

  bool operator==(const TowerElem& o) const noexcept { return t_ == o.t_ && den_ == o.den_ && terms_ == o.terms_; }
  bool operator!=(const TowerElem& o) const noexcept { return !(*this == o); }
  std::size_t hash() const noexcept;

  std::string to_string() const;

 private:
  friend class TowerField;
  friend class TowerBuilder;
  explicit TowerElem(const TowerField& T);
  void normalize();
  void check_same(const TowerElem& o) const;

  const TowerField* t_ = nullptr;
  std::map<Key, Poly> terms_;
  Poly den_;
};

// A triangular Artin-Schreier tower over F_q(x): t_i^p - t_i = phi_i with
// phi_i in F_q(x)(t_1, ..., t_{i-1}), at most six generators.
class TowerField {
 public:
  static constexpr int kMaxGenerators = 6;

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const noexcept { return field_; }
  int p() const noexcept { return field_->p(); }
  int gen_count() const noexcept { return static_cast<int>(phi_.size()); }
  const std::string& base_name() const noexcept { return base_name_; }
  const std::vector<std::string>& gen_names() const noexcept { return names_; }
  // Index of a generator name (declared names included), or -1.
  int gen_index(const std::string& name) const;
  const TowerElem& relation(int i) const { return phi_.at(i); }
  // [T : F_q(x)] = p^m.
  std::uint64_t degree() const;

  TowerElem::Key pow_p(int i) const noexcept { return pow_p_[i]; }
  int digit(TowerElem::Key k, int i) const noexcept { return static_cast<int>((k / pow_p_[i]) % static_cast<TowerElem::Key>(p())); }

 private:
  friend class TowerElem;
  friend class TowerBuilder;
  TowerField(FieldPtr f, std::string base_name, std::vector<std::string> names);

  TowerElem multiply(const TowerElem& a, const TowerElem& b) const;

  FieldPtr field_;
  std::string base_name_;
  std::vector<std::string> names_;
  std::vector<TowerElem> phi_;
  std::vector<TowerElem::Key> pow_p_;
};

// Builds a tower one generator at a time; elements created from current()
// stay valid after finish() because they refer to the same tower object.
class TowerBuilder {
 public:
  TowerBuilder(FieldPtr f, std::string base_name, std::vector<std::string> gen_names);

  const TowerField& current() const { return *tower_; }
  // Adjoins the next declared generator with t^p - t = phi.
  void adjoin(const TowerElem& phi);
  TowerPtr finish();

 private:
  std::shared_ptr<TowerField> tower_;
};

// Scenario constants (c, a, omega, ...) substituted while parsing.
using Constants = std::map<std::string, long long>;

// Parses relations written in the small expression grammar (+ - * / ^,
// integer exponents, parentheses, integer literals, the base variable,
// generator names, constants). Relation i may mention only t_1..t_{i-1}.
TowerPtr tower_make(FieldPtr f, const std::string& base_name, const std::vector<std::string>& gen_names,
                    const std::vector<std::string>& relations, const Constants& constants = {});

TowerElem parse_elem(const TowerField& T, const std::string& text, const Constants& constants = {});

// Same tower over a larger constant field; the source must be defined over
// the prime field (so its codes embed unchanged).
TowerPtr base_change(const TowerField& T, FieldPtr bigger);
TowerElem lift(const TowerElem& a, const TowerField& target);

// Value at an affine point (x, t_1, ..., t_m) with coordinates in F_q;
// nullopt when the denominator vanishes there.
std::optional<Field::Code> evaluate(const TowerElem& a, Field::Code x, std::span<const Field::Code> t);

bool identity_check(const TowerElem& lhs, const TowerElem& rhs);

struct VerifyReport {
  bool ok = false;
  int failing_relation = -1;  // generator index whose relation fails
  std::optional<int> order;   // finite order certificate (bijectivity)
  std::string message;
  explicit operator bool() const noexcept { return ok; }
};

class FieldAuto;

// Checks every defining relation, then certifies bijectivity by finding the
// order of s (at most order_cap). Marks s verified on success.
VerifyReport map_verify(FieldAuto& s, int order_cap = 1024);

// (s o t)(a) = s(t(a)). Verified inputs give a verified result.
FieldAuto map_compose(const FieldAuto& s, const FieldAuto& t);

// A substitution endomorphism x -> image_x, t_i -> image_t[i]. Read as a
// map of points, the images are the coordinates of the image point; the
// field map is then the pull-back, so composing pull-backs reverses the
// order of point maps.
class FieldAuto {
 public:
  FieldAuto() = default;
  FieldAuto(const TowerField& T, TowerElem image_x, std::vector<TowerElem> image_t, std::string name = {});

  static FieldAuto identity(const TowerField& T);

  const TowerField& tower() const { return *t_; }
  const TowerElem& image_x() const noexcept { return x_; }
  const std::vector<TowerElem>& image_t() const noexcept { return ts_; }
  bool verified() const noexcept { return verified_; }
  const std::string& name() const noexcept { return name_; }
  FieldAuto& rename(std::string n) {
    name_ = std::move(n);
    return *this;
  }

  bool is_identity() const;
  bool operator==(const FieldAuto& o) const noexcept { return x_ == o.x_ && ts_ == o.ts_; }
  std::size_t hash() const noexcept;
  std::string to_string() const;

 private:
  friend VerifyReport map_verify(FieldAuto& s, int order_cap);
  friend FieldAuto map_compose(const FieldAuto& s, const FieldAuto& t);

  const TowerField* t_ = nullptr;
  TowerElem x_;
  std::vector<TowerElem> ts_;
  std::string name_;
  bool verified_ = false;
};

TowerElem map_apply(const FieldAuto& s, const TowerElem& a);

// Composition of point maps: first apply b, then a.
inline FieldAuto point_compose(const FieldAuto& a, const FieldAuto& b) { return map_compose(b, a); }

std::optional<int> map_order(const FieldAuto& s, int cap = 1024);
FieldAuto map_power(const FieldAuto& s, long long e, int cap = 1024);

}  // namespace nakajima

template <>
struct std::hash<nakajima::FieldAuto> {
  std::size_t operator()(const nakajima::FieldAuto& s) const noexcept { return s.hash(); }
};
