#include "nakajima/tower.hpp"

#include <algorithm>
#include <cctype>

#include "nakajima/error.hpp"

namespace nakajima {

namespace {

// Unreduced products keep one 10-bit exponent field per generator.
using Wide = std::uint64_t;
constexpr int kBits = 10;
constexpr Wide kMask = (Wide{1} << kBits) - 1;
constexpr int kMaxTowerPrime = 31;

int wfield(Wide w, int i) { return static_cast<int>((w >> (kBits * i)) & kMask); }

template <class K>
void accumulate(std::map<K, Poly>& m, K key, const Poly& c) {
  if (c.is_zero()) return;
  auto it = m.find(key);
  if (it == m.end()) {
    m.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) m.erase(it);
}

}  // namespace

// ---------------------------------------------------------------- TowerElem

TowerElem::TowerElem(const TowerField& T) : t_(&T), den_(Poly::constant(T.field(), 1)) {}

TowerElem TowerElem::zero(const TowerField& T) { return TowerElem(T); }

TowerElem TowerElem::constant(const TowerField& T, Field::Code c) {
  TowerElem e(T);
  if (c != 0) e.terms_.emplace(0, Poly::constant(T.field(), c));
  return e;
}

TowerElem TowerElem::from_int(const TowerField& T, long long v) { return constant(T, T.field().from_int(v)); }

TowerElem TowerElem::base(const TowerField& T, const RatFunc& f) {
  TowerElem e(T);
  if (f.is_zero()) return e;
  e.terms_.emplace(0, f.num());
  e.den_ = f.den();
  return e;
}

TowerElem TowerElem::base_var(const TowerField& T) { return base(T, RatFunc::x(T.field())); }

TowerElem TowerElem::gen(const TowerField& T, int i) {
  if (i < 0 || i >= T.gen_count())
    fail(Errc::NonTriangularRelation, "generator index " + std::to_string(i) + " is not adjoined yet");
  TowerElem e(T);
  e.terms_.emplace(T.pow_p(i), Poly::constant(T.field(), 1));
  return e;
}

bool TowerElem::is_one() const noexcept {
  return den_.is_one() && terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one();
}

RatFunc TowerElem::base_value() const {
  if (!is_base()) fail(Errc::InvalidInput, "element does not lie in the rational base field");
  if (terms_.empty()) return RatFunc(t_->field());
  return RatFunc(terms_.begin()->second, den_);
}

int TowerElem::top_generator() const noexcept {
  int top = -1;
  for (const auto& kv : terms_) {
    Key k = kv.first;
    for (int i = t_->gen_count() - 1; i > top; --i) {
      if (t_->digit(k, i) != 0) {
        top = i;
        break;
      }
    }
  }
  return top;
}

void TowerElem::check_same(const TowerElem& o) const {
  if (t_ != o.t_) fail(Errc::TowerMismatch, "operands belong to different towers");
}

void TowerElem::normalize() {
  const Field& F = t_->field();
  if (terms_.empty()) {
    den_ = Poly::constant(F, 1);
    return;
  }
  if (den_.degree() > 0) {
    Poly g = den_;
    for (const auto& kv : terms_) {
      g = gcd(g, kv.second);
      if (g.is_one()) break;
    }
    if (!g.is_one()) {
      for (auto& kv : terms_) kv.second = kv.second / g;
      den_ = den_ / g;
    }
  }
  if (den_.lead() != 1) {
    const auto li = F.inv(den_.lead());
    for (auto& kv : terms_) kv.second = kv.second.scale(li);
    den_ = den_.scale(li);
  }
}

TowerElem TowerElem::operator+(const TowerElem& o) const {
  check_same(o);
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  TowerElem r(*t_);
  if (den_ == o.den_) {
    r.terms_ = terms_;
    for (const auto& [k, c] : o.terms_) accumulate(r.terms_, k, c);
    r.den_ = den_;
  } else {
    Poly g = gcd(den_, o.den_);
    Poly ma = o.den_ / g, mb = den_ / g;
    for (const auto& [k, c] : terms_) accumulate(r.terms_, k, c * ma);
    for (const auto& [k, c] : o.terms_) accumulate(r.terms_, k, c * mb);
    r.den_ = den_ * ma;
  }
  r.normalize();
  return r;
}

TowerElem TowerElem::operator-() const { return scale(t_->field().neg(1)); }

TowerElem TowerElem::operator-(const TowerElem& o) const { return *this + (-o); }

TowerElem TowerElem::scale(Field::Code c) const {
  if (c == 0) return zero(*t_);
  TowerElem r = *this;
  for (auto& kv : r.terms_) kv.second = kv.second.scale(c);
  return r;
}

TowerElem TowerElem::operator*(const TowerElem& o) const {
  check_same(o);
  return t_->multiply(*this, o);
}

TowerElem TowerElem::pow(std::uint64_t e) const {
  TowerElem r = one(*t_);
  TowerElem b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

TowerElem TowerElem::coefficient(int i, int j) const {
  if (top_generator() > i) fail(Errc::InvalidInput, "coefficient extraction below the top generator");
  TowerElem r(*t_);
  const Key shift = static_cast<Key>(j) * t_->pow_p(i);
  for (const auto& [k, c] : terms_)
    if (t_->digit(k, i) == j) r.terms_.emplace(k - shift, c);
  r.den_ = den_;
  r.normalize();
  return r;
}

TowerElem TowerElem::inv() const {
  if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero in the tower");
  const int l = top_generator();
  if (l < 0) return base(*t_, base_value().inv());
  const int p = t_->p();
  // Multiplication by this element as a p x p matrix over the subtower on
  // t_1..t_{l-1}; column c holds the coordinates of a * t_l^c.
  std::vector<std::vector<TowerElem>> m(p, std::vector<TowerElem>(p + 1, zero(*t_)));
  TowerElem col = *this;
  const TowerElem tl = gen(*t_, l);
  for (int c = 0; c < p; ++c) {
    for (int r = 0; r < p; ++r) m[r][c] = col.coefficient(l, r);
    if (c + 1 < p) col = col * tl;
  }
  m[0][p] = one(*t_);
  for (int c = 0; c < p; ++c) {
    int piv = c;
    while (piv < p && m[piv][c].is_zero()) ++piv;
    if (piv == p)
      fail(Errc::NotInvertible, "element is a zero divisor; the presented relations do not define a field");
    std::swap(m[piv], m[c]);
    const TowerElem pinv = m[c][c].inv();
    for (int k = c; k <= p; ++k) m[c][k] = m[c][k] * pinv;
    for (int r = 0; r < p; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      const TowerElem f = m[r][c];
      for (int k = c; k <= p; ++k) m[r][k] -= f * m[c][k];
    }
  }
  TowerElem result = zero(*t_);
  TowerElem power = one(*t_);
  for (int r = 0; r < p; ++r) {
    result += m[r][p] * power;
    if (r + 1 < p) power = power * tl;
  }
  return result;
}

std::size_t TowerElem::hash() const noexcept {
  std::size_t h = den_.hash();
  for (const auto& [k, c] : terms_) h = (h * 1099511628211ull) ^ (c.hash() + k * 0x9e3779b97f4a7c15ull);
  return h;
}

std::string TowerElem::to_string() const {
  if (is_zero()) return "0";
  const std::string& xv = t_->base_name();
  std::string s;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    std::string mono;
    for (int i = t_->gen_count() - 1; i >= 0; --i) {
      int d = t_->digit(k, i);
      if (d == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += t_->gen_names()[i];
      if (d > 1) mono += "^" + std::to_string(d);
    }
    std::string cs = c.to_string(xv);
    if (!s.empty()) s += " + ";
    if (mono.empty())
      s += cs;
    else if (c.is_one())
      s += mono;
    else
      s += (c.coeffs().size() > 1 || cs.find('+') != std::string::npos ? "(" + cs + ")" : cs) + "*" + mono;
  }
  if (den_.is_one()) return s;
  return "(" + s + ")/(" + den_.to_string(xv) + ")";
}

// ---------------------------------------------------------------- TowerField

TowerField::TowerField(FieldPtr f, std::string base_name, std::vector<std::string> names)
    : field_(std::move(f)), base_name_(std::move(base_name)), names_(std::move(names)) {
  if (static_cast<int>(names_.size()) > kMaxGenerators)
    fail(Errc::InvalidInput, "towers are limited to " + std::to_string(kMaxGenerators) + " generators");
  if (field_->p() > kMaxTowerPrime) fail(Errc::InvalidInput, "tower arithmetic supports p <= 31");
  pow_p_.resize(names_.size() + 1);
  pow_p_[0] = 1;
  for (std::size_t i = 1; i < pow_p_.size(); ++i) pow_p_[i] = pow_p_[i - 1] * static_cast<TowerElem::Key>(field_->p());
}

int TowerField::gen_index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

std::uint64_t TowerField::degree() const {
  std::uint64_t d = 1;
  for (int i = 0; i < gen_count(); ++i) d *= static_cast<std::uint64_t>(p());
  return d;
}

TowerElem TowerField::multiply(const TowerElem& a, const TowerElem& b) const {
  if (a.is_zero() || b.is_zero()) return TowerElem::zero(*this);
  TowerElem r(*this);
  if (a.is_base() || b.is_base()) {
    const TowerElem& s = a.is_base() ? a : b;
    const TowerElem& o = a.is_base() ? b : a;
    const Poly& c = s.terms_.begin()->second;
    for (const auto& [k, d] : o.terms_) r.terms_.emplace(k, c * d);
    r.den_ = s.den_ * o.den_;
    r.normalize();
    return r;
  }
  const int m = gen_count();
  const int p = this->p();
  auto widen = [&](TowerElem::Key k) {
    Wide w = 0;
    for (int i = 0; i < m; ++i) w |= static_cast<Wide>(digit(k, i)) << (kBits * i);
    return w;
  };
  std::map<Wide, Poly> raw;
  for (const auto& [ka, ca] : a.terms_) {
    const Wide wa = widen(ka);
    for (const auto& [kb, cb] : b.terms_) accumulate(raw, wa + widen(kb), ca * cb);
  }
  Poly den = a.den_ * b.den_;
  // t_i^e -> t_i^{e-p} (t_i + phi_i), top generator first so that the
  // lower-generator overflow created here is reduced later.
  for (int i = m - 1; i >= 0; --i) {
    const TowerElem& phi = phi_[i];
    const Poly& q = phi.den_;
    const bool q_one = q.is_one();
    for (;;) {
      bool overflow = false;
      for (const auto& kv : raw)
        if (wfield(kv.first, i) >= p) {
          overflow = true;
          break;
        }
      if (!overflow) break;
      std::map<Wide, Poly> next;
      for (const auto& [w, c] : raw) {
        if (wfield(w, i) < p) {
          accumulate(next, w, q_one ? c : c * q);
          continue;
        }
        const Wide w1 = w - (static_cast<Wide>(p - 1) << (kBits * i));
        accumulate(next, w1, q_one ? c : c * q);
        const Wide w0 = w - (static_cast<Wide>(p) << (kBits * i));
        for (const auto& [kf, cf] : phi.terms_) accumulate(next, w0 + widen(kf), c * cf);
      }
      if (!q_one) den = den * q;
      raw.swap(next);
    }
  }
  for (const auto& [w, c] : raw) {
    TowerElem::Key k = 0;
    for (int i = 0; i < m; ++i) k += static_cast<TowerElem::Key>(wfield(w, i)) * pow_p_[i];
    r.terms_.emplace(k, c);
  }
  r.den_ = std::move(den);
  r.normalize();
  return r;
}

// ---------------------------------------------------------------- builder

TowerBuilder::TowerBuilder(FieldPtr f, std::string base_name, std::vector<std::string> gen_names)
    : tower_(new TowerField(std::move(f), std::move(base_name), std::move(gen_names))) {}

void TowerBuilder::adjoin(const TowerElem& phi) {
  if (!tower_) fail(Errc::InvalidInput, "builder already finished");
  if (phi.tower_ptr() != tower_.get()) fail(Errc::TowerMismatch, "relation built over another tower");
  const int idx = tower_->gen_count();
  if (idx >= static_cast<int>(tower_->names_.size())) fail(Errc::InvalidInput, "all declared generators are adjoined");
  if (phi.top_generator() >= idx)
    fail(Errc::NonTriangularRelation, "relation for " + tower_->names_[idx] + " mentions a later generator");
  if (phi.is_zero()) fail(Errc::ZeroRelation, "relation for " + tower_->names_[idx] + " is zero");
  tower_->phi_.push_back(phi);
}

TowerPtr TowerBuilder::finish() {
  if (!tower_) fail(Errc::InvalidInput, "builder already finished");
  if (tower_->gen_count() != static_cast<int>(tower_->names_.size()))
    fail(Errc::InvalidInput, "not every declared generator has a relation");
  TowerPtr out = tower_;
  tower_.reset();
  return out;
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  Parser(const TowerField& T, const std::string& text, const Constants& constants)
      : t_(T), s_(text), consts_(constants) {}

  TowerElem parse() {
    TowerElem e = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void error(const std::string& what) const {
    fail(Errc::ParseError, what + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  TowerElem expr() {
    TowerElem acc = term();
    for (;;) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  TowerElem term() {
    TowerElem acc = unary();
    for (;;) {
      if (eat('*'))
        acc = acc * unary();
      else if (eat('/'))
        acc = acc / unary();
      else
        return acc;
    }
  }

  TowerElem unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  long long integer() {
    skip();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) neg = s_[pos_++] == '-';
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) error("expected integer");
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > (1LL << 40)) error("integer too large");
    }
    return neg ? -v : v;
  }

  // Exponents are integers or integer constants, optionally signed.
  long long exponent() {
    skip();
    std::size_t save = pos_;
    bool neg = eat('-');
    skip();
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      auto it = consts_.find(s_.substr(start, pos_ - start));
      if (it == consts_.end()) {
        pos_ = start;
        error("exponent must be an integer constant");
      }
      return neg ? -it->second : it->second;
    }
    pos_ = save;
    return integer();
  }

  TowerElem power() {
    TowerElem base = atom();
    if (eat('^')) {
      bool paren = eat('(');
      long long e = exponent();
      if (paren && !eat(')')) error("expected ')'");
      if (e < 0) return base.inv().pow(static_cast<std::uint64_t>(-e));
      return base.pow(static_cast<std::uint64_t>(e));
    }
    return base;
  }

  TowerElem atom() {
    skip();
    if (pos_ >= s_.size()) error("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      TowerElem e = expr();
      if (!eat(')')) error("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return TowerElem::from_int(t_, integer());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      if (name == t_.base_name()) return TowerElem::base_var(t_);
      const int gi = t_.gen_index(name);
      if (gi >= 0) {
        if (gi >= t_.gen_count())
          fail(Errc::NonTriangularRelation, "'" + name + "' is not available in \"" + s_ + "\"");
        return TowerElem::gen(t_, gi);
      }
      auto it = consts_.find(name);
      if (it != consts_.end()) return TowerElem::from_int(t_, it->second);
      error("unknown symbol '" + name + "'");
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  const TowerField& t_;
  std::string s_;
  const Constants& consts_;
  std::size_t pos_ = 0;
};

}  // namespace

TowerElem parse_elem(const TowerField& T, const std::string& text, const Constants& constants) {
  return Parser(T, text, constants).parse();
}

TowerPtr tower_make(FieldPtr f, const std::string& base_name, const std::vector<std::string>& gen_names,
                    const std::vector<std::string>& relations, const Constants& constants) {
  if (gen_names.size() != relations.size())
    fail(Errc::InvalidInput, "need exactly one relation per generator");
  TowerBuilder b(std::move(f), base_name, gen_names);
  for (const auto& rel : relations) b.adjoin(parse_elem(b.current(), rel, constants));
  return b.finish();
}

TowerElem lift(const TowerElem& a, const TowerField& target) {
  const Field& src = a.tower().field();
  const Field& dst = target.field();
  if (src.p() != dst.p() || !(src.is_prime_field() || src.same_as(dst)))
    fail(Errc::FieldMismatch, "lifting requires a prime-field source of the same characteristic");
  if (a.tower().gen_names() != target.gen_names()) fail(Errc::TowerMismatch, "towers have different generators");
  RatFunc den(Poly(dst, a.den().coeffs()));
  TowerElem r = TowerElem::zero(target);
  for (const auto& [k, c] : a.terms()) {
    TowerElem mono = TowerElem::base(target, RatFunc(Poly(dst, c.coeffs())));
    for (int i = 0; i < a.tower().gen_count(); ++i) {
      int d = a.tower().digit(k, i);
      if (d) mono = mono * TowerElem::gen(target, i).pow(static_cast<std::uint64_t>(d));
    }
    r += mono;
  }
  return r * TowerElem::base(target, den.inv());
}

TowerPtr base_change(const TowerField& T, FieldPtr bigger) {
  TowerBuilder b(bigger, T.base_name(), T.gen_names());
  for (int i = 0; i < T.gen_count(); ++i) b.adjoin(lift(T.relation(i), b.current()));
  return b.finish();
}

std::optional<Field::Code> evaluate(const TowerElem& a, Field::Code x, std::span<const Field::Code> t) {
  const TowerField& T = a.tower();
  const Field& F = T.field();
  if (static_cast<int>(t.size()) < T.gen_count()) fail(Errc::InvalidInput, "point has too few coordinates");
  const Field::Code d = a.den().eval(x);
  if (d == 0) return std::nullopt;
  Field::Code acc = 0;
  for (const auto& [k, c] : a.terms()) {
    Field::Code v = c.eval(x);
    for (int i = 0; i < T.gen_count(); ++i) v = F.mul(v, F.pow(t[i], static_cast<std::uint64_t>(T.digit(k, i))));
    acc = F.add(acc, v);
  }
  return F.div(acc, d);
}

bool identity_check(const TowerElem& lhs, const TowerElem& rhs) {
  return lhs.tower_ptr() == rhs.tower_ptr() && lhs == rhs;
}

// ---------------------------------------------------------------- FieldAuto

FieldAuto::FieldAuto(const TowerField& T, TowerElem image_x, std::vector<TowerElem> image_t, std::string name)
    : t_(&T), x_(std::move(image_x)), ts_(std::move(image_t)), name_(std::move(name)) {
  if (x_.tower_ptr() != t_) fail(Errc::TowerMismatch, "image of the base variable lives in another tower");
  if (static_cast<int>(ts_.size()) != T.gen_count())
    fail(Errc::InvalidInput, "need one image per generator (" + std::to_string(T.gen_count()) + ")");
  for (const auto& e : ts_)
    if (e.tower_ptr() != t_) fail(Errc::TowerMismatch, "generator image lives in another tower");
}

FieldAuto FieldAuto::identity(const TowerField& T) {
  std::vector<TowerElem> ts;
  for (int i = 0; i < T.gen_count(); ++i) ts.push_back(TowerElem::gen(T, i));
  FieldAuto id(T, TowerElem::base_var(T), std::move(ts), "id");
  id.verified_ = true;
  return id;
}

bool FieldAuto::is_identity() const {
  if (x_ != TowerElem::base_var(*t_)) return false;
  for (int i = 0; i < t_->gen_count(); ++i)
    if (ts_[i] != TowerElem::gen(*t_, i)) return false;
  return true;
}

std::size_t FieldAuto::hash() const noexcept {
  std::size_t h = x_.hash();
  for (const auto& e : ts_) h = h * 31 + e.hash();
  return h;
}

std::string FieldAuto::to_string() const {
  std::string lhs = "(" + t_->base_name(), rhs = "(" + x_.to_string();
  for (int i = 0; i < t_->gen_count(); ++i) {
    lhs += ", " + t_->gen_names()[i];
    rhs += ", " + ts_[i].to_string();
  }
  return (name_.empty() ? std::string() : name_ + ": ") + lhs + ") -> " + rhs + ")";
}

namespace {

TowerElem horner(const Poly& f, const TowerElem& X) {
  const TowerField& T = X.tower();
  TowerElem r = TowerElem::zero(T);
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * X + TowerElem::constant(T, *it);
  return r;
}

}  // namespace

TowerElem map_apply(const FieldAuto& s, const TowerElem& a) {
  const TowerField& T = s.tower();
  if (a.tower_ptr() != &T) fail(Errc::TowerMismatch, "element and map belong to different towers");
  if (a.is_zero()) return a;
  const TowerElem& X = s.image_x();
  const bool fixes_x = X == TowerElem::base_var(T);
  const bool x_poly = X.is_base() && X.den().is_one();
  const Poly xp = x_poly && !X.is_zero() ? X.terms().begin()->second : Poly(T.field());

  std::vector<std::vector<TowerElem>> pw(T.gen_count());
  auto gen_power = [&](int i, int d) -> const TowerElem& {
    auto& v = pw[i];
    if (v.empty()) v.push_back(TowerElem::one(T));
    while (static_cast<int>(v.size()) <= d) v.push_back(v.back() * s.image_t()[i]);
    return v[d];
  };
  auto coeff_image = [&](const Poly& c) {
    if (fixes_x) return TowerElem::base(T, RatFunc(c));
    if (x_poly) return TowerElem::base(T, RatFunc(c.compose(xp)));
    return horner(c, X);
  };

  TowerElem acc = TowerElem::zero(T);
  for (const auto& [k, c] : a.terms()) {
    TowerElem term = coeff_image(c);
    for (int i = 0; i < T.gen_count() && !term.is_zero(); ++i) {
      const int d = T.digit(k, i);
      if (d) term = term * gen_power(i, d);
    }
    acc += term;
  }
  if (a.den().is_one()) return acc;
  if (fixes_x) return acc * TowerElem::base(T, RatFunc(Poly::constant(T.field(), 1), a.den()));
  if (x_poly) return acc * TowerElem::base(T, RatFunc(Poly::constant(T.field(), 1), a.den().compose(xp)));
  return acc * horner(a.den(), X).inv();
}

FieldAuto map_compose(const FieldAuto& s, const FieldAuto& t) {
  if (&s.tower() != &t.tower()) fail(Errc::TowerMismatch, "maps belong to different towers");
  std::vector<TowerElem> ts;
  ts.reserve(t.image_t().size());
  for (const auto& e : t.image_t()) ts.push_back(map_apply(s, e));
  FieldAuto r(s.tower(), map_apply(s, t.image_x()), std::move(ts));
  r.verified_ = s.verified_ && t.verified_;
  return r;
}

std::optional<int> map_order(const FieldAuto& s, int cap) {
  FieldAuto cur = s;
  for (int k = 1; k <= cap; ++k) {
    if (cur.is_identity()) return k;
    cur = map_compose(cur, s);
  }
  return std::nullopt;
}

FieldAuto map_power(const FieldAuto& s, long long e, int cap) {
  if (e < 0) {
    auto ord = map_order(s, cap);
    if (!ord) fail(Errc::CapExceeded, "map has no finite order within the cap");
    e = ((e % *ord) + *ord) % *ord;
  }
  FieldAuto r = FieldAuto::identity(s.tower());
  FieldAuto b = s;
  while (e > 0) {
    if (e & 1) r = map_compose(r, b);
    e >>= 1;
    if (e) b = map_compose(b, b);
  }
  return r;
}

VerifyReport map_verify(FieldAuto& s, int order_cap) {
  const TowerField& T = s.tower();
  const std::uint64_t p = static_cast<std::uint64_t>(T.p());
  VerifyReport rep;
  for (int i = 0; i < T.gen_count(); ++i) {
    const std::string& nm = T.gen_names()[i];
    try {
      const TowerElem& ti = s.image_t()[i];
      TowerElem lhs = ti.pow(p) - ti;
      TowerElem rhs = map_apply(s, T.relation(i));
      if (lhs != rhs) {
        rep.failing_relation = i;
        rep.message = "relation " + nm + "^p - " + nm + " = phi fails: image gives " + lhs.to_string() +
                      " but phi maps to " + rhs.to_string();
        return rep;
      }
    } catch (const Error& e) {
      rep.failing_relation = i;
      rep.message = "relation for " + nm + " cannot be evaluated: " + e.what();
      return rep;
    }
  }
  rep.order = map_order(s, order_cap);
  if (!rep.order) {
    rep.message = "no finite order up to " + std::to_string(order_cap) + "; bijectivity not certified";
    return rep;
  }
  rep.ok = true;
  rep.message = "all relations hold; order " + std::to_string(*rep.order);
  s.verified_ = true;
  return rep;
}

}  // namespace nakajima
