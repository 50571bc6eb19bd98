#include "nakajima/artin_schreier.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>
#include <unordered_map>

#include "nakajima/error.hpp"

namespace nakajima {

namespace {

// p-th root in the residue field F_q[x]/(pi), which has p^(k deg pi) elements.
Poly residue_pth_root(const Poly& a, const Poly& pi) {
  const Field& F = pi.field();
  const int steps = F.k() * pi.degree() - 1;
  Poly r = a % pi;
  for (int i = 0; i < steps; ++i) r = powmod(r, static_cast<std::uint64_t>(F.p()), pi);
  return r;
}

}  // namespace

AsReduction as_reduce(const RatFunc& phi, const Place& P) {
  if (phi.is_zero()) fail(Errc::ZeroInput, "Artin-Schreier reduction of zero");
  const Field& F = phi.field();
  const int p = F.p();
  RatFunc cur = phi;
  RatFunc w(F);
  for (;;) {
    if (cur.is_zero()) return {0, w};
    const int v = valuation(cur, P).value();
    if (v >= 0) return {0, w};
    const int n = -v;
    if (n % p != 0) return {n, w};
    const Poly lead = leading_local_coefficient(cur, P);
    RatFunc term;
    if (P.is_infinite())
      term = RatFunc(Poly::monomial(F, F.pth_root(lead.coeff(0)), n / p));
    else
      term = RatFunc(residue_pth_root(lead, P.poly()), P.poly().pow(static_cast<std::uint64_t>(n / p)));
    w = w + term;
    cur = cur - (term.pow(p) - term);
  }
}

long long as_step_genus(const RatFunc& phi, int p) {
  if (phi.is_zero()) fail(Errc::ZeroInput, "Artin-Schreier datum is zero");
  if (phi.field().p() != p)
    fail(Errc::BadParameter, "p = " + std::to_string(p) + " differs from the characteristic " +
                                 std::to_string(phi.field().p()));
  long long different = 0;
  for (const Place& P : poles(phi)) {
    const int m = as_reduce(phi, P).m;
    if (m > 0) different += static_cast<long long>(P.degree()) * (p - 1) * (m + 1);
  }
  if (different == 0)
    fail(Errc::EverywhereUnramifiedInput, "y^p - y = " + phi.to_string() + " is unramified everywhere");
  const long long twice = different - 2LL * p + 2;  // 2g
  return twice / 2;
}

long long abelian_tower_genus(const std::vector<RatFunc>& phis, int p) {
  if (phis.empty()) return 0;
  if (phis.size() > 6) fail(Errc::DegreeOutOfRange, "at most 6 relations");
  const Field& F = phis[0].field();
  const int m = static_cast<int>(phis.size());
  long long total = 1;
  for (int i = 0; i < m; ++i) total *= p;
  long long g = 0;
  // coefficient vectors whose first nonzero entry is 1
  for (long long v = 1; v < total; ++v) {
    std::vector<int> a(m);
    long long r = v;
    for (int i = 0; i < m; ++i, r /= p) a[i] = static_cast<int>(r % p);
    const auto lead = std::find_if(a.begin(), a.end(), [](int c) { return c != 0; });
    if (*lead != 1) continue;
    RatFunc phi = RatFunc::constant(F, 0);
    for (int i = 0; i < m; ++i)
      if (a[i]) phi = phi + phis[i] * RatFunc::constant(F, F.from_int(a[i]));
    g += as_step_genus(phi, p);
  }
  return g;
}

namespace {

using Coords = std::vector<std::uint8_t>;

std::string coords_key(const Coords& v) { return std::string(v.begin(), v.end()); }

// Depth-first search over the first n-1 coefficients; the last one is looked
// up in a table of its q' possible contributions.
class WpSearch {
 public:
  WpSearch(int p, const std::vector<std::vector<Coords>>& vecs, const Coords& target)
      : p_(p), vecs_(vecs), target_(target), choice_(vecs.size(), 0) {
    const auto& last = vecs_.back();
    for (std::size_t a = 0; a < last.size(); ++a) last_.emplace(coords_key(last[a]), a);
  }

  bool run() {
    Coords rest = target_;
    return descend(0, rest);
  }

  const std::vector<std::size_t>& choice() const { return choice_; }

 private:
  bool descend(std::size_t j, const Coords& rest) {
    if (j + 1 == vecs_.size()) {
      auto it = last_.find(coords_key(rest));
      if (it == last_.end()) return false;
      choice_[j] = it->second;
      return true;
    }
    Coords next(rest.size());
    for (std::size_t a = 0; a < vecs_[j].size(); ++a) {
      const Coords& v = vecs_[j][a];
      for (std::size_t i = 0; i < rest.size(); ++i) next[i] = static_cast<std::uint8_t>((rest[i] + p_ - v[i]) % p_);
      choice_[j] = a;
      if (descend(j + 1, next)) return true;
    }
    return false;
  }

  int p_;
  const std::vector<std::vector<Coords>>& vecs_;
  const Coords& target_;
  std::vector<std::size_t> choice_;
  std::unordered_map<std::string, std::size_t> last_;
};

}  // namespace

WpResult wp_image_test(const TowerElem& u, const std::vector<TowerElem>& basis, int coeff_ext) {
  const TowerField& T = u.tower();
  for (const auto& b : basis)
    if (b.tower_ptr() != &T) fail(Errc::TowerMismatch, "basis element from another tower");
  const int p = T.p();
  const int k = T.field().k();
  const int ce = coeff_ext <= 0 ? p : coeff_ext;
  if (ce > 8) fail(Errc::SearchSpaceTooLarge, "coefficient field F_{p^" + std::to_string(ce) + "} is too large");

  constexpr std::uint64_t kLimit = 100000000;
  std::uint64_t qq = 1;
  for (int i = 0; i < ce; ++i) qq *= static_cast<std::uint64_t>(p);
  std::uint64_t count = 1;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (count > kLimit / qq) fail(Errc::SearchSpaceTooLarge, "more than 10^8 coefficient vectors");
    count *= qq;
  }

  WpResult res;
  res.candidates = count;
  const TowerField* W = &T;
  TowerElem U = u;
  std::vector<TowerElem> B = basis;
  if (k % ce != 0) {
    const int kk = std::lcm(k, ce);
    res.tower = base_change(T, Field::make(p, kk));
    W = res.tower.get();
    U = lift(u, *W);
    for (auto& b : B) b = lift(b, *W);
  }
  const auto pp = static_cast<std::uint64_t>(p);
  if (B.empty()) {
    res.found = U.is_zero();
    res.witness = TowerElem::zero(*W);
    return res;
  }

  const std::vector<Field::Code> alphas = W->field().subfield(ce);
  std::vector<std::vector<TowerElem>> images(B.size());
  Poly den = U.den();
  for (std::size_t j = 0; j < B.size(); ++j) {
    for (Field::Code a : alphas) {
      const TowerElem e = B[j].scale(a);
      images[j].push_back(e.pow(pp) - e);
      den = lcm(den, images[j].back().den());
    }
  }

  // Flatten numerators over the common denominator into F_p coordinates
  // indexed by (monomial, power of x, digit).
  using Slot = std::tuple<TowerElem::Key, int, int>;
  std::map<Slot, std::size_t> slots;
  auto numerators = [&](const TowerElem& e) {
    std::vector<std::pair<TowerElem::Key, Poly>> out;
    const Poly mult = den / e.den();
    for (const auto& [key, c] : e.terms()) out.emplace_back(key, c * mult);
    return out;
  };
  const Field& F = W->field();
  auto visit = [&](const TowerElem& e, auto&& fn) {
    for (const auto& [key, c] : numerators(e))
      for (int d = 0; d <= c.degree(); ++d) {
        const auto digits = F.digits(c.coeff(d));
        for (std::size_t l = 0; l < digits.size(); ++l)
          if (digits[l]) fn(Slot{key, d, static_cast<int>(l)}, digits[l]);
      }
  };
  auto reg = [&](const Slot& s, int) { slots.emplace(s, slots.size()); };
  visit(U, reg);
  for (const auto& row : images)
    for (const auto& e : row) visit(e, reg);
  auto flatten = [&](const TowerElem& e) {
    Coords v(slots.size(), 0);
    visit(e, [&](const Slot& s, int d) { v[slots.at(s)] = static_cast<std::uint8_t>(d); });
    return v;
  };
  const Coords target = flatten(U);
  std::vector<std::vector<Coords>> vecs(B.size());
  for (std::size_t j = 0; j < B.size(); ++j)
    for (const auto& e : images[j]) vecs[j].push_back(flatten(e));

  WpSearch search(p, vecs, target);
  if (!search.run()) {
    res.witness = TowerElem::zero(*W);
    return res;
  }
  TowerElem w = TowerElem::zero(*W);
  for (std::size_t j = 0; j < B.size(); ++j) w += B[j].scale(alphas[search.choice()[j]]);
  if (w.pow(pp) - w != U) fail(Errc::InvalidInput, "internal: witness does not reproduce the target");
  res.found = true;
  res.witness = w;
  return res;
}

}  // namespace nakajima
