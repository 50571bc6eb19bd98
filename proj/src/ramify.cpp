#include "nakajima/ramify.hpp"

#include <algorithm>
#include <numeric>

namespace nakajima {

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& v) {
  const BigInt n = boost::multiprecision::numerator(v), d = boost::multiprecision::denominator(v);
  return d == 1 ? n.str() : n.str() + "/" + d.str();
}

namespace {

bool is_power_of(BigInt n, int p) {
  if (n < 1) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

void CoverData::validate() const {
  if (p < 2) fail(Errc::InvalidInput, "cover: p must be a prime");
  if (!is_power_of(order, p)) fail(Errc::InvalidInput, "cover: |S| = " + order.str() + " is not a power of p");
  if (gbar < 0 || gammabar < 0 || gammabar > gbar) fail(Errc::InvalidInput, "cover: need 0 <= gammabar <= gbar");
  for (const auto& o : orbits) {
    if (o.length < 1 || o.chain.empty() || o.chain.back() != 1)
      fail(Errc::InvalidInput, "cover: chain must be non-empty and end at 1");
    for (std::size_t i = 1; i < o.chain.size(); ++i)
      if (o.chain[i] > o.chain[i - 1]) fail(Errc::InvalidInput, "cover: chain must be non-increasing");
    if (o.chain[0] * o.length != order) fail(Errc::InvalidInput, "cover: chain[0] * length != |S|");
    // wild ramification: S_P^(0) = S_P^(1)
    if (o.chain[0] > 1 && (o.chain.size() < 2 || o.chain[1] != o.chain[0]))
      fail(Errc::InvalidInput, "cover: a p-group has chain[0] = chain[1]");
  }
}

BigInt different_exponent(const OrbitDatum& o) {
  BigInt d = 0;
  for (const auto& c : o.chain) d += c - 1;
  return d;
}

BigInt hurwitz_genus(const CoverData& c) {
  BigInt rhs = c.order * (2 * c.gbar - 2);
  for (const auto& o : c.orbits) rhs += o.length * different_exponent(o);
  if (rhs % 2 != 0 || rhs < -2) fail(Errc::NonIntegralGenus, "2g - 2 = " + rhs.str());
  return rhs / 2 + 1;
}

BigInt ds_prank(const CoverData& c) {
  BigInt g = c.order * (c.gammabar - 1) + 1;
  for (const auto& o : c.orbits) g += c.order - o.length;
  if (g < 0) fail(Errc::NonsensePRank, "gamma = " + g.str());
  return g;
}

BigInt unramified_quotient_genus(const BigInt& g, const BigInt& degree) {
  if (degree < 1) fail(Errc::BadParameter, "degree must be positive");
  if ((g - 1) % degree != 0) fail(Errc::NonIntegralGenus, "g - 1 = " + BigInt(g - 1).str() + " not divisible by " + degree.str());
  return (g - 1) / degree + 1;
}

Bounds bounds(int p, const BigInt& g, const BigInt& gamma) {
  if (g < 2) fail(Errc::GenusTooSmall, "g = " + g.str());
  if (gamma < 0 || gamma > g) fail(Errc::BadParameter, "need 0 <= gamma <= g");
  Bounds b;
  b.stichtenoth = Rational(p, p - 1) * g;
  if (gamma == 1) {
    b.nakajima = Rational(g - 1);
  } else if (gamma >= 2) {
    b.nakajima = Rational(p, p - 2) * (gamma - 1);
    b.nakajima_genus_form = Rational(p, p - 2) * (g - 1);
  }
  b.hyp_threshold = Rational(p * p, p * p - p - 1) * (g - 1);
  return b;
}

bool extremal_check(int p, const BigInt& s_order, const BigInt& g) { return p * (g - 1) == (p - 2) * s_order; }

std::string case_name(PrincCase c) {
  switch (c) {
    case PrincCase::I: return "i";
    case PrincCase::II: return "ii";
    case PrincCase::III: return "iii";
    case PrincCase::HypothesisFails: return "hypothesis-fails";
    case PrincCase::Contradiction: return "contradiction";
  }
  return "?";
}

PrincCase classify_princ(int p, const BigInt& s_order, const BigInt& g, const BigInt& gamma, bool fixes_point) {
  // |S| > p^2/(p^2-p-1) (g-1), cross-multiplied
  if (s_order * (p * p - p - 1) <= BigInt(p * p) * (g - 1)) return PrincCase::HypothesisFails;
  if (gamma == 0) return PrincCase::I;
  if (fixes_point && s_order == p && g == p - 1 && gamma == g) return PrincCase::II;
  if (s_order >= p * p && extremal_check(p, s_order, g) && gamma == g) return PrincCase::III;
  return PrincCase::Contradiction;
}

namespace {

// Solves |M| (2x - 2) = 2g - 2 - sum for x.
BigInt solve_base(const BigInt& lhs, const BigInt& m, const char* what) {
  if (lhs % m != 0) fail(Errc::NonIntegralGenus, std::string(what) + " of the quotient is not integral");
  return lhs / m + 1;
}

}  // namespace

ConsistencyReport cover_consistency(const CoverData& c, const std::optional<BigInt>& expected_g,
                                    const std::optional<BigInt>& expected_gamma, const FiniteGroup* S,
                                    const std::vector<Perm>* action, const std::vector<QuotientDecl>& quotients) {
  c.validate();
  ConsistencyReport r;
  r.g = hurwitz_genus(c);
  r.gamma = ds_prank(c);
  if (expected_g && *expected_g != r.g) {
    r.g_ok = false;
    r.mismatches.push_back("genus: expected " + expected_g->str() + ", computed " + r.g.str());
  }
  if (expected_gamma && *expected_gamma != r.gamma) {
    r.gamma_ok = false;
    r.mismatches.push_back("p-rank: expected " + expected_gamma->str() + ", computed " + r.gamma.str());
  }
  if (quotients.empty()) return r;
  if (!S || !action) fail(Errc::InvalidInput, "quotient checks need the group and its action");
  if (BigInt(S->order()) != c.order) fail(Errc::InvalidInput, "group order differs from |S|");
  if (static_cast<int>(action->size()) != S->order()) fail(Errc::InvalidInput, "need one permutation per element");
  const int npts = action->empty() ? 0 : static_cast<int>((*action)[0].size());

  // S-orbits on the points, matched to the declared orbits by length.
  std::vector<int> orbit_of(npts, -1);
  std::vector<std::vector<int>> s_orbits;
  for (int x = 0; x < npts; ++x) {
    if (orbit_of[x] >= 0) continue;
    std::vector<int> orb;
    for (const auto& pi : *action)
      if (orbit_of[pi[x]] < 0) {
        orbit_of[pi[x]] = static_cast<int>(s_orbits.size());
        orb.push_back(pi[x]);
      }
    s_orbits.push_back(std::move(orb));
  }
  if (s_orbits.size() != c.orbits.size()) fail(Errc::InvalidInput, "action orbits differ from the declared short orbits");
  std::vector<int> datum(s_orbits.size(), -1);
  std::vector<bool> used(c.orbits.size(), false);
  for (std::size_t i = 0; i < s_orbits.size(); ++i) {
    for (std::size_t j = 0; j < c.orbits.size(); ++j)
      if (!used[j] && c.orbits[j].length == BigInt(s_orbits[i].size())) {
        used[j] = true;
        datum[i] = static_cast<int>(j);
        break;
      }
    if (datum[i] < 0) fail(Errc::InvalidInput, "action orbit lengths differ from the declared short orbits");
  }

  for (const auto& q : quotients) {
    QuotientCheck qc;
    qc.label = q.label;
    const auto M = generate(*S, q.elements);
    const BigInt m = M.size();
    qc.data.p = c.p;
    qc.data.order = m;
    std::vector<bool> seen(npts, false);
    for (int x = 0; x < npts; ++x) {
      if (seen[x]) continue;
      int len = 0;
      for (int e : M)
        if (!seen[(*action)[e][x]]) {
          seen[(*action)[e][x]] = true;
          ++len;
        }
      if (len == static_cast<int>(M.size())) continue;  // regular M-orbit
      const BigInt stab = m / len;
      const auto& od = c.orbits[datum[orbit_of[x]]];
      if (stab != od.chain[0])
        fail(Errc::InvalidInput, q.label + ": stabilizer of order " + stab.str() +
                                     " is neither trivial nor the full decomposition group");
      qc.data.orbits.push_back(OrbitDatum{len, od.chain});
    }
    qc.semiregular = qc.data.orbits.empty();
    BigInt h = 2 * r.g - 2, dsum = r.gamma - 1;
    for (const auto& o : qc.data.orbits) {
      h -= o.length * different_exponent(o);
      dsum -= m - o.length;
    }
    if (h % 2 != 0) fail(Errc::NonIntegralGenus, q.label + ": odd ramification contribution");
    qc.gbar = solve_base(h / 2, m, "genus");
    qc.gammabar = solve_base(dsum, m, "p-rank");
    qc.data.gbar = qc.gbar;
    qc.data.gammabar = qc.gammabar;
    qc.ok = qc.gbar >= 0 && qc.gammabar >= 0 && qc.gammabar <= qc.gbar;
    if (qc.semiregular) {
      const bool div = (r.g - 1) % m == 0 && (r.gamma - 1) % m == 0;
      qc.ok = qc.ok && div && qc.gbar - 1 == (r.g - 1) / m && qc.gammabar - 1 == (r.gamma - 1) / m;
      qc.note = "unramified, gbar - 1 = (g - 1)/" + m.str();
    } else {
      qc.note = std::to_string(qc.data.orbits.size()) + " short orbits";
    }
    if (!qc.ok) r.mismatches.push_back(q.label + ": inconsistent quotient (gbar " + qc.gbar.str() + ", gammabar " +
                                       qc.gammabar.str() + ")");
    r.quotients.push_back(std::move(qc));
  }
  return r;
}

}  // namespace nakajima
