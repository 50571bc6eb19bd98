#include "nakajima/scenarios.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <sstream>
#include <thread>

#include "nakajima/artin_schreier.hpp"
#include "nakajima/catalog.hpp"
#include "nakajima/counting.hpp"

namespace nakajima {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Discrepancy: return "discrepancy";
    case Status::Note: return "note";
  }
  return "?";
}

bool Report::ok() const { return count(Status::Fail) == 0; }

int Report::count(Status s) const {
  return static_cast<int>(std::count_if(steps.begin(), steps.end(), [&](const Step& x) { return x.status == s; }));
}

namespace {

template <class T>
std::string str(const T& v) {
  if constexpr (std::is_same_v<T, bool>) {
    return v ? "true" : "false";
  } else if constexpr (std::is_convertible_v<T, std::string>) {
    return std::string(v);
  } else if constexpr (std::is_same_v<T, BigInt> || std::is_same_v<T, Rational>) {
    return to_string(v);
  } else {
    std::ostringstream os;
    os << v;
    return os.str();
  }
}

std::string census_str(const std::map<int, int>& c) {
  std::string s = "{";
  for (auto it = c.begin(); it != c.end(); ++it) s += (it == c.begin() ? "" : ", ") + std::to_string(it->first) + ":" + std::to_string(it->second);
  return s + "}";
}

class Recorder {
 public:
  explicit Recorder(std::string name) { r_.scenario = std::move(name); }

  template <class A, class B>
  void check(const std::string& name, const std::string& anchor, const A& expected, const B& actual,
             const std::string& prov) {
    const std::string e = str(expected), a = str(actual);
    add(name, anchor, e, a, prov, e == a ? Status::Pass : Status::Fail);
  }

  // A printed value that may legitimately disagree with the computation.
  template <class A, class B>
  void printed(const std::string& name, const std::string& anchor, const A& expected, const B& actual) {
    const std::string e = str(expected), a = str(actual);
    add(name, anchor, e, a, "printed", e == a ? Status::Pass : Status::Discrepancy);
  }

  void note(const std::string& name, const std::string& anchor, const std::string& text,
            const std::string& prov = "direct") {
    add(name, anchor, "-", text, prov, Status::Note);
  }

  // Runs fn; an exception becomes a failed step.
  void guard(const std::string& name, const std::string& anchor, const std::function<void()>& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      add(name, anchor, "no error", e.what(), "direct", Status::Fail);
    }
  }

  void add(std::string name, std::string anchor, std::string e, std::string a, std::string prov, Status s) {
    r_.steps.push_back({std::move(name), std::move(anchor), std::move(e), std::move(a), std::move(prov), s});
  }

  Report take() { return std::move(r_); }

 private:
  Report r_;
};

// ---------------------------------------------------------------- helpers

struct BuiltCurve {
  CurveSpec spec;
  TowerPtr tower;
  std::vector<FieldAuto> maps;
  const FieldAuto* map(const std::string& n) const {
    for (const auto& m : maps)
      if (m.name() == n) return &m;
    return nullptr;
  }
};

// Builds the tower, verifies every map (one step each).
BuiltCurve build_curve(Recorder& rec, const std::string& name, const Constants& params) {
  BuiltCurve b;
  b.spec = get_curve(name, params);
  b.tower = build_tower(b.spec.tower);
  std::string rels;
  for (std::size_t i = 0; i < b.spec.tower.relations.size(); ++i)
    rels += (i ? "; " : "") + b.spec.tower.generators[i] + "^p - " + b.spec.tower.generators[i] + " = " +
            b.spec.tower.relations[i];
  rec.check("tower " + name, "defining equations", "builds", "builds", "direct");
  rec.note("relations", "defining equations", rels);
  b.maps = build_maps(b.spec.tower, *b.tower);
  for (auto& m : b.maps) {
    const auto rep = map_verify(m);
    rec.check("map_verify " + m.name(), "automorphism " + m.name() + " as printed", "ok",
              rep.ok ? std::string("ok") : "relation " + std::to_string(rep.failing_relation + 1) + " fails",
              "printed");
  }
  return b;
}

std::vector<FieldAuto> group_maps(const BuiltCurve& b) {
  std::vector<FieldAuto> gens;
  for (const auto& n : b.spec.group_generators)
    if (const FieldAuto* m = b.map(n); m && m->verified()) gens.push_back(*m);
  return gens;
}

long long mod_inverse(long long a, long long p) {
  a = ((a % p) + p) % p;
  for (long long b = 1; b < p; ++b)
    if (a * b % p == 1) return b;
  return 0;
}

std::string identify(const FiniteGroup& H, const std::vector<std::string>& labels) {
  for (const auto& l : labels) {
    const FiniteGroup R = reference_group(l);
    if (R.order() == H.order() && is_isomorphic(H, R)) return l;
  }
  return "order " + std::to_string(H.order()) + ", unidentified";
}

std::string sorted_join(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return s;
}

int exponent_of(const FiniteGroup& G, const std::vector<int>& elems) {
  int e = 1;
  for (int x : elems) e = std::lcm(e, G.elem_order(x));
  return e;
}

// Frattini = derived subgroup, index p^2, p + 1 maximal subgroups, d = 2.
void structure_suite(Recorder& rec, const FiniteGroup& G, int p, const std::string& what) {
  const auto fp = fingerprint(G);
  auto phi = frattini(G), der = derived_subgroup(G);
  std::sort(phi.begin(), phi.end());
  std::sort(der.begin(), der.end());
  const std::string anchor = "structure of S for extremal curves";
  rec.check(what + ": Phi(S) = S'", anchor, true, phi == der, "printed");
  rec.check(what + ": [S : Phi(S)]", anchor, p * p, G.order() / static_cast<int>(phi.size()), "printed");
  rec.check(what + ": maximal subgroups", anchor, p + 1, maximal_subgroups(G).size(), "printed");
  bool all_normal = true;
  for (const auto& M : maximal_subgroups(G)) all_normal = all_normal && is_normal(G, M);
  rec.check(what + ": maximal subgroups normal", anchor, true, all_normal, "printed");
  rec.check(what + ": d(S)", anchor, 2, fp.d, "printed");
  rec.note(what + ": fingerprint", "computed invariants", fp.to_string(), "derived");
}

// Exponent rules for |S| <= p^(p+1).
void exponent_rules(Recorder& rec, const FiniteGroup& G, int p, const std::string& what) {
  long long pp = 1;
  for (int i = 0; i < p; ++i) pp *= p;
  const auto fp = fingerprint(G);
  const std::string anchor = "exponent of S for |S| <= p^(p+1)";
  if (G.order() <= pp) {
    rec.check(what + ": exponent (|S| <= p^p)", anchor, p, fp.exponent, "printed");
    return;
  }
  if (G.order() != pp * p) return;
  rec.check(what + ": exponent is p or p^2", anchor, true, fp.exponent == p || fp.exponent == p * p, "printed");
  int k = 0;
  bool inside_phi = true;
  auto phi = frattini(G);
  std::sort(phi.begin(), phi.end());
  for (const auto& M : maximal_subgroups(G)) {
    if (exponent_of(G, M) != p * p) continue;
    ++k;
    for (int x : M)
      if (G.elem_order(x) == p && !std::binary_search(phi.begin(), phi.end(), x)) inside_phi = false;
  }
  rec.check(what + ": order-p elements of exponent-p^2 maximal subgroups lie in Phi", anchor, true, inside_phi,
            "printed");
  const long long formula = (p + 1 - k) * (pp - pp / p) + pp / p - 1;
  const auto c = fp.census.count(p) ? fp.census.at(p) : 0;
  rec.check(what + ": elements of order p, (p+1-k)(p^p-p^(p-1))+p^(p-1)-1 with k=" + std::to_string(k), anchor,
            formula, c, "derived");
}

void genus_steps(Recorder& rec, const CurveSpec& s, const std::string& anchor) {
  if (!s.expected.cover) return;
  const auto& c = *s.expected.cover;
  const BigInt g = hurwitz_genus(c), gamma = ds_prank(c);
  if (s.expected.genus) rec.check("Hurwitz genus of " + s.name, anchor, *s.expected.genus, g, "printed");
  if (s.expected.prank) rec.check("Deuring-Shafarevich p-rank of " + s.name, anchor, *s.expected.prank, gamma, "printed");
  rec.check("ordinary (g = gamma)", anchor, true, g == gamma, "derived");
}

void classify_step(Recorder& rec, const CurveSpec& s) {
  if (!s.expected.cover || s.expected.princ_case.empty()) return;
  const auto& c = *s.expected.cover;
  const BigInt g = hurwitz_genus(c), gamma = ds_prank(c);
  rec.check("classification of " + s.name + " (p=" + std::to_string(s.p) + ")", "case list of the main theorem",
            s.expected.princ_case, case_name(classify_princ(s.p, c.order, g, gamma, s.expected.fixes_point)),
            "printed");
}

// ---------------------------------------------------------------- S1

Report s1_artin_mumford(const ScenarioOptions&) {
  Recorder rec("S1-artin-mumford");
  rec.guard("S1", "Artin-Mumford curve", [&] {
    const auto b = build_curve(rec, "artin-mumford", {{"p", 3}, {"c", 1}});
    const auto& T = *b.tower;
    const int p = b.spec.p;
    rec.check("one-step genus of y^p - y = c/(x^p - x)", "genus (p-1)^2", (p - 1) * (p - 1),
              as_step_genus(T.relation(0).base_value(), p), "printed");
    genus_steps(rec, b.spec, "genus (p-1)^2 via both formulas");
    rec.note("uniqueness", "unique extremal curve of genus 4",
             "uniqueness among all genus-4 curves is a classification statement and is not executable here",
             "printed");
    const FieldAuto &g = *b.map("g"), &h = *b.map("h");
    rec.check("order of g", "C_p x C_p generators", p, *map_order(g), "direct");
    rec.check("order of h", "C_p x C_p generators", p, *map_order(h), "direct");
    rec.check("gh = hg", "C_p x C_p generators", true, point_compose(g, h) == point_compose(h, g), "direct");
    auto C = closure_maps(group_maps(b));
    rec.check("|<g,h>|", "C_p x C_p generators", *b.spec.expected.group_order, C.group.order(), "printed");
    rec.check("<g,h> is " + b.spec.expected.group_label, "C_p x C_p generators", true,
              is_isomorphic(C.group, reference_group(b.spec.expected.group_label)), "printed");
    const FieldAuto &r = *b.map("r"), &t = *b.map("t");
    auto D = closure_maps({g, h, r, t}, 1024);
    rec.check("|<g,h,r,t>| = p^2 * 2(p-1)", "automorphism group (C_p x C_p) x| D_(p-1)", 2 * p * p * (p - 1),
              D.group.order(), "printed");
    classify_step(rec, b.spec);
  });
  return rec.take();
}

// ---------------------------------------------------------------- S2

Report s2_xc(int p, const ScenarioOptions& opts) {
  Recorder rec("S2-xc-p" + std::to_string(p));
  rec.guard("S2", "X_c curve", [&] {
    const auto b = build_curve(rec, "x-c", {{"p", p}, {"c", 1}});
    const long long w = b.spec.params.at("omega"), winv = mod_inverse(w, p);
    const FieldAuto &g = *b.map("g"), &h = *b.map("h"), &r = *b.map("r"), &t = *b.map("t");
    for (const FieldAuto* m : {&g, &h, &r, &t})
      if (!m->verified()) return;

    const std::string rel = "relations among g, h, r, t";
    const FieldAuto tinv = map_power(t, -1);
    rec.check("rgr = h^-1", rel, true, point_compose(r, point_compose(g, r)) == map_power(h, -1), "printed");
    rec.check("rhr = g^-1", rel, true, point_compose(r, point_compose(h, r)) == map_power(g, -1), "printed");
    rec.check("t^-1 g t = g^(omega^-1)", rel, true, point_compose(tinv, point_compose(g, t)) == map_power(g, winv),
              "printed");
    rec.check("t^-1 h t = h^omega", rel, true, point_compose(tinv, point_compose(h, t)) == map_power(h, w), "printed");
    const std::string dih = "<r,t> is dihedral of order 2(p-1)";
    rec.check("order of r", dih, 2, *map_order(r), "printed");
    rec.check("order of t", dih, p - 1, *map_order(t), "printed");
    rec.check("rtr = t^-1", dih, true, point_compose(r, point_compose(t, r)) == tinv, "derived");
    rec.check("|<r,t>|", dih, 2 * (p - 1), closure_maps({r, t}).group.order(), "printed");

    auto C = closure_maps({g, h});
    const FiniteGroup& S = C.group;
    rec.check("|<g,h>|", "order p^3 and exponent p", *b.spec.expected.group_order, S.order(), "printed");
    rec.check("exponent of <g,h>", "order p^3 and exponent p", p, fingerprint(S).exponent, "printed");
    rec.check("<g,h> isomorphic to matrix-built UT(3,p)", "S isomorphic to UT(3,p)", true,
              is_isomorphic(S, ut3(p)), "printed");
    structure_suite(rec, S, p, "<g,h>");
    exponent_rules(rec, S, p, "<g,h>");
    rec.check("|<g,h,r,t>| = p^3 * 2(p-1)", "U(p,3) x| D_(p-1)", 2 * p * p * p * (p - 1),
              closure_maps({g, h, r, t}, 4096).group.order(), "printed");

    // unramified z-step: local reductions at the poles of u = x y^p - x^p y
    auto AM = tower_make(Field::make(p, 1), "x", {"y"}, {"c/(x^p - x)"}, b.spec.params);
    const TowerElem x = TowerElem::base_var(*AM), y = TowerElem::gen(*AM, 0);
    const TowerElem u = x * y.pow(p) - x.pow(p) * y;
    bool p_side = true, q_side = true, printed_sign = true;
    for (int i = 1; i < p; ++i) {
      const TowerElem I = TowerElem::from_int(*AM, i);
      const TowerElem ti = I * x, si = I * y, iy = I - y, xi = x - I;
      const TowerElem rhs = x.pow(p) * iy - x * iy.pow(p);
      p_side = p_side && identity_check(u + (ti.pow(p) - ti), rhs);
      printed_sign = printed_sign && identity_check(u - (ti.pow(p) - ti), rhs);
      q_side = q_side && identity_check(u - (si.pow(p) - si), y.pow(p) * xi - y * xi.pow(p));
    }
    const std::string unr = "z-step is unramified over the Artin-Mumford curve";
    rec.check("u + (t_i^p - t_i) = x^p(i-y) - x(i-y)^p, t_i = i x, all i", unr, true, p_side, "derived");
    rec.check("u - ((iy)^p - iy) = y^p(x-i) - y(x-i)^p, all i", unr, true, q_side, "printed");
    rec.printed("u - (t_i^p - t_i) = x^p(i-y) - x(i-y)^p as printed", unr, true, printed_sign);

    // genus: AM genus, then an unramified degree-p step
    const long long gam = as_step_genus(AM->relation(0).base_value(), p);
    rec.check("genus of the Artin-Mumford curve", "genus (p-1)^2", (p - 1) * (p - 1), gam, "printed");
    const BigInt gx = BigInt(p) * (gam - 1) + 1;
    rec.check("genus of X_c = p(g_AM - 1) + 1", "g = gamma = (p-2)p^2 + 1", *b.spec.expected.genus, gx, "printed");
    genus_steps(rec, b.spec, "g = gamma = (p-2)p^2 + 1");
    rec.check("extremal_check", "Nakajima extremal", true, extremal_check(p, S.order(), gx), "printed");
    classify_step(rec, b.spec);

    // quotients by the maximal subgroups; the short orbits are modelled as
    // coset spaces of the point stabilizers <g> and <h>
    const int gi = S.generators()[0], hi = S.generators()[1], z = S.commutator(gi, hi);
    const auto a1 = coset_action(S, generate(S, {gi})), a2 = coset_action(S, generate(S, {hi}));
    std::vector<Perm> action;
    for (int e = 0; e < S.order(); ++e) {
      Perm pi = a1[e];
      for (int v : a2[e]) pi.push_back(v + static_cast<int>(a1[e].size()));
      action.push_back(std::move(pi));
    }
    std::vector<QuotientDecl> qs = {{"M1", {gi, z}}, {"M2", {hi, z}}};
    for (int k = 1; k < p; ++k) qs.push_back({"M" + std::to_string(k + 2), {S.mul(gi, S.pow(hi, k)), z}});
    const auto cr = cover_consistency(*b.spec.expected.cover, b.spec.expected.genus, b.spec.expected.prank, &S,
                                      &action, qs);
    for (const auto& q : cr.quotients) {
      const bool semi = std::find(b.spec.expected.semiregular.begin(), b.spec.expected.semiregular.end(), q.label) !=
                        b.spec.expected.semiregular.end();
      const std::string anchor = semi ? "semiregular maximal subgroups give gbar = gammabar = p-1"
                                      : "quotient by a non-semiregular maximal subgroup is rational";
      rec.check("X_c/" + q.label + " (gbar, gammabar)", anchor,
                semi ? str(p - 1) + ", " + str(p - 1) : std::string("0, 0"), q.gbar.str() + ", " + q.gammabar.str(),
                "printed");
    }
    rec.check("cover consistency", "Hurwitz and Deuring-Shafarevich agree", true, cr.ok(), "derived");

    if (p == 3) {
      // the second model of the genus-10 curve over the base u
      const auto m = build_curve(rec, "s27-tower", {});
      const auto& U = *m.tower;
      const long long base_genus = as_step_genus(U.relation(0).base_value(), 3);
      rec.check("genus of v^3 - v = (c - u^2)/u", "second model of the genus-10 curve", 2, base_genus, "derived");
      const TowerElem uu = TowerElem::base_var(U), v = TowerElem::gen(U, 0);
      const TowerElem c = TowerElem::from_int(U, m.spec.params.at("c"));
      rec.check("u + (v^3 - v) = c/u", "y-step is unramified", true, identity_check(uu + (v.pow(3) - v), c / uu),
                "derived");
      rec.note("z-step", "z-step is unramified",
               "taken as stated; only the y-step reduction is checked symbolically", "printed");
      rec.check("genus of the tower (unramified of degree 9)", "genus 10", *m.spec.expected.genus,
                BigInt(9) * (base_genus - 1) + 1, "printed");
    }

    // w^p - w = u has no solution in span{1, x, y, xy}
    const std::vector<TowerElem> basis = {TowerElem::one(*AM), x, y, x * y};
    const auto wp1 = wp_image_test(u, basis, 1);
    rec.check("u not in wp(span{1,x,y,xy}) over F_" + std::to_string(p), "u is not of the form w^p - w", false,
              wp1.found, "printed");
    rec.note("candidates searched over F_" + std::to_string(p), "u is not of the form w^p - w", str(wp1.candidates),
             "derived");
    if (opts.extended) {
      try {
        const auto wpx = wp_image_test(u, basis, p == 3 ? 3 : p);
        rec.check("u not in wp(span{1,x,y,xy}) over F_" + std::to_string(p) + "^" + std::to_string(p),
                  "u is not of the form w^p - w", false, wpx.found, "printed");
        rec.note("candidates searched (extended)", "u is not of the form w^p - w", str(wpx.candidates), "derived");
      } catch (const Error& e) {
        if (e.code() != Errc::SearchSpaceTooLarge) throw;
        rec.note("extended search", "u is not of the form w^p - w", e.what());
      }
    }
  });
  return rec.take();
}

// ---------------------------------------------------------------- S3

Report s3_genus28(const ScenarioOptions&) {
  Recorder rec("S3-genus28");
  rec.guard("S3", "genus-28 curve", [&] {
    const auto b = build_curve(rec, "genus28", {});
    const auto& T = *b.tower;
    rec.check("genus of the base y^3 - y = x + 1/x", "general curve of genus p-1", 2,
              as_step_genus(T.relation(0).base_value(), 3), "printed");
    rec.printed("g1 and g2 are distinct maps", "generators g1..g5 as printed", true, !(*b.map("g1") == *b.map("g2")));
    const auto gens = group_maps(b);
    if (gens.size() != b.spec.group_generators.size()) {
      rec.add("closure", "S isomorphic to S(81,7)", "all generators verified", "a generator failed", "printed",
              Status::Fail);
      return;
    }
    auto C = closure_maps(gens, 4096);
    const FiniteGroup& S = C.group;
    rec.printed("|<g1,...,g5>|", "S isomorphic to S(81,7)", 81, S.order());
    if (S.order() != 81) return;
    rec.check("<g1,...,g5> isomorphic to C3 wr C3", "S(81,7) = C3 wr C3", true, is_isomorphic(S, wreath_cp_cp(3)),
              "printed");
    rec.check("census of <g1,...,g5>", "S(81,7) = C3 wr C3", census_str(fingerprint(wreath_cp_cp(3)).census),
              census_str(fingerprint(S).census), "derived");
    std::vector<std::string> types;
    for (const auto& M : maximal_subgroups(S))
      types.push_back(identify(subgroup(S, M), {"C3xC3xC3", "UT(3,3)", "C9:C3", "C9xC3"}));
    rec.check("maximal subgroups", "M1 = C3^3, M2 = UT(3,3), M3 = M4 = C9 x| C3",
              sorted_join({"C3xC3xC3", "UT(3,3)", "C9:C3", "C9:C3"}), sorted_join(types), "printed");
    structure_suite(rec, S, 3, "<g1,...,g5>");
    exponent_rules(rec, S, 3, "<g1,...,g5>");
    genus_steps(rec, b.spec, "genus 28");
    rec.check("extremal_check", "Nakajima extremal", true, extremal_check(3, 81, 28), "printed");
    classify_step(rec, b.spec);
  });
  return rec.take();
}

// ---------------------------------------------------------------- S4

Report s4_families(const ScenarioOptions&) {
  Recorder rec("S4-families");
  rec.guard("S4", "families and counting", [&] {
    // the base curves y^p - y = a x + 1/x
    for (const auto& [name, p] : std::vector<std::pair<std::string, int>>{{"base-a", 3}, {"base-a", 5}, {"eqago1", 3}}) {
      const auto b = build_curve(rec, name, {{"p", p}});
      rec.check("one-step genus of " + name + " (p=" + std::to_string(p) + ")", "general curve of genus p-1", p - 1,
                as_step_genus(b.tower->relation(0).base_value(), p), "printed");
      genus_steps(rec, b.spec, "general curve of genus p-1");
      std::vector<FieldAuto> all;
      for (const auto& m : b.maps)
        if (m.verified()) all.push_back(m);
      if (all.size() == b.maps.size())
        rec.check("|<s, tau, sigma>| for " + name, "<h> x D_p of order 4p", 4 * p, closure_maps(all).group.order(),
                  "printed");
    }
    for (int p : {3, 5})
      for (int N : {1, 2})
        for (Family f : {Family::BaseCurve, Family::ArtinMumford}) {
          const BigInt g = family_genus(p, N, f);
          const auto c = family_cover(p, N, f);
          rec.check(family_name(f) + " p=" + std::to_string(p) + " N=" + std::to_string(N) + ": genus = p-rank",
                    "genus of the infinite families", g, ds_prank(c), "derived");
          // |S| is the covering degree times the p-group of the base curve (p, resp. p^2)
          const BigInt s = c.order * (f == Family::BaseCurve ? p : p * p);
          rec.check(family_name(f) + " p=" + std::to_string(p) + " N=" + std::to_string(N) + ": extremal, |S|=" +
                        s.str(),
                    "members are Nakajima extremal", true, extremal_check(p, s, g), "derived");
        }
    rec.check("base-curve p=3 N=1", "genus 10", 10, family_genus(3, 1, Family::BaseCurve), "printed");
    rec.check("base-curve p=3 N=2", "genus 82", 82, family_genus(3, 2, Family::BaseCurve), "printed");
    rec.check("artin-mumford p=3 N=1", "genus 244", 244, family_genus(3, 1, Family::ArtinMumford), "printed");

    struct Row {
      std::string label;
      int gamma;
      std::string printed;
    };
    const std::vector<Row> rows = {{"C3xC3", 2, "1"}, {"UT(3,3)", 2, "1"}, {"C3", 2, "4"}, {"C9xC9", 2, ""},
                                   {"C9xC3", 2, ""},  {"C9:C3", 2, ""},    {"S(81,9)", 2, ""}, {"C3wrC3", 2, ""}};
    for (const auto& row : rows) {
      const FiniteGroup G = reference_group(row.label);
      const auto prof = profile_of(G);
      const BigInt n = frbound_count(prof, row.gamma);
      const std::string what = "extensions with group " + row.label + ", gamma=" + std::to_string(row.gamma);
      if (!row.printed.empty()) {
        rec.check(what, "number of unramified extensions", row.printed, n, "printed");
        rec.check(what + " prime to p", "count not divisible by p when d(G) = gamma", true, not_div_p_check(n, 3),
                  "printed");
      } else {
        rec.note(what, "number of unramified extensions",
                 n.str() + " (alpha=" + prof.alpha->str() + ", d=" + std::to_string(prof.d) + ")", "derived");
      }
      rec.check("|Aut(" + row.label + ")| divides the Burnside-Hall bound", "alpha(G) divides the bound", true,
                bh_bound(prof.p, prof.n, prof.d) % *prof.alpha == 0, "printed");
      rec.check("Sylow bound divides the Burnside-Hall bound for " + row.label, "Sylow form of the bound", true,
                bh_bound(prof.p, prof.n, prof.d) % sylow_bh_bound(prof.p, prof.n, prof.d) == 0, "derived");
    }
    {
      const auto prof = profile_of(reference_group("C27xC3"));
      const BigInt n = frbound_count(prof, 2);
      rec.note("C27xC3 with d = gamma = 2: count divisible by 3", "count not divisible by p when d(G) = gamma",
               n.str() + "; the statement needs the p-part of |Aut(G)| to attain the Sylow bound", "derived");
    }
    rec.note("existence under the weaker Sylow hypothesis", "existence but not uniqueness",
             "an existence statement for curves; only the numeric relation between the two bounds is checked",
             "printed");

    const std::string phi = "|Aut(Phi(S))| for the genus-244 curve";
    const BigInt printed_value = BigInt(512) * 243 * 5 * 11;
    const BigInt product = BigInt(81 - 1) * (81 - 3) * (81 - 9) * (81 - 27);
    rec.check("(3^4-1)(3^4-3)(3^4-3^2)(3^4-3^3)", phi, "24261120", product, "derived");
    rec.check("bh_bound(3,4,4)", phi, product, bh_bound(3, 4, 4), "derived");
    rec.check("|GL(4,3)|", phi, product, gl_order(4, 3), "derived");
    rec.printed("2^9*3^5*5*11 equals the product", phi, printed_value, product);
    const auto c99 = profile_of(abelian_group({9, 9}));
    rec.note("|Aut(C9 x C9)| by brute force", phi, c99.alpha->str(), "derived");
    rec.printed("d(Phi(S)) for Phi(S) = C9 x C9", phi, 4, c99.d);
    rec.note("Phi(S) as (p-1)^2 copies of C_p^N", phi,
             "C3^4 has d = 4 and |Aut| = |GL(4,3)| = " + product.str() + "; neither reading gives " +
                 printed_value.str(),
             "derived");
  });
  return rec.take();
}

// ---------------------------------------------------------------- S5

Report s5_bounds(const ScenarioOptions&) {
  Recorder rec("S5-bounds");
  rec.guard("S5", "bounds", [&] {
    const auto b = bounds(3, 10, 10);
    rec.check("Nakajima bound (3,10,10)", "|S| = 27 attains the bound", 27, *b.nakajima, "printed");
    rec.check("threshold (3,10,10)", "|S| = 27 attains the bound", "81/5", b.hyp_threshold, "derived");
    rec.check("Nakajima bound (3,4,4)", "genus-4 case with |S| = 9", 9, *bounds(3, 4, 4).nakajima, "printed");
    rec.check("Nakajima bound gamma = 1", "g - 1 when gamma = 1", 4, *bounds(3, 5, 1).nakajima, "direct");

    std::map<std::string, int> tally;
    bool iii_exact = true;
    for (int e = 1; e <= 5; ++e) {
      int s = 1;
      for (int i = 0; i < e; ++i) s *= 3;
      for (int g = 2; g <= 30; ++g)
        for (int gamma : {0, g}) {
          const auto c = classify_princ(3, s, g, gamma, false);
          ++tally[case_name(c)];
          const bool want_iii = gamma == g && s >= 9 && 3 * (g - 1) == s;
          if ((c == PrincCase::III) != want_iii) iii_exact = false;
        }
    }
    std::string t;
    for (const auto& [k, v] : tally) t += (t.empty() ? "" : ", ") + k + "=" + std::to_string(v);
    rec.note("grid p=3, |S| in 3..243, g in 2..30, gamma in {0, g}", "case list of the main theorem", t, "derived");
    rec.check("case iii exactly at 3(g-1) = |S|", "case list of the main theorem", true, iii_exact, "derived");

    const std::vector<std::pair<std::string, Constants>> curves = {
        {"artin-mumford", {{"p", 3}}}, {"artin-mumford", {{"p", 5}}}, {"x-c", {{"p", 3}}}, {"x-c", {{"p", 5}}},
        {"base-a", {{"p", 3}}},        {"base-a", {{"p", 5}}},        {"eqago1", {}},      {"genus28", {}},
        {"s27-tower", {}}};
    for (const auto& [name, params] : curves) classify_step(rec, get_curve(name, params));
  });
  return rec.take();
}

// ---------------------------------------------------------------- S6

Report s6_groups(const ScenarioOptions&) {
  Recorder rec("S6-groups");
  rec.guard("S6", "groups", [&] {
    struct Ref {
      std::string label;
      int order_p_printed;  // -1: none printed
      std::vector<std::string> maximals;
    };
    const std::vector<Ref> refs = {
        {"UT(3,3)", -1, {"C3xC3", "C3xC3", "C3xC3", "C3xC3"}},
        {"C3wrC3", -1, {"C3xC3xC3", "UT(3,3)", "C9:C3", "C9:C3"}},
        {"S(81,9)", 62, {"UT(3,3)", "UT(3,3)", "UT(3,3)", "C9xC3"}},
        {"S(81,8)", 26, {}},
    };
    const std::vector<std::string> candidates = {"C3xC3", "C3xC3xC3", "UT(3,3)", "C9:C3", "C9xC3", "C27"};
    for (const auto& r : refs) {
      const FiniteGroup G = reference_group(r.label);
      const auto fp = fingerprint(G);
      rec.note(r.label + " fingerprint", "computed invariants", fp.to_string(), "derived");
      if (r.order_p_printed >= 0)
        rec.check(r.label + " elements of order 3", "census of " + r.label, r.order_p_printed,
                  fp.census.count(3) ? fp.census.at(3) : 0, "printed");
      if (!r.maximals.empty()) {
        std::vector<std::string> types;
        for (const auto& M : maximal_subgroups(G)) types.push_back(identify(subgroup(G, M), candidates));
        rec.check(r.label + " maximal subgroups", "maximal subgroups of " + r.label, sorted_join(r.maximals),
                  sorted_join(types), "printed");
      }
      if (r.label != "S(81,8)") {
        structure_suite(rec, G, 3, r.label);
        exponent_rules(rec, G, 3, r.label);
      }
    }
    rec.check("C3 wr C3 census", "census of C3 wr C3", "{1:1, 3:44, 9:36}",
              census_str(fingerprint(wreath_cp_cp(3)).census), "derived");
    {
      const FiniteGroup G = reference_group("S(81,8)");
      bool one_holds_all = false;
      for (const auto& M : maximal_subgroups(G)) {
        int c = 0;
        for (int x : M) c += G.elem_order(x) == 3;
        if (c == fingerprint(G).census.at(3) && is_isomorphic(subgroup(G, M), ut3(3))) one_holds_all = true;
      }
      rec.check("S(81,8): a maximal UT(3,3) holds every element of order 3", "S(81,8) is excluded", true,
                one_holds_all, "printed");
    }
    {
      const auto P = s81_9_presentation();
      const FiniteGroup G = build_presentation(P);
      std::vector<int> images;
      for (std::size_t i = 0; i < P.names.size(); ++i) images.push_back(G.generators()[i]);
      rec.check("S(81,9) presentation", "a^9=b^3=c^3=1, ab=ba, cac^-1=ab^-1, cbc^-1=a^3b", true,
                presentation_check(G, P.names, P.relators, images), "printed");
      rec.check("S(81,9) not isomorphic to C3 wr C3", "two possibilities for |S| = 81", false,
                is_isomorphic(G, wreath_cp_cp(3)), "derived");
    }
    rec.note("S(81,10) census", "S(81,10) has 8 elements of order 3",
             "unverified: no split presentation over an abelian index-3 subgroup is printed", "printed");
    rec.note("S(243,26) census", "170 elements of order 3", "unverified: no presentation is printed", "printed");
    rec.note("S(243,28) census", "116 elements of order 3", "unverified: no presentation is printed", "printed");
  });
  return rec.take();
}

struct Entry {
  std::string name;
  std::function<Report(const ScenarioOptions&)> run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r = {
      {"S1-artin-mumford", s1_artin_mumford},
      {"S2-xc-p3", [](const ScenarioOptions& o) { return s2_xc(3, o); }},
      {"S2-xc-p5", [](const ScenarioOptions& o) { return s2_xc(5, o); }},
      {"S3-genus28", s3_genus28},
      {"S4-families", s4_families},
      {"S5-bounds", s5_bounds},
      {"S6-groups", s6_groups},
  };
  return r;
}

}  // namespace

std::vector<std::string> scenario_names() {
  std::vector<std::string> n;
  for (const auto& e : registry()) n.push_back(e.name);
  return n;
}

Report run_scenario(const std::string& name, const ScenarioOptions& opts) {
  for (const auto& e : registry())
    if (e.name == name) return e.run(opts);
  fail(Errc::UnknownScenario, "no scenario named '" + name + "'");
}

std::vector<Report> run_scenarios(const std::vector<std::string>& names, const ScenarioOptions& opts, int jobs) {
  for (const auto& n : names) {
    const auto all = scenario_names();
    if (std::find(all.begin(), all.end(), n) == all.end()) fail(Errc::UnknownScenario, "no scenario named '" + n + "'");
  }
  std::vector<Report> out(names.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < names.size();) out[i] = run_scenario(names[i], opts);
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(names.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

Json to_json(const Report& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps)
    steps.push_back({{"name", s.name},
                     {"anchor", s.anchor},
                     {"expected", s.expected},
                     {"actual", s.actual},
                     {"provenance", s.provenance},
                     {"status", status_name(s.status)}});
  return {{"scenario", r.scenario}, {"steps", steps}};
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  os << r.scenario << ": " << (r.ok() ? "ok" : "FAILED") << " (" << r.count(Status::Pass) << " pass, "
     << r.count(Status::Fail) << " fail, " << r.count(Status::Discrepancy) << " discrepancy, " << r.count(Status::Note)
     << " note)\n";
  for (const auto& s : r.steps) {
    os << "  [" << status_name(s.status) << "] " << s.name;
    if (s.status == Status::Note)
      os << ": " << s.actual;
    else
      os << ": expected " << s.expected << ", got " << s.actual;
    os << "\n";
  }
  return os.str();
}

}  // namespace nakajima
