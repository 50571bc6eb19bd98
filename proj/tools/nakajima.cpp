#include <algorithm>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "nakajima/artin_schreier.hpp"
#include "nakajima/catalog.hpp"
#include "nakajima/counting.hpp"
#include "nakajima/error.hpp"
#include "nakajima/scenarios.hpp"

using namespace nakajima;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

// Computed values (key=value lines) plus optional checks against expected data.
struct Result {
  std::vector<std::pair<std::string, std::string>> values;
  Report checks;

  void set(const std::string& key, const std::string& v) { values.emplace_back(key, v); }
  void set(const std::string& key, const BigInt& v) { set(key, to_string(v)); }
  void set(const std::string& key, const Rational& v) { set(key, to_string(v)); }
  void set(const std::string& key, long long v) { set(key, std::to_string(v)); }
  void set(const std::string& key, bool v) { set(key, std::string(v ? "true" : "false")); }

  void check(const std::string& name, const std::string& expected, const std::string& actual,
             const std::string& prov = "printed") {
    checks.steps.push_back({name, "input file", expected, actual, prov, expected == actual ? Status::Pass : Status::Fail});
  }
};

int emit(const Result& r, const std::string& json_path) {
  for (const auto& [k, v] : r.values) std::cout << k << "=" << v << "\n";
  if (!r.checks.steps.empty()) std::cout << to_text(r.checks);
  if (!json_path.empty()) {
    Json values = Json::object();
    for (const auto& [k, v] : r.values) values[k] = v;
    Json j = {{"values", values}};
    if (!r.checks.steps.empty()) j["report"] = to_json(r.checks);
    write_text_file(json_path, j.dump(2) + "\n");
  }
  return r.checks.ok() ? kOk : kCheckFailed;
}

Constants parse_params(const std::vector<std::string>& items) {
  Constants c;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) fail(Errc::BadParameter, "expected name=value, got '" + item + "'");
    try {
      std::size_t used = 0;
      const std::string v = item.substr(eq + 1);
      c[item.substr(0, eq)] = std::stoll(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
    } catch (const std::logic_error&) {
      fail(Errc::BadParameter, "'" + item + "' does not have an integer value");
    }
  }
  return c;
}

void require_odd_prime(int p) {
  bool prime = p >= 3;
  for (int d = 2; prime && d * d <= p; ++d) prime = p % d != 0;
  if (!prime) fail(p == 2 ? Errc::EvenCharacteristic : Errc::NonPrime, "p = " + std::to_string(p));
}

// A file holding either a curve entry (with "tower") or a bare tower spec.
CurveSpec load_curve(const std::string& file, const std::string& name, const Constants& params) {
  if (!name.empty()) return get_curve(name, params);
  const Json j = read_json_file(file);
  if (j.contains("tower")) return curve_from_json(j);
  CurveSpec s;
  s.name = file;
  s.tower = tower_spec_from_json(j);
  s.p = s.tower.p;
  return s;
}

FiniteGroup load_group(const std::string& file, const std::string& ref) {
  if (!ref.empty()) return reference_group(ref);
  return group_from_json(read_json_file(file));
}

// ---------------------------------------------------------------- commands

struct VerifyArgs {
  std::vector<std::string> names;
  std::string json;
  bool extended = false;
  int jobs = 0;
};

int cmd_verify(const VerifyArgs& a) {
  std::vector<std::string> names;
  for (const auto& n : a.names) {
    if (n == "all") {
      for (const auto& s : scenario_names()) names.push_back(s);
    } else {
      const auto all = scenario_names();
      if (std::find(all.begin(), all.end(), n) == all.end()) fail(Errc::UnknownScenario, "no scenario named '" + n + "'");
      names.push_back(n);
    }
  }
  const int jobs = a.jobs > 0 ? a.jobs : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const auto reports = run_scenarios(names, {a.extended}, jobs);
  bool ok = true;
  Json all = Json::array();
  for (const auto& r : reports) {
    std::cout << to_text(r);
    ok = ok && r.ok();
    all.push_back(to_json(r));
  }
  if (!a.json.empty()) write_text_file(a.json, (all.size() == 1 ? all[0] : all).dump(2) + "\n");
  return ok ? kOk : kCheckFailed;
}

struct CurveArgs {
  std::string file, curve, json;
  std::vector<std::string> params;
  bool fixes_point = false;
};

int cmd_genus(const CurveArgs& a) {
  const CurveSpec s = load_curve(a.file, a.curve, parse_params(a.params));
  const auto T = build_tower(s.tower);
  Result r;
  r.checks.scenario = "genus " + s.name;
  r.set("p", static_cast<long long>(T->p()));
  r.set("degree", static_cast<long long>(T->degree()));

  bool abelian = true;
  std::vector<RatFunc> phis;
  for (int i = 0; i < T->gen_count(); ++i) {
    const auto& rel = T->relation(i);
    if (!rel.is_base()) {
      abelian = false;
      continue;
    }
    phis.push_back(rel.base_value());
    // the single extension t^p - t = phi_i of the base field
    r.set("as_genus." + T->gen_names()[i], as_step_genus(phis.back(), T->p()));
  }
  std::optional<BigInt> g;
  if (abelian) {
    g = abelian_tower_genus(phis, T->p());
    r.set("method", std::string("abelian"));
  } else if (s.expected.cover) {
    g = hurwitz_genus(*s.expected.cover);
    r.set("method", std::string("hurwitz"));
  }
  if (g) {
    r.set("genus", *g);
  } else {
    r.set("genus", std::string("unknown"));
    r.set("method", std::string("none: a relation involves earlier generators and no cover is given"));
  }

  auto maps = build_maps(s.tower, *T);
  for (auto& m : maps) {
    const auto rep = map_verify(m);
    r.check("map " + m.name(), "ok", rep ? "ok" : rep.message, "direct");
  }
  if (s.expected.genus) r.check("genus", to_string(*s.expected.genus), g ? to_string(*g) : "unknown");
  return emit(r, a.json);
}

int cmd_prank(const CurveArgs& a) {
  CoverData c;
  std::optional<BigInt> exp_g, exp_gamma;
  bool fixes = a.fixes_point;
  std::string princ;
  if (!a.curve.empty()) {
    const auto s = get_curve(a.curve, parse_params(a.params));
    if (!s.expected.cover) fail(Errc::InvalidInput, a.curve + " has no cover data");
    c = *s.expected.cover;
    exp_g = s.expected.genus;
    exp_gamma = s.expected.prank;
    fixes = fixes || s.expected.fixes_point;
    princ = s.expected.princ_case;
  } else {
    const Json j = read_json_file(a.file);
    if (j.contains("tower")) {
      const auto s = curve_from_json(j);
      if (!s.expected.cover) fail(Errc::InvalidInput, a.file + " has no cover data");
      c = *s.expected.cover;
      exp_g = s.expected.genus;
      exp_gamma = s.expected.prank;
      fixes = fixes || s.expected.fixes_point;
      princ = s.expected.princ_case;
    } else {
      c = cover_from_json(j);
      fixes = fixes || j.value("fixes_point", false);
    }
  }
  const BigInt g = hurwitz_genus(c), gamma = ds_prank(c);
  Result r;
  r.checks.scenario = "prank";
  r.set("order", c.order);
  r.set("genus", g);
  r.set("prank", gamma);
  r.set("ordinary", g == gamma);
  r.set("extremal", extremal_check(c.p, c.order, g));
  if (g >= 2) r.set("case", case_name(classify_princ(c.p, c.order, g, gamma, fixes)));
  if (exp_g) r.check("genus", to_string(*exp_g), to_string(g));
  if (exp_gamma) r.check("prank", to_string(*exp_gamma), to_string(gamma));
  if (!princ.empty() && g >= 2) r.check("case", princ, case_name(classify_princ(c.p, c.order, g, gamma, fixes)));
  return emit(r, a.json);
}

struct BoundsArgs {
  int p = 0;
  std::string g, gamma, order, json;
  bool fixes_point = false;
};

BigInt parse_big(const std::string& s, const std::string& what) {
  try {
    return json_bigint(Json(s));
  } catch (const Error&) {
    fail(Errc::BadParameter, what + " must be an integer, got '" + s + "'");
  }
}

int cmd_bounds(const BoundsArgs& a) {
  require_odd_prime(a.p);
  const BigInt g = parse_big(a.g, "--g"), gamma = parse_big(a.gamma, "--gamma");
  const Bounds b = bounds(a.p, g, gamma);
  Result r;
  if (b.nakajima) r.set("nakajima", *b.nakajima);
  else r.set("nakajima", std::string("none"));
  if (b.nakajima_genus_form) r.set("nakajima_genus_form", *b.nakajima_genus_form);
  r.set("threshold", b.hyp_threshold);
  r.set("stichtenoth", b.stichtenoth);
  if (!a.order.empty()) {
    const BigInt s = parse_big(a.order, "--order");
    r.set("extremal", extremal_check(a.p, s, g));
    r.set("case", case_name(classify_princ(a.p, s, g, gamma, a.fixes_point)));
  }
  return emit(r, a.json);
}

struct GroupArgs {
  std::string file, ref, op, with_file, with_ref, json;
};

int cmd_group(const GroupArgs& a) {
  const FiniteGroup G = load_group(a.file, a.ref);
  Result r;
  r.checks.scenario = "group";
  r.set("order", static_cast<long long>(G.order()));
  if (a.op == "fingerprint") {
    const auto f = fingerprint(G);
    r.set("fingerprint", f.to_string());
  } else if (a.op == "maximals") {
    const auto M = maximal_subgroups(G);
    r.set("maximal_count", static_cast<long long>(M.size()));
    for (std::size_t i = 0; i < M.size(); ++i)
      r.set("maximal" + std::to_string(i + 1), fingerprint(subgroup(G, M[i])).to_string());
  } else if (a.op == "isom") {
    if (a.with_file.empty() && a.with_ref.empty()) fail(Errc::InvalidInput, "--op isom needs --with or --with-ref");
    const FiniteGroup H = load_group(a.with_file, a.with_ref);
    r.check("isomorphic", "true", is_isomorphic(G, H) ? "true" : "false", "direct");
  } else {
    r.set("aut_order", aut_order_bruteforce(G));
  }
  return emit(r, a.json);
}

struct CountArgs {
  bool frbound = false, bh = false;
  std::string file, ref, json;
  int gamma = -1, p = 0, n = 0, d = 0;
};

int cmd_count(const CountArgs& a) {
  Result r;
  r.checks.scenario = "count";
  if (a.frbound) {
    if (a.gamma < 0) fail(Errc::BadParameter, "--frbound needs --gamma");
    const auto prof = profile_of(load_group(a.file, a.ref));
    const BigInt count = frbound_count(prof, a.gamma);
    r.set("p", static_cast<long long>(prof.p));
    r.set("n", static_cast<long long>(prof.n));
    r.set("d", static_cast<long long>(prof.d));
    r.set("aut_order", *prof.alpha);
    r.set("count", count);
    if (count >= 1) r.set("not_div_p", not_div_p_check(count, prof.p));
  } else {
    require_odd_prime(a.p);
    if (a.d < 1 || a.d > a.n) fail(Errc::BadParameter, "need 1 <= d <= n");
    r.set("bh", bh_bound(a.p, a.n, a.d));
    r.set("sylow_bh", sylow_bh_bound(a.p, a.n, a.d));
  }
  return emit(r, a.json);
}

int cmd_show(const CurveArgs& a) {
  std::cout << to_json(get_curve(a.curve, parse_params(a.params))).dump(2) << "\n";
  return kOk;
}

int cmd_list() {
  std::cout << "scenarios:";
  for (const auto& s : scenario_names()) std::cout << " " << s;
  std::cout << "\ncurves:";
  for (const auto& s : curve_names()) std::cout << " " << s;
  std::cout << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for p-group actions on ordinary curves"};
  app.require_subcommand(1);
  std::function<int()> run;

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run scenarios (names or 'all')");
  verify->add_option("scenarios", va.names, "scenario names")->required();
  verify->add_option("--json", va.json, "write the JSON report here");
  verify->add_flag("--extended", va.extended, "include the large coefficient-field searches");
  verify->add_option("--jobs,-j", va.jobs, "worker threads (default: all cores)")->check(CLI::NonNegativeNumber);
  verify->callback([&] { run = [&] { return cmd_verify(va); }; });

  CurveArgs ga;
  auto* genus = app.add_subcommand("genus", "genus of a tower");
  auto* g_src = genus->add_option("--tower", ga.file, "tower or curve JSON file");
  genus->add_option("--curve", ga.curve, "catalog curve name")->excludes(g_src);
  genus->add_option("--param", ga.params, "name=value for catalog curves");
  genus->add_option("--json", ga.json, "write JSON output here");
  genus->callback([&] {
    if (ga.file.empty() && ga.curve.empty()) throw CLI::RequiredError("--tower or --curve");
    run = [&] { return cmd_genus(ga); };
  });

  CurveArgs pa;
  auto* prank = app.add_subcommand("prank", "genus and p-rank of a p-group cover");
  auto* p_src = prank->add_option("--cover", pa.file, "cover or curve JSON file");
  prank->add_option("--curve", pa.curve, "catalog curve name")->excludes(p_src);
  prank->add_option("--param", pa.params, "name=value for catalog curves");
  prank->add_flag("--fixes-point", pa.fixes_point, "S fixes a point (for the classification)");
  prank->add_option("--json", pa.json, "write JSON output here");
  prank->callback([&] {
    if (pa.file.empty() && pa.curve.empty()) throw CLI::RequiredError("--cover or --curve");
    run = [&] { return cmd_prank(pa); };
  });

  BoundsArgs ba;
  auto* bnd = app.add_subcommand("bounds", "order bounds for a p-subgroup");
  bnd->add_option("--p", ba.p, "characteristic")->required();
  bnd->add_option("--g", ba.g, "genus")->required();
  bnd->add_option("--gamma", ba.gamma, "p-rank")->required();
  bnd->add_option("--order", ba.order, "|S|, to test extremality and classify");
  bnd->add_flag("--fixes-point", ba.fixes_point, "S fixes a point");
  bnd->add_option("--json", ba.json, "write JSON output here");
  bnd->callback([&] { run = [&] { return cmd_bounds(ba); }; });

  GroupArgs gra;
  auto* grp = app.add_subcommand("group", "p-group structure");
  auto* gr_src = grp->add_option("--file", gra.file, "group JSON file");
  grp->add_option("--ref", gra.ref, "reference group label, e.g. UT(3,3)")->excludes(gr_src);
  grp->add_option("--op", gra.op, "operation")
      ->required()
      ->check(CLI::IsMember({"fingerprint", "maximals", "isom", "aut"}));
  grp->add_option("--with", gra.with_file, "second group file for isom");
  grp->add_option("--with-ref", gra.with_ref, "second group label for isom");
  grp->add_option("--json", gra.json, "write JSON output here");
  grp->callback([&] {
    if (gra.file.empty() && gra.ref.empty()) throw CLI::RequiredError("--file or --ref");
    run = [&] { return cmd_group(gra); };
  });

  CountArgs ca;
  auto* cnt = app.add_subcommand("count", "extension counts and automorphism bounds");
  auto* fr = cnt->add_flag("--frbound", ca.frbound, "unramified extensions with a given group");
  cnt->add_flag("--bh", ca.bh, "Burnside-Hall bound for (p, n, d)")->excludes(fr);
  cnt->add_option("--file", ca.file, "group JSON file (--frbound)");
  cnt->add_option("--ref", ca.ref, "reference group label (--frbound)");
  cnt->add_option("--gamma", ca.gamma, "p-rank of the base curve (--frbound)");
  cnt->add_option("--p", ca.p, "prime (--bh)");
  cnt->add_option("--n", ca.n, "log_p |G| (--bh)");
  cnt->add_option("--d", ca.d, "number of generators (--bh)");
  cnt->add_option("--json", ca.json, "write JSON output here");
  cnt->callback([&] {
    if (ca.frbound == ca.bh) throw CLI::ValidationError("count", "exactly one of --frbound, --bh");
    if (ca.frbound && ca.file.empty() == ca.ref.empty()) throw CLI::ValidationError("count", "--frbound needs --file or --ref");
    run = [&] { return cmd_count(ca); };
  });

  CurveArgs sa;
  auto* show = app.add_subcommand("show", "print a catalog curve as JSON");
  show->add_option("curve", sa.curve, "catalog curve name")->required();
  show->add_option("--param", sa.params, "name=value");
  show->callback([&] { run = [&] { return cmd_show(sa); }; });

  app.add_subcommand("list", "list scenarios and catalog curves")->callback([&] { run = cmd_list; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return run();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return kUsage;
  }
}
