#include "nakajima/catalog.hpp"

#include <cstdlib>
#include <filesystem>
#include <regex>

namespace nakajima {

namespace {

OrbitDatum orbit(const BigInt& len, int p) { return OrbitDatum{len, {BigInt(p), BigInt(p), BigInt(1)}}; }

// Two short orbits of length |S|/p over a rational quotient.
CoverData two_orbit_cover(int p, const BigInt& order) {
  CoverData c;
  c.p = p;
  c.order = order;
  c.gbar = c.gammabar = 0;
  c.orbits = {orbit(order / p, p), orbit(order / p, p)};
  return c;
}

BigInt ipow(int b, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

long long param(const Constants& c, const std::string& key, long long def) {
  auto it = c.find(key);
  return it == c.end() ? def : it->second;
}

CurveSpec artin_mumford(int p) {
  CurveSpec s;
  s.tower.base = "x";
  s.tower.generators = {"y"};
  s.tower.relations = {"c/(x^p - x)"};
  s.tower.maps = {{"g", "x + 1", {"y"}},
                  {"h", "x", {"y + 1"}},
                  {"r", "y", {"x"}},
                  {"t", "omega*x", {"y/omega"}}};
  s.group_generators = {"g", "h"};
  const BigInt g = BigInt(p - 1) * (p - 1);
  s.expected.genus = s.expected.prank = g;
  s.expected.group_order = p * p;
  s.expected.group_label = "C" + std::to_string(p) + "xC" + std::to_string(p);
  s.expected.cover = two_orbit_cover(p, p * p);
  s.expected.princ_case = "iii";
  return s;
}

CurveSpec x_c(int p) {
  CurveSpec s;
  s.tower.base = "x";
  s.tower.generators = {"y", "z"};
  s.tower.relations = {"c/(x^p - x)", "x*y^p - x^p*y"};
  s.tower.maps = {{"g", "x + 1", {"y", "z + y"}},
                  {"h", "x", {"y - 1", "z + x"}},
                  {"r", "y", {"x", "-z"}},
                  {"t", "omega*x", {"y/omega", "z"}}};
  s.group_generators = {"g", "h"};
  const BigInt g = BigInt(p - 2) * p * p + 1;
  s.expected.genus = s.expected.prank = g;
  s.expected.group_order = ipow(p, 3);
  s.expected.group_label = "UT(3," + std::to_string(p) + ")";
  s.expected.cover = two_orbit_cover(p, ipow(p, 3));
  for (int i = 3; i <= p + 1; ++i) s.expected.semiregular.push_back("M" + std::to_string(i));
  s.expected.princ_case = "iii";
  return s;
}

// y^p - y = a x + 1/x
CurveSpec base_a(int p, const std::string& a) {
  CurveSpec s;
  s.tower.base = "x";
  s.tower.generators = {"y"};
  s.tower.relations = {a + "*x + 1/x"};
  s.tower.maps = {{"s", "x", {"y + 1"}}, {"tau", "1/(" + a + "*x)", {"y"}}, {"sigma", "-x", {"-y"}}};
  s.group_generators = {"s"};
  s.expected.genus = s.expected.prank = p - 1;
  s.expected.group_order = p;
  s.expected.group_label = "C" + std::to_string(p);
  CoverData c;
  c.p = p;
  c.order = p;
  c.gbar = c.gammabar = 0;
  c.orbits = {orbit(1, p), orbit(1, p)};
  s.expected.cover = c;
  s.expected.princ_case = "ii";
  s.expected.fixes_point = true;
  return s;
}

CurveSpec genus28() {
  CurveSpec s;
  s.tower.base = "x";
  s.tower.generators = {"y", "u", "w", "s"};
  s.tower.relations = {"x + 1/x", "x", "1/(u - y)", "1/(u - y - 1)"};
  // g1 and g2 are printed identically; both are kept as given.
  s.tower.maps = {{"g1", "x", {"y + 1", "u", "s", "u - w - s"}},
                  {"g2", "x", {"y + 1", "u", "s", "u - w - s"}},
                  {"g3", "x", {"y + 1", "u + 1", "w", "s"}},
                  {"g4", "x", {"y", "u", "w + 1", "s"}},
                  {"g5", "x", {"y", "u", "w", "s + 1"}}};
  s.group_generators = {"g1", "g2", "g3", "g4", "g5"};
  s.expected.genus = s.expected.prank = 28;
  s.expected.group_order = 81;
  s.expected.group_label = "C3wrC3";
  s.expected.cover = two_orbit_cover(3, 81);
  s.expected.princ_case = "iii";
  s.note = "g1 and g2 are printed with identical formulas";
  return s;
}

CurveSpec s27_tower() {
  CurveSpec s;
  s.tower.base = "u";
  s.tower.generators = {"v", "y", "z"};
  s.tower.relations = {"(c - u^2)/u", "u", "(u - v^3 + v^2)/(v^3 + 1)"};
  s.expected.genus = s.expected.prank = 10;
  s.expected.group_order = 27;
  s.expected.group_label = "UT(3,3)";
  s.expected.cover = two_orbit_cover(3, 27);
  s.expected.princ_case = "iii";
  return s;
}

const std::vector<std::string> kNames = {"artin-mumford", "x-c", "base-a", "eqago1", "genus28", "s27-tower"};

void check_unit(const Constants& c, const std::string& key, int p) {
  auto it = c.find(key);
  if (it != c.end() && ((it->second % p) + p) % p == 0) fail(Errc::BadParameter, key + " must be nonzero in F_p");
}

}  // namespace

int least_primitive_root(int p) {
  for (int w = 2; w < p; ++w) {
    int ord = 1;
    long long v = w;
    while (v != 1) {
      v = v * w % p;
      ++ord;
    }
    if (ord == p - 1) return w;
  }
  return 1;  // p = 2
}

std::vector<std::string> curve_names() { return kNames; }

CurveSpec get_curve(const std::string& name, const Constants& params) {
  if (std::find(kNames.begin(), kNames.end(), name) == kNames.end()) {
    // an override directory may add curves as well
    const char* dir = std::getenv("NAKAJIMA_CATALOG");
    if (!dir || !std::filesystem::exists(std::filesystem::path(dir) / (name + ".json")))
      fail(Errc::UnknownCurve, "no curve named '" + name + "'");
  }
  if (const char* dir = std::getenv("NAKAJIMA_CATALOG")) {
    const auto path = std::filesystem::path(dir) / (name + ".json");
    if (std::filesystem::exists(path)) {
      CurveSpec s = curve_from_json(read_json_file(path.string()));
      if (params.count("p") && params.at("p") != s.p) fail(Errc::BadParameter, "override file fixes p = " + std::to_string(s.p));
      for (const auto& [k, v] : params) {
        s.params[k] = v;
        s.tower.constants[k] = v;
      }
      check_unit(s.params, "c", s.p);
      check_unit(s.params, "a", s.p);
      return s;
    }
  }

  const bool p3_only = name == "eqago1" || name == "genus28" || name == "s27-tower";
  const int p = static_cast<int>(param(params, "p", 3));
  if (p3_only && p != 3) fail(Errc::BadParameter, name + " is defined for p = 3 only");
  if (p < 3 || p > 251) fail(Errc::BadParameter, "p must be an odd prime below 256");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) fail(Errc::BadParameter, "p must be prime");
  Constants c{{"p", p}, {"c", 1}, {"a", 1}, {"omega", least_primitive_root(p)}};
  for (const auto& [k, v] : params) c[k] = v;
  check_unit(c, "c", p);
  check_unit(c, "a", p);
  check_unit(c, "omega", p);

  CurveSpec s;
  if (name == "artin-mumford") s = artin_mumford(p);
  else if (name == "x-c") s = x_c(p);
  else if (name == "base-a") s = base_a(p, "a");
  else if (name == "eqago1") s = base_a(3, "(-1)");
  else if (name == "genus28") s = genus28();
  else s = s27_tower();
  s.name = name;
  s.p = p;
  s.params = c;
  s.tower.p = p;
  s.tower.k = static_cast<int>(param(params, "k", 1));
  s.tower.constants = c;
  return s;
}

CurveSpec curve_from_json(const Json& j) {
  try {
    CurveSpec s;
    s.name = j.at("name").get<std::string>();
    s.tower = tower_spec_from_json(j.at("tower"));
    s.p = s.tower.p;
    s.params = s.tower.constants;
    if (j.contains("params"))
      for (const auto& [k, v] : j.at("params").items()) s.params[k] = s.tower.constants[k] = v.get<long long>();
    s.group_generators = j.value("group_generators", std::vector<std::string>{});
    s.note = j.value("note", std::string());
    if (j.contains("expected")) {
      const Json& e = j.at("expected");
      if (e.contains("genus")) s.expected.genus = json_bigint(e.at("genus"));
      if (e.contains("prank")) s.expected.prank = json_bigint(e.at("prank"));
      if (e.contains("group_order")) s.expected.group_order = json_bigint(e.at("group_order"));
      s.expected.group_label = e.value("group_label", std::string());
      if (e.contains("cover")) s.expected.cover = cover_from_json(e.at("cover"));
      s.expected.semiregular = e.value("semiregular", std::vector<std::string>{});
      s.expected.princ_case = e.value("case", std::string());
      s.expected.fixes_point = e.value("fixes_point", false);
    }
    return s;
  } catch (const Json::exception& e) {
    fail(Errc::InvalidInput, std::string("curve file: ") + e.what());
  }
}

Json to_json(const CurveSpec& s) {
  Json e = Json::object();
  if (s.expected.genus) e["genus"] = bigint_json(*s.expected.genus);
  if (s.expected.prank) e["prank"] = bigint_json(*s.expected.prank);
  if (s.expected.group_order) e["group_order"] = bigint_json(*s.expected.group_order);
  e["group_label"] = s.expected.group_label;
  if (s.expected.cover) e["cover"] = to_json(*s.expected.cover);
  e["semiregular"] = s.expected.semiregular;
  e["case"] = s.expected.princ_case;
  e["fixes_point"] = s.expected.fixes_point;
  Json params = Json::object();
  for (const auto& [k, v] : s.params) params[k] = v;
  return {{"name", s.name}, {"params", params}, {"tower", to_json(s.tower)},
          {"group_generators", s.group_generators}, {"expected", e}, {"note", s.note}};
}

FiniteGroup reference_group(const std::string& label) {
  std::smatch m;
  if (std::regex_match(label, m, std::regex(R"(UT\(3,(\d+)\))"))) return ut3(std::stoi(m[1])).relabel(label);
  if (std::regex_match(label, m, std::regex(R"(C(\d+)wrC(\d+))")) && m[1] == m[2])
    return wreath_cp_cp(std::stoi(m[1])).relabel(label);
  if (label == "C9:C3") return split_extension({9}, {{4}}, 3, label);
  if (label == "S(81,9)") return build_presentation(s81_9_presentation()).relabel(label);
  if (label == "S(81,8)") return build_presentation(s81_8_presentation()).relabel(label);
  if (std::regex_match(label, std::regex(R"(C\d+(xC\d+)*)"))) {
    std::vector<int> orders;
    const std::regex num(R"(\d+)");
    for (auto it = std::sregex_iterator(label.begin(), label.end(), num); it != std::sregex_iterator(); ++it)
      orders.push_back(std::stoi(it->str()));
    if (orders.size() == 1) return cyclic_group(orders[0]).relabel(label);
    return abelian_group(orders).relabel(label);
  }
  fail(Errc::InvalidInput, "no reference construction for '" + label + "'");
}

}  // namespace nakajima
