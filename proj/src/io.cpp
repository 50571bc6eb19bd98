#include "nakajima/io.hpp"

#include <fstream>
#include <sstream>

namespace nakajima {

namespace {

template <class F>
auto guarded(const std::string& what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    fail(Errc::InvalidInput, what + ": " + e.what());
  }
}

}  // namespace

BigInt json_bigint(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const bool ok = !s.empty() && s.find_first_not_of("0123456789", s[0] == '-' ? 1 : 0) == std::string::npos &&
                    s != "-";
    if (!ok) fail(Errc::InvalidInput, "not an integer: '" + s + "'");
    return BigInt(s);
  }
  fail(Errc::InvalidInput, "expected an integer, got " + j.dump());
}

Json bigint_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return Json(static_cast<long long>(v));
  return Json(v.str());
}

TowerSpec tower_spec_from_json(const Json& j) {
  return guarded("tower file", [&] {
    TowerSpec s;
    s.p = j.at("p").get<int>();
    s.k = j.value("k", 1);
    s.base = j.value("base", std::string("x"));
    s.relations = j.at("relations").get<std::vector<std::string>>();
    if (j.contains("generators")) {
      s.generators = j.at("generators").get<std::vector<std::string>>();
    } else {
      for (std::size_t i = 0; i < s.relations.size(); ++i) s.generators.push_back("t" + std::to_string(i + 1));
    }
    if (s.generators.size() != s.relations.size()) fail(Errc::InvalidInput, "one relation per generator");
    if (j.contains("constants"))
      for (const auto& [name, v] : j.at("constants").items()) s.constants[name] = v.get<long long>();
    if (!s.constants.count("p")) s.constants["p"] = s.p;
    if (j.contains("maps"))
      for (const auto& m : j.at("maps")) {
        MapSpec ms{m.value("name", std::string()), m.at("image_x").get<std::string>(),
                   m.at("image_t").get<std::vector<std::string>>()};
        if (ms.image_t.size() != s.generators.size()) fail(Errc::InvalidInput, "map '" + ms.name + "': wrong arity");
        s.maps.push_back(std::move(ms));
      }
    return s;
  });
}

Json to_json(const TowerSpec& s) {
  Json j{{"p", s.p}, {"k", s.k}, {"base", s.base}, {"generators", s.generators}, {"relations", s.relations}};
  Json c = Json::object();
  for (const auto& [k, v] : s.constants) c[k] = v;
  j["constants"] = c;
  Json maps = Json::array();
  for (const auto& m : s.maps) maps.push_back({{"name", m.name}, {"image_x", m.image_x}, {"image_t", m.image_t}});
  j["maps"] = maps;
  return j;
}

TowerPtr build_tower(const TowerSpec& s) {
  return tower_make(Field::make(s.p, s.k), s.base, s.generators, s.relations, s.constants);
}

std::vector<FieldAuto> build_maps(const TowerSpec& s, const TowerField& T) {
  std::vector<FieldAuto> out;
  for (const auto& m : s.maps) {
    std::vector<TowerElem> ts;
    for (const auto& e : m.image_t) ts.push_back(parse_elem(T, e, s.constants));
    out.emplace_back(T, parse_elem(T, m.image_x, s.constants), std::move(ts), m.name);
  }
  return out;
}

CoverData cover_from_json(const Json& j) {
  return guarded("cover file", [&] {
    CoverData c;
    c.p = j.at("p").get<int>();
    c.order = json_bigint(j.at("order"));
    c.gbar = json_bigint(j.at("gbar"));
    c.gammabar = json_bigint(j.at("gammabar"));
    for (const auto& o : j.value("orbits", Json::array())) {
      OrbitDatum d;
      d.length = json_bigint(o.at("length"));
      for (const auto& v : o.at("chain")) d.chain.push_back(json_bigint(v));
      c.orbits.push_back(std::move(d));
    }
    c.validate();
    return c;
  });
}

Json to_json(const CoverData& c) {
  Json orbits = Json::array();
  for (const auto& o : c.orbits) {
    Json chain = Json::array();
    for (const auto& v : o.chain) chain.push_back(bigint_json(v));
    orbits.push_back({{"length", bigint_json(o.length)}, {"chain", chain}});
  }
  return {{"p", c.p},
          {"order", bigint_json(c.order)},
          {"gbar", bigint_json(c.gbar)},
          {"gammabar", bigint_json(c.gammabar)},
          {"orbits", orbits}};
}

FiniteGroup group_from_json(const Json& j) {
  return guarded("group file", [&]() -> FiniteGroup {
    const auto type = j.at("type").get<std::string>();
    const auto label = j.value("label", std::string());
    if (type == "maps") {
      const TowerSpec s = tower_spec_from_json(j.at("tower"));
      const auto T = build_tower(s);
      auto maps = build_maps(s, *T);
      std::vector<FieldAuto> gens;
      if (j.contains("generators")) {
        for (const auto& name : j.at("generators").get<std::vector<std::string>>()) {
          auto it = std::find_if(maps.begin(), maps.end(), [&](const FieldAuto& m) { return m.name() == name; });
          if (it == maps.end()) fail(Errc::InvalidInput, "unknown map '" + name + "'");
          gens.push_back(*it);
        }
      } else {
        gens = maps;
      }
      for (auto& g : gens) {
        auto rep = map_verify(g);
        if (!rep) fail(Errc::UnverifiedGenerator, g.name() + ": " + rep.message);
      }
      // the group keeps no reference to the tower, so T may go out of scope
      return closure_maps(gens, FiniteGroup::kMaxOrder, label).group;
    }
    if (type == "permutations") {
      const int degree = j.value("degree", 0);
      std::vector<Perm> gens;
      for (const auto& c : j.at("generators").get<std::vector<std::string>>()) gens.push_back(perm_parse(c, degree));
      std::size_t n = 0;
      for (const auto& g : gens) n = std::max(n, g.size());
      for (auto& g : gens)
        for (std::size_t i = g.size(); i < n; ++i) g.push_back(static_cast<int>(i));
      return closure_perms(gens, FiniteGroup::kMaxOrder, label).group;
    }
    if (type == "presentation") {
      ReferencePresentation P;
      P.label = label;
      P.names = j.at("names").get<std::vector<std::string>>();
      P.relators = j.at("relators").get<std::vector<std::string>>();
      P.orders = j.at("orders").get<std::vector<int>>();
      P.theta = j.at("theta").get<std::vector<std::vector<int>>>();
      P.top = j.at("top").get<int>();
      return build_presentation(P);
    }
    if (type == "matrices") {
      const int modulus = j.at("modulus").get<int>();
      std::vector<std::vector<int>> gens;
      for (const auto& m : j.at("generators")) {
        std::vector<int> flat;
        for (const auto& row : m)
          for (const auto& v : row) flat.push_back(v.get<int>());
        gens.push_back(std::move(flat));
      }
      return closure_matrices(gens, modulus, FiniteGroup::kMaxOrder, label).group;
    }
    fail(Errc::InvalidInput, "unknown group type '" + type + "'");
  });
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::InvalidInput, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    fail(Errc::ParseError, path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(Errc::InvalidInput, "cannot write '" + path + "'");
  out << text;
}

}  // namespace nakajima
