#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "nakajima/pgroup.hpp"
#include "nakajima/ramify.hpp"
#include "nakajima/tower.hpp"

namespace nakajima {

using Json = nlohmann::json;

struct MapSpec {
  std::string name;
  std::string image_x;
  std::vector<std::string> image_t;
};

// {p, k, base, generators, relations, constants, maps}; base defaults to
// "x" and generators to t1..tm.
struct TowerSpec {
  int p = 0;
  int k = 1;
  std::string base = "x";
  std::vector<std::string> generators;
  std::vector<std::string> relations;
  Constants constants;
  std::vector<MapSpec> maps;
};

TowerSpec tower_spec_from_json(const Json& j);
Json to_json(const TowerSpec& s);
TowerPtr build_tower(const TowerSpec& s);
// Maps are returned unverified.
std::vector<FieldAuto> build_maps(const TowerSpec& s, const TowerField& T);

// {p, order, gbar, gammabar, orbits: [{length, chain}]}; integers may also
// be given as decimal strings.
CoverData cover_from_json(const Json& j);
Json to_json(const CoverData& c);

// {type: maps | permutations | presentation | matrices, ...}
//   maps:         {tower: <tower spec>, generators: [map names] (default all)}
//   permutations: {generators: ["(1 2 3)", ...], degree}
//   presentation: {label, names, relators, orders, theta, top}
//   matrices:     {modulus, generators: [[[row], ...], ...]}
FiniteGroup group_from_json(const Json& j);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

BigInt json_bigint(const Json& j);
Json bigint_json(const BigInt& v);

}  // namespace nakajima
