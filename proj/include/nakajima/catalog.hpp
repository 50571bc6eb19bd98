#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nakajima/io.hpp"

namespace nakajima {

struct Expected {
  std::optional<BigInt> genus, prank, group_order;
  std::string group_label;             // resolved by reference_group
  std::optional<CoverData> cover;      // the cover X -> X/S
  std::vector<std::string> semiregular;  // labels of semiregular maximal subgroups
  std::string princ_case;              // i, ii, iii
  bool fixes_point = false;
};

struct CurveSpec {
  std::string name;
  int p = 0;
  Constants params;
  TowerSpec tower;
  std::vector<std::string> group_generators;  // map names generating S
  Expected expected;
  std::string note;
};

// Names of the compiled-in curves.
std::vector<std::string> curve_names();

// Parameters default to c = 1, a = 1, omega = least primitive root mod p
// (p = 3 unless given). If $NAKAJIMA_CATALOG/<name>.json exists it replaces
// the compiled-in entry; params then override its constants.
CurveSpec get_curve(const std::string& name, const Constants& params = {});

CurveSpec curve_from_json(const Json& j);
Json to_json(const CurveSpec& c);

// Reference groups by label: Cn, CnxCm..., UT(3,p), CpwrCp, C9:C3,
// S(81,9), S(81,8).
FiniteGroup reference_group(const std::string& label);

int least_primitive_root(int p);

}  // namespace nakajima
