#pragma once

#include <string>
#include <vector>

#include "nakajima/io.hpp"

namespace nakajima {

enum class Status { Pass, Fail, Discrepancy, Note };
std::string status_name(Status s);

// Provenance of an expected value: "printed" (stated in the source claim),
// "derived" (independent computation), "direct" (immediate from definitions).
struct Step {
  std::string name;
  std::string anchor;  // the claim this step checks
  std::string expected;
  std::string actual;
  std::string provenance;
  Status status = Status::Note;
};

struct Report {
  std::string scenario;
  std::vector<Step> steps;
  // No step failed; discrepancies and notes are outcomes, not failures.
  bool ok() const;
  int count(Status s) const;
};

struct ScenarioOptions {
  bool extended = false;  // also run the large coefficient-field searches
};

std::vector<std::string> scenario_names();
Report run_scenario(const std::string& name, const ScenarioOptions& opts = {});
// Runs the scenarios on up to `jobs` threads; reports come back in input order.
std::vector<Report> run_scenarios(const std::vector<std::string>& names, const ScenarioOptions& opts, int jobs = 1);

Json to_json(const Report& r);
std::string to_text(const Report& r);

}  // namespace nakajima
