#pragma once

#include <optional>
#include <string>
#include <vector>

#include "formations/formation.hpp"
#include "json.hpp"
#include "verify/catalog.hpp"

namespace formalab {

struct Verdict {
  std::string group;
  bool pass = true;
  nlohmann::json data;
};

struct SuiteReport {
  std::string suite;
  std::string label;  // "certified" or "exploratory"
  std::vector<Verdict> verdicts;
  nlohmann::json failures = nlohmann::json::array();
  double seconds = 0;

  [[nodiscard]] bool pass() const;
  /// Timing is the only nondeterministic field and is left out on request.
  [[nodiscard]] nlohmann::json to_json(bool with_timing = true) const;
};

struct SuiteOptions {
  std::size_t max_order = 1024;
  bool soluble_only = false;
  /// Threads for the per-group fan-out; 0 picks the hardware count.
  unsigned threads = 0;
  /// Only for z-equals-int: a single configuration, labeled exploratory
  /// unless it is one of the certified ones.
  std::optional<FormationSpec> formation;
  std::optional<std::vector<unsigned>> pi;
};

/// Suites in the order `all` runs them.
const std::vector<std::string>& suite_names();
/// Throws InvalidArgument for unknown names.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

/// Whether (F, pi) is one of the configurations where Z_{piF} = Int_F is
/// known to hold for every group. An empty pi means every prime.
bool is_certified_z_int(const FormationSpec& form, const std::vector<unsigned>& pi);

/// {"order", "hex"} for a subgroup.
nlohmann::json describe_subgroup(const Group& g, const SubgroupSet& s);

}  // namespace formalab
