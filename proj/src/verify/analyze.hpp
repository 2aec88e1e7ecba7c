#pragma once

#include <string>
#include <vector>

#include "formations/formation.hpp"
#include "json.hpp"

namespace formalab {

/// Chief series with centrality verdicts, Z_{piF}, Int_F, Int*_F and the
/// F-maximal subgroups with their K-F-subnormality flags. An empty pi means
/// every prime dividing |G|.
nlohmann::json analyze(const Group& g, const FormationSpec& form, const std::vector<unsigned>& pi,
                       const Limits& limits = {});
std::string analyze_text(const nlohmann::json& report);

/// Every subgroup as a hex bitset over the element indices.
nlohmann::json lattice_dump(const Group& g, const Limits& limits = {});

/// F(p)-critical groups outside F across the catalog.
nlohmann::json hunt_critical(const FormationSpec& form, unsigned p, bool soluble_only);

nlohmann::json catalog_listing();

}  // namespace formalab
