#pragma once

#include <string>
#include <vector>

#include "formations/formation.hpp"
#include "verify/catalog.hpp"

namespace fl = formalab;

inline const fl::Group& cat(const std::string& name) { return fl::Catalog::shipped().group(name); }

// Catalog groups up to a given order.
inline std::vector<const fl::Group*> catalog_groups(std::size_t max_order = 1024) {
  std::vector<const fl::Group*> out;
  for (const auto& e : fl::Catalog::shipped().entries())
    if (e.order <= max_order) out.push_back(e.group);
  return out;
}

inline std::vector<fl::FormationSpec> formation_menu() {
  std::vector<fl::FormationSpec> out;
  for (const char* s : {"triv", "all", "sol", "nil", "sup", "psup:2", "psup:3", "pnilp:2", "pnilp:3", "pdec:2",
                        "pdec:3", "piclosed:2", "piclosed:2,3", "gpi:2,3", "spi:2,3", "aexp:6", "na", "nilpow:1",
                        "nilpow:2", "syltower"})
    out.push_back(fl::FormationSpec::parse(s));
  return out;
}
