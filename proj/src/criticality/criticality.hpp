#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "formations/formation.hpp"
#include "lattice/lattice.hpp"

namespace formalab {

using ClassTest = std::function<bool(const Group&)>;

/// Not in the class, while every maximal subgroup is. All tested classes are
/// subgroup-closed, so maximal subgroups stand in for all proper ones.
bool is_class_critical(const Lattice& lat, const ClassTest& in_class);

struct MaximalVerdict {
  SubgroupSet subgroup;
  bool in_class = false;
};

struct CriticalWitness {
  std::string group;
  FormationSpec formation;
  unsigned p = 0;
  std::vector<MaximalVerdict> maximal_memberships;
  bool in_f = false;
};

/// Witness when G is F(p)-critical, otherwise nothing. Throws NoSatellite.
std::optional<CriticalWitness> f_p_critical(const Lattice& lat, const FormationSpec& form, unsigned p);

/// F(p)-critical groups outside F, for p in `pi`, over the given lattices.
/// With `soluble_only`, insoluble groups are skipped. An empty result means
/// no violation among these groups, not that none exists.
std::vector<CriticalWitness> boundary_scan(const FormationSpec& form, std::span<const unsigned> pi,
                                           std::span<const Lattice* const> catalog, bool soluble_only = false);

}  // namespace formalab
