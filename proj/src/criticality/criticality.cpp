#include "criticality/criticality.hpp"

#include "group/constructions.hpp"
#include "lattice/structure.hpp"

namespace formalab {

namespace {

struct Maximals {
  std::vector<SubgroupSet> sets;
  std::vector<Group> groups;
};

Maximals maximals_of(const Lattice& lat) {
  Maximals m;
  for (auto i : lat.maximal_in(lat.top())) {
    m.sets.push_back(lat.at(i));
    m.groups.push_back(subgroup_as_group(lat.group(), lat.at(i)).group);
  }
  return m;
}

std::vector<MaximalVerdict> maximal_verdicts(const Maximals& m, const ClassTest& in_class) {
  std::vector<MaximalVerdict> out;
  for (std::size_t k = 0; k < m.sets.size(); ++k) out.push_back({m.sets[k], in_class(m.groups[k])});
  return out;
}

std::optional<CriticalWitness> critical_with(const Lattice& lat, const Maximals& m, const FormationSpec& form,
                                             unsigned p) {
  const ClassTest test = [&](const Group& h) { return satellite_member(form, p, h); };
  if (test(lat.group())) return std::nullopt;
  // Cheap rejection before recording verdicts.
  for (const auto& h : m.groups)
    if (!test(h)) return std::nullopt;
  return CriticalWitness{lat.group().name(), form, p, maximal_verdicts(m, test), is_member(form, lat.group())};
}

}  // namespace

bool is_class_critical(const Lattice& lat, const ClassTest& in_class) {
  if (in_class(lat.group())) return false;
  for (auto i : lat.maximal_in(lat.top()))
    if (!in_class(subgroup_as_group(lat.group(), lat.at(i)).group)) return false;
  return true;
}

std::optional<CriticalWitness> f_p_critical(const Lattice& lat, const FormationSpec& form, unsigned p) {
  if (!form.has_satellite()) throw Error(ErrorCode::NoSatellite, "formation " + form.name() + " has no satellite");
  return critical_with(lat, maximals_of(lat), form, p);
}

std::vector<CriticalWitness> boundary_scan(const FormationSpec& form, std::span<const unsigned> pi,
                                           std::span<const Lattice* const> catalog, bool soluble_only) {
  if (!form.has_satellite()) throw Error(ErrorCode::NoSatellite, "formation " + form.name() + " has no satellite");
  std::vector<CriticalWitness> out;
  for (const Lattice* lat : catalog) {
    if (soluble_only && !is_soluble(lat->group())) continue;
    const Maximals m = maximals_of(*lat);
    for (auto p : pi) {
      auto w = critical_with(*lat, m, form, p);
      if (w && !w->in_f) out.push_back(std::move(*w));
    }
  }
  return out;
}

}  // namespace formalab
