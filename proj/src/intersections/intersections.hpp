#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "formations/formation.hpp"
#include "lattice/lattice.hpp"

namespace formalab {

struct FMaxReport {
  FormationSpec formation;
  std::vector<SubgroupSet> f_maximal;
  SubgroupSet int_f;
  std::vector<bool> k_subnormal;  // parallel to f_maximal
  SubgroupSet int_star;
};

/// F-membership, F-maximality and K-F-subnormality over one lattice, with
/// every verdict cached. Subgroups are lattice indices; `within` selects a
/// subgroup T of G and restricts everything to the subgroups of T.
class FormationView {
 public:
  FormationView(const Lattice& lat, FormationSpec form);

  [[nodiscard]] const Lattice& lattice() const { return *lat_; }
  [[nodiscard]] const FormationSpec& formation() const { return form_; }

  bool member(std::size_t i);
  std::vector<std::size_t> f_maximal(std::size_t within);
  SubgroupSet int_f(std::size_t within);
  bool k_subnormal(std::size_t i, std::size_t within);
  SubgroupSet int_star(std::size_t within);
  FMaxReport report(std::size_t within);

 private:
  bool admissible(std::size_t a, std::size_t b);
  bool normal_in(std::size_t a, std::size_t b) const;

  const Lattice* lat_;
  FormationSpec form_;
  std::vector<std::int8_t> member_;  // -1 unknown
  std::map<std::pair<std::size_t, std::size_t>, bool> quotient_member_;  // (B, core) -> B/core in F
  std::unordered_map<std::size_t, std::vector<std::int8_t>> reach_;     // within -> per node
  std::unordered_map<std::size_t, std::vector<std::size_t>> fmax_;
};

std::vector<SubgroupSet> f_maximal_subgroups(const Lattice& lat, const FormationSpec& form);
SubgroupSet int_f(const Lattice& lat, const FormationSpec& form);
bool is_k_f_subnormal(const Lattice& lat, const SubgroupSet& h, const FormationSpec& form);
SubgroupSet int_star_f(const Lattice& lat, const FormationSpec& form);
FMaxReport fmax_report(const Lattice& lat, const FormationSpec& form);

}  // namespace formalab
