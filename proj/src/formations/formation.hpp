#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "group/group.hpp"

namespace formalab {

enum class FormationTag {
  Triv,      // groups of order 1
  All,       // all finite groups
  Sol,       // soluble
  Nil,       // nilpotent
  Sup,       // supersoluble
  PSup,      // p-supersoluble
  PNilp,     // p-nilpotent
  PDec,      // p-decomposable
  PiClosed,  // normal Hall pi-subgroup
  GPi,       // pi-groups
  SPi,       // soluble pi-groups
  AExp,      // abelian of exponent dividing n
  NA,        // G' <= F(G)
  NilPow,    // soluble of nilpotent length <= r
  SylTower,  // Sylow tower for decreasing primes
};

/// One built-in formation with its parameters.
struct FormationSpec {
  FormationTag tag = FormationTag::All;
  unsigned p = 0;               // PSup, PNilp, PDec
  std::vector<unsigned> pi;     // PiClosed, GPi, SPi (ascending, distinct)
  unsigned n = 0;               // AExp exponent, NilPow length

  static FormationSpec triv() { return {FormationTag::Triv}; }
  static FormationSpec all() { return {FormationTag::All}; }
  static FormationSpec sol() { return {FormationTag::Sol}; }
  static FormationSpec nil() { return {FormationTag::Nil}; }
  static FormationSpec sup() { return {FormationTag::Sup}; }
  static FormationSpec na() { return {FormationTag::NA}; }
  static FormationSpec syl_tower() { return {FormationTag::SylTower}; }
  static FormationSpec p_sup(unsigned p);
  static FormationSpec p_nilp(unsigned p);
  static FormationSpec p_dec(unsigned p);
  static FormationSpec pi_closed(std::vector<unsigned> pi);
  static FormationSpec g_pi(std::vector<unsigned> pi);
  static FormationSpec s_pi(std::vector<unsigned> pi);
  static FormationSpec a_exp(unsigned n);
  static FormationSpec nil_pow(unsigned r);

  /// Accepts the command-line names: triv, all, sol, nil, sup, psup:p,
  /// pnilp:p, pdec:p, piclosed:2,3, gpi:2,3, spi:2,3, aexp:n, na, nilpow:r,
  /// syltower.
  static FormationSpec parse(std::string_view text);
  [[nodiscard]] std::string name() const;

  [[nodiscard]] bool hereditary() const { return true; }
  [[nodiscard]] bool saturated() const { return tag != FormationTag::AExp; }
  [[nodiscard]] bool has_satellite() const {
    return tag != FormationTag::AExp && tag != FormationTag::SylTower;
  }

  friend bool operator==(const FormationSpec&, const FormationSpec&) = default;
};

bool is_member(const FormationSpec& f, const Group& g);

/// Membership in the canonical local satellite value F(p). Throws NoSatellite.
bool satellite_member(const FormationSpec& f, unsigned p, const Group& g);

/// Intersection of the normal subgroups N with G/N in F.
SubgroupSet residual(const Group& g, const FormationSpec& f);

/// Whether the pi-elements form a (necessarily normal) Hall pi-subgroup.
bool has_normal_hall(const Group& g, std::span<const unsigned> primes);

}  // namespace formalab
