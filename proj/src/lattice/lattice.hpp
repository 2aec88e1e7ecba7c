#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "group/group.hpp"

namespace formalab {

/// Every subgroup of a group, deduplicated and sorted by order then
/// lexicographically, with normality flags and the containment order.
///
/// Holds a reference to the group; the group must outlive the lattice.
class Lattice {
 public:
  /// Seeds with the cyclic subgroups and closes under joins with them.
  static Lattice build(const Group& g, const Limits& limits = {});
  static Lattice build(Group&&, const Limits& = {}) = delete;

  [[nodiscard]] const Group& group() const { return *group_; }
  [[nodiscard]] std::size_t size() const { return subs_.size(); }
  [[nodiscard]] const SubgroupSet& at(std::size_t i) const { return subs_[i]; }
  [[nodiscard]] std::span<const SubgroupSet> subgroups() const { return subs_; }
  [[nodiscard]] std::span<const Element> generators(std::size_t i) const { return gens_[i]; }
  [[nodiscard]] bool is_normal(std::size_t i) const { return normal_[i] != 0; }
  [[nodiscard]] std::size_t bottom() const { return 0; }
  [[nodiscard]] std::size_t top() const { return subs_.size() - 1; }

  [[nodiscard]] std::optional<std::size_t> index_of(const SubgroupSet& s) const;
  /// index_of that throws when `s` is not a member.
  [[nodiscard]] std::size_t require(const SubgroupSet& s) const;

  /// at(i) <= at(j)
  [[nodiscard]] bool is_sub(std::size_t i, std::size_t j) const {
    return (up_[i][j >> 6] >> (j & 63)) & 1U;
  }
  /// Indices j with at(i) < at(j), ascending.
  [[nodiscard]] std::vector<std::size_t> strict_supersets(std::size_t i) const;
  /// Indices j with at(j) < at(i), ascending.
  [[nodiscard]] std::vector<std::size_t> strict_subsets(std::size_t i) const;

  /// Maximal members of the proper subgroups of at(within).
  [[nodiscard]] std::vector<std::size_t> maximal_in(std::size_t within) const;
  [[nodiscard]] std::vector<std::size_t> normal_indices() const;
  [[nodiscard]] std::vector<std::size_t> minimal_normal_indices() const;

  /// Smallest member containing both.
  [[nodiscard]] std::size_t join(std::size_t i, std::size_t j) const;
  [[nodiscard]] std::size_t meet(std::size_t i, std::size_t j) const;

 private:
  Lattice() = default;

  const Group* group_ = nullptr;
  std::vector<SubgroupSet> subs_;
  std::vector<std::vector<Element>> gens_;
  std::vector<std::uint8_t> normal_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
  std::vector<std::vector<std::uint64_t>> up_;  // up_[i] has bit j iff at(i) <= at(j)
};

Lattice all_subgroups(const Group& g, const Limits& limits = {});
Lattice all_subgroups(Group&&, const Limits& = {}) = delete;

std::vector<SubgroupSet> normal_subgroups(const Lattice& lat);
std::vector<SubgroupSet> maximal_subgroups(const Lattice& lat, const SubgroupSet& within);
std::vector<SubgroupSet> minimal_normal_subgroups(const Lattice& lat);

/// Intersection of the maximal subgroups; G itself when G is trivial.
SubgroupSet frattini(const Lattice& lat);

/// First Sylow p-subgroup in canonical order.
SubgroupSet sylow(const Lattice& lat, unsigned p);
/// First Hall pi-subgroup in canonical order, if any exists.
std::optional<SubgroupSet> hall(const Lattice& lat, std::span<const unsigned> primes);

enum class NamedSubgroup { Derived, Centre, Fitting, Frattini, HypercentreInf, OPi, OPprimeP, Socle };

/// `primes` parameterises OPi (the set pi) and OPprimeP (its first entry is p).
SubgroupSet named_subgroup(const Lattice& lat, NamedSubgroup kind, std::span<const unsigned> primes = {});

}  // namespace formalab
