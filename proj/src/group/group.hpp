#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "group/element_set.hpp"
#include "group/error.hpp"

namespace formalab {

/// A finite group stored as a dense multiplication table.
///
/// Element 0 is the identity. Groups are immutable once constructed.
class Group {
 public:
  static constexpr Element kIdentity = 0;

  /// How much of the group axioms the constructor re-verifies.
  ///   Full: associativity on every triple up to 512 elements, sampled above.
  ///   Derived: every triple up to 16 elements, a light sample above; for
  ///   tables built from an already validated group (quotients, products,
  ///   subgroups) where associativity is inherited.
  enum class Check { Full, Derived };

  /// Validates the table (identity at 0, Latin square, associativity per
  /// `check`). `generators` may be empty, in which case a generating set is
  /// chosen greedily.
  Group(std::string name, std::size_t order, std::vector<std::uint16_t> table,
        std::vector<Element> generators, std::string provenance, Check check = Check::Full);

  [[nodiscard]] std::size_t order() const { return n_; }
  [[nodiscard]] Element mul(Element a, Element b) const { return table_[a * n_ + b]; }
  [[nodiscard]] Element inv(Element a) const { return inv_[a]; }
  /// g x g^-1
  [[nodiscard]] Element conj(Element g, Element x) const { return mul(mul(g, x), inv_[g]); }
  /// [a, b] = a^-1 b^-1 a b
  [[nodiscard]] Element comm(Element a, Element b) const {
    return mul(mul(inv_[a], inv_[b]), mul(a, b));
  }
  [[nodiscard]] Element pow(Element x, long k) const;
  [[nodiscard]] unsigned element_order(Element x) const { return orders_[x]; }

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] const std::string& provenance() const { return provenance_; }
  [[nodiscard]] std::span<const Element> generators() const { return gens_; }
  [[nodiscard]] std::span<const std::uint16_t> table() const { return table_; }

  [[nodiscard]] ElementSet all() const { return ElementSet::range(n_); }
  [[nodiscard]] static ElementSet trivial() { return ElementSet::single(kIdentity); }

  Group renamed(std::string name) const {
    Group g = *this;
    g.name_ = std::move(name);
    return g;
  }

 private:
  std::string name_;
  std::size_t n_;
  std::vector<std::uint16_t> table_;
  std::vector<Element> inv_;
  std::vector<unsigned> orders_;
  std::vector<Element> gens_;
  std::string provenance_;
};

/// Subgroup generated by `gens`.
SubgroupSet closure(const Group& g, std::span<const Element> gens);
SubgroupSet closure(const Group& g, const ElementSet& seed);
/// Smallest normal subgroup containing `seed`.
SubgroupSet normal_closure(const Group& g, const ElementSet& seed);
/// Smallest subgroup containing both.
SubgroupSet join(const Group& g, const SubgroupSet& a, const SubgroupSet& b);

/// Greedy generating set of a subgroup (elements of larger order first).
std::vector<Element> generating_set(const Group& g, const SubgroupSet& h);

[[nodiscard]] bool is_subgroup(const Group& g, const ElementSet& s);
[[nodiscard]] bool is_normal(const Group& g, const SubgroupSet& h);
/// Whether conjugation by every element of `by` preserves `h`.
[[nodiscard]] bool normalizes(const Group& g, const SubgroupSet& by, const SubgroupSet& h);

unsigned element_order(const Group& g, Element x);

/// Distinct primes dividing n, ascending.
std::vector<unsigned> prime_divisors(std::size_t n);
bool is_prime(std::size_t n);
/// Largest divisor of n whose prime factors all lie in `primes`.
std::size_t pi_part(std::size_t n, std::span<const unsigned> primes);

}  // namespace formalab
