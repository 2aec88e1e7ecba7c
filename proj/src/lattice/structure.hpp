#pragma once

#include <span>
#include <vector>

#include "group/constructions.hpp"
#include "group/group.hpp"

namespace formalab {

// Distinguished subgroups computed directly from the multiplication table,
// without enumerating the subgroup lattice.

/// Smallest subgroup of `within` that contains `seed` and is normalized by
/// `within`. `within` must contain `seed`.
SubgroupSet normal_closure_in(const Group& g, const SubgroupSet& within, const ElementSet& seed);

SubgroupSet centre(const Group& g);
SubgroupSet derived_subgroup(const Group& g, const SubgroupSet& h);
inline SubgroupSet derived_subgroup(const Group& g) { return derived_subgroup(g, g.all()); }
bool is_soluble(const Group& g, const SubgroupSet& h);
inline bool is_soluble(const Group& g) { return is_soluble(g, g.all()); }

/// Nilpotency of a subgroup by counting p-elements against Sylow orders.
bool is_nilpotent_subgroup(const Group& g, const SubgroupSet& h);
/// Whether every element order (equivalently |h|) involves only `primes`.
bool is_pi_subgroup(const SubgroupSet& h, std::span<const unsigned> primes);

/// { g : [g, h] in K for all h in H } for normal K <= H normal in G.
SubgroupSet section_centralizer(const Group& g, const SubgroupSet& h, const SubgroupSet& k);

/// Largest subgroup of `h` normalized by `within` (the core of h in within).
SubgroupSet core_in(const Group& g, const SubgroupSet& within, const SubgroupSet& h);
inline SubgroupSet core(const Group& g, const SubgroupSet& h) { return core_in(g, g.all(), h); }

/// Limit of the upper central series.
SubgroupSet hypercentre(const Group& g);
/// Largest normal pi-subgroup.
SubgroupSet o_pi(const Group& g, std::span<const unsigned> primes);
/// Largest normal subgroup whose order is coprime to every prime in `primes`.
SubgroupSet o_pi_prime(const Group& g, std::span<const unsigned> primes);
inline SubgroupSet o_p(const Group& g, unsigned p) { return o_pi(g, std::span<const unsigned>(&p, 1)); }
/// Preimage of O_p(G / O_p'(G)).
SubgroupSet o_pprime_p(const Group& g, unsigned p);
SubgroupSet fitting(const Group& g);
SubgroupSet socle(const Group& g);

/// Normal subgroups N of G with Z < N and N/Z minimal normal in G/Z, in
/// canonical order. With `within`, only those contained in `within`.
std::vector<SubgroupSet> minimal_normal_above(const Group& g, const SubgroupSet& z,
                                              const SubgroupSet* within = nullptr);

/// Ascending chief series 1 = N0 < ... < Nk = G, each term the canonically
/// least minimal normal subgroup above the previous one. With `through`, terms
/// stay inside `through` until it is reached, so it appears in the series.
std::vector<SubgroupSet> chief_series_terms(const Group& g, const SubgroupSet* through = nullptr);

/// All normal subgroups, canonical order, by joining normal closures of
/// elements.
std::vector<SubgroupSet> normal_subgroups_by_closure(const Group& g);

/// Least r with the iterated Fitting series reaching G; 0 for the trivial
/// group. Throws NotSoluble.
unsigned nilpotent_length(const Group& g);

}  // namespace formalab
