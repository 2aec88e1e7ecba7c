#pragma once

#include <span>
#include <vector>

#include "formations/formation.hpp"
#include "group/group.hpp"

namespace formalab {

/// H/K with K < H both normal in G and H/K minimal normal in G/K.
struct ChiefFactor {
  SubgroupSet upper;  // H
  SubgroupSet lower;  // K
  std::size_t order = 1;
  std::vector<unsigned> primes;
};

struct ChiefSeries {
  std::vector<SubgroupSet> terms;  // 1 = N0 < ... < Nk = G
  std::vector<ChiefFactor> factors;
};

ChiefFactor make_factor(const SubgroupSet& upper, const SubgroupSet& lower);

ChiefSeries chief_series(const Group& g);
/// A chief series passing through the normal subgroup `n`. Throws NotNormal.
ChiefSeries chief_series_through(const Group& g, const SubgroupSet& n);

/// G/C_G(H/K) in F(p) for every prime p of the factor. Throws NoSatellite.
bool is_f_central_satellite(const Group& g, const ChiefFactor& f, const FormationSpec& form);

/// (H/K) x| (G/C_G(H/K)) in F, built explicitly. Above the closure cap the
/// answer is still false when F is hereditary and H/K is outside F; otherwise
/// throws ClosureCapExceeded.
bool is_f_central_semidirect(const Group& g, const ChiefFactor& f, const FormationSpec& form,
                             const Limits& limits = {});

/// Which minimal normal subgroups of G/Z a round of z_pi_f absorbs.
enum class Absorb { All, FirstOnly, LastOnly };

/// Centrality test used by z_pi_f: satellite when the formation has one,
/// otherwise the explicit semidirect product.
bool is_f_central(const Group& g, const ChiefFactor& f, const FormationSpec& form,
                  const Limits& limits = {});

/// Whether the factor is exempt from the centrality requirement: its order
/// involves no prime of `pi`.
bool is_pi_exempt(const ChiefFactor& f, std::span<const unsigned> pi);

/// Z_{pi F}(G) by absorbing qualifying minimal normal subgroups of G/Z until
/// none is left.
SubgroupSet z_pi_f(const Group& g, const FormationSpec& form, std::span<const unsigned> pi,
                   Absorb mode = Absorb::All, const Limits& limits = {});
/// z_pi_f with pi = primes dividing |G|.
SubgroupSet z_f(const Group& g, const FormationSpec& form, const Limits& limits = {});

/// Join of every normal N all of whose chief factors below N (in a series
/// through N) are pi-exempt or F-central. Centrality is tested by the
/// semidirect construction when it fits the cap or there is no satellite, by
/// the satellite otherwise.
SubgroupSet z_pi_f_oracle(const Group& g, const FormationSpec& form, std::span<const unsigned> pi,
                          const Limits& limits = {});

}  // namespace formalab
