#include "lattice/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "lattice/structure.hpp"

namespace formalab {

Lattice Lattice::build(const Group& g, const Limits& limits) {
  const std::size_t n = g.order();
  std::vector<SubgroupSet> subs;
  std::vector<std::vector<Element>> gens;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index;

  auto add = [&](const SubgroupSet& s, std::vector<Element> gs) -> bool {
    if (index.count(s)) return false;
    if (subs.size() + 1 > limits.subgroup_cap)
      throw Error(ErrorCode::SubgroupCountCapExceeded,
                  g.name() + " has more than " + std::to_string(limits.subgroup_cap) + " subgroups");
    index.emplace(s, subs.size());
    subs.push_back(s);
    gens.push_back(std::move(gs));
    return true;
  };

  add(Group::trivial(), {});
  std::vector<Element> cyclic_reps;
  for (Element x = 1; x < n; ++x) {
    const Element one[] = {x};
    if (add(closure(g, one), {x})) cyclic_reps.push_back(x);
  }

  // Every subgroup is a join of cyclic subgroups; grow each member by one
  // cyclic generator at a time. <H, x> = <H, hx>, so one trial per coset Hx.
  for (std::size_t i = 1; i < subs.size(); ++i) {
    const SubgroupSet h = subs[i];
    const auto h_elems = h.elements();
    std::vector<Element> base = gens[i];
    ElementSet tried = h;
    for (auto x : cyclic_reps) {
      if (tried.test(x)) continue;
      for (auto y : h_elems) tried.set(g.mul(y, x));
      auto gs = base;
      gs.push_back(x);
      SubgroupSet j = closure(g, gs);
      add(j, std::move(gs));
    }
  }

  std::vector<std::size_t> order(subs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return canonical_less(subs[a], subs[b]); });

  Lattice lat;
  lat.group_ = &g;
  lat.subs_.reserve(subs.size());
  lat.gens_.reserve(subs.size());
  for (auto k : order) {
    lat.subs_.push_back(subs[k]);
    lat.gens_.push_back(std::move(gens[k]));
  }
  for (std::size_t i = 0; i < lat.subs_.size(); ++i) lat.index_.emplace(lat.subs_[i], i);

  lat.normal_.assign(lat.subs_.size(), 0);
  for (std::size_t i = 0; i < lat.subs_.size(); ++i) {
    bool normal = true;
    for (auto t : g.generators()) {
      for (auto x : lat.gens_[i])
        if (!lat.subs_[i].test(g.conj(t, x))) {
          normal = false;
          break;
        }
      if (!normal) break;
    }
    lat.normal_[i] = normal ? 1 : 0;
  }

  const std::size_t s = lat.subs_.size();
  const std::size_t words = (s + 63) / 64;
  std::vector<std::size_t> sizes(s);
  for (std::size_t i = 0; i < s; ++i) sizes[i] = lat.subs_[i].count();
  lat.up_.assign(s, std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < s; ++i) {
    lat.up_[i][i >> 6] |= std::uint64_t{1} << (i & 63);
    for (std::size_t j = i + 1; j < s; ++j) {
      if (sizes[j] == sizes[i] || sizes[j] % sizes[i] != 0) continue;
      if (lat.subs_[i].is_subset_of(lat.subs_[j])) lat.up_[i][j >> 6] |= std::uint64_t{1} << (j & 63);
    }
  }
  return lat;
}

std::optional<std::size_t> Lattice::index_of(const SubgroupSet& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Lattice::require(const SubgroupSet& s) const {
  auto i = index_of(s);
  if (!i) throw Error(ErrorCode::Internal, "set is not a member of the subgroup lattice");
  return *i;
}

std::vector<std::size_t> Lattice::strict_supersets(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < up_[i].size(); ++w) {
    std::uint64_t bits = up_[i][w];
    while (bits) {
      const std::size_t j = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
      if (j != i) out.push_back(j);
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<std::size_t> Lattice::strict_subsets(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < i; ++j)
    if (is_sub(j, i)) out.push_back(j);
  return out;
}

std::vector<std::size_t> Lattice::maximal_in(std::size_t within) const {
  const auto below = strict_subsets(within);
  std::vector<std::size_t> out;
  for (auto j : below) {
    bool maximal = true;
    for (auto k : below)
      if (k != j && is_sub(j, k)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(j);
  }
  return out;
}

std::vector<std::size_t> Lattice::normal_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (is_normal(i)) out.push_back(i);
  return out;
}

std::vector<std::size_t> Lattice::minimal_normal_indices() const {
  const auto normals = normal_indices();
  std::vector<std::size_t> out;
  for (auto i : normals) {
    if (i == bottom()) continue;
    bool minimal = true;
    for (auto j : normals)
      if (j != bottom() && j != i && is_sub(j, i)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(i);
  }
  return out;
}

std::size_t Lattice::join(std::size_t i, std::size_t j) const {
  for (std::size_t k = std::max(i, j); k < size(); ++k)
    if (is_sub(i, k) && is_sub(j, k)) return k;
  return top();
}

std::size_t Lattice::meet(std::size_t i, std::size_t j) const { return require(at(i) & at(j)); }

Lattice all_subgroups(const Group& g, const Limits& limits) { return Lattice::build(g, limits); }

namespace {

std::vector<SubgroupSet> sets_of(const Lattice& lat, const std::vector<std::size_t>& idx) {
  std::vector<SubgroupSet> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(lat.at(i));
  return out;
}

}  // namespace

std::vector<SubgroupSet> normal_subgroups(const Lattice& lat) { return sets_of(lat, lat.normal_indices()); }

std::vector<SubgroupSet> maximal_subgroups(const Lattice& lat, const SubgroupSet& within) {
  return sets_of(lat, lat.maximal_in(lat.require(within)));
}

std::vector<SubgroupSet> minimal_normal_subgroups(const Lattice& lat) {
  return sets_of(lat, lat.minimal_normal_indices());
}

SubgroupSet frattini(const Lattice& lat) {
  SubgroupSet phi = lat.group().all();
  for (auto i : lat.maximal_in(lat.top())) phi &= lat.at(i);
  return phi;
}

SubgroupSet sylow(const Lattice& lat, unsigned p) {
  const std::size_t target = pi_part(lat.group().order(), std::span<const unsigned>(&p, 1));
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (lat.at(i).count() == target) return lat.at(i);
  throw Error(ErrorCode::Internal, "no Sylow subgroup found");
}

std::optional<SubgroupSet> hall(const Lattice& lat, std::span<const unsigned> primes) {
  const std::size_t target = pi_part(lat.group().order(), primes);
  for (std::size_t i = 0; i < lat.size(); ++i)
    if (lat.at(i).count() == target) return lat.at(i);
  return std::nullopt;
}

SubgroupSet named_subgroup(const Lattice& lat, NamedSubgroup kind, std::span<const unsigned> primes) {
  const Group& g = lat.group();
  switch (kind) {
    case NamedSubgroup::Derived: return derived_subgroup(g);
    case NamedSubgroup::Centre: return centre(g);
    case NamedSubgroup::Fitting: return fitting(g);
    case NamedSubgroup::Frattini: return frattini(lat);
    case NamedSubgroup::HypercentreInf: return hypercentre(g);
    case NamedSubgroup::OPi:
      if (primes.empty()) throw Error(ErrorCode::InvalidArgument, "O_pi needs a nonempty prime set");
      return o_pi(g, primes);
    case NamedSubgroup::OPprimeP:
      if (primes.empty()) throw Error(ErrorCode::InvalidArgument, "O_p',p needs a prime");
      return o_pprime_p(g, primes.front());
    case NamedSubgroup::Socle: return socle(g);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown named subgroup");
}

}  // namespace formalab
