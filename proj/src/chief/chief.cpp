#include "chief/chief.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "group/constructions.hpp"
#include "lattice/structure.hpp"

namespace formalab {

namespace {

ChiefSeries series_from_terms(std::vector<SubgroupSet> terms) {
  ChiefSeries s;
  for (std::size_t i = 1; i < terms.size(); ++i) s.factors.push_back(make_factor(terms[i], terms[i - 1]));
  s.terms = std::move(terms);
  return s;
}

std::vector<unsigned> restrict_pi(const Group& g, std::span<const unsigned> pi) {
  std::vector<unsigned> out;
  for (auto p : prime_divisors(g.order()))
    if (std::find(pi.begin(), pi.end(), p) != pi.end()) out.push_back(p);
  return out;
}

}  // namespace

ChiefFactor make_factor(const SubgroupSet& upper, const SubgroupSet& lower) {
  ChiefFactor f{upper, lower, upper.count() / lower.count(), {}};
  f.primes = prime_divisors(f.order);
  return f;
}

ChiefSeries chief_series(const Group& g) { return series_from_terms(chief_series_terms(g)); }

ChiefSeries chief_series_through(const Group& g, const SubgroupSet& n) {
  if (!is_subgroup(g, n) || !is_normal(g, n))
    throw Error(ErrorCode::NotNormal, "series must pass through a normal subgroup");
  return series_from_terms(chief_series_terms(g, &n));
}

bool is_f_central_satellite(const Group& g, const ChiefFactor& f, const FormationSpec& form) {
  if (!form.has_satellite()) throw Error(ErrorCode::NoSatellite, "formation " + form.name() + " has no satellite");
  const SubgroupSet c = section_centralizer(g, f.upper, f.lower);
  const QuotientMap q = quotient_group(g, c);
  for (auto p : f.primes)
    if (!satellite_member(form, p, q.target)) return false;
  return true;
}

bool is_f_central_semidirect(const Group& g, const ChiefFactor& f, const FormationSpec& form,
                             const Limits& limits) {
  const SubgroupSet c = section_centralizer(g, f.upper, f.lower);
  const std::size_t a_order = g.order() / c.count();
  const Embedding h = subgroup_as_group(g, f.upper);
  const QuotientMap v = quotient_group(h.group, h.to_local(f.lower));
  if (f.order * a_order > limits.closure_cap) {
    // H/K is a subgroup of the product, so for hereditary F a factor outside
    // F decides it without building anything.
    if (form.hereditary() && !is_member(form, v.target)) return false;
    throw Error(ErrorCode::ClosureCapExceeded, "semidirect product of order " + std::to_string(f.order * a_order) +
                                                   " exceeds cap " + std::to_string(limits.closure_cap));
  }
  const QuotientMap a = quotient_group(g, c);

  ActionTable action(a.target.order(), std::vector<Element>(v.target.order()));
  for (Element x = 0; x < a.target.order(); ++x) {
    const Element gx = a.reps[x];
    for (Element y = 0; y < v.target.order(); ++y) {
      const Element hy = h.to_parent[v.reps[y]];
      action[x][y] = v.proj[static_cast<Element>(h.from_parent[g.conj(gx, hy)])];
    }
  }
  const Group sd = semidirect_product(v.target, a.target, action, limits);
  return is_member(form, sd);
}

bool is_f_central(const Group& g, const ChiefFactor& f, const FormationSpec& form, const Limits& limits) {
  if (form.has_satellite()) return is_f_central_satellite(g, f, form);
  return is_f_central_semidirect(g, f, form, limits);
}

bool is_pi_exempt(const ChiefFactor& f, std::span<const unsigned> pi) {
  for (auto p : f.primes)
    if (std::find(pi.begin(), pi.end(), p) != pi.end()) return false;
  return true;
}

SubgroupSet z_pi_f(const Group& g, const FormationSpec& form, std::span<const unsigned> pi, Absorb mode,
                   const Limits& limits) {
  const auto primes = restrict_pi(g, pi);
  SubgroupSet z = Group::trivial();
  for (;;) {
    std::vector<SubgroupSet> take;
    for (const auto& n : minimal_normal_above(g, z)) {
      const ChiefFactor f = make_factor(n, z);
      if (is_pi_exempt(f, primes) || is_f_central(g, f, form, limits)) take.push_back(n);
    }
    if (take.empty()) return z;
    switch (mode) {
      case Absorb::All:
        for (const auto& n : take) z |= n;
        z = closure(g, z);
        break;
      case Absorb::FirstOnly: z = take.front(); break;
      case Absorb::LastOnly: z = take.back(); break;
    }
  }
}

SubgroupSet z_f(const Group& g, const FormationSpec& form, const Limits& limits) {
  const auto primes = prime_divisors(g.order());
  return z_pi_f(g, form, primes, Absorb::All, limits);
}

SubgroupSet z_pi_f_oracle(const Group& g, const FormationSpec& form, std::span<const unsigned> pi,
                          const Limits& limits) {
  const auto primes = restrict_pi(g, pi);
  std::map<std::pair<std::vector<Element>, std::vector<Element>>, bool> memo;
  auto central = [&](const ChiefFactor& f) {
    auto key = std::make_pair(f.upper.elements(), f.lower.elements());
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool verdict;
    const std::size_t a_order = g.order() / section_centralizer(g, f.upper, f.lower).count();
    if (f.order * a_order <= limits.closure_cap || !form.has_satellite())
      verdict = is_f_central_semidirect(g, f, form, limits);
    else
      verdict = is_f_central_satellite(g, f, form);
    memo.emplace(std::move(key), verdict);
    return verdict;
  };

  SubgroupSet z = Group::trivial();
  for (const auto& n : normal_subgroups_by_closure(g)) {
    if (n.is_subset_of(z)) continue;
    const ChiefSeries s = chief_series_through(g, n);
    bool ok = true;
    for (const auto& f : s.factors) {
      if (!f.upper.is_subset_of(n)) break;
      if (!is_pi_exempt(f, primes) && !central(f)) {
        ok = false;
        break;
      }
    }
    if (ok) z = join(g, z, n);
  }
  return z;
}

}  // namespace formalab
