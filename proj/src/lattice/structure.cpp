#include "lattice/structure.hpp"

#include <algorithm>
#include <unordered_set>

namespace formalab {

namespace {

std::vector<Element> conjugacy_class(const Group& g, Element x) {
  std::vector<Element> cls{x};
  ElementSet seen = ElementSet::single(x);
  for (std::size_t i = 0; i < cls.size(); ++i)
    for (auto t : g.generators()) {
      const Element y = g.conj(t, cls[i]);
      if (!seen.test(y)) {
        seen.set(y);
        cls.push_back(y);
      }
    }
  return cls;
}

SubgroupSet centralizer_of_section(const Group& g, const SubgroupSet& h, const SubgroupSet& k) {
  const auto hgens = generating_set(g, h);
  SubgroupSet c;
  for (Element x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (auto y : hgens)
      if (!k.test(g.comm(x, y))) {
        ok = false;
        break;
      }
    if (ok) c.set(x);
  }
  return c;
}

void sort_canonical(std::vector<SubgroupSet>& v) {
  std::sort(v.begin(), v.end(), [](const SubgroupSet& a, const SubgroupSet& b) { return canonical_less(a, b); });
}

}  // namespace

SubgroupSet normal_closure_in(const Group& g, const SubgroupSet& within, const ElementSet& seed) {
  const auto tgens = generating_set(g, within);
  ElementSet hull = seed;
  std::vector<Element> queue = seed.elements();
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (auto t : tgens) {
      const Element y = g.conj(t, queue[i]);
      if (!hull.test(y)) {
        hull.set(y);
        queue.push_back(y);
      }
    }
  return closure(g, hull);
}

SubgroupSet centre(const Group& g) { return centralizer_of_section(g, g.all(), Group::trivial()); }

SubgroupSet derived_subgroup(const Group& g, const SubgroupSet& h) {
  const auto gens = generating_set(g, h);
  ElementSet seed = Group::trivial();
  for (auto a : gens)
    for (auto b : gens) seed.set(g.comm(a, b));
  return normal_closure_in(g, h, seed);
}

bool is_soluble(const Group& g, const SubgroupSet& h) {
  SubgroupSet d = h;
  while (d.count() > 1) {
    SubgroupSet next = derived_subgroup(g, d);
    if (next == d) return false;
    d = next;
  }
  return true;
}

bool is_nilpotent_subgroup(const Group& g, const SubgroupSet& h) {
  const std::size_t n = h.count();
  for (auto p : prime_divisors(n)) {
    std::size_t count = 0;
    h.for_each([&](Element x) {
      unsigned o = g.element_order(x);
      while (o % p == 0) o /= p;
      if (o == 1) ++count;
    });
    if (count != pi_part(n, std::span<const unsigned>(&p, 1))) return false;
  }
  return true;
}

bool is_pi_subgroup(const SubgroupSet& h, std::span<const unsigned> primes) {
  const std::size_t n = h.count();
  return pi_part(n, primes) == n;
}

SubgroupSet section_centralizer(const Group& g, const SubgroupSet& h, const SubgroupSet& k) {
  if (!k.is_subset_of(h))
    throw Error(ErrorCode::PreconditionViolated, "section_centralizer needs K <= H");
  if (!is_subgroup(g, h) || !is_subgroup(g, k) || !is_normal(g, h) || !is_normal(g, k))
    throw Error(ErrorCode::PreconditionViolated, "section_centralizer needs H and K normal in G");
  return centralizer_of_section(g, h, k);
}

SubgroupSet core_in(const Group& g, const SubgroupSet& within, const SubgroupSet& h) {
  const auto tgens = generating_set(g, within);
  SubgroupSet c = h;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto t : tgens) {
      SubgroupSet conj;
      c.for_each([&](Element x) { conj.set(g.conj(t, x)); });
      const SubgroupSet next = c & conj;
      if (!(next == c)) {
        c = next;
        changed = true;
      }
    }
  }
  return c;
}

SubgroupSet hypercentre(const Group& g) {
  SubgroupSet z = Group::trivial();
  for (;;) {
    SubgroupSet next = centralizer_of_section(g, g.all(), z);
    if (next == z) return z;
    z = next;
  }
}

SubgroupSet o_pi(const Group& g, std::span<const unsigned> primes) {
  SubgroupSet r = Group::trivial();
  ElementSet done = Group::trivial();
  for (Element x = 1; x < g.order(); ++x) {
    if (done.test(x) || r.test(x)) continue;
    const std::size_t o = g.element_order(x);
    for (auto y : conjugacy_class(g, x)) done.set(y);
    if (pi_part(o, primes) != o) continue;
    const SubgroupSet n = normal_closure(g, ElementSet::single(x));
    if (is_pi_subgroup(n, primes)) r = closure(g, r | n);
  }
  return r;
}

SubgroupSet o_pi_prime(const Group& g, std::span<const unsigned> primes) {
  std::vector<unsigned> others;
  for (auto q : prime_divisors(g.order()))
    if (std::find(primes.begin(), primes.end(), q) == primes.end()) others.push_back(q);
  if (others.empty()) return Group::trivial();
  return o_pi(g, others);
}

SubgroupSet o_pprime_p(const Group& g, unsigned p) {
  const SubgroupSet base = o_pi_prime(g, std::span<const unsigned>(&p, 1));
  const QuotientMap q = quotient_group(g, base);
  return q.preimage(o_p(q.target, p));
}

SubgroupSet fitting(const Group& g) {
  ElementSet u = Group::trivial();
  for (auto p : prime_divisors(g.order())) u |= o_p(g, p);
  return closure(g, u);
}

SubgroupSet socle(const Group& g) {
  ElementSet u = Group::trivial();
  for (const auto& m : minimal_normal_above(g, Group::trivial())) u |= m;
  return closure(g, u);
}

std::vector<SubgroupSet> minimal_normal_above(const Group& g, const SubgroupSet& z,
                                              const SubgroupSet* within) {
  const auto zgens = generating_set(g, z);
  ElementSet seed_base;
  for (auto x : zgens) seed_base.set(x);

  std::vector<SubgroupSet> candidates;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  ElementSet done = z;
  const ElementSet pool = within ? *within : g.all();
  pool.for_each([&](Element x) {
    if (done.test(x)) return;
    for (auto y : conjugacy_class(g, x)) done.set(y);
    ElementSet seed = seed_base;
    seed.set(x);
    SubgroupSet n = normal_closure(g, seed);
    if (seen.insert(n).second) candidates.push_back(n);
  });

  std::vector<SubgroupSet> minimal;
  for (const auto& c : candidates) {
    bool is_min = true;
    for (const auto& d : candidates)
      if (!(d == c) && d.is_subset_of(c)) {
        is_min = false;
        break;
      }
    if (is_min) minimal.push_back(c);
  }
  sort_canonical(minimal);
  return minimal;
}

std::vector<SubgroupSet> chief_series_terms(const Group& g, const SubgroupSet* through) {
  std::vector<SubgroupSet> terms{Group::trivial()};
  while (terms.back().count() < g.order()) {
    const SubgroupSet& cur = terms.back();
    const bool inside = through && !through->is_subset_of(cur);
    auto mins = minimal_normal_above(g, cur, inside ? through : nullptr);
    if (mins.empty()) throw Error(ErrorCode::Internal, "no minimal normal subgroup above a proper normal subgroup");
    terms.push_back(mins.front());
  }
  return terms;
}

std::vector<SubgroupSet> normal_subgroups_by_closure(const Group& g) {
  std::vector<SubgroupSet> seeds;
  std::unordered_set<ElementSet, ElementSetHash> seed_seen;
  ElementSet done = Group::trivial();
  for (Element x = 1; x < g.order(); ++x) {
    if (done.test(x)) continue;
    for (auto y : conjugacy_class(g, x)) done.set(y);
    SubgroupSet n = normal_closure(g, ElementSet::single(x));
    if (seed_seen.insert(n).second) seeds.push_back(n);
  }

  std::vector<SubgroupSet> all{Group::trivial()};
  std::unordered_set<ElementSet, ElementSetHash> seen{Group::trivial()};
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const auto& s : seeds) {
      if (s.is_subset_of(all[i])) continue;
      SubgroupSet j = join(g, all[i], s);
      if (seen.insert(j).second) all.push_back(j);
    }
  }
  sort_canonical(all);
  return all;
}

unsigned nilpotent_length(const Group& g) {
  if (!is_soluble(g)) throw Error(ErrorCode::NotSoluble, g.name() + " is not soluble");
  unsigned length = 0;
  SubgroupSet f = Group::trivial();
  while (f.count() < g.order()) {
    const QuotientMap q = quotient_group(g, f);
    f = q.preimage(fitting(q.target));
    ++length;
  }
  return length;
}

}  // namespace formalab
