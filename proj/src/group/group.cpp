#include "group/group.hpp"

#include <algorithm>
#include <numeric>

namespace formalab {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::InvalidTable: return "InvalidTable";
    case ErrorCode::ClosureCapExceeded: return "ClosureCapExceeded";
    case ErrorCode::IsoCapExceeded: return "IsoCapExceeded";
    case ErrorCode::SubgroupCountCapExceeded: return "SubgroupCountCapExceeded";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::NotActionHomomorphism: return "NotActionHomomorphism";
    case ErrorCode::RelationMismatch: return "RelationMismatch";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotSoluble: return "NotSoluble";
    case ErrorCode::NoSatellite: return "NoSatellite";
    case ErrorCode::LoadError: return "LoadError";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {

constexpr std::size_t kExactAssociativityLimit = 512;
constexpr std::size_t kSampledTriples = 20000;
constexpr std::size_t kExactDerivedLimit = 16;
constexpr std::size_t kSampledDerivedTriples = 1000;

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Group::Group(std::string name, std::size_t order, std::vector<std::uint16_t> table,
             std::vector<Element> generators, std::string provenance, Check check)
    : name_(std::move(name)),
      n_(order),
      table_(std::move(table)),
      gens_(std::move(generators)),
      provenance_(std::move(provenance)) {
  if (n_ == 0) throw Error(ErrorCode::InvalidTable, "group order must be positive");
  if (n_ > ElementSet::kCapacity)
    throw Error(ErrorCode::ClosureCapExceeded,
                "order " + std::to_string(n_) + " exceeds hard capacity " +
                    std::to_string(ElementSet::kCapacity));
  if (table_.size() != n_ * n_) throw Error(ErrorCode::InvalidTable, "table is not n x n");
  for (auto v : table_)
    if (v >= n_) throw Error(ErrorCode::InvalidTable, "table entry out of range");

  for (Element x = 0; x < n_; ++x) {
    if (mul(0, x) != x || mul(x, 0) != x)
      throw Error(ErrorCode::InvalidTable, "element 0 is not the identity");
  }

  // Latin square: every row and every column is a permutation.
  std::vector<std::uint32_t> seen(n_, 0);
  std::uint32_t stamp = 0;
  for (Element a = 0; a < n_; ++a) {
    ++stamp;
    for (Element b = 0; b < n_; ++b) {
      auto& s = seen[mul(a, b)];
      if (s == stamp) throw Error(ErrorCode::InvalidTable, "row is not a permutation");
      s = stamp;
    }
    ++stamp;
    for (Element b = 0; b < n_; ++b) {
      auto& s = seen[mul(b, a)];
      if (s == stamp) throw Error(ErrorCode::InvalidTable, "column is not a permutation");
      s = stamp;
    }
  }

  const std::size_t exact_limit = check == Check::Full ? kExactAssociativityLimit : kExactDerivedLimit;
  if (n_ <= exact_limit) {
    for (Element a = 0; a < n_; ++a)
      for (Element b = 0; b < n_; ++b) {
        const Element ab = mul(a, b);
        const std::uint16_t* row_ab = &table_[ab * n_];
        const std::uint16_t* row_b = &table_[b * n_];
        const std::uint16_t* row_a = &table_[a * n_];
        for (Element c = 0; c < n_; ++c)
          if (row_ab[c] != row_a[row_b[c]])
            throw Error(ErrorCode::InvalidTable, "multiplication is not associative");
      }
  } else {
    std::uint64_t state = 0x5eedULL + n_;
    auto pick = [&] { return static_cast<Element>(splitmix64(state) % n_); };
    const std::size_t samples = check == Check::Full ? kSampledTriples : kSampledDerivedTriples;
    for (std::size_t t = 0; t < samples; ++t) {
      const Element a = pick(), b = pick(), c = pick();
      if (mul(mul(a, b), c) != mul(a, mul(b, c)))
        throw Error(ErrorCode::InvalidTable, "multiplication is not associative");
    }
  }

  inv_.assign(n_, 0);
  for (Element a = 0; a < n_; ++a)
    for (Element b = 0; b < n_; ++b)
      if (mul(a, b) == kIdentity) {
        inv_[a] = b;
        break;
      }

  orders_.assign(n_, 1);
  for (Element a = 1; a < n_; ++a) {
    unsigned k = 1;
    Element x = a;
    while (x != kIdentity) {
      x = mul(x, a);
      ++k;
    }
    orders_[a] = k;
  }

  for (auto g : gens_)
    if (g >= n_) throw Error(ErrorCode::InvalidArgument, "generator index out of range");
  if (gens_.empty() && n_ > 1) gens_ = generating_set(*this, all());
  if (closure(*this, gens_).count() != n_)
    throw Error(ErrorCode::InvalidArgument, "designated generators do not generate the group");
}

Element Group::pow(Element x, long k) const {
  if (k < 0) {
    x = inv_[x];
    k = -k;
  }
  Element r = kIdentity;
  Element base = x;
  while (k > 0) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

SubgroupSet closure(const Group& g, std::span<const Element> gens) {
  SubgroupSet s = Group::trivial();
  std::vector<Element> queue{Group::kIdentity};
  std::vector<Element> useful;
  for (auto x : gens)
    if (x != Group::kIdentity) useful.push_back(x);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Element x = queue[i];
    for (auto y : useful) {
      const Element z = g.mul(x, y);
      if (!s.test(z)) {
        s.set(z);
        queue.push_back(z);
      }
    }
  }
  return s;
}

SubgroupSet closure(const Group& g, const ElementSet& seed) {
  const auto gens = seed.elements();
  return closure(g, gens);
}

SubgroupSet normal_closure(const Group& g, const ElementSet& seed) {
  // Close the conjugacy-invariant hull of the seed under multiplication; the
  // result is conjugation invariant because the seed hull is.
  ElementSet hull = seed;
  std::vector<Element> queue = seed.elements();
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (auto t : g.generators()) {
      const Element y = g.conj(t, queue[i]);
      if (!hull.test(y)) {
        hull.set(y);
        queue.push_back(y);
      }
    }
  }
  return closure(g, hull);
}

SubgroupSet join(const Group& g, const SubgroupSet& a, const SubgroupSet& b) {
  if (a.is_subset_of(b)) return b;
  if (b.is_subset_of(a)) return a;
  auto gens = generating_set(g, a);
  const auto more = generating_set(g, b);
  gens.insert(gens.end(), more.begin(), more.end());
  return closure(g, gens);
}

std::vector<Element> generating_set(const Group& g, const SubgroupSet& h) {
  auto elems = h.elements();
  std::stable_sort(elems.begin(), elems.end(), [&](Element a, Element b) {
    return g.element_order(a) > g.element_order(b);
  });
  std::vector<Element> gens;
  SubgroupSet current = Group::trivial();
  const std::size_t target = h.count();
  for (auto x : elems) {
    if (current.count() == target) break;
    if (current.test(x)) continue;
    gens.push_back(x);
    current = closure(g, gens);
  }
  return gens;
}

bool is_subgroup(const Group& g, const ElementSet& s) {
  if (!s.test(Group::kIdentity)) return false;
  const auto elems = s.elements();
  for (auto a : elems)
    for (auto b : elems)
      if (!s.test(g.mul(a, b))) return false;
  return true;
}

bool normalizes(const Group& g, const SubgroupSet& by, const SubgroupSet& h) {
  const auto gens = generating_set(g, by);
  bool ok = true;
  h.for_each([&](Element x) {
    for (auto t : gens)
      if (ok && !h.test(g.conj(t, x))) ok = false;
  });
  return ok;
}

bool is_normal(const Group& g, const SubgroupSet& h) {
  bool ok = true;
  h.for_each([&](Element x) {
    for (auto t : g.generators())
      if (ok && !h.test(g.conj(t, x))) ok = false;
  });
  return ok;
}

unsigned element_order(const Group& g, Element x) { return g.element_order(x); }

std::vector<unsigned> prime_divisors(std::size_t n) {
  std::vector<unsigned> ps;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(static_cast<unsigned>(p));
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(static_cast<unsigned>(n));
  return ps;
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

std::size_t pi_part(std::size_t n, std::span<const unsigned> primes) {
  std::size_t part = 1;
  for (auto p : primes)
    while (n % p == 0) {
      n /= p;
      part *= p;
    }
  return part;
}

}  // namespace formalab
