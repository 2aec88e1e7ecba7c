#include "group/constructions.hpp"

#include <algorithm>

namespace formalab {

ElementSet QuotientMap::image(const ElementSet& s) const {
  ElementSet out;
  s.for_each([&](Element x) { out.set(proj[x]); });
  return out;
}

ElementSet QuotientMap::preimage(const ElementSet& s) const {
  ElementSet out;
  for (Element x = 0; x < proj.size(); ++x)
    if (s.test(proj[x])) out.set(x);
  return out;
}

QuotientMap quotient_group(const Group& g, const SubgroupSet& n, std::string name) {
  if (!n.test(Group::kIdentity) || !is_subgroup(g, n))
    throw Error(ErrorCode::InvalidArgument, "kernel is not a subgroup");
  if (!is_normal(g, n)) throw Error(ErrorCode::NotNormal, "subgroup is not normal in " + g.name());

  const std::size_t order = g.order();
  constexpr Element kUnset = ~Element{0};
  std::vector<Element> proj(order, kUnset);
  std::vector<Element> reps;
  const auto kernel_elems = n.elements();
  for (Element x = 0; x < order; ++x) {
    if (proj[x] != kUnset) continue;
    const auto c = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (auto k : kernel_elems) proj[g.mul(x, k)] = c;
  }

  const std::size_t m = reps.size();
  std::vector<std::uint16_t> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      table[a * m + b] = static_cast<std::uint16_t>(proj[g.mul(reps[a], reps[b])]);

  std::vector<Element> gens;
  for (auto t : g.generators()) {
    const Element c = proj[t];
    if (c != Group::kIdentity && std::find(gens.begin(), gens.end(), c) == gens.end())
      gens.push_back(c);
  }
  if (name.empty()) name = g.name() + "/N" + std::to_string(n.count());
  Group target(std::move(name), m, std::move(table), std::move(gens),
               "quotient of " + g.name() + " by a normal subgroup of order " + std::to_string(n.count()),
               Group::Check::Derived);
  return QuotientMap{std::move(target), std::move(proj), std::move(reps), n};
}

ElementSet Embedding::to_local(const ElementSet& parent_set) const {
  ElementSet out;
  parent_set.for_each([&](Element x) {
    if (from_parent[x] >= 0) out.set(static_cast<Element>(from_parent[x]));
  });
  return out;
}

ElementSet Embedding::to_parent_set(const ElementSet& local_set) const {
  ElementSet out;
  local_set.for_each([&](Element x) { out.set(to_parent[x]); });
  return out;
}

Embedding subgroup_as_group(const Group& g, const SubgroupSet& h, std::string name) {
  std::vector<Element> to_parent = h.elements();
  std::vector<long> from_parent(g.order(), -1);
  for (std::size_t i = 0; i < to_parent.size(); ++i) from_parent[to_parent[i]] = static_cast<long>(i);
  const std::size_t m = to_parent.size();
  std::vector<std::uint16_t> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const long v = from_parent[g.mul(to_parent[a], to_parent[b])];
      if (v < 0) throw Error(ErrorCode::InvalidArgument, "set is not closed under multiplication");
      table[a * m + b] = static_cast<std::uint16_t>(v);
    }
  std::vector<Element> gens;
  for (auto x : generating_set(g, h)) gens.push_back(static_cast<Element>(from_parent[x]));
  if (name.empty()) name = g.name() + "<" + std::to_string(m) + ">";
  Group sub(std::move(name), m, std::move(table), std::move(gens),
            "subgroup of " + g.name(), Group::Check::Derived);
  return Embedding{std::move(sub), std::move(to_parent), std::move(from_parent)};
}

Group direct_product(const Group& a, const Group& b, const Limits& limits, std::string name) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  if (n > limits.closure_cap)
    throw Error(ErrorCode::ClosureCapExceeded,
                "direct product of order " + std::to_string(n) + " exceeds cap");
  std::vector<std::uint16_t> table(n * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Element p = a.mul(x / nb, y / nb);
      const Element q = b.mul(x % nb, y % nb);
      table[x * n + y] = static_cast<std::uint16_t>(p * nb + q);
    }
  std::vector<Element> gens;
  for (auto t : a.generators()) gens.push_back(static_cast<Element>(t * nb));
  for (auto t : b.generators()) gens.push_back(t);
  if (name.empty()) name = a.name() + "x" + b.name();
  return Group(std::move(name), n, std::move(table), std::move(gens),
               "direct product of " + a.name() + " and " + b.name(), Group::Check::Derived);
}

Group semidirect_product(const Group& n, const Group& h, const ActionTable& action,
                         const Limits& limits, std::string name) {
  const std::size_t nn = n.order(), nh = h.order(), total = nn * nh;
  if (total > limits.closure_cap)
    throw Error(ErrorCode::ClosureCapExceeded,
                "semidirect product of order " + std::to_string(total) + " exceeds cap");
  if (action.size() != nh) throw Error(ErrorCode::NotActionHomomorphism, "action table has wrong size");

  for (Element t = 0; t < nh; ++t) {
    const auto& phi = action[t];
    if (phi.size() != nn) throw Error(ErrorCode::NotAutomorphism, "action image has wrong size");
    std::vector<bool> hit(nn, false);
    for (auto v : phi) {
      if (v >= nn || hit[v]) throw Error(ErrorCode::NotAutomorphism, "action image is not a bijection");
      hit[v] = true;
    }
    for (Element x = 0; x < nn; ++x)
      for (Element y = 0; y < nn; ++y)
        if (phi[n.mul(x, y)] != n.mul(phi[x], phi[y]))
          throw Error(ErrorCode::NotAutomorphism, "action image is not a homomorphism of N");
  }
  for (Element s = 0; s < nh; ++s)
    for (Element t = 0; t < nh; ++t) {
      const auto& st = action[h.mul(s, t)];
      for (Element x = 0; x < nn; ++x)
        if (st[x] != action[s][action[t][x]])
          throw Error(ErrorCode::NotActionHomomorphism, "action does not respect H's multiplication");
    }

  std::vector<std::uint16_t> table(total * total);
  for (Element a = 0; a < total; ++a) {
    const Element n1 = a / nh, h1 = a % nh;
    for (Element b = 0; b < total; ++b) {
      const Element n2 = b / nh, h2 = b % nh;
      table[a * total + b] = static_cast<std::uint16_t>(n.mul(n1, action[h1][n2]) * nh + h.mul(h1, h2));
    }
  }
  std::vector<Element> gens;
  for (auto t : n.generators()) gens.push_back(static_cast<Element>(t * nh));
  for (auto t : h.generators()) gens.push_back(t);
  if (name.empty()) name = n.name() + ":" + h.name();
  return Group(std::move(name), total, std::move(table), std::move(gens),
               "semidirect product of " + n.name() + " by " + h.name(), Group::Check::Derived);
}

std::vector<Element> automorphism_from_images(const Group& n, const std::vector<Element>& images) {
  const auto gens = n.generators();
  if (images.size() != gens.size())
    throw Error(ErrorCode::NotAutomorphism, "need one image per generator");
  constexpr Element kUnset = ~Element{0};
  std::vector<Element> phi(n.order(), kUnset);
  phi[Group::kIdentity] = Group::kIdentity;
  std::vector<Element> queue{Group::kIdentity};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Element x = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (images[k] >= n.order()) throw Error(ErrorCode::NotAutomorphism, "image out of range");
      const Element y = n.mul(x, gens[k]);
      const Element v = n.mul(phi[x], images[k]);
      if (phi[y] == kUnset) {
        phi[y] = v;
        queue.push_back(y);
      } else if (phi[y] != v) {
        throw Error(ErrorCode::NotAutomorphism, "generator images violate a relation of N");
      }
    }
  }
  std::vector<bool> hit(n.order(), false);
  for (auto v : phi) {
    if (hit[v]) throw Error(ErrorCode::NotAutomorphism, "generator images do not give a bijection");
    hit[v] = true;
  }
  return phi;
}

ActionTable action_from_generators(const Group& n, const Group& h,
                                   const std::vector<std::vector<Element>>& generator_autos) {
  const auto gens = h.generators();
  if (generator_autos.size() != gens.size())
    throw Error(ErrorCode::NotActionHomomorphism, "need one automorphism per generator of H");
  ActionTable act(h.order());
  std::vector<Element> id(n.order());
  for (Element x = 0; x < n.order(); ++x) id[x] = x;
  act[Group::kIdentity] = id;
  std::vector<Element> queue{Group::kIdentity};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Element s = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Element t = h.mul(s, gens[k]);
      std::vector<Element> composed(n.order());
      for (Element x = 0; x < n.order(); ++x) composed[x] = act[s][generator_autos[k][x]];
      if (act[t].empty()) {
        act[t] = std::move(composed);
        queue.push_back(t);
      } else if (act[t] != composed) {
        throw Error(ErrorCode::NotActionHomomorphism, "generator automorphisms violate a relation of H");
      }
    }
  }
  return act;
}

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

std::vector<long> decode(std::size_t idx, unsigned p, std::size_t dim) {
  std::vector<long> v(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    v[i] = static_cast<long>(idx % p);
    idx /= p;
  }
  return v;
}

std::size_t encode(const std::vector<long>& v, unsigned p) {
  std::size_t idx = 0;
  for (std::size_t i = v.size(); i-- > 0;) idx = idx * p + static_cast<std::size_t>(v[i]);
  return idx;
}

long mod(long a, unsigned p) {
  const long r = a % static_cast<long>(p);
  return r < 0 ? r + static_cast<long>(p) : r;
}

Matrix mat_mul(const Matrix& a, const Matrix& b, unsigned p) {
  const std::size_t d = a.size();
  Matrix c(d, std::vector<long>(d, 0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j) c[i][j] = mod(c[i][j] + a[i][k] * b[k][j], p);
  return c;
}

}  // namespace

Group elementary_abelian(unsigned p, std::size_t dim, std::string name) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, "field order must be prime");
  const std::size_t n = ipow(p, dim);
  if (n > ElementSet::kCapacity) throw Error(ErrorCode::ClosureCapExceeded, "vector space too large");
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto va = decode(a, p, dim);
    for (std::size_t b = 0; b < n; ++b) {
      auto vb = decode(b, p, dim);
      for (std::size_t i = 0; i < dim; ++i) vb[i] = mod(va[i] + vb[i], p);
      table[a * n + b] = static_cast<std::uint16_t>(encode(vb, p));
    }
  }
  std::vector<Element> gens;
  for (std::size_t i = 0; i < dim; ++i) gens.push_back(static_cast<Element>(ipow(p, i)));
  if (name.empty()) name = "C" + std::to_string(p) + "^" + std::to_string(dim);
  return Group(std::move(name), n, std::move(table), std::move(gens),
               "elementary abelian " + std::to_string(p) + "^" + std::to_string(dim));
}

ModuleExtension matrix_module_semidirect(unsigned p, std::size_t dim, const std::vector<Matrix>& mats,
                                         const Group& h, const Limits& limits, std::string name) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, "field order must be prime");
  if (dim == 0) throw Error(ErrorCode::InvalidArgument, "module dimension must be positive");
  const std::size_t nv = ipow(p, dim);
  if (nv * h.order() > limits.closure_cap)
    throw Error(ErrorCode::ClosureCapExceeded,
                "module extension of order " + std::to_string(nv * h.order()) + " exceeds cap");
  const auto gens = h.generators();
  if (mats.size() != gens.size())
    throw Error(ErrorCode::RelationMismatch, "need one matrix per generator of H");

  std::vector<Matrix> reduced;
  for (const auto& m : mats) {
    if (m.size() != dim) throw Error(ErrorCode::InvalidArgument, "matrix has wrong dimension");
    Matrix r = m;
    for (auto& row : r) {
      if (row.size() != dim) throw Error(ErrorCode::InvalidArgument, "matrix has wrong dimension");
      for (auto& x : row) x = mod(x, p);
    }
    reduced.push_back(std::move(r));
  }

  // Walk H from the identity; every edge s -> s*g_k must agree with M(s) M_k.
  Matrix identity(dim, std::vector<long>(dim, 0));
  for (std::size_t i = 0; i < dim; ++i) identity[i][i] = 1;
  std::vector<Matrix> rep(h.order());
  std::vector<bool> seen(h.order(), false);
  rep[Group::kIdentity] = identity;
  seen[Group::kIdentity] = true;
  std::vector<Element> queue{Group::kIdentity};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Element s = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Element t = h.mul(s, gens[k]);
      Matrix m = mat_mul(rep[s], reduced[k], p);
      if (!seen[t]) {
        seen[t] = true;
        rep[t] = std::move(m);
        queue.push_back(t);
      } else if (rep[t] != m) {
        throw Error(ErrorCode::RelationMismatch, "matrices do not satisfy the relations of " + h.name());
      }
    }
  }

  Group v = elementary_abelian(p, dim);
  ActionTable act(h.order(), std::vector<Element>(nv));
  for (Element t = 0; t < h.order(); ++t)
    for (std::size_t x = 0; x < nv; ++x) {
      const auto vec = decode(x, p, dim);
      std::vector<long> out(dim, 0);
      for (std::size_t i = 0; i < dim; ++i) {
        long acc = 0;
        for (std::size_t j = 0; j < dim; ++j) acc += rep[t][i][j] * vec[j];
        out[i] = mod(acc, p);
      }
      act[t][x] = static_cast<Element>(encode(out, p));
    }

  if (name.empty()) name = v.name() + ":" + h.name();
  Group g = semidirect_product(v, h, act, limits, std::move(name));
  SubgroupSet module;
  for (std::size_t x = 0; x < nv; ++x) module.set(static_cast<Element>(x * h.order()));
  return ModuleExtension{std::move(g), module};
}

}  // namespace formalab
