#include "formations/formation.hpp"

#include <algorithm>
#include <charconv>

#include "group/constructions.hpp"
#include "lattice/structure.hpp"

namespace formalab {

namespace {

unsigned require_prime(unsigned p) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidArgument, std::to_string(p) + " is not a prime");
  return p;
}

std::vector<unsigned> normalize_pi(std::vector<unsigned> pi) {
  if (pi.empty()) throw Error(ErrorCode::InvalidArgument, "prime set must be nonempty");
  for (auto p : pi) require_prime(p);
  std::sort(pi.begin(), pi.end());
  pi.erase(std::unique(pi.begin(), pi.end()), pi.end());
  return pi;
}

unsigned parse_uint(std::string_view s) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw Error(ErrorCode::InvalidArgument, "expected a number, got \"" + std::string(s) + "\"");
  return v;
}

std::vector<unsigned> parse_list(std::string_view s) {
  std::vector<unsigned> out;
  while (!s.empty()) {
    const auto comma = s.find(',');
    out.push_back(parse_uint(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

std::string join_list(const std::vector<unsigned>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

bool contains(const std::vector<unsigned>& v, unsigned p) { return std::find(v.begin(), v.end(), p) != v.end(); }

bool is_p_group_order(std::size_t n, unsigned p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

std::vector<std::size_t> chief_factor_orders(const Group& g) {
  const auto terms = chief_series_terms(g);
  std::vector<std::size_t> orders;
  for (std::size_t i = 1; i < terms.size(); ++i) orders.push_back(terms[i].count() / terms[i - 1].count());
  return orders;
}

bool is_abelian(const Group& g) {
  const auto gens = g.generators();
  for (auto a : gens)
    for (auto b : gens)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

// G/O_p(G) abelian with exponent dividing e (e = 0: no exponent bound).
bool mod_op_abelian(const Group& g, unsigned p, unsigned e) {
  const SubgroupSet op = o_p(g, p);
  if (!derived_subgroup(g).is_subset_of(op)) return false;
  if (e == 0) return true;
  for (Element x = 0; x < g.order(); ++x)
    if (!op.test(g.pow(x, e))) return false;
  return true;
}

bool sup_satellite(const Group& g, unsigned p) { return mod_op_abelian(g, p, p - 1); }

}  // namespace

FormationSpec FormationSpec::p_sup(unsigned p) { return {FormationTag::PSup, require_prime(p)}; }
FormationSpec FormationSpec::p_nilp(unsigned p) { return {FormationTag::PNilp, require_prime(p)}; }
FormationSpec FormationSpec::p_dec(unsigned p) { return {FormationTag::PDec, require_prime(p)}; }
FormationSpec FormationSpec::pi_closed(std::vector<unsigned> pi) {
  return {FormationTag::PiClosed, 0, normalize_pi(std::move(pi))};
}
FormationSpec FormationSpec::g_pi(std::vector<unsigned> pi) { return {FormationTag::GPi, 0, normalize_pi(std::move(pi))}; }
FormationSpec FormationSpec::s_pi(std::vector<unsigned> pi) { return {FormationTag::SPi, 0, normalize_pi(std::move(pi))}; }
FormationSpec FormationSpec::a_exp(unsigned n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "exponent must be positive");
  return {FormationTag::AExp, 0, {}, n};
}
FormationSpec FormationSpec::nil_pow(unsigned r) { return {FormationTag::NilPow, 0, {}, r}; }

FormationSpec FormationSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  auto no_arg = [&](FormationSpec f) {
    if (colon != std::string_view::npos)
      throw Error(ErrorCode::InvalidArgument, "formation \"" + std::string(head) + "\" takes no parameter");
    return f;
  };
  auto need_arg = [&] {
    if (arg.empty())
      throw Error(ErrorCode::InvalidArgument, "formation \"" + std::string(head) + "\" needs a parameter");
  };
  if (head == "triv") return no_arg(triv());
  if (head == "all") return no_arg(all());
  if (head == "sol") return no_arg(sol());
  if (head == "nil") return no_arg(nil());
  if (head == "sup") return no_arg(sup());
  if (head == "na") return no_arg(na());
  if (head == "syltower") return no_arg(syl_tower());
  need_arg();
  if (head == "psup") return p_sup(parse_uint(arg));
  if (head == "pnilp") return p_nilp(parse_uint(arg));
  if (head == "pdec") return p_dec(parse_uint(arg));
  if (head == "piclosed") return pi_closed(parse_list(arg));
  if (head == "gpi") return g_pi(parse_list(arg));
  if (head == "spi") return s_pi(parse_list(arg));
  if (head == "aexp") return a_exp(parse_uint(arg));
  if (head == "nilpow") return nil_pow(parse_uint(arg));
  throw Error(ErrorCode::InvalidArgument, "unknown formation \"" + std::string(text) + "\"");
}

std::string FormationSpec::name() const {
  switch (tag) {
    case FormationTag::Triv: return "triv";
    case FormationTag::All: return "all";
    case FormationTag::Sol: return "sol";
    case FormationTag::Nil: return "nil";
    case FormationTag::Sup: return "sup";
    case FormationTag::PSup: return "psup:" + std::to_string(p);
    case FormationTag::PNilp: return "pnilp:" + std::to_string(p);
    case FormationTag::PDec: return "pdec:" + std::to_string(p);
    case FormationTag::PiClosed: return "piclosed:" + join_list(pi);
    case FormationTag::GPi: return "gpi:" + join_list(pi);
    case FormationTag::SPi: return "spi:" + join_list(pi);
    case FormationTag::AExp: return "aexp:" + std::to_string(n);
    case FormationTag::NA: return "na";
    case FormationTag::NilPow: return "nilpow:" + std::to_string(n);
    case FormationTag::SylTower: return "syltower";
  }
  return "?";
}

bool has_normal_hall(const Group& g, std::span<const unsigned> primes) {
  const std::size_t target = pi_part(g.order(), primes);
  ElementSet pi_elems;
  for (Element x = 0; x < g.order(); ++x) {
    const std::size_t o = g.element_order(x);
    if (pi_part(o, primes) == o) pi_elems.set(x);
  }
  if (pi_elems.count() != target) return false;
  return closure(g, pi_elems).count() == target;
}

bool is_member(const FormationSpec& f, const Group& g) {
  const std::size_t n = g.order();
  switch (f.tag) {
    case FormationTag::Triv: return n == 1;
    case FormationTag::All: return true;
    case FormationTag::Sol: return is_soluble(g);
    case FormationTag::Nil: return hypercentre(g).count() == n;
    case FormationTag::Sup:
      for (auto o : chief_factor_orders(g))
        if (!is_prime(o)) return false;
      return true;
    case FormationTag::PSup:
      for (auto o : chief_factor_orders(g))
        if (o % f.p == 0 && o != f.p) return false;
      return true;
    case FormationTag::PNilp: {
      std::vector<unsigned> others;
      for (auto q : prime_divisors(n))
        if (q != f.p) others.push_back(q);
      return has_normal_hall(g, others);
    }
    case FormationTag::PDec: {
      std::vector<unsigned> others;
      for (auto q : prime_divisors(n))
        if (q != f.p) others.push_back(q);
      const unsigned p = f.p;
      return has_normal_hall(g, std::span<const unsigned>(&p, 1)) && has_normal_hall(g, others);
    }
    case FormationTag::PiClosed: return has_normal_hall(g, f.pi);
    case FormationTag::GPi: return pi_part(n, f.pi) == n;
    case FormationTag::SPi: return pi_part(n, f.pi) == n && is_soluble(g);
    case FormationTag::AExp:
      if (!is_abelian(g)) return false;
      for (Element x = 0; x < n; ++x)
        if (f.n % g.element_order(x) != 0) return false;
      return true;
    case FormationTag::NA: return derived_subgroup(g).is_subset_of(fitting(g));
    case FormationTag::NilPow:
      if (f.n == 0) return n == 1;
      return is_soluble(g) && nilpotent_length(g) <= f.n;
    case FormationTag::SylTower: {
      auto primes = prime_divisors(n);
      std::reverse(primes.begin(), primes.end());
      for (std::size_t k = 1; k < primes.size(); ++k)
        if (!has_normal_hall(g, std::span<const unsigned>(primes.data(), k))) return false;
      return true;
    }
  }
  return false;
}

bool satellite_member(const FormationSpec& f, unsigned p, const Group& g) {
  if (!f.has_satellite())
    throw Error(ErrorCode::NoSatellite, "formation " + f.name() + " has no satellite");
  require_prime(p);
  const std::size_t n = g.order();
  switch (f.tag) {
    case FormationTag::Triv: return false;
    case FormationTag::All: return true;
    case FormationTag::Sol: return is_soluble(g);
    case FormationTag::Nil: return is_p_group_order(n, p);
    case FormationTag::Sup: return sup_satellite(g, p);
    case FormationTag::PSup: return p == f.p ? sup_satellite(g, p) : is_member(f, g);
    case FormationTag::PNilp: return p == f.p ? is_p_group_order(n, p) : is_member(f, g);
    case FormationTag::PDec: return p == f.p ? is_p_group_order(n, p) : n % f.p != 0;
    case FormationTag::PiClosed: {
      if (contains(f.pi, p)) return is_member(f, g);
      return pi_part(n, f.pi) == 1;
    }
    case FormationTag::GPi: return contains(f.pi, p) && pi_part(n, f.pi) == n;
    case FormationTag::SPi: return contains(f.pi, p) && pi_part(n, f.pi) == n && is_soluble(g);
    case FormationTag::NA: return mod_op_abelian(g, p, 0);
    case FormationTag::NilPow: {
      if (f.n == 0) return false;
      const QuotientMap q = quotient_group(g, o_p(g, p));
      return is_member(FormationSpec::nil_pow(f.n - 1), q.target);
    }
    case FormationTag::AExp:
    case FormationTag::SylTower: break;
  }
  throw Error(ErrorCode::NoSatellite, "formation " + f.name() + " has no satellite");
}

SubgroupSet residual(const Group& g, const FormationSpec& f) {
  // {N normal : G/N in F} is closed under intersection and upward, so the
  // least member is reached by stepping to any maximal normal subgroup of the
  // current one whose quotient is still in F.
  const auto normals = normal_subgroups_by_closure(g);
  SubgroupSet r = g.all();
  if (!is_member(f, quotient_group(g, r).target))
    throw Error(ErrorCode::Internal, "trivial quotient is not in " + f.name());
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t i = normals.size(); i-- > 0;) {
      const SubgroupSet& n = normals[i];
      if (n == r || !n.is_subset_of(r)) continue;
      bool maximal = true;
      for (std::size_t j = i + 1; j < normals.size() && maximal; ++j)
        if (!(normals[j] == r) && normals[j].is_subset_of(r) && n.is_subset_of(normals[j])) maximal = false;
      if (!maximal) continue;
      if (is_member(f, quotient_group(g, n).target)) {
        r = n;
        moved = true;
        break;
      }
    }
  }
  return r;
}

}  // namespace formalab
