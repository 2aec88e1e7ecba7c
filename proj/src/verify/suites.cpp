#include "verify/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "chief/chief.hpp"
#include "criticality/criticality.hpp"
#include "group/constructions.hpp"
#include "intersections/intersections.hpp"
#include "lattice/lattice.hpp"
#include "lattice/structure.hpp"

namespace formalab {

using nlohmann::json;

namespace {

using GroupCheck = std::function<Verdict(const CatalogEntry&, const Lattice&)>;

std::vector<FormationSpec> parse_all(std::initializer_list<const char*> names) {
  std::vector<FormationSpec> out;
  for (auto n : names) out.push_back(FormationSpec::parse(n));
  return out;
}

// Hereditary saturated formations containing the nilpotent groups, each with a
// satellite.
const std::vector<FormationSpec>& satellite_menu() {
  static const auto m = parse_all({"nil", "sup", "na", "pnilp:2", "pnilp:3", "pdec:2", "pdec:3"});
  return m;
}

const std::vector<FormationSpec>& full_menu() {
  static const auto m =
      parse_all({"triv", "all", "sol", "nil", "sup", "psup:2", "psup:3", "pnilp:2", "pnilp:3", "pdec:2", "pdec:3",
                 "piclosed:2", "piclosed:2,3", "gpi:2,3", "spi:2,3", "aexp:6", "na", "nilpow:1", "nilpow:2",
                 "syltower"});
  return m;
}

json pi_json(const std::vector<unsigned>& pi) {
  if (pi.empty()) return "all";
  return pi;
}

std::vector<unsigned> resolve_pi(const Group& g, const std::vector<unsigned>& pi) {
  return pi.empty() ? prime_divisors(g.order()) : pi;
}

std::vector<Verdict> fan_out(const std::vector<const CatalogEntry*>& entries, const GroupCheck& check,
                             unsigned threads) {
  std::vector<Verdict> out(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < entries.size();) {
      const CatalogEntry& e = *entries[i];
      try {
        const Lattice lat = Lattice::build(*e.group);
        out[i] = check(e, lat);
      } catch (const Error& err) {
        out[i] = {e.name, false, {{"error", err.what()}}};
      }
      out[i].group = e.name;
    }
  };
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, entries.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

Verdict baer(const CatalogEntry&, const Lattice& lat) {
  const Group& g = lat.group();
  const SubgroupSet in = int_f(lat, FormationSpec::nil());
  const SubgroupSet z = z_f(g, FormationSpec::nil());
  const SubgroupSet h = hypercentre(g);
  return {{}, in == z && z == h,
          {{"int_nil", describe_subgroup(g, in)}, {"z_nil", describe_subgroup(g, z)},
           {"hypercentre", describe_subgroup(g, h)}}};
}

struct ZIntConfig {
  FormationSpec form;
  std::vector<unsigned> pi;  // empty: all
};

std::vector<ZIntConfig> certified_z_int() {
  return {{FormationSpec::nil(), {}},      {FormationSpec::p_dec(2), {}},    {FormationSpec::p_dec(3), {}},
          {FormationSpec::p_nilp(2), {2}}, {FormationSpec::p_nilp(3), {3}}, {FormationSpec::na(), {}}};
}

GroupCheck z_equals_int(std::vector<ZIntConfig> configs) {
  return [configs](const CatalogEntry&, const Lattice& lat) {
    const Group& g = lat.group();
    Verdict v{{}, true, json::array()};
    for (const auto& c : configs) {
      const SubgroupSet z = z_pi_f(g, c.form, resolve_pi(g, c.pi));
      const SubgroupSet in = int_f(lat, c.form);
      const bool ok = z == in;
      v.pass = v.pass && ok;
      v.data.push_back({{"formation", c.form.name()},
                        {"pi", pi_json(c.pi)},
                        {"pass", ok},
                        {"z", describe_subgroup(g, z)},
                        {"int", describe_subgroup(g, in)}});
    }
    return v;
  };
}

Verdict pnilp_structure(const CatalogEntry&, const Lattice& lat) {
  const Group& g = lat.group();
  Verdict v{{}, true, json::array()};
  for (unsigned p : {2U, 3U}) {
    const unsigned only[] = {p};
    const SubgroupSet d = int_f(lat, FormationSpec::p_nilp(p));
    const SubgroupSet o = o_pi_prime(g, only);
    const Embedding de = subgroup_as_group(g, d);
    const SubgroupSet od = de.to_parent_set(o_pi_prime(de.group, only));
    const QuotientMap q = quotient_group(g, o);
    const bool same_core = od == o;
    const bool hypercentral = q.image(d).is_subset_of(hypercentre(q.target));
    const bool z_eq = z_pi_f(g, FormationSpec::p_nilp(p), only) == d;
    const bool ok = same_core && hypercentral && z_eq;
    v.pass = v.pass && ok;
    v.data.push_back({{"p", p},
                      {"pass", ok},
                      {"int", describe_subgroup(g, d)},
                      {"o_pprime_g", describe_subgroup(g, o)},
                      {"o_pprime_int", describe_subgroup(g, od)},
                      {"image_hypercentral", hypercentral},
                      {"z_equals_int", z_eq}});
  }
  return v;
}

Verdict nilpotent_length(const CatalogEntry&, const Lattice& lat) {
  const Group& g = lat.group();
  Verdict v{{}, true, json::array()};
  for (unsigned r : {1U, 2U, 3U}) {
    const auto f = FormationSpec::nil_pow(r);
    const SubgroupSet z = z_f(g, f);
    const SubgroupSet in = int_f(lat, f);
    const bool ok = z == in;
    v.pass = v.pass && ok;
    v.data.push_back({{"r", r}, {"pass", ok}, {"z", describe_subgroup(g, z)}, {"int", describe_subgroup(g, in)}});
  }
  return v;
}

Verdict sup_in_syltower(const CatalogEntry&, const Lattice& lat) {
  const Group& g = lat.group();
  const SubgroupSet sup = int_f(lat, FormationSpec::sup());
  const SubgroupSet tower = int_f(lat, FormationSpec::syl_tower());
  const SubgroupSet nil = int_f(lat, FormationSpec::nil());
  const SubgroupSet zna = z_f(g, FormationSpec::na());
  const bool a = sup.is_subset_of(tower), b = nil.is_subset_of(zna);
  return {{}, a && b,
          {{"int_sup", describe_subgroup(g, sup)},
           {"int_syltower", describe_subgroup(g, tower)},
           {"sup_in_syltower", a},
           {"int_nil", describe_subgroup(g, nil)},
           {"z_na", describe_subgroup(g, zna)},
           {"nil_in_z_na", b}}};
}

Verdict int_star(const CatalogEntry&, const Lattice& lat) {
  const Group& g = lat.group();
  Verdict v{{}, true, json::array()};
  for (const auto& f : parse_all({"nil", "sup", "pnilp:2", "pnilp:3", "pdec:2", "na"})) {
    const FMaxReport rep = fmax_report(lat, f);
    const bool ok = rep.int_star == rep.int_f;
    const bool all_k = std::all_of(rep.k_subnormal.begin(), rep.k_subnormal.end(), [](bool b) { return b; });
    v.pass = v.pass && ok;
    json row = {{"formation", f.name()},
                {"pass", ok},
                {"f_maximal", rep.f_maximal.size()},
                {"int", describe_subgroup(g, rep.int_f)},
                {"int_star", describe_subgroup(g, rep.int_star)}};
    // Every F-maximal subgroup K-F-subnormal while G is outside F: logged
    // for inspection, covered by the empty-intersection convention.
    if (all_k && rep.int_f.count() != g.order()) row["all_k_subnormal"] = true;
    v.data.push_back(std::move(row));
  }
  return v;
}

Verdict order_324(const CatalogEntry& e, const Lattice& lat) {
  const Group& g = lat.group();
  if (!e.module) throw Error(ErrorCode::ConstructionFailed, e.name + " has no module");
  const SubgroupSet& p = *e.module;
  const auto mins = minimal_normal_subgroups(lat);
  const bool minimal = std::find(mins.begin(), mins.end(), p) != mins.end();
  // Faithful: the acting group meets the centralizer of the module trivially.
  const bool faithful = section_centralizer(g, p, Group::trivial()) == p;
  const SubgroupSet sup = int_f(lat, FormationSpec::sup());
  const SubgroupSet psup = int_f(lat, FormationSpec::p_sup(3));
  const bool ok = minimal && faithful && sup == p && psup == Group::trivial();
  return {{}, ok,
          {{"module", describe_subgroup(g, p)},
           {"module_minimal_normal", minimal},
           {"module_faithful", faithful},
           {"int_sup", describe_subgroup(g, sup)},
           {"int_psup3", describe_subgroup(g, psup)}}};
}

std::vector<ChiefFactor> all_chief_factors(const Group& g) {
  std::vector<ChiefFactor> out;
  for (const auto& n : normal_subgroups_by_closure(g))
    for (auto& f : chief_series_through(g, n).factors) {
      const bool seen = std::any_of(out.begin(), out.end(),
                                    [&](const ChiefFactor& h) { return h.upper == f.upper && h.lower == f.lower; });
      if (!seen) out.push_back(std::move(f));
    }
  return out;
}

Verdict dual_centrality(const CatalogEntry&, const Lattice& lat) {
  const Group& g = lat.group();
  std::size_t compared = 0, skipped = 0;
  json mismatches = json::array();
  const auto factors = all_chief_factors(g);
  for (const auto& f : factors)
    for (const auto& form : satellite_menu()) {
      bool semi;
      try {
        semi = is_f_central_semidirect(g, f, form);
      } catch (const Error& e) {
        if (!e.is_cap()) throw;
        ++skipped;
        continue;
      }
      ++compared;
      const bool sat = is_f_central_satellite(g, f, form);
      if (sat != semi)
        mismatches.push_back({{"formation", form.name()},
                              {"upper", describe_subgroup(g, f.upper)},
                              {"lower", describe_subgroup(g, f.lower)},
                              {"satellite", sat},
                              {"semidirect", semi}});
    }
  return {{}, mismatches.empty(),
          {{"chief_factors", factors.size()},
           {"compared", compared},
           {"skipped_cap", skipped},
           {"mismatches", mismatches}}};
}

Verdict z_oracle(const CatalogEntry&, const Lattice& lat) {
  const Group& g = lat.group();
  const auto primes = prime_divisors(g.order());
  std::size_t compared = 0, skipped = 0;
  json mismatches = json::array();
  for (const auto& f : full_menu()) {
    std::vector<std::vector<unsigned>> pis{primes};
    if (primes.size() > 1) pis.push_back({primes.front()}), pis.push_back({primes.back()});
    for (const auto& pi : pis) {
      SubgroupSet a, b;
      try {
        a = z_pi_f(g, f, pi);
        b = z_pi_f_oracle(g, f, pi);
      } catch (const Error& e) {
        if (!e.is_cap()) throw;
        ++skipped;
        continue;
      }
      ++compared;
      if (!(a == b))
        mismatches.push_back({{"formation", f.name()},
                              {"pi", pi},
                              {"z", describe_subgroup(g, a)},
                              {"oracle", describe_subgroup(g, b)}});
    }
  }
  return {{}, mismatches.empty(), {{"compared", compared}, {"skipped_cap", skipped}, {"mismatches", mismatches}}};
}

// Hypercentre and intersection identities under quotients,
// subgroups and joins, for every hereditary saturated satellite formation.
Verdict lemma_pack(const CatalogEntry&, const Lattice& lat) {
  const Group& g = lat.group();
  const auto& forms = satellite_menu();
  const auto primes = prime_divisors(g.order());

  struct Quot {
    SubgroupSet n;
    QuotientMap q;
    std::unique_ptr<Lattice> lat;
  };
  std::vector<Quot> quots;
  for (auto i : lat.normal_indices()) {
    if (i == lat.bottom()) continue;
    Quot qq{lat.at(i), quotient_group(g, lat.at(i)), nullptr};
    quots.push_back(std::move(qq));
  }
  // Lattices point at the stored groups, so build them once `quots` is stable.
  for (auto& qq : quots) qq.lat = std::make_unique<Lattice>(Lattice::build(qq.q.target));

  json failed = json::array();
  auto fail = [&](const FormationSpec& f, const std::string& what, json detail = {}) {
    failed.push_back({{"formation", f.name()}, {"property", what}, {"detail", std::move(detail)}});
  };
  std::size_t checks = 0;
  for (const auto& f : forms) {
    FormationView view(lat, f);
    const SubgroupSet in = view.int_f(lat.top());
    const SubgroupSet z = z_f(g, f);
    const std::size_t zi = lat.require(z), ii = lat.require(in);

    ++checks;
    if (!is_normal(g, in)) fail(f, "int normal");
    ++checks;
    if (!is_normal(g, view.int_star(lat.top()))) fail(f, "int_star normal");
    ++checks;
    if (!z.is_subset_of(in)) fail(f, "z inside int");
    ++checks;
    if (is_member(f, quotient_group(g, z).target) && !is_member(f, g)) fail(f, "G/Z in F forces G in F");
    for (auto p : primes) {
      const unsigned one[] = {p};
      ++checks;
      if (!z.is_subset_of(z_pi_f(g, f, one))) fail(f, "monotone in pi", {{"p", p}});
    }

    for (const auto& qq : quots) {
      const SubgroupSet zq = z_f(qq.q.target, f);
      const SubgroupSet iq = int_f(*qq.lat, f);
      ++checks;
      if (!qq.q.image(z).is_subset_of(zq)) fail(f, "image of Z in Z of quotient", describe_subgroup(g, qq.n));
      ++checks;
      if (!qq.q.image(in).is_subset_of(iq)) fail(f, "image of Int in Int of quotient", describe_subgroup(g, qq.n));
      if (qq.n.is_subset_of(in)) {
        ++checks;
        if (!(qq.q.image(in) == iq)) fail(f, "Int of quotient by N inside Int", describe_subgroup(g, qq.n));
      }
      if (qq.n == in) {
        ++checks;
        if (!(iq == Group::trivial())) fail(f, "Int of G/Int trivial");
      }
    }
    if (in == Group::trivial()) {
      ++checks;
      if (!(int_f(lat, f) == Group::trivial())) fail(f, "Int of G/Int trivial");
    }

    const bool join_z = f.tag == FormationTag::Nil || f.tag == FormationTag::NA;
    for (std::size_t i = 0; i < lat.size(); ++i) {
      const SubgroupSet& h = lat.at(i);
      if (view.member(i)) {
        ++checks;
        if (!view.member(lat.join(i, ii))) fail(f, "H in F gives Int H in F", describe_subgroup(g, h));
        if (join_z) {
          ++checks;
          if (!view.member(lat.join(i, zi))) fail(f, "H in F gives Z H in F", describe_subgroup(g, h));
        }
      } else {
        const Embedding e = subgroup_as_group(g, h);
        ++checks;
        if (is_member(f, quotient_group(e.group, e.to_local(h & in)).target))
          fail(f, "H/(H meet Int) in F forces H in F", describe_subgroup(g, h));
      }
    }
  }
  return {{}, failed.empty(), {{"checks", checks}, {"quotients", quots.size()}, {"failed", failed}}};
}

Verdict boundary(const CatalogEntry&, const Lattice& lat) {
  const auto all = Catalog::shipped().primes();
  json witnesses = json::array();
  auto scan = [&](const FormationSpec& f, const std::vector<unsigned>& pi) {
    const Lattice* one[] = {&lat};
    for (const auto& w : boundary_scan(f, pi, one)) witnesses.push_back({{"formation", f.name()}, {"p", w.p}});
  };
  for (const char* f : {"nil", "pdec:2", "pdec:3", "na"}) scan(FormationSpec::parse(f), all);
  scan(FormationSpec::p_nilp(2), {2});
  scan(FormationSpec::p_nilp(3), {3});
  return {{}, witnesses.empty(), {{"witnesses", witnesses}}};
}

struct SuiteDef {
  std::string name;
  bool soluble_only;  // regardless of the option
  std::function<bool(const CatalogEntry&)> applies;
  GroupCheck check;
};

const std::vector<SuiteDef>& suites() {
  auto any = [](const CatalogEntry&) { return true; };
  static const std::vector<SuiteDef> s = {
      {"baer", false, any, baer},
      {"z-equals-int", false, any, z_equals_int(certified_z_int())},
      {"pnilp-structure", false, any, pnilp_structure},
      {"nilpotent-length", true, any, nilpotent_length},
      {"sup-in-syltower", false, any, sup_in_syltower},
      {"int-star", false, any, int_star},
      {"order-324", false, [](const CatalogEntry& e) { return e.order == 324 && e.module.has_value(); }, order_324},
      {"dual-centrality", false, any, dual_centrality},
      {"z-oracle", false, any, z_oracle},
      {"lemma-pack", false, any, lemma_pack},
      {"boundary", false, any, boundary},
  };
  return s;
}

}  // namespace

json describe_subgroup(const Group& g, const SubgroupSet& s) {
  return {{"order", s.count()}, {"hex", s.to_hex(g.order())}};
}

bool SuiteReport::pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

json SuiteReport::to_json(bool with_timing) const {
  json out = {{"suite", suite}, {"label", label}, {"pass", pass()}, {"groups", verdicts.size()}};
  json vs = json::array();
  for (const auto& v : verdicts) vs.push_back({{"group", v.group}, {"pass", v.pass}, {"data", v.data}});
  out["verdicts"] = std::move(vs);
  out["failures"] = failures;
  if (with_timing) out["seconds"] = seconds;
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& s : suites()) n.push_back(s.name);
    return n;
  }();
  return names;
}

bool is_certified_z_int(const FormationSpec& form, const std::vector<unsigned>& pi) {
  for (const auto& c : certified_z_int())
    if (c.form == form && c.pi == pi) return true;
  return false;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const auto& defs = suites();
  const auto it = std::find_if(defs.begin(), defs.end(), [&](const SuiteDef& d) { return d.name == name; });
  if (it == defs.end()) throw Error(ErrorCode::InvalidArgument, "unknown suite \"" + name + "\"");

  SuiteReport rep;
  rep.suite = name;
  rep.label = "certified";
  GroupCheck check = it->check;
  if (opts.formation || opts.pi) {
    if (name != "z-equals-int")
      throw Error(ErrorCode::InvalidArgument, "--formation and --pi apply to z-equals-int only");
    const FormationSpec f = opts.formation.value_or(FormationSpec::nil());
    std::vector<unsigned> pi = opts.pi.value_or(std::vector<unsigned>{});
    std::sort(pi.begin(), pi.end());
    pi.erase(std::unique(pi.begin(), pi.end()), pi.end());
    if (!is_certified_z_int(f, pi)) rep.label = "exploratory";
    check = z_equals_int({{f, pi}});
  }

  std::vector<const CatalogEntry*> entries;
  for (const auto& e : Catalog::shipped().entries()) {
    if (e.order > opts.max_order) continue;
    if ((opts.soluble_only || it->soluble_only) && !e.soluble) continue;
    if (!it->applies(e)) continue;
    entries.push_back(&e);
  }
  rep.verdicts = fan_out(entries, check, opts.threads);
  for (const auto& v : rep.verdicts)
    if (!v.pass) rep.failures.push_back({{"group", v.group}, {"data", v.data}});
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace formalab
