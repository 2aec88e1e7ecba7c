#include "verify/analyze.hpp"

#include <sstream>

#include "chief/chief.hpp"
#include "criticality/criticality.hpp"
#include "intersections/intersections.hpp"
#include "lattice/lattice.hpp"
#include "lattice/structure.hpp"
#include "verify/catalog.hpp"
#include "verify/suites.hpp"

namespace formalab {

using nlohmann::json;

json analyze(const Group& g, const FormationSpec& form, const std::vector<unsigned>& pi_in, const Limits& limits) {
  const std::vector<unsigned> pi = pi_in.empty() ? prime_divisors(g.order()) : pi_in;
  const Lattice lat = Lattice::build(g, limits);
  json out = {{"group", g.name()}, {"order", g.order()}, {"formation", form.name()}};
  out["pi"] = pi_in.empty() ? json("all") : json(pi_in);

  json series = json::array();
  for (const auto& f : chief_series(g).factors) {
    json row = {{"upper", describe_subgroup(g, f.upper)},
                {"lower", describe_subgroup(g, f.lower)},
                {"order", f.order},
                {"exempt", is_pi_exempt(f, pi)}};
    try {
      row["central"] = is_f_central(g, f, form, limits);
    } catch (const Error& e) {
      if (!e.is_cap()) throw;
      row["central"] = nullptr;
    }
    series.push_back(std::move(row));
  }
  out["chief_series"] = std::move(series);
  out["z"] = describe_subgroup(g, z_pi_f(g, form, pi, Absorb::All, limits));

  const FMaxReport rep = fmax_report(lat, form);
  out["int"] = describe_subgroup(g, rep.int_f);
  out["int_star"] = describe_subgroup(g, rep.int_star);
  json fmax = json::array();
  for (std::size_t i = 0; i < rep.f_maximal.size(); ++i) {
    json row = describe_subgroup(g, rep.f_maximal[i]);
    row["k_subnormal"] = static_cast<bool>(rep.k_subnormal[i]);
    fmax.push_back(std::move(row));
  }
  out["f_maximal"] = std::move(fmax);
  return out;
}

std::string analyze_text(const json& r) {
  std::ostringstream os;
  auto sub = [](const json& s) { return "order " + std::to_string(s.at("order").get<std::size_t>()) + " [" +
                                        s.at("hex").get<std::string>() + "]"; };
  os << r.at("group").get<std::string>() << " (order " << r.at("order") << "), formation "
     << r.at("formation").get<std::string>() << ", pi " << (r.at("pi").is_string() ? "all" : r.at("pi").dump())
     << "\n";
  os << "chief factors (bottom up):\n";
  for (const auto& f : r.at("chief_series")) {
    os << "  |H/K| = " << f.at("order");
    if (f.at("exempt").get<bool>()) os << "  exempt";
    if (f.at("central").is_null())
      os << "  central: cap exceeded";
    else
      os << "  central: " << (f.at("central").get<bool>() ? "yes" : "no");
    os << "\n";
  }
  os << "Z    " << sub(r.at("z")) << "\n";
  os << "Int  " << sub(r.at("int")) << "\n";
  os << "Int* " << sub(r.at("int_star")) << "\n";
  os << r.at("f_maximal").size() << " F-maximal subgroups:\n";
  for (const auto& m : r.at("f_maximal"))
    os << "  " << sub(m) << (m.at("k_subnormal").get<bool>() ? "  K-F-subnormal" : "") << "\n";
  return os.str();
}

json lattice_dump(const Group& g, const Limits& limits) {
  const Lattice lat = Lattice::build(g, limits);
  json subs = json::array();
  for (std::size_t i = 0; i < lat.size(); ++i)
    subs.push_back({{"index", i}, {"order", lat.at(i).count()}, {"normal", lat.is_normal(i)},
                    {"hex", lat.at(i).to_hex(g.order())}});
  return {{"group", g.name()}, {"order", g.order()}, {"subgroups", std::move(subs)}};
}

json hunt_critical(const FormationSpec& form, unsigned p, bool soluble_only) {
  std::vector<Lattice> lats;
  std::vector<const Lattice*> ptrs;
  const auto& entries = Catalog::shipped().entries();
  lats.reserve(entries.size());
  for (const auto& e : entries) {
    if (soluble_only && !e.soluble) continue;
    lats.push_back(Lattice::build(*e.group));
  }
  for (const auto& l : lats) ptrs.push_back(&l);
  const unsigned pi[] = {p};
  json ws = json::array();
  for (const auto& w : boundary_scan(form, pi, ptrs, soluble_only)) {
    const Group& g = Catalog::shipped().group(w.group);
    json maxs = json::array();
    for (const auto& m : w.maximal_memberships) {
      json row = describe_subgroup(g, m.subgroup);
      row["in_satellite"] = m.in_class;
      maxs.push_back(std::move(row));
    }
    ws.push_back({{"group", w.group}, {"order", g.order()}, {"p", w.p}, {"in_f", w.in_f},
                  {"maximal_subgroups", std::move(maxs)}});
  }
  return {{"formation", form.name()},
          {"p", p},
          {"soluble_only", soluble_only},
          {"groups_scanned", ptrs.size()},
          {"scope", "catalog only; an empty list is not a proof"},
          {"witnesses", std::move(ws)}};
}

json catalog_listing() {
  json out = json::array();
  for (const auto& e : Catalog::shipped().entries())
    out.push_back({{"name", e.name}, {"order", e.order}, {"soluble", e.soluble}, {"nilpotent", e.nilpotent}});
  return out;
}

}  // namespace formalab
