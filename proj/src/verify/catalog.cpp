#include "verify/catalog.hpp"

#include <algorithm>

#include "group/isomorphism.hpp"
#include "group/permutation.hpp"
#include "lattice/structure.hpp"

namespace formalab {

namespace {

using nlohmann::json;

json expect(std::size_t order, bool soluble, bool nilpotent) {
  return {{"order", order}, {"soluble", soluble}, {"nilpotent", nilpotent}};
}

json permutation(const std::string& name, std::size_t degree, std::vector<std::string> gens, json tags) {
  return {{"name", name}, {"kind", "permutation"}, {"degree", degree}, {"generators", gens}, {"expect", tags}};
}

std::string cycle(std::size_t from, std::size_t to) {
  std::string c = "(";
  for (std::size_t i = from; i <= to; ++i) c += std::to_string(i) + (i < to ? " " : ")");
  return c;
}

json cyclic(std::size_t n) {
  return permutation("C" + std::to_string(n), n, {n == 1 ? "()" : cycle(1, n)}, expect(n, true, true));
}

// Symmetries of a regular m-gon, order 2m.
json dihedral(const std::string& name, std::size_t m, bool nilpotent) {
  std::string flip;
  for (std::size_t i = 2, j = m; i < j; ++i, --j) flip += "(" + std::to_string(i) + " " + std::to_string(j) + ")";
  return permutation(name, m, {cycle(1, m), flip}, expect(2 * m, true, nilpotent));
}

// <a, x | a^2m = 1, x^2 = a^m, x a x^-1 = a^-1>, element a^i x^j at i + 2m j.
json dicyclic(const std::string& name, std::size_t m, bool nilpotent) {
  const std::size_t half = 2 * m, n = 2 * half;
  json rows = json::array();
  for (std::size_t u = 0; u < n; ++u) {
    json row = json::array();
    const std::size_t i = u % half, j = u / half;
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t k = v % half, l = v / half;
      std::size_t e, x;
      if (j == 0) {
        e = (i + k) % half;
        x = l;
      } else {
        e = (i + half - k) % half;
        x = 1 + l;
        if (x == 2) {
          e = (e + m) % half;
          x = 0;
        }
      }
      row.push_back(e + half * x);
    }
    rows.push_back(row);
  }
  return {{"name", name}, {"kind", "table"}, {"order", n}, {"table", rows}, {"generators", {1, half}},
          {"expect", expect(n, true, nilpotent)}};
}

// SL(2,3) on the nonzero vectors of F_3^2, numbered (a, b) -> 3a + b.
json sl23() {
  std::vector<std::pair<int, int>> vecs;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a || b) vecs.emplace_back(a, b);
  auto as_cycles = [&](int m00, int m01, int m10, int m11) {
    Permutation p(8);
    for (std::size_t i = 0; i < 8; ++i) {
      const auto [a, b] = vecs[i];
      const std::pair<int, int> w{(m00 * a + m01 * b) % 3, (m10 * a + m11 * b) % 3};
      p[i] = static_cast<std::uint16_t>(std::find(vecs.begin(), vecs.end(), w) - vecs.begin());
    }
    return format_cycles(p);
  };
  return permutation("SL(2,3)", 8, {as_cycles(1, 1, 0, 1), as_cycles(0, 2, 1, 0)}, expect(24, true, false));
}

json direct(const std::string& name, std::vector<std::string> factors, json tags) {
  return {{"name", name}, {"kind", "direct"}, {"factors", factors}, {"expect", tags}};
}

json semidirect(const std::string& name, const std::string& n, const std::string& h, json action, json tags) {
  return {{"name", name}, {"kind", "semidirect"}, {"normal", n}, {"acting", h}, {"action", action}, {"expect", tags}};
}

// Factors multiplied together for the product part of the catalog.
const std::vector<std::string> kProductBase = {"C2",  "C3",       "C4",  "V4",    "C5",   "S3",
                                               "D8",  "Q8",       "Dic12", "A4",  "D10",  "C7:C3",
                                               "C5:C4", "S4",     "SL(2,3)", "A5", "Q16", "C3:C8"};

}  // namespace

std::vector<json> catalog_specs() {
  std::vector<json> specs;
  for (std::size_t n = 1; n <= 24; ++n) specs.push_back(cyclic(n));

  specs.push_back(direct("V4", {"C2", "C2"}, expect(4, true, true)));
  specs.push_back(direct("C2^3", {"C2", "C2", "C2"}, expect(8, true, true)));
  specs.push_back(direct("C2^4", {"C2", "C2", "C2", "C2"}, expect(16, true, true)));
  specs.push_back(direct("C3^2", {"C3", "C3"}, expect(9, true, true)));
  specs.push_back(direct("C3^3", {"C3", "C3", "C3"}, expect(27, true, true)));
  specs.push_back(direct("C5^2", {"C5", "C5"}, expect(25, true, true)));

  specs.push_back(permutation("S3", 3, {"(1 2 3)", "(1 2)"}, expect(6, true, false)));
  specs.push_back(dihedral("D8", 4, true));
  specs.push_back(dihedral("D10", 5, false));
  specs.push_back(dihedral("D12", 6, false));
  specs.push_back(dicyclic("Q8", 2, true));
  specs.push_back(dicyclic("Q16", 4, true));
  specs.push_back(dicyclic("Dic12", 3, false));
  specs.push_back(sl23());
  specs.push_back(permutation("A4", 4, {"(1 2)(3 4)", "(1 2 3)"}, expect(12, true, false)));
  specs.push_back(permutation("S4", 4, {"(1 2 3 4)", "(1 2)"}, expect(24, true, false)));
  specs.push_back(permutation("A5", 5, {"(1 2 3 4 5)", "(1 2 3)"}, expect(60, false, false)));
  specs.push_back(permutation("S5", 5, {"(1 2 3 4 5)", "(1 2)"}, expect(120, false, false)));

  specs.push_back(semidirect("C7:C3", "C7", "C3", {{{1, 1}}}, expect(21, true, false)));
  specs.push_back(semidirect("C5:C4", "C5", "C4", {{{1, 1}}}, expect(20, true, false)));
  specs.push_back(semidirect("C3:C8", "C3", "C8", {{{-1}}}, expect(24, true, false)));
  specs.push_back(semidirect("V4:C3", "V4", "C3", {{{2}, {1, 2}}}, expect(12, true, false)));

  specs.push_back(direct("D8xC3", {"D8", "C3"}, expect(24, true, true)));
  specs.push_back(direct("Q8xC3", {"Q8", "C3"}, expect(24, true, true)));
  specs.push_back(direct("S3xS3", {"S3", "S3"}, expect(36, true, false)));
  specs.push_back(direct("S3xC4", {"S3", "C4"}, expect(24, true, false)));

  // Sum-zero submodule of the permutation module F_3^4 of A4, basis
  // e1-e4, e2-e4, e3-e4; one matrix per generator (1 2)(3 4), (1 2 3).
  specs.push_back({{"name", "C3^3:A4"},
                   {"kind", "matrix_module"},
                   {"p", 3},
                   {"dim", 3},
                   {"acting", "A4"},
                   {"matrices", {{{0, 1, 0}, {1, 0, 0}, {2, 2, 2}}, {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}}},
                   {"expect", expect(324, true, false)}});

  // Direct products of two base factors below order 128.
  std::vector<json> base;
  for (const auto& name : kProductBase)
    for (const auto& s : specs)
      if (s.at("name") == name) base.push_back(s);
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i; j < base.size(); ++j) {
      const auto& a = base[i].at("expect");
      const auto& b = base[j].at("expect");
      const std::size_t order = a.at("order").get<std::size_t>() * b.at("order").get<std::size_t>();
      if (order >= 128) continue;
      const std::string an = base[i].at("name"), bn = base[j].at("name");
      json s = direct(an + "x" + bn, {an, bn},
                      expect(order, a.at("soluble").get<bool>() && b.at("soluble").get<bool>(),
                             a.at("nilpotent").get<bool>() && b.at("nilpotent").get<bool>()));
      s["product"] = true;
      specs.push_back(std::move(s));
    }
  return specs;
}

const Catalog& Catalog::shipped() {
  static const Catalog* instance = [] {
    auto* c = new Catalog();
    for (auto& spec : catalog_specs()) {
      const bool dedupe = spec.value("product", false);
      c->add(std::move(spec), dedupe);
    }
    return c;
  }();
  return *instance;
}

void Catalog::add(json spec, bool dedupe) {
  const std::string name = spec.at("name");
  if (index_.count(name)) return;
  const GroupResolver resolve = [this](const std::string& ref) -> const Group& { return group(ref); };
  LoadedGroup loaded = load_group_spec(spec, resolve);
  if (dedupe) {
    const auto profile = order_profile(loaded.group);
    for (const auto& e : entries_)
      if (e.order == loaded.group.order() && order_profile(*e.group) == profile &&
          are_isomorphic(*e.group, loaded.group))
        return;
  }
  groups_.push_back(std::make_unique<Group>(std::move(loaded.group)));
  const Group& g = *groups_.back();
  CatalogEntry e{name, std::move(spec), g.order(), is_soluble(g), hypercentre(g).count() == g.order(), &g,
                 loaded.module};
  index_.emplace(name, entries_.size());
  entries_.push_back(std::move(e));
}

const CatalogEntry* Catalog::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &entries_[it->second];
}

const CatalogEntry& Catalog::at(const std::string& name) const {
  if (const auto* e = find(name)) return *e;
  throw Error(ErrorCode::LoadError, "no catalog group named \"" + name + "\"");
}

std::vector<unsigned> Catalog::primes() const {
  std::vector<unsigned> out;
  for (const auto& e : entries_)
    for (auto p : prime_divisors(e.order))
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  std::sort(out.begin(), out.end());
  return out;
}

const Group& catalog_group(const std::string& name) { return Catalog::shipped().group(name); }

}  // namespace formalab
