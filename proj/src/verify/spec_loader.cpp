#include "verify/spec_loader.hpp"

#include "group/constructions.hpp"
#include "group/permutation.hpp"
#include "lattice/structure.hpp"

namespace formalab {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorCode::LoadError, msg); }

const json& field(const json& spec, const char* key) {
  if (!spec.contains(key)) fail("group spec is missing \"" + std::string(key) + "\"");
  return spec.at(key);
}

// Inline specs are built and kept alive in `owned`.
const Group& resolve_ref(const json& ref, const GroupResolver& resolve, const Limits& limits,
                         std::vector<std::unique_ptr<Group>>& owned) {
  if (ref.is_string()) return resolve(ref.get<std::string>());
  if (ref.is_object()) {
    owned.push_back(std::make_unique<Group>(load_group_spec(ref, resolve, limits).group));
    return *owned.back();
  }
  fail("group reference must be a name or a spec object");
}

void check_expectations(const Group& g, const json& expect) {
  if (expect.contains("order") && expect.at("order").get<std::size_t>() != g.order())
    fail(g.name() + ": expected order " + expect.at("order").dump() + ", got " + std::to_string(g.order()));
  if (expect.contains("soluble") && expect.at("soluble").get<bool>() != is_soluble(g))
    fail(g.name() + ": solubility does not match the spec");
  if (expect.contains("nilpotent") &&
      expect.at("nilpotent").get<bool>() != (hypercentre(g).count() == g.order()))
    fail(g.name() + ": nilpotency does not match the spec");
}

LoadedGroup build(const json& spec, const std::string& name, const GroupResolver& resolve, const Limits& limits) {
  const std::string kind = field(spec, "kind").get<std::string>();
  std::vector<std::unique_ptr<Group>> owned;

  if (kind == "permutation") {
    const auto degree = field(spec, "degree").get<std::size_t>();
    std::vector<Permutation> gens;
    for (const auto& c : field(spec, "generators")) gens.push_back(parse_cycles(c.get<std::string>(), degree));
    return {group_from_permutations(name, degree, gens, limits), std::nullopt};
  }
  if (kind == "table") {
    const auto n = field(spec, "order").get<std::size_t>();
    const auto& rows = field(spec, "table");
    if (rows.size() != n) fail(name + ": table must have " + std::to_string(n) + " rows");
    std::vector<std::uint16_t> table;
    table.reserve(n * n);
    for (const auto& row : rows) {
      if (row.size() != n) fail(name + ": table row has wrong length");
      for (const auto& v : row) table.push_back(v.get<std::uint16_t>());
    }
    std::vector<Element> gens;
    if (spec.contains("generators"))
      for (const auto& v : spec.at("generators")) gens.push_back(v.get<Element>());
    return {Group(name, n, std::move(table), std::move(gens), "table"), std::nullopt};
  }
  if (kind == "direct") {
    const auto& factors = field(spec, "factors");
    if (!factors.is_array() || factors.empty()) fail(name + ": direct product needs factors");
    Group acc = resolve_ref(factors[0], resolve, limits, owned);
    for (std::size_t i = 1; i < factors.size(); ++i)
      acc = direct_product(acc, resolve_ref(factors[i], resolve, limits, owned), limits);
    return {acc.renamed(name), std::nullopt};
  }
  if (kind == "semidirect") {
    const Group& n = resolve_ref(field(spec, "normal"), resolve, limits, owned);
    const Group& h = resolve_ref(field(spec, "acting"), resolve, limits, owned);
    std::vector<std::vector<Element>> autos;
    if (spec.contains("action")) {
      const auto& action = spec.at("action");
      if (action.size() != h.generators().size())
        fail(name + ": action needs one entry per generator of " + h.name());
      for (const auto& images : action) {
        if (images.size() != n.generators().size())
          fail(name + ": each action entry needs one word per generator of " + n.name());
        std::vector<Element> im;
        for (const auto& w : images) im.push_back(evaluate_word(n, w));
        autos.push_back(automorphism_from_images(n, im));
      }
    } else {
      std::vector<Element> id(n.generators().begin(), n.generators().end());
      for (std::size_t k = 0; k < h.generators().size(); ++k) autos.push_back(automorphism_from_images(n, id));
    }
    return {semidirect_product(n, h, action_from_generators(n, h, autos), limits, name), std::nullopt};
  }
  if (kind == "matrix_module") {
    const auto p = field(spec, "p").get<unsigned>();
    const auto dim = field(spec, "dim").get<std::size_t>();
    const Group& h = resolve_ref(field(spec, "acting"), resolve, limits, owned);
    const auto mats = field(spec, "matrices").get<std::vector<Matrix>>();
    auto ext = matrix_module_semidirect(p, dim, mats, h, limits, name);
    return {std::move(ext.group), ext.module};
  }
  fail(name + ": unknown kind \"" + kind + "\"");
}

}  // namespace

Element evaluate_word(const Group& g, const json& word) {
  if (!word.is_array()) fail("a word must be an array of generator numbers");
  const auto gens = g.generators();
  Element x = Group::kIdentity;
  for (const auto& letter : word) {
    const long k = letter.get<long>();
    const auto idx = static_cast<std::size_t>(k < 0 ? -k : k);
    if (k == 0 || idx > gens.size()) fail("generator number " + std::to_string(k) + " out of range for " + g.name());
    const Element t = gens[idx - 1];
    x = g.mul(x, k < 0 ? g.inv(t) : t);
  }
  return x;
}

LoadedGroup load_group_spec(const json& spec, const GroupResolver& resolve, const Limits& limits) {
  if (!spec.is_object()) fail("group spec must be a JSON object");
  const std::string name = spec.contains("name") ? spec.at("name").get<std::string>() : std::string("G");
  try {
    LoadedGroup out = build(spec, name, resolve, limits);
    if (spec.contains("expect")) check_expectations(out.group, spec.at("expect"));
    return out;
  } catch (const json::exception& e) {
    fail(name + ": malformed spec: " + e.what());
  }
}

}  // namespace formalab
