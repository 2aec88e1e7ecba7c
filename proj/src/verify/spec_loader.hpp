#pragma once

#include <functional>
#include <optional>
#include <string>

#include "group/group.hpp"
#include "json.hpp"

namespace formalab {

/// A group built from a spec, with the module subgroup for matrix_module
/// specs.
struct LoadedGroup {
  Group group;
  std::optional<SubgroupSet> module;
};

/// Looks up a named group for product specs.
using GroupResolver = std::function<const Group&(const std::string&)>;

/// Builds a group from a spec object:
///   {"name", "kind": "permutation", "degree", "generators": ["(1 2 3)", ...]}
///   {"name", "kind": "table", "order", "table": [[...], ...]}         0-based
///   {"name", "kind": "direct", "factors": [ref, ...]}
///   {"name", "kind": "semidirect", "normal": ref, "acting": ref,
///    "action": [[word, ...], ...]}
///   {"name", "kind": "matrix_module", "p", "dim", "acting": ref,
///    "matrices": [[[...]]]}
/// A ref is a catalog name or an inline spec. In "action", entry k lists the
/// images of N's generators under the k-th generator of the acting group,
/// each a word in N's generators (1-based, negative for inverses). Optional
/// "expect": {"order", "soluble", "nilpotent"} is checked. Errors are thrown
/// as LoadError unless a more specific code applies.
LoadedGroup load_group_spec(const nlohmann::json& spec, const GroupResolver& resolve, const Limits& limits = {});

/// Evaluates a generator word in g.
Element evaluate_word(const Group& g, const nlohmann::json& word);

}  // namespace formalab
