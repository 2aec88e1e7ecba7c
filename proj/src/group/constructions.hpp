#pragma once

#include <string>
#include <vector>

#include "group/group.hpp"

namespace formalab {

/// G -> G/N with coset representatives.
struct QuotientMap {
  Group target;
  std::vector<Element> proj;  // source element -> coset index
  std::vector<Element> reps;  // coset index -> smallest representative
  SubgroupSet kernel;

  [[nodiscard]] ElementSet image(const ElementSet& s) const;
  [[nodiscard]] ElementSet preimage(const ElementSet& s) const;
};

QuotientMap quotient_group(const Group& g, const SubgroupSet& n, std::string name = {});

/// A subgroup re-indexed as a standalone group. Element order follows the
/// parent indices, so the identity stays first.
struct Embedding {
  Group group;
  std::vector<Element> to_parent;
  std::vector<long> from_parent;  // -1 outside the subgroup

  [[nodiscard]] ElementSet to_local(const ElementSet& parent_set) const;
  [[nodiscard]] ElementSet to_parent_set(const ElementSet& local_set) const;
};

Embedding subgroup_as_group(const Group& g, const SubgroupSet& h, std::string name = {});

/// Elements (a, b) are indexed a * |B| + b.
Group direct_product(const Group& a, const Group& b, const Limits& limits = {},
                     std::string name = {});

/// For each element h of H, a permutation of N's elements giving the left
/// action h |> n.
using ActionTable = std::vector<std::vector<Element>>;

/// N x| H with (n1, h1)(n2, h2) = (n1 * (h1 |> n2), h1 h2), indexed
/// n * |H| + h. The action is verified to be a homomorphism H -> Aut(N).
Group semidirect_product(const Group& n, const Group& h, const ActionTable& action,
                         const Limits& limits = {}, std::string name = {});

/// Extends images of N's designated generators to a full automorphism.
std::vector<Element> automorphism_from_images(const Group& n, const std::vector<Element>& images);

/// Extends one automorphism per designated generator of H to a full action
/// table by walking H from the identity.
ActionTable action_from_generators(const Group& n, const Group& h,
                                   const std::vector<std::vector<Element>>& generator_autos);

using Matrix = std::vector<std::vector<long>>;

struct ModuleExtension {
  Group group;
  SubgroupSet module;
};

/// V x| H where V is the row space F_p^dim and the i-th generator of H acts by
/// mats[i] (column-vector convention, v -> M v).
ModuleExtension matrix_module_semidirect(unsigned p, std::size_t dim, const std::vector<Matrix>& mats,
                                         const Group& h, const Limits& limits = {},
                                         std::string name = {});

/// Elementary abelian group of order p^dim; element index = base-p digits of
/// the vector, least significant coordinate first.
Group elementary_abelian(unsigned p, std::size_t dim, std::string name = {});

}  // namespace formalab
