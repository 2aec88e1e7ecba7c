#pragma once

#include <optional>
#include <vector>

#include "group/group.hpp"

namespace formalab {

/// An isomorphism A -> B as an element map, if one exists. Generator images
/// are found by backtracking, pruned by element order and centralizer size.
std::optional<std::vector<Element>> find_isomorphism(const Group& a, const Group& b,
                                                     const Limits& limits = {});

bool are_isomorphic(const Group& a, const Group& b, const Limits& limits = {});

/// Sorted multiset of element orders.
std::vector<unsigned> order_profile(const Group& g);

}  // namespace formalab
