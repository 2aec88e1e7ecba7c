#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "group/group.hpp"

namespace formalab {

/// Permutation of {0..degree-1}; entry i is the image of i.
using Permutation = std::vector<std::uint16_t>;

/// Parses cycle notation over {1..degree}, e.g. "(1 2 3)(4 5)" or "()".
/// Commas between points are accepted.
Permutation parse_cycles(std::string_view text, std::size_t degree);
std::string format_cycles(const Permutation& p);

/// Product in functional order: (a * b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);

struct PermutationGroup {
  Group group;
  std::vector<Permutation> elements;  // element index -> permutation
};

/// Group generated by the permutations. Elements are indexed in BFS order
/// from the identity, multiplying by generators on the right.
Group group_from_permutations(std::string name, std::size_t degree,
                              const std::vector<Permutation>& generators,
                              const Limits& limits = {});
/// group_from_permutations, keeping the permutation of every element.
PermutationGroup permutation_group(std::string name, std::size_t degree,
                                   const std::vector<Permutation>& generators,
                                   const Limits& limits = {});

}  // namespace formalab
