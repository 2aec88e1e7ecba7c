#pragma once

#include <string>
#include <vector>

#include "group/constructions.hpp"
#include "group/permutation.hpp"

namespace fl = formalab;

inline fl::PermutationGroup perm_group(const std::string& name, std::size_t degree,
                                       const std::vector<std::string>& cycles) {
  std::vector<fl::Permutation> gens;
  for (const auto& c : cycles) gens.push_back(fl::parse_cycles(c, degree));
  return fl::permutation_group(name, degree, gens);
}

inline fl::Group perm(const std::string& name, std::size_t degree, const std::vector<std::string>& cycles) {
  return perm_group(name, degree, cycles).group;
}

inline fl::Group cyclic(std::size_t n) {
  std::string c = "(";
  for (std::size_t i = 1; i <= n; ++i) c += std::to_string(i) + (i < n ? " " : ")");
  if (n == 1) c = "()";
  return perm("C" + std::to_string(n), n, {c});
}

inline fl::Group s3() { return perm("S3", 3, {"(1 2 3)", "(1 2)"}); }
inline fl::Group s4() { return perm("S4", 4, {"(1 2 3 4)", "(1 2)"}); }
inline fl::Group a4() { return perm("A4", 4, {"(1 2)(3 4)", "(1 2 3)"}); }
inline fl::Group a5() { return perm("A5", 5, {"(1 2 3 4 5)", "(1 2 3)"}); }
inline fl::Group d8() { return perm("D8", 4, {"(1 2 3 4)", "(1 3)"}); }
inline fl::Group q8() { return perm("Q8", 8, {"(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"}); }
// SL(2,3) acting on the 8 nonzero vectors of F_3^2, generated by
// [[1,1],[0,1]] and [[0,2],[1,0]].
inline fl::Group sl23() {
  std::vector<std::pair<int, int>> vecs;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      if (a || b) vecs.emplace_back(a, b);
  auto as_perm = [&](int m00, int m01, int m10, int m11) {
    fl::Permutation p(8);
    for (std::size_t i = 0; i < 8; ++i) {
      const auto [a, b] = vecs[i];
      const std::pair<int, int> w{(m00 * a + m01 * b) % 3, (m10 * a + m11 * b) % 3};
      for (std::size_t j = 0; j < 8; ++j)
        if (vecs[j] == w) p[i] = static_cast<std::uint16_t>(j);
    }
    return p;
  };
  return fl::group_from_permutations("SL(2,3)", 8, {as_perm(1, 1, 0, 1), as_perm(0, 2, 1, 0)});
}

// Elements of a permutation group whose permutation satisfies `pred`.
template <typename Pred>
fl::ElementSet select(const fl::PermutationGroup& pg, Pred pred) {
  fl::ElementSet s;
  for (std::size_t i = 0; i < pg.elements.size(); ++i)
    if (pred(pg.elements[i])) s.set(static_cast<fl::Element>(i));
  return s;
}

inline unsigned moved_points(const fl::Permutation& p) {
  unsigned m = 0;
  for (std::size_t i = 0; i < p.size(); ++i) m += p[i] != i;
  return m;
}

inline unsigned perm_order(fl::Permutation p) {
  fl::Permutation q = p;
  unsigned k = 1;
  while (moved_points(q)) {
    q = fl::compose(q, p);
    ++k;
  }
  return k;
}
