#include "group/permutation.hpp"

#include <cctype>
#include <map>

namespace formalab {

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  if (degree == 0 || degree > 65535)
    throw Error(ErrorCode::InvalidPermutation, "degree out of range");
  Permutation perm(degree);
  for (std::size_t i = 0; i < degree; ++i) perm[i] = static_cast<std::uint16_t>(i);

  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw Error(ErrorCode::InvalidPermutation, "expected '(' in \"" + std::string(text) + "\"");
    ++pos;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip_space();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos >= text.size())
        throw Error(ErrorCode::InvalidPermutation, "unterminated cycle in \"" + std::string(text) + "\"");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw Error(ErrorCode::InvalidPermutation, "unexpected character in \"" + std::string(text) + "\"");
      std::size_t v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (v > degree) throw Error(ErrorCode::InvalidPermutation, "point exceeds degree");
        ++pos;
      }
      if (v == 0) throw Error(ErrorCode::InvalidPermutation, "points are numbered from 1");
      if (used[v - 1]) throw Error(ErrorCode::InvalidPermutation, "point repeated across cycles");
      used[v - 1] = true;
      cycle.push_back(v - 1);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      perm[cycle[k]] = static_cast<std::uint16_t>(cycle[(k + 1) % cycle.size()]);
    skip_space();
  }
  return perm;
}

std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> done(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == i) continue;
    out += '(';
    std::size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j + 1);
      first = false;
      j = p[j];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

PermutationGroup permutation_group(std::string name, std::size_t degree,
                                   const std::vector<Permutation>& generators, const Limits& limits) {
  for (const auto& g : generators) {
    if (g.size() != degree) throw Error(ErrorCode::InvalidPermutation, "generator has wrong degree");
    std::vector<bool> hit(degree, false);
    for (auto v : g) {
      if (v >= degree || hit[v]) throw Error(ErrorCode::InvalidPermutation, "not a bijection");
      hit[v] = true;
    }
  }

  Permutation id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint16_t>(i);

  std::vector<Permutation> elems{id};
  std::map<Permutation, Element> index{{id, 0}};
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& g : generators) {
      auto y = compose(elems[i], g);
      if (index.find(y) == index.end()) {
        if (elems.size() + 1 > limits.closure_cap)
          throw Error(ErrorCode::ClosureCapExceeded,
                      "permutation group exceeds cap " + std::to_string(limits.closure_cap));
        index.emplace(y, static_cast<Element>(elems.size()));
        elems.push_back(std::move(y));
      }
    }
  }

  const std::size_t n = elems.size();
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = static_cast<std::uint16_t>(index.at(compose(elems[a], elems[b])));

  std::vector<Element> gens;
  std::string prov = "generators:";
  for (const auto& g : generators) {
    gens.push_back(index.at(g));
    prov += ' ' + format_cycles(g);
  }
  Group grp(std::move(name), n, std::move(table), std::move(gens), std::move(prov));
  return {std::move(grp), std::move(elems)};
}

Group group_from_permutations(std::string name, std::size_t degree,
                              const std::vector<Permutation>& generators, const Limits& limits) {
  return permutation_group(std::move(name), degree, generators, limits).group;
}

}  // namespace formalab
