#include "group/isomorphism.hpp"

#include <algorithm>

namespace formalab {

std::vector<unsigned> order_profile(const Group& g) {
  std::vector<unsigned> out(g.order());
  for (Element x = 0; x < g.order(); ++x) out[x] = g.element_order(x);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<std::size_t> centralizer_sizes(const Group& g) {
  std::vector<std::size_t> out(g.order(), 0);
  for (Element x = 0; x < g.order(); ++x)
    for (Element y = 0; y < g.order(); ++y)
      if (g.mul(x, y) == g.mul(y, x)) ++out[x];
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const Group& a, const Group& b)
      : a_(a), b_(b), ca_(centralizer_sizes(a)), cb_(centralizer_sizes(b)) {
    gens_ = generating_set(a, a.all());
    images_.assign(gens_.size(), 0);
  }

  std::optional<std::vector<Element>> run() {
    if (a_.order() == 1) return std::vector<Element>{0};
    if (extend(0)) return phi_;
    return std::nullopt;
  }

 private:
  // Extends the map over the subgroup generated by the first `k` generators.
  bool consistent(std::size_t k) {
    constexpr Element kUnset = ~Element{0};
    phi_.assign(a_.order(), kUnset);
    std::vector<bool> used(b_.order(), false);
    phi_[0] = 0;
    used[0] = true;
    std::vector<Element> queue{0};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const Element x = queue[i];
      for (std::size_t j = 0; j < k; ++j) {
        const Element y = a_.mul(x, gens_[j]);
        const Element v = b_.mul(phi_[x], images_[j]);
        if (phi_[y] == kUnset) {
          if (used[v]) return false;
          used[v] = true;
          phi_[y] = v;
          queue.push_back(y);
        } else if (phi_[y] != v) {
          return false;
        }
      }
    }
    return true;
  }

  bool extend(std::size_t k) {
    if (k == gens_.size()) return consistent(k);
    const Element g = gens_[k];
    for (Element cand = 1; cand < b_.order(); ++cand) {
      if (b_.element_order(cand) != a_.element_order(g) || cb_[cand] != ca_[g]) continue;
      images_[k] = cand;
      if (!consistent(k + 1)) continue;
      if (extend(k + 1)) return true;
    }
    return false;
  }

  const Group& a_;
  const Group& b_;
  std::vector<std::size_t> ca_, cb_;
  std::vector<Element> gens_;
  std::vector<Element> images_;
  std::vector<Element> phi_;
};

}  // namespace

std::optional<std::vector<Element>> find_isomorphism(const Group& a, const Group& b,
                                                     const Limits& limits) {
  if (a.order() != b.order()) return std::nullopt;
  if (a.order() > limits.iso_cap)
    throw Error(ErrorCode::IsoCapExceeded,
                "isomorphism test on order " + std::to_string(a.order()) + " exceeds cap");
  if (order_profile(a) != order_profile(b)) return std::nullopt;
  return IsoSearch(a, b).run();
}

bool are_isomorphic(const Group& a, const Group& b, const Limits& limits) {
  return find_isomorphism(a, b, limits).has_value();
}

}  // namespace formalab
