#include "intersections/intersections.hpp"

#include <algorithm>

#include "group/constructions.hpp"

namespace formalab {

namespace {

// Largest subgroup of `h` normalized by the elements `by`.
SubgroupSet core_by(const Group& g, std::span<const Element> by, const SubgroupSet& h) {
  SubgroupSet c = h;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto t : by) {
      SubgroupSet conj;
      c.for_each([&](Element x) { conj.set(g.conj(t, x)); });
      const SubgroupSet next = c & conj;
      if (!(next == c)) {
        c = next;
        changed = true;
      }
    }
  }
  return c;
}

bool member_of_subgroup(const Group& g, const SubgroupSet& h, const FormationSpec& form) {
  if (h.count() == g.order()) return is_member(form, g);
  return is_member(form, subgroup_as_group(g, h).group);
}

}  // namespace

FormationView::FormationView(const Lattice& lat, FormationSpec form)
    : lat_(&lat), form_(std::move(form)), member_(lat.size(), -1) {}

bool FormationView::member(std::size_t i) {
  if (member_[i] < 0) member_[i] = member_of_subgroup(lat_->group(), lat_->at(i), form_) ? 1 : 0;
  return member_[i] == 1;
}

std::vector<std::size_t> FormationView::f_maximal(std::size_t within) {
  if (auto it = fmax_.find(within); it != fmax_.end()) return it->second;
  const Lattice& lat = *lat_;
  // Walk down from `within`. For hereditary F, anything below a member is a
  // member and cannot be F-maximal, so it needs no membership test.
  std::vector<std::int8_t> covered(lat.size(), 0);
  std::vector<std::size_t> out;
  for (std::size_t k = within + 1; k-- > 0;) {
    if (!lat.is_sub(k, within)) continue;
    if (covered[k]) {
      if (form_.hereditary()) member_[k] = 1;
      continue;
    }
    if (!member(k)) continue;
    out.push_back(k);
    for (std::size_t j = 0; j < k; ++j)
      if (lat.is_sub(j, k)) covered[j] = 1;
  }
  std::reverse(out.begin(), out.end());
  fmax_.emplace(within, out);
  return out;
}

SubgroupSet FormationView::int_f(std::size_t within) {
  SubgroupSet r = lat_->at(within);
  for (auto i : f_maximal(within)) r &= lat_->at(i);
  return r;
}

bool FormationView::normal_in(std::size_t a, std::size_t b) const {
  const Group& g = lat_->group();
  const SubgroupSet& sa = lat_->at(a);
  for (auto t : lat_->generators(b))
    for (auto x : lat_->generators(a))
      if (!sa.test(g.conj(t, x))) return false;
  return true;
}

bool FormationView::admissible(std::size_t a, std::size_t b) {
  if (normal_in(a, b)) return true;
  if (member_[b] == 1) return true;
  const Group& g = lat_->group();
  const SubgroupSet c = core_by(g, lat_->generators(b), lat_->at(a));
  const std::size_t ci = lat_->require(c);
  const auto key = std::make_pair(b, ci);
  if (auto it = quotient_member_.find(key); it != quotient_member_.end()) return it->second;
  bool verdict;
  if (ci == lat_->bottom()) {
    verdict = member(b);
  } else {
    const Embedding e = subgroup_as_group(g, lat_->at(b));
    verdict = is_member(form_, quotient_group(e.group, e.to_local(c)).target);
  }
  quotient_member_.emplace(key, verdict);
  return verdict;
}

bool FormationView::k_subnormal(std::size_t i, std::size_t within) {
  const Lattice& lat = *lat_;
  if (!lat.is_sub(i, within)) throw Error(ErrorCode::InvalidArgument, "subgroup is not inside the ambient subgroup");
  auto& reach = reach_[within];
  if (reach.empty()) reach.assign(lat.size(), -1);
  if (reach[i] >= 0) return reach[i] == 1;
  bool ok = i == within;
  // Chains have length at most log2 |G|, so recursion depth stays small.
  // Larger supersets first: the top is reached in one step whenever it works.
  if (!ok) {
    const auto sup = lat.strict_supersets(i);
    for (auto it = sup.rbegin(); it != sup.rend() && !ok; ++it)
      if (lat.is_sub(*it, within) && admissible(i, *it) && k_subnormal(*it, within)) ok = true;
  }
  reach[i] = ok ? 1 : 0;
  return ok;
}

SubgroupSet FormationView::int_star(std::size_t within) {
  SubgroupSet r = lat_->at(within);
  for (auto i : f_maximal(within))
    if (!k_subnormal(i, within)) r &= lat_->at(i);
  return r;
}

FMaxReport FormationView::report(std::size_t within) {
  FMaxReport rep;
  rep.formation = form_;
  rep.int_f = lat_->at(within);
  rep.int_star = lat_->at(within);
  for (auto i : f_maximal(within)) {
    rep.f_maximal.push_back(lat_->at(i));
    rep.int_f &= lat_->at(i);
    const bool ks = k_subnormal(i, within);
    rep.k_subnormal.push_back(ks);
    if (!ks) rep.int_star &= lat_->at(i);
  }
  return rep;
}

std::vector<SubgroupSet> f_maximal_subgroups(const Lattice& lat, const FormationSpec& form) {
  FormationView v(lat, form);
  std::vector<SubgroupSet> out;
  for (auto i : v.f_maximal(lat.top())) out.push_back(lat.at(i));
  return out;
}

SubgroupSet int_f(const Lattice& lat, const FormationSpec& form) {
  return FormationView(lat, form).int_f(lat.top());
}

bool is_k_f_subnormal(const Lattice& lat, const SubgroupSet& h, const FormationSpec& form) {
  return FormationView(lat, form).k_subnormal(lat.require(h), lat.top());
}

SubgroupSet int_star_f(const Lattice& lat, const FormationSpec& form) {
  return FormationView(lat, form).int_star(lat.top());
}

FMaxReport fmax_report(const Lattice& lat, const FormationSpec& form) {
  return FormationView(lat, form).report(lat.top());
}

}  // namespace formalab
