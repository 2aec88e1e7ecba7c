#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "catalog_fixture.hpp"
#include "group/constructions.hpp"
#include "lattice/lattice.hpp"
#include "lattice/structure.hpp"

using namespace formalab;

namespace {

bool normal_in_lattice(const Lattice& lat, const std::optional<SubgroupSet>& s) {
  return s && lat.is_normal(lat.require(*s));
}

std::vector<unsigned> complement_primes(std::size_t n, const std::vector<unsigned>& pi) {
  std::vector<unsigned> out;
  for (auto q : prime_divisors(n))
    if (std::find(pi.begin(), pi.end(), q) == pi.end()) out.push_back(q);
  return out;
}

// Membership decided from the subgroup lattice alone.
bool lattice_member(const FormationSpec& f, const Lattice& lat) {
  const Group& g = lat.group();
  const std::size_t n = g.order();
  auto normal_hall = [&](const std::vector<unsigned>& pi) {
    if (pi.empty()) return true;
    return normal_in_lattice(lat, hall(lat, pi));
  };
  switch (f.tag) {
    case FormationTag::PNilp: return normal_hall(complement_primes(n, {f.p}));
    case FormationTag::PDec: return normal_hall({f.p}) && normal_hall(complement_primes(n, {f.p}));
    case FormationTag::PiClosed: return normal_hall(f.pi);
    case FormationTag::SylTower: {
      auto primes = prime_divisors(n);
      std::reverse(primes.begin(), primes.end());
      for (std::size_t k = 1; k <= primes.size(); ++k)
        if (!normal_hall(std::vector<unsigned>(primes.begin(), primes.begin() + static_cast<long>(k)))) return false;
      return true;
    }
    case FormationTag::Sup: {
      // Walk a chief series through the lattice's normal subgroups.
      std::size_t cur = lat.bottom();
      while (cur != lat.top()) {
        std::size_t next = lat.top();
        for (auto j : lat.normal_indices())
          if (j != cur && lat.is_sub(cur, j) && lat.is_sub(j, next)) next = j;
        if (!is_prime(lat.at(next).count() / lat.at(cur).count())) return false;
        cur = next;
      }
      return true;
    }
    default: return is_member(f, g);
  }
}

}  // namespace

TEST_CASE("parse and name") {
  for (const auto& f : formation_menu()) CHECK(FormationSpec::parse(f.name()) == f);
  CHECK(FormationSpec::parse("piclosed:3,2").name() == "piclosed:2,3");
  CHECK_THROWS_AS(FormationSpec::parse("pnilp:4"), Error);
  CHECK_THROWS_AS(FormationSpec::parse("nil:2"), Error);
  CHECK_THROWS_AS(FormationSpec::parse("pnilp"), Error);
  CHECK_THROWS_AS(FormationSpec::parse("bogus"), Error);
  CHECK(!FormationSpec::a_exp(4).saturated());
  CHECK(!FormationSpec::syl_tower().has_satellite());
  CHECK(FormationSpec::s_pi({2}).has_satellite());
}

TEST_CASE("membership examples") {
  CHECK(!is_member(FormationSpec::sup(), cat("S4")));
  CHECK(is_member(FormationSpec::sup(), cat("S3")));
  CHECK(!is_member(FormationSpec::na(), cat("S4")));
  CHECK(is_member(FormationSpec::na(), cat("S3")));
  CHECK(!is_member(FormationSpec::syl_tower(), cat("A4")));
  CHECK(is_member(FormationSpec::syl_tower(), cat("S3")));
  CHECK(!is_member(FormationSpec::sup(), cat("SL(2,3)")));
  CHECK(is_member(FormationSpec::nil_pow(0), cat("C1")));
  CHECK(!is_member(FormationSpec::nil_pow(0), cat("C2")));
  CHECK(!is_member(FormationSpec::nil_pow(3), cat("A5")));
  CHECK(is_member(FormationSpec::a_exp(6), cat("C6")));
  CHECK(!is_member(FormationSpec::a_exp(6), cat("C4")));
}

TEST_CASE("residuals") {
  const Group& s4 = cat("S4");
  CHECK(residual(s4, FormationSpec::nil()).count() == 12);
  CHECK(residual(s4, FormationSpec::all()) == Group::trivial());
  CHECK(residual(s4, FormationSpec::sol()) == Group::trivial());
  CHECK(residual(cat("A5"), FormationSpec::sol()).count() == 60);
}

TEST_CASE("satellite examples") {
  CHECK(satellite_member(FormationSpec::nil(), 2, cat("C2")));
  CHECK(!satellite_member(FormationSpec::nil(), 2, cat("S3")));
  CHECK(satellite_member(FormationSpec::sup(), 3, cat("V4")));
  CHECK(!satellite_member(FormationSpec::sup(), 3, cat("A4")));
  CHECK(satellite_member(FormationSpec::p_dec(2), 3, cat("C3")));
  CHECK(!satellite_member(FormationSpec::p_dec(2), 2, cat("C3")));
  CHECK_THROWS_AS(satellite_member(FormationSpec::syl_tower(), 2, cat("C2")), Error);
  CHECK_THROWS_AS(satellite_member(FormationSpec::a_exp(2), 2, cat("C2")), Error);
}

TEST_CASE("element criteria agree with lattice criteria") {
  const std::vector<FormationSpec> forms = {FormationSpec::sup(),          FormationSpec::p_nilp(2),
                                            FormationSpec::p_nilp(3),      FormationSpec::p_dec(2),
                                            FormationSpec::p_dec(3),       FormationSpec::pi_closed({2}),
                                            FormationSpec::pi_closed({3, 5}), FormationSpec::syl_tower()};
  for (const Group* g : catalog_groups()) {
    const Lattice lat = Lattice::build(*g);
    for (const auto& f : forms) {
      INFO(g->name(), " ", f.name());
      CHECK(is_member(f, *g) == lattice_member(f, lat));
    }
  }
}

TEST_CASE("formation axioms on the catalog") {
  const auto menu = formation_menu();
  for (const Group* g : catalog_groups(128)) {
    const Lattice lat = Lattice::build(*g);
    std::vector<Group> quotients;
    for (auto i : lat.normal_indices()) quotients.push_back(quotient_group(*g, lat.at(i)).target);
    std::vector<Group> subs;
    for (std::size_t i = 0; i < lat.size(); ++i) subs.push_back(subgroup_as_group(*g, lat.at(i)).group);
    const Group frattini_quotient = quotient_group(*g, frattini(lat)).target;
    for (const auto& f : menu) {
      INFO(g->name(), " ", f.name());
      const bool in = is_member(f, *g);
      if (in) {
        for (const auto& q : quotients) REQUIRE(is_member(f, q));
        for (const auto& s : subs) REQUIRE(is_member(f, s));
      }
      if (f.saturated() && is_member(f, frattini_quotient)) CHECK(in);
    }
  }
}

TEST_CASE("satellites lie in the formation and see only G/O_p") {
  std::vector<FormationSpec> menu;
  for (const auto& f : formation_menu())
    if (f.has_satellite()) menu.push_back(f);
  for (const Group* g : catalog_groups()) {
    for (auto p : {2U, 3U, 5U, 7U}) {
      const Group q = quotient_group(*g, o_p(*g, p)).target;
      for (const auto& f : menu) {
        INFO(g->name(), " ", f.name(), " p=", p);
        const bool s = satellite_member(f, p, *g);
        if (s) CHECK(is_member(f, *g));
        CHECK(s == satellite_member(f, p, q));
      }
    }
  }
}

TEST_CASE("residual respects quotients") {
  const auto menu = formation_menu();
  for (const Group* g : catalog_groups(96)) {
    const auto normals = normal_subgroups_by_closure(*g);
    for (const auto& f : menu) {
      const SubgroupSet r = residual(*g, f);
      CHECK(is_normal(*g, r));
      for (const auto& n : normals) {
        if (!n.is_subset_of(r)) continue;
        const QuotientMap q = quotient_group(*g, n);
        INFO(g->name(), " ", f.name());
        CHECK(residual(q.target, f) == q.image(r));
      }
    }
  }
}

TEST_CASE("normal Hall detection") {
  const unsigned two[] = {2}, three[] = {3};
  CHECK(has_normal_hall(cat("A4"), two));
  CHECK(!has_normal_hall(cat("A4"), three));
  CHECK(has_normal_hall(cat("S3"), three));
}
