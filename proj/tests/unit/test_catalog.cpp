#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <set>

#include "catalog_fixture.hpp"
#include "group/isomorphism.hpp"
#include "lattice/lattice.hpp"
#include "lattice/structure.hpp"
#include "verify/spec_loader.hpp"

using namespace formalab;
using nlohmann::json;

namespace {

using Vec = std::array<int, 3>;
using Mat = std::array<std::array<int, 3>, 3>;

Vec apply(const Mat& m, const Vec& v) {
  Vec r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i] = (r[i] + m[i][j] * v[j]) % 3;
  return r;
}

Mat mul(const Mat& a, const Mat& b) {
  Mat r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
      r[i][j] %= 3;
    }
  return r;
}

std::set<Vec> span(const std::vector<Vec>& basis) {
  std::set<Vec> s{{0, 0, 0}};
  for (bool grew = true; grew;) {
    grew = false;
    for (auto v : std::set<Vec>(s))
      for (const auto& b : basis) {
        Vec w{(v[0] + b[0]) % 3, (v[1] + b[1]) % 3, (v[2] + b[2]) % 3};
        grew |= s.insert(w).second;
      }
  }
  return s;
}

Mat mat_of(const json& j) {
  Mat m{};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) m[i][k] = j.at(i).at(k).get<int>();
  return m;
}

const json& spec_named(const std::string& name) { return Catalog::shipped().at(name).spec; }

}  // namespace

TEST_CASE("catalog contents") {
  const Catalog& c = Catalog::shipped();
  CHECK(c.at("S4").order == 24);
  const auto& sl = c.at("SL(2,3)");
  CHECK(sl.order == 24);
  CHECK(sl.soluble);
  CHECK(!is_member(FormationSpec::sup(), *sl.group));
  CHECK(c.at("C3^3:A4").order == 324);
  for (int n = 1; n <= 24; ++n) CHECK(c.find("C" + std::to_string(n)) != nullptr);
  for (const char* name : {"V4", "C2^3", "C2^4", "C3^2", "C3^3", "C5^2", "S3", "D8", "D10", "D12", "Q8", "Q16",
                           "SL(2,3)", "A4", "S4", "A5", "S5", "C7:C3", "C5:C4", "C3:C8", "V4:C3", "D8xC3",
                           "Q8xC3", "S3xS3", "S3xC4"})
    CHECK_MESSAGE(c.find(name) != nullptr, name);
  CHECK(are_isomorphic(c.group("V4:C3"), c.group("A4")));
  CHECK_THROWS_AS((void)c.at("nope"), Error);
  std::set<std::string> names;
  for (const auto& e : c.entries()) {
    CHECK(names.insert(e.name).second);
    CHECK(e.group->order() == e.order);
    CHECK(is_soluble(*e.group) == e.soluble);
    CHECK(is_member(FormationSpec::nil(), *e.group) == e.nilpotent);
  }
}

TEST_CASE("catalog products are pairwise non-isomorphic") {
  const Catalog& c = Catalog::shipped();
  std::vector<const CatalogEntry*> products;
  for (const auto& e : c.entries())
    if (e.spec.value("product", false)) products.push_back(&e);
  CHECK(!products.empty());
  for (std::size_t i = 0; i < products.size(); ++i)
    for (std::size_t j = i + 1; j < products.size(); ++j)
      if (products[i]->order == products[j]->order && products[i]->order <= 128)
        CHECK(!are_isomorphic(*products[i]->group, *products[j]->group));
}

TEST_CASE("the order-324 module is simple and faithful") {
  const json& spec = spec_named("C3^3:A4");
  const Mat a = mat_of(spec.at("matrices").at(0)), b = mat_of(spec.at("matrices").at(1));
  // Faithful: the matrices generate a group of order 12.
  std::set<Mat> g{Mat{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}};
  for (bool grew = true; grew;) {
    grew = false;
    for (auto m : std::set<Mat>(g)) {
      grew |= g.insert(mul(m, a)).second;
      grew |= g.insert(mul(m, b)).second;
    }
  }
  CHECK(g.size() == 12);
  // No invariant subspace of dimension 1 or 2.
  std::vector<Vec> vecs;
  for (int x = 0; x < 27; ++x) vecs.push_back({x % 3, x / 3 % 3, x / 9});
  std::size_t invariant = 0;
  for (std::size_t i = 1; i < vecs.size(); ++i)
    for (std::size_t j = i; j < vecs.size(); ++j) {
      const auto s = span({vecs[i], vecs[j]});
      if (s.size() == 27) continue;
      bool inv = true;
      for (const auto& v : s) inv = inv && s.count(apply(a, v)) && s.count(apply(b, v));
      invariant += inv;
    }
  CHECK(invariant == 0);
  const auto& e = Catalog::shipped().at("C3^3:A4");
  REQUIRE(e.module);
  CHECK(e.module->count() == 27);
  const Lattice lat = Lattice::build(*e.group);
  const auto mins = minimal_normal_subgroups(lat);
  CHECK(std::find(mins.begin(), mins.end(), *e.module) != mins.end());
}

TEST_CASE("group spec loading") {
  const json s3 = {{"name", "S3p"}, {"kind", "permutation"}, {"degree", 3}, {"generators", {"(1 2 3)", "(1 2)"}}};
  const auto g = load_group_spec(s3, catalog_group);
  CHECK(g.group.order() == 6);
  CHECK(are_isomorphic(g.group, cat("S3")));

  const json semi = {{"name", "C3:C2"}, {"kind", "semidirect"}, {"normal", "C3"}, {"acting", "C2"},
                     {"action", {{{-1}}}}, {"expect", {{"order", 6}, {"soluble", true}, {"nilpotent", false}}}};
  CHECK(are_isomorphic(load_group_spec(semi, catalog_group).group, cat("S3")));

  const json direct = {{"name", "C2xS3"}, {"kind", "direct"}, {"factors", {"C2", s3}}};
  CHECK(are_isomorphic(load_group_spec(direct, catalog_group).group, cat("D12")));

  const json table = {{"name", "C2t"}, {"kind", "table"}, {"order", 2}, {"table", {{0, 1}, {1, 0}}}};
  CHECK(load_group_spec(table, catalog_group).group.order() == 2);

  const json mod = {{"name", "S3m"}, {"kind", "matrix_module"}, {"p", 3}, {"dim", 1}, {"acting", "C2"},
                    {"matrices", {{{2}}}}};
  const auto m = load_group_spec(mod, catalog_group);
  CHECK(are_isomorphic(m.group, cat("S3")));
  REQUIRE(m.module);
  CHECK(m.module->count() == 3);

  auto load_code = [](const json& j) {
    try {
      (void)load_group_spec(j, catalog_group);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  };
  CHECK(load_code({{"kind", "permutation"}}) == ErrorCode::LoadError);
  CHECK(load_code({{"name", "x"}, {"kind", "nope"}}) == ErrorCode::LoadError);
  CHECK(load_code({{"name", "x"}, {"kind", "direct"}, {"factors", {"NoSuchGroup"}}}) == ErrorCode::LoadError);
  json wrong = semi;
  wrong["expect"]["order"] = 7;
  CHECK(load_code(wrong) == ErrorCode::LoadError);
  CHECK(load_code({{"name", "bad"}, {"kind", "table"}, {"order", 2}, {"table", {{0, 1}, {0, 1}}}}) ==
        ErrorCode::InvalidTable);
  CHECK(load_code({{"name", "bad"}, {"kind", "semidirect"}, {"normal", "C3"}, {"acting", "C2"},
                   {"action", {{{1, 1, 1}}}}}) == ErrorCode::NotAutomorphism);
}
