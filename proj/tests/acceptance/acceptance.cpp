// One line per acceptance criterion: PASS/FAIL, wall time and the bound.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "verify/analyze.hpp"
#include "verify/catalog.hpp"
#include "verify/suites.hpp"

using namespace formalab;
using nlohmann::json;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* title, double bound_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = o.ok && t <= bound_s;
  if (!ok) ++failures;
  std::printf("[%s] %2d %s: %s (%.2f s, bound %.0f s)\n", ok ? "PASS" : "FAIL", id, title, o.detail.c_str(), t,
              bound_s);
  std::fflush(stdout);
}

std::string summary(const SuiteReport& r) {
  return std::to_string(r.verdicts.size() - r.failures.size()) + "/" + std::to_string(r.verdicts.size()) +
         " groups pass";
}

Outcome suite_passes(const char* name, const SuiteOptions& opts = {}) {
  const auto r = run_suite(name, opts);
  return {r.pass() && !r.verdicts.empty(), summary(r)};
}

const json* verdict_data(const json& report, const std::string& group) {
  for (const auto& v : report["verdicts"])
    if (v["group"] == group) return &v["data"];
  return nullptr;
}

}  // namespace

int main() {
  std::printf("catalog: %zu groups\n", Catalog::shipped().entries().size());

  criterion(1, "Int_Nil = Z_Nil = Z_inf", 60, [] { return suite_passes("baer"); });

  criterion(2, "Z_piF = Int_F for the certified configurations", 300, [] {
    const auto r = run_suite("z-equals-int");
    const json j = r.to_json(false);
    // Each required configuration appears in every verdict.
    const char* required[][2] = {{"pdec:2", "all"}, {"pdec:3", "all"}, {"pnilp:2", "[2]"}, {"pnilp:3", "[3]"},
                                 {"na", "all"}};
    bool covered = !j["verdicts"].empty();
    for (const auto& v : j["verdicts"])
      for (const auto& req : required) {
        bool found = false;
        for (const auto& c : v["data"])
          found = found || (c["formation"] == req[0] && (c["pi"].is_string() ? std::string("all") : c["pi"].dump()) == req[1]);
        covered = covered && found;
      }
    return Outcome{r.pass() && covered, summary(r) + (covered ? "" : ", a configuration is missing")};
  });

  criterion(3, "Int_{pNilp} core and hypercentre structure, p = 2, 3", 300,
            [] { return suite_passes("pnilp-structure"); });

  criterion(4, "Z = Int for N^r, r = 1, 2, 3, soluble groups", 180, [] {
    const auto r = run_suite("nilpotent-length");
    for (const auto& v : r.verdicts)
      if (!Catalog::shipped().at(v.group).soluble) return Outcome{false, "insoluble group " + v.group + " included"};
    return Outcome{r.pass() && !r.verdicts.empty(), summary(r)};
  });

  criterion(5, "Int* = Int for six formations", 300, [] { return suite_passes("int-star"); });

  criterion(6, "Int_Sup inside Int_SylTower", 120, [] { return suite_passes("sup-in-syltower"); });

  criterion(7, "negative controls", 300, [] {
    SuiteOptions o;
    o.formation = FormationSpec::sup();
    o.pi = std::vector<unsigned>{3};
    const json a = run_suite("z-equals-int", o).to_json(false);
    const json* s4 = verdict_data(a, "S4");
    const bool a_ok = a["label"] == "exploratory" && !a["pass"].get<bool>() && s4 && (*s4)[0]["pass"] == false &&
                      (*s4)[0]["z"]["order"] == 24 && (*s4)[0]["int"]["order"] == 1;

    const json h = hunt_critical(FormationSpec::sup(), 3, false);
    bool b_ok = false;
    for (const auto& w : h["witnesses"]) b_ok = b_ok || (w["group"] == "A4" && w["in_f"] == false);

    const json c = run_suite("order-324").to_json(false);
    const json* m = verdict_data(c, "C3^3:A4");
    const bool c_ok = c["pass"] == true && m && (*m)["int_sup"]["order"] == 27 && (*m)["int_psup3"]["order"] == 1 &&
                      (*m)["module_minimal_normal"] == true && (*m)["module_faithful"] == true;
    std::string d = std::string("(a) sup/{3} fails on S4 with Z=24, Int=1: ") + (a_ok ? "yes" : "no") +
                    "; (b) A4 witness: " + (b_ok ? "yes" : "no") + "; (c) Int_Sup = P of order 27, Int_3sup = 1: " +
                    (c_ok ? "yes" : "no");
    return Outcome{a_ok && b_ok && c_ok, d};
  });

  criterion(8, "satellite vs semidirect centrality, Z vs oracle", 600, [] {
    const auto d = run_suite("dual-centrality");
    const auto z = run_suite("z-oracle");
    std::size_t compared = 0, skipped = 0, z_skipped = 0;
    for (const auto& v : d.verdicts) {
      compared += v.data.value("compared", std::size_t{0});
      skipped += v.data.value("skipped_cap", std::size_t{0});
    }
    for (const auto& v : z.verdicts) z_skipped += v.data.value("skipped_cap", std::size_t{0});
    // Every factor and every oracle run must be decided, none skipped at the cap.
    return Outcome{d.pass() && z.pass() && compared > 0 && skipped == 0 && z_skipped == 0,
                   std::to_string(compared) + " factor checks, " + std::to_string(skipped) + " undecided; oracle " +
                       summary(z) + ", " + std::to_string(z_skipped) + " undecided"};
  });

  criterion(9, "lemma property pack", 600, [] { return suite_passes("lemma-pack"); });

  criterion(10, "boundary scans for Nil, pDec, pNilp, NA are empty", 300, [] { return suite_passes("boundary"); });

  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
