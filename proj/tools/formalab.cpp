#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "formalab/formalab.h"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitLoad = 2;
constexpr int kExitCap = 3;
constexpr int kExitSuite = 4;

struct OwnedString {
  char* p = nullptr;
  ~OwnedString() { formalab_string_free(p); }
};

struct GroupDeleter {
  void operator()(formalab_group* g) const { formalab_group_free(g); }
};
using GroupPtr = std::unique_ptr<formalab_group, GroupDeleter>;

int fail(formalab_status s) {
  std::cerr << "formalab: " << formalab_last_error() << "\n";
  if (s == FORMALAB_CAP_EXCEEDED) return kExitCap;
  if (s == FORMALAB_INTERNAL) return 1;
  return kExitLoad;
}

// A readable file is a group spec; anything else is a catalog name.
formalab_status load(const std::string& ref, GroupPtr& out) {
  formalab_group* g = nullptr;
  formalab_status s;
  std::ifstream in(ref);
  if (in) {
    std::stringstream buf;
    buf << in.rdbuf();
    s = formalab_group_from_json(buf.str().c_str(), &g);
  } else {
    s = formalab_group_from_catalog(ref.c_str(), &g);
  }
  out.reset(g);
  return s;
}

std::vector<std::string> suite_names() {
  OwnedString names;
  formalab_suite_names(&names.p);
  std::vector<std::string> out;
  std::stringstream ss(names.p ? names.p : "");
  for (std::string n; std::getline(ss, n, ',');) out.push_back(n);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Formation-theoretic hypercentres and intersections of F-maximal subgroups"};
  app.require_subcommand(1);

  auto* catalog = app.add_subcommand("catalog", "Shipped groups");
  auto* catalog_list = catalog->add_subcommand("list", "List catalog groups");
  bool catalog_json = false;
  catalog_list->add_flag("--json", catalog_json, "Print JSON instead of a table");
  catalog->require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "Chief factors, Z, Int, Int* and F-maximal subgroups of one group");
  std::string group_ref, formation = "nil", pi = "all";
  bool analyze_json = false;
  analyze->add_option("group", group_ref, "Catalog name or group-spec JSON file")->required();
  analyze->add_option("--formation,-f", formation, "Formation, e.g. nil, sup, pnilp:3")->capture_default_str();
  analyze->add_option("--pi", pi, "Comma separated primes or 'all'")->capture_default_str();
  analyze->add_flag("--json", analyze_json, "Print JSON instead of text");

  auto* lattice = app.add_subcommand("lattice", "Dump every subgroup as a hex bitset");
  std::string lattice_ref;
  lattice->add_option("group", lattice_ref, "Catalog name or group-spec JSON file")->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite over the catalog");
  std::string suite;
  std::size_t max_order = 0;
  bool soluble_only = false, no_timing = false;
  std::string verify_formation, verify_pi, out_path;
  auto names = suite_names();
  names.push_back("all");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(names));
  verify->add_option("--max-order", max_order, "Skip groups above this order");
  verify->add_flag("--soluble-only", soluble_only, "Skip insoluble groups");
  verify->add_option("--formation", verify_formation, "z-equals-int only: a single configuration");
  verify->add_option("--pi", verify_pi, "z-equals-int only: primes or 'all'");
  verify->add_flag("--no-timing", no_timing, "Omit wall-clock fields");
  verify->add_option("--out,-o", out_path, "Write the report here instead of stdout");

  auto* hunt = app.add_subcommand("hunt-critical", "F(p)-critical groups outside F in the catalog");
  std::string hunt_formation;
  unsigned hunt_p = 0;
  bool hunt_soluble = false;
  hunt->add_option("--formation,-f", hunt_formation, "Formation with a satellite")->required();
  hunt->add_option("--p", hunt_p, "Prime")->required();
  hunt->add_flag("--soluble-only", hunt_soluble, "Skip insoluble groups");

  CLI11_PARSE(app, argc, argv);

  if (catalog_list->parsed()) {
    OwnedString js;
    if (auto s = formalab_catalog_list(&js.p); s != FORMALAB_OK) return fail(s);
    if (catalog_json) {
      std::cout << js.p << "\n";
      return kExitOk;
    }
    for (const auto& e : nlohmann::json::parse(js.p)) {
      std::printf("%-16s %5zu  %s%s\n", e["name"].get<std::string>().c_str(), e["order"].get<std::size_t>(),
                  e["soluble"].get<bool>() ? "soluble" : "insoluble", e["nilpotent"].get<bool>() ? " nilpotent" : "");
    }
    return kExitOk;
  }

  if (analyze->parsed()) {
    GroupPtr g;
    if (auto s = load(group_ref, g); s != FORMALAB_OK) return fail(s);
    OwnedString js, text;
    if (auto s = formalab_analyze(g.get(), formation.c_str(), pi.c_str(), &js.p, &text.p); s != FORMALAB_OK)
      return fail(s);
    std::cout << (analyze_json ? js.p : text.p) << (analyze_json ? "\n" : "");
    return kExitOk;
  }

  if (lattice->parsed()) {
    GroupPtr g;
    if (auto s = load(lattice_ref, g); s != FORMALAB_OK) return fail(s);
    OwnedString js;
    if (auto s = formalab_lattice_dump(g.get(), &js.p); s != FORMALAB_OK) return fail(s);
    std::cout << js.p << "\n";
    return kExitOk;
  }

  if (verify->parsed()) {
    std::vector<std::string> run = suite == "all" ? suite_names() : std::vector<std::string>{suite};
    nlohmann::json reports = nlohmann::json::array();
    bool all_pass = true;
    for (const auto& name : run) {
      OwnedString js;
      int passed = 0;
      const auto s = formalab_verify(name.c_str(), max_order, soluble_only ? 1 : 0,
                                     verify_formation.empty() ? nullptr : verify_formation.c_str(),
                                     verify_pi.empty() ? nullptr : verify_pi.c_str(), no_timing ? 0 : 1, &js.p,
                                     &passed);
      if (s != FORMALAB_OK) return fail(s);
      auto rep = nlohmann::json::parse(js.p);
      std::cerr << name << " [" << rep["label"].get<std::string>() << "]: " << (passed ? "pass" : "FAIL") << " ("
                << rep["groups"] << " groups, " << rep["failures"].size() << " failures)\n";
      all_pass = all_pass && passed;
      reports.push_back(std::move(rep));
    }
    const std::string out = (run.size() == 1 ? reports[0] : reports).dump(2) + "\n";
    if (out_path.empty()) {
      std::cout << out;
    } else {
      std::ofstream f(out_path);
      if (!(f << out)) {
        std::cerr << "formalab: cannot write " << out_path << "\n";
        return kExitLoad;
      }
    }
    return all_pass ? kExitOk : kExitSuite;
  }

  if (hunt->parsed()) {
    OwnedString js;
    if (auto s = formalab_hunt_critical(hunt_formation.c_str(), hunt_p, hunt_soluble ? 1 : 0, &js.p);
        s != FORMALAB_OK)
      return fail(s);
    std::cout << js.p << "\n";
    return kExitOk;
  }
  return kExitOk;
}
