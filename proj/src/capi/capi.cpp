#include "formalab/formalab.h"

#include <cstring>
#include <exception>
#include <string>

#include "verify/analyze.hpp"
#include "verify/catalog.hpp"
#include "verify/suites.hpp"

struct formalab_group {
  formalab::Group group;
};

namespace {

using formalab::Error;
using formalab::ErrorCode;

thread_local std::string last_error;

formalab_status status_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return FORMALAB_INVALID_ARGUMENT;
    case ErrorCode::InvalidPermutation:
    case ErrorCode::InvalidTable:
    case ErrorCode::NotAutomorphism:
    case ErrorCode::NotActionHomomorphism:
    case ErrorCode::RelationMismatch:
    case ErrorCode::LoadError:
    case ErrorCode::ConstructionFailed: return FORMALAB_LOAD_ERROR;
    case ErrorCode::ClosureCapExceeded:
    case ErrorCode::IsoCapExceeded:
    case ErrorCode::SubgroupCountCapExceeded: return FORMALAB_CAP_EXCEEDED;
    case ErrorCode::NotNormal: return FORMALAB_NOT_NORMAL;
    case ErrorCode::NoSatellite: return FORMALAB_NO_SATELLITE;
    case ErrorCode::PreconditionViolated:
    case ErrorCode::NotSoluble: return FORMALAB_PRECONDITION;
    case ErrorCode::Internal: return FORMALAB_INTERNAL;
  }
  return FORMALAB_INTERNAL;
}

template <class Fn>
formalab_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return FORMALAB_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = std::string("LoadError: ") + e.what();
    return FORMALAB_LOAD_ERROR;
  } catch (const std::exception& e) {
    last_error = std::string("Internal: ") + e.what();
    return FORMALAB_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

std::vector<unsigned> parse_pi(const char* pi) {
  if (!pi || std::strcmp(pi, "all") == 0) return {};
  // Reuse the formation parser's list handling and prime checks.
  return formalab::FormationSpec::parse(std::string("gpi:") + pi).pi;
}

}  // namespace

extern "C" {

const char* formalab_status_string(formalab_status s) {
  switch (s) {
    case FORMALAB_OK: return "ok";
    case FORMALAB_INVALID_ARGUMENT: return "invalid argument";
    case FORMALAB_LOAD_ERROR: return "load error";
    case FORMALAB_CAP_EXCEEDED: return "cap exceeded";
    case FORMALAB_NOT_NORMAL: return "not normal";
    case FORMALAB_NO_SATELLITE: return "no satellite";
    case FORMALAB_PRECONDITION: return "precondition violated";
    case FORMALAB_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* formalab_last_error(void) { return last_error.c_str(); }

void formalab_string_free(char* s) { delete[] s; }

formalab_status formalab_group_from_catalog(const char* name, formalab_group** out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    *out = nullptr;
    *out = new formalab_group{formalab::Catalog::shipped().group(name)};
  });
}

formalab_status formalab_group_from_json(const char* json, formalab_group** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    *out = nullptr;
    auto loaded = formalab::load_group_spec(nlohmann::json::parse(json), formalab::catalog_group);
    *out = new formalab_group{std::move(loaded.group)};
  });
}

void formalab_group_free(formalab_group* g) { delete g; }

size_t formalab_group_order(const formalab_group* g) { return g ? g->group.order() : 0; }

const char* formalab_group_name(const formalab_group* g) { return g ? g->group.name().c_str() : ""; }

formalab_status formalab_analyze(const formalab_group* g, const char* formation, const char* pi, char** json_out,
                                 char** text_out) {
  if (json_out) *json_out = nullptr;
  if (text_out) *text_out = nullptr;
  return guarded([&] {
    require(g, "group");
    require(formation, "formation");
    const auto report = formalab::analyze(g->group, formalab::FormationSpec::parse(formation), parse_pi(pi));
    if (json_out) *json_out = dup(report.dump(2));
    if (text_out) *text_out = dup(formalab::analyze_text(report));
  });
}

formalab_status formalab_lattice_dump(const formalab_group* g, char** json_out) {
  return guarded([&] {
    require(g, "group");
    require(json_out, "json_out");
    *json_out = nullptr;
    *json_out = dup(formalab::lattice_dump(g->group).dump());
  });
}

formalab_status formalab_catalog_list(char** json_out) {
  return guarded([&] {
    require(json_out, "json_out");
    *json_out = nullptr;
    *json_out = dup(formalab::catalog_listing().dump(2));
  });
}

formalab_status formalab_suite_names(char** out) {
  return guarded([&] {
    require(out, "out");
    std::string s;
    for (const auto& n : formalab::suite_names()) s += (s.empty() ? "" : ",") + n;
    *out = dup(s);
  });
}

formalab_status formalab_verify(const char* suite, size_t max_order, int soluble_only, const char* formation,
                                const char* pi, int with_timing, char** json_out, int* passed) {
  if (json_out) *json_out = nullptr;
  if (passed) *passed = 0;
  return guarded([&] {
    require(suite, "suite");
    formalab::SuiteOptions opts;
    if (max_order) opts.max_order = max_order;
    opts.soluble_only = soluble_only != 0;
    if (formation) opts.formation = formalab::FormationSpec::parse(formation);
    if (pi) opts.pi = parse_pi(pi);
    const auto rep = formalab::run_suite(suite, opts);
    if (json_out) *json_out = dup(rep.to_json(with_timing != 0).dump(2));
    if (passed) *passed = rep.pass() ? 1 : 0;
  });
}

formalab_status formalab_hunt_critical(const char* formation, unsigned p, int soluble_only, char** json_out) {
  return guarded([&] {
    require(formation, "formation");
    require(json_out, "json_out");
    *json_out = nullptr;
    *json_out = dup(formalab::hunt_critical(formalab::FormationSpec::parse(formation), p, soluble_only != 0).dump(2));
  });
}

}  // extern "C"
