#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "verify/spec_loader.hpp"

namespace formalab {

struct CatalogEntry {
  std::string name;
  nlohmann::json spec;
  std::size_t order = 0;
  bool soluble = false;
  bool nilpotent = false;
  const Group* group = nullptr;
  std::optional<SubgroupSet> module;
};

/// The shipped groups, loaded once. Each spec carries expected tags that are
/// re-checked while loading. Products that turn out isomorphic to an
/// earlier entry are dropped.
class Catalog {
 public:
  static const Catalog& shipped();

  [[nodiscard]] const std::vector<CatalogEntry>& entries() const { return entries_; }
  [[nodiscard]] const CatalogEntry* find(const std::string& name) const;
  /// Throws LoadError for unknown names.
  [[nodiscard]] const CatalogEntry& at(const std::string& name) const;
  [[nodiscard]] const Group& group(const std::string& name) const { return *at(name).group; }
  /// Primes dividing the order of some catalog group.
  [[nodiscard]] std::vector<unsigned> primes() const;

 private:
  Catalog() = default;
  void add(nlohmann::json spec, bool dedupe);

  std::vector<std::unique_ptr<Group>> groups_;
  std::vector<CatalogEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Specs of the shipped catalog in catalog order, before deduplication.
std::vector<nlohmann::json> catalog_specs();

/// Resolver over the shipped catalog.
const Group& catalog_group(const std::string& name);

}  // namespace formalab
